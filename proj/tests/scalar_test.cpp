#include <memory>

#include "doctest.h"
#include "fbeta/scalar.hpp"
#include "fbeta/text.hpp"

using namespace fbeta;

namespace {

FieldElem sv(const std::string& s) { return parse_scalar(s, nullptr); }

ParamTablePtr torsion_table() {
  auto tbl = std::make_shared<ParamTable>();
  tbl->add({"t", ParamKind::Torsion, -1});
  tbl->add({"s", ParamKind::Torsion, +1});
  return tbl;
}

}  // namespace

TEST_SUITE("scalar") {

TEST_CASE("quantum integers expand to balanced power sums") {
  auto v = Monomial::param(ParamTable::kQuantum);
  CHECK(quantum_int(1, v, nullptr) == sv("1"));
  CHECK(quantum_int(2, v, nullptr) == sv("v + v^-1"));
  CHECK(quantum_int(3, v, nullptr) == sv("v^2 + 1 + v^-2"));
  // at v^2 every exponent doubles
  auto v2 = Monomial::param(ParamTable::kQuantum, Rat(2));
  CHECK(quantum_int(3, v2, nullptr) == sv("v^4 + 1 + v^-4"));
}

TEST_CASE("quantum factorials and binomials match their expansions") {
  auto v = Monomial::param(ParamTable::kQuantum);
  CHECK(quantum_factorial(4, v, nullptr) ==
        sv("v^6 + 3*v^4 + 5*v^2 + 6 + 5*v^-2 + 3*v^-4 + v^-6"));
  CHECK(quantum_factorial(5, v, nullptr) ==
        sv("v^10 + 4*v^8 + 9*v^6 + 15*v^4 + 20*v^2 + 22 + 20*v^-2 + 15*v^-4 "
           "+ 9*v^-6 + 4*v^-8 + v^-10"));
  CHECK(quantum_binom(4, 2, v, nullptr) == sv("v^4 + v^2 + 2 + v^-2 + v^-4"));
  CHECK(quantum_binom(5, 2, v, nullptr) ==
        sv("v^6 + v^4 + 2*v^2 + 2 + 2*v^-2 + v^-4 + v^-6"));
  CHECK(quantum_binom(5, 3, v, nullptr) == quantum_binom(5, 2, v, nullptr));
  CHECK(quantum_binom(6, 0, v, nullptr).is_one());
  // Pascal with the v-twist: [n;k] = v^-k [n-1;k] + v^(n-k) [n-1;k-1]
  auto lhs = quantum_binom(5, 2, v, nullptr);
  auto rhs = sv("v^-2") * quantum_binom(4, 2, v, nullptr) +
             sv("v^3") * quantum_binom(4, 1, v, nullptr);
  CHECK(lhs == rhs);
}

TEST_CASE("degenerate quantum parameter is rejected") {
  CHECK_THROWS_AS(quantum_int(2, Monomial::one(), nullptr),
                  DegenerateQuantumParameter);
}

TEST_CASE("torsion parameters square to their declared sign") {
  auto pt = torsion_table();
  int tid = pt->find("t"), sid = pt->find("s");
  REQUIRE(tid >= 0);
  REQUIRE(sid >= 0);
  CHECK(pt->find_torsion(-1) == tid);
  CHECK(pt->find_torsion(+1) == sid);
  auto t = unit_of({{tid, Rat(1)}}, pt);
  auto s = unit_of({{sid, Rat(1)}}, pt);
  CHECK(t * t == FieldElem::constant(Rat(-1), pt));
  CHECK(t.pow(3) == -t);
  CHECK(t.pow(4).is_one());
  CHECK(t.inverse() == -t);
  CHECK((s * s).is_one());
  CHECK(s.inverse() == s);
  CHECK((t * s) * (s * t) == -FieldElem::one(pt));
}

TEST_CASE("unit powers and square roots") {
  auto pt = torsion_table();
  auto v = unit_of({{ParamTable::kQuantum, Rat(1)}}, pt);
  CHECK(v.pow(Rat(1, 2)) * v.pow(Rat(1, 2)) == v);
  CHECK(unit_sqrt(v.pow(2)) == v);
  CHECK(unit_sqrt(v.pow(-4)) == v.pow(-2));
  // default denominator bound is 4
  CHECK(v.pow(Rat(1, 4)).pow(4) == v);
  CHECK_THROWS_AS(v.pow(Rat(1, 5)), ConfigError);
  CHECK_THROWS_AS(unit_sqrt(FieldElem::constant(Rat(2), pt)), Error);
  // -1 has a root exactly because t^2 = -1 is registered
  auto r = unit_sqrt(FieldElem::constant(Rat(-1), pt));
  CHECK(r * r == FieldElem::constant(Rat(-1), pt));
}

TEST_CASE("fractions compare by cross multiplication") {
  CHECK(sv("(v^2 - 1)/(v - 1)") == sv("v + 1"));
  CHECK(sv("1/(v - 1)") + sv("1/(v + 1)") == sv("2*v/(v^2 - 1)"));
  CHECK((sv("1/(v - v^-1)") * sv("v - v^-1")).is_one());
  CHECK(sv("(v + 1)/(v - 1)").inverse() == sv("(v - 1)/(v + 1)"));
}

TEST_CASE("division by zero throws") {
  auto zero = sv("1") - sv("1");
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(zero.inverse(), DivisionByZero);
  CHECK_THROWS_AS(sv("v") / zero, DivisionByZero);
}

TEST_CASE("unit recognition") {
  auto pt = torsion_table();
  auto t = unit_of({{pt->find("t"), Rat(1)}}, pt);
  auto v = unit_of({{ParamTable::kQuantum, Rat(1)}}, pt);
  CHECK(v.is_unit());
  CHECK((-t * v.pow(-3)).is_unit());
  CHECK(FieldElem::one(pt).is_unit());
  CHECK_FALSE((v + FieldElem::one(pt)).is_unit());
  CHECK_FALSE((v - v).is_unit());
}

TEST_CASE("rendered scalars reparse to equal values") {
  auto tbl = std::make_shared<ParamTable>();
  tbl->add({"q[1,2]", ParamKind::Free, 0});
  tbl->add({"t", ParamKind::Torsion, -1});
  ParamTablePtr pt = tbl;
  for (const char* s : {
           "1", "-1", "0", "-v", "v^2 + 2*v - 3", "1/2*v^-1",
           "1/(v - v^-1)", "(v + 1)/(v^3 - v^-3)", "q[1,2]^2*t - v",
           "3/4*q[1,2]^-1", "t*v^(1/2)", "(q[1,2] - q[1,2]^-1)/(v^2 - 1)"}) {
    auto x = parse_scalar(s, pt);
    CHECK_MESSAGE(parse_scalar(render(x), pt) == x, "string: ", s);
  }
}

TEST_CASE("parse errors carry position, unknown names are config errors") {
  CHECK_THROWS_AS(sv("v^"), ParseError);
  CHECK_THROWS_AS(sv("(v"), ParseError);
  CHECK_THROWS_AS(sv(""), ParseError);
  CHECK_THROWS_AS(sv("v + + 1"), ParseError);
  CHECK_THROWS_AS(sv("q"), ConfigError);  // null table admits only v
  try {
    sv("v ^ @");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col >= 1);
  }
}

}  // TEST_SUITE
