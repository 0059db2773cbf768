#include "doctest.h"
#include "fbeta/double_alg.hpp"
#include "fbeta/presets.hpp"
#include "fbeta/text.hpp"
#include "fbeta/twist.hpp"

using namespace fbeta;

namespace {

DoubleElem torus_term(int rank, const Weight& k, const Weight& j,
                      const Weight& kp, const Weight& jp,
                      const FieldElem& c) {
  DoubleKey key;
  key.e = {};
  key.k = k;
  key.j = j;
  key.kp = kp;
  key.jp = jp;
  key.f = {};
  (void)rank;
  return DoubleElem::term(key, c);
}

}  // namespace

TEST_SUITE("double") {

TEST_CASE("rendering of normal-form terms") {
  auto eng = DoubleEngine(canon::two_parameter_a2());
  CHECK(render_double(DoubleElem()) == "0");
  CHECK(render_double(eng.one()) == "(1)");
  CHECK(render_double(eng.gen_e(0)) == "(1) E[1]");
  CHECK(render_double(eng.gen_f(1)) == "(1) F[2]");
  CHECK(render_double(eng.torus({1, 0}, {0, 0}, {0, 0}, {0, -2})) ==
        "(1) K[1] J'[2]^-2");
  CHECK(render_double(eng.gen_e(0) + eng.gen_f(0)) ==
        "(1) F[1] + (1) E[1]");
}

TEST_CASE("mixed generator relation") {
  auto inst = canon::multi_super_ii_a2();
  DoubleEngine eng(inst);
  Weight zero(2, 0);
  for (int i = 0; i < 2; ++i) {
    auto ei = unit_weight(2, i);
    auto lhs = eng.mul(eng.gen_f(i), eng.gen_e(i));
    auto c = inst.xi.at(i, i) *
             (inst.v_pow(-inst.datum.d(i)) - inst.v_pow(inst.datum.d(i)))
                 .inverse();
    auto rhs = inst.xi.at(i, i) * eng.mul(eng.gen_e(i), eng.gen_f(i)) +
               c * (eng.torus(ei, zero, zero, ei) -
                    eng.torus(zero, ei, ei, zero));
    CHECK(lhs == rhs);
    // distinct letters only commute up to xi
    int j = 1 - i;
    CHECK(eng.mul(eng.gen_f(j), eng.gen_e(i)) ==
          inst.xi.at(j, i) * eng.mul(eng.gen_e(i), eng.gen_f(j)));
  }
}

TEST_CASE("counit and torus inverses") {
  DoubleEngine eng(canon::super_a2(false));
  CHECK(eng.counit(eng.one()).is_one());
  CHECK(eng.counit(eng.gen_e(0)).is_zero());
  CHECK(eng.counit(eng.gen_f(1)).is_zero());
  auto t = eng.torus({1, -1}, {0, 2}, {1, 0}, {0, 0});
  auto tinv = eng.torus({-1, 1}, {0, -2}, {-1, 0}, {0, 0});
  CHECK(eng.mul(t, tinv) == eng.one());
  CHECK(eng.counit(t).is_one());
  CHECK(eng.antipode(t) == tinv);
}

TEST_CASE("double certificates for two presets") {
  for (auto& inst : {canon::two_parameter_a2(), canon::multi_super_i_a2()}) {
    DoubleEngine eng(inst);
    auto rep = verify_double(eng);
    CHECK_MESSAGE(rep.all_pass(), inst.label, ":\n", render_text(rep));
    auto hopf = verify_hopf(eng);
    CHECK_MESSAGE(hopf.all_pass(), inst.label, ":\n", render_text(hopf));
    auto pres = specialized_presentation(eng);
    CHECK_MESSAGE(pres.all_pass(), inst.label, ":\n", render_text(pres));
  }
}

TEST_CASE("presentation tables require a preset pedigree") {
  auto tp = canon::two_parameter_a2();
  auto ref = reference_instance(tp.datum, tp.params);
  DoubleEngine eng(ref);
  CHECK_THROWS_AS(specialized_presentation(eng), ConfigError);
}

TEST_CASE("torus quotient rewrites to canonical residues") {
  auto one = FieldElem::one(nullptr);
  auto c = parse_scalar("-v^-1", nullptr);

  // K J' = -v^-1 in rank 1: packed layout is [K | J | K' | J']
  TorusQuotient q(1, {{{1, 0, 0, 1}, c}});
  auto x = torus_term(1, {2}, {0}, {0}, {2}, one);
  auto red = q.reduce(x);
  REQUIRE(red.size() == 1);
  CHECK(red == torus_term(1, {0}, {0}, {0}, {0}, c * c));
  // odd power keeps one K J' behind and pulls out one value factor
  auto y = torus_term(1, {3}, {0}, {0}, {3}, one);
  auto redy = q.reduce(y);
  REQUIRE(redy.size() == 1);
  // the residue has K-exponent 0 <= e < 1, so everything folds out
  CHECK(redy == torus_term(1, {0}, {0}, {0}, {0}, c * c * c));

  // membership in the whitelist-extended span
  CHECK(q.in_span({}, {2, 0, 0, 2}));
  CHECK_FALSE(q.in_span({}, {1, 0, 0, 0}));
  CHECK(q.in_span({{1, 0, 0, 0}}, {3, 0, 0, 2}));

  // J = 1 leaves coefficients alone
  TorusQuotient qj(1, {{{0, 1, 0, 0}, one}});
  auto z = torus_term(1, {1}, {5}, {0}, {0}, one);
  CHECK(qj.reduce(z) == torus_term(1, {1}, {0}, {0}, {0}, one));
}

TEST_CASE("torus quotient packs keys block by block") {
  DoubleKey key;
  key.e = {0};
  key.k = {1, 0};
  key.j = {0, 2};
  key.kp = {-1, 0};
  key.jp = {0, 0};
  key.f = {};
  CHECK(TorusQuotient::pack(key) ==
        std::vector<int>{1, 0, 0, 2, -1, 0, 0, 0});
}

TEST_CASE("inconsistent torus relations are rejected") {
  auto one = FieldElem::one(nullptr);
  auto v = parse_scalar("v", nullptr);
  CHECK_THROWS_AS(
      TorusQuotient(1, {{{1, 0, 0, 0}, v}, {{1, 0, 0, 0}, one}}),
      ConfigError);
  CHECK_NOTHROW(TorusQuotient(1, {{{1, 0, 0, 0}, v}, {{2, 0, 0, 0}, v * v}}));
}

}  // TEST_SUITE
