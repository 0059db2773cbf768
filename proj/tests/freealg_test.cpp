#include "doctest.h"
#include "fbeta/freealg.hpp"
#include "fbeta/presets.hpp"
#include "fbeta/text.hpp"

using namespace fbeta;

TEST_SUITE("freealg") {

TEST_CASE("words render and enumerate") {
  CHECK(render_word({0, 1, 0}) == "theta[1 2 1]");
  CHECK(render_word({}) == "1");
  CHECK(word_weight({0, 1, 0, 2}, 3) == Weight{2, 1, 1});
  auto ws = words_of_weight({2, 1});
  REQUIRE(ws.size() == 3);
  CHECK(ws[0] == Word{0, 0, 1});
  CHECK(ws[1] == Word{0, 1, 0});
  CHECK(ws[2] == Word{1, 0, 0});
}

TEST_CASE("free multiplication concatenates and stays bilinear") {
  auto inst = canon::two_parameter_a2();
  auto unit = FieldElem::one(inst.params);
  auto x = FreeElem::word({0, 1}, unit);
  auto y = FreeElem::word({1}, unit);
  CHECK(free_mul(x, y) == FreeElem::word({0, 1, 1}, unit));
  auto two = FieldElem::constant(Rat(2), inst.params);
  CHECK(free_mul(two * x, y) == two * FreeElem::word({0, 1, 1}, unit));
  CHECK(free_mul(x + y, y) == free_mul(x, y) + free_mul(y, y));
  CHECK(free_mul(FreeElem::one(inst.params), x) == x);
  CHECK(free_mul(x, FreeElem()).is_zero());
}

TEST_CASE("coproduct is the algebra map on generators") {
  auto inst = canon::super_a2(false);
  auto unit = FieldElem::one(inst.params);
  auto g0 = FreeElem::generator(0, inst.params);
  auto g1 = FreeElem::generator(1, inst.params);
  auto d0 = coproduct(inst, g0);
  Tensor2 want = tensor_prod(g0, FreeElem::one(inst.params)) +
                 tensor_prod(FreeElem::one(inst.params), g0);
  CHECK(d0 == want);
  // multiplicative: r(xy) = r(x) r(y) in the twisted square
  auto xy = free_mul(g0, g1);
  CHECK(coproduct(inst, xy) ==
        tensor_mul(inst, coproduct(inst, g0), coproduct(inst, g1)));
  auto yx = free_mul(g1, free_mul(g0, g0));
  CHECK(coproduct(inst, yx) ==
        tensor_mul(inst, coproduct(inst, g1),
                   tensor_mul(inst, coproduct(inst, g0), coproduct(inst, g0))));
}

TEST_CASE("letter peeling matches its defining recursion") {
  auto inst = canon::multi_parameter_b2();
  auto unit = FieldElem::one(inst.params);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto gj = FreeElem::generator(j, inst.params);
      auto want = i == j ? FreeElem::one(inst.params) : FreeElem();
      CHECK(r_last(inst, i, gj) == want);
      CHECK(r_first(inst, i, gj) == want);
    }
  // r_last on u theta_j: twist factor v^(-i.j) beta(i,j) on the peeled part
  Word u{1, 0};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Word uj = u;
      uj.push_back(j);
      auto lhs = r_last(inst, i, FreeElem::word(uj, unit));
      auto twist = inst.v_pow(-inst.datum.dot[i][j]) * inst.beta.at(i, j);
      auto rhs = twist * free_mul(r_last(inst, i, FreeElem::word(u, unit)),
                                  FreeElem::generator(j, inst.params));
      if (i == j) rhs = rhs + FreeElem::word(u, unit);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("divided powers satisfy the peeling identity") {
  for (auto& inst : {canon::super_b2(false), canon::multi_super_ii_a2()}) {
    for (int i = 0; i < 2; ++i)
      for (int n = 2; n <= 4; ++n) {
        auto lhs = r_first(inst, i, divided_power(inst, i, n));
        auto rhs = inst.v_pow(-(n - 1) * inst.datum.d(i)) *
                   divided_power(inst, i, n - 1);
        CHECK(lhs == rhs);
        CHECK(r_last(inst, i, divided_power(inst, i, n)) == rhs);
      }
  }
}

TEST_CASE("serre element coefficients") {
  auto inst = canon::two_parameter_a2();
  int i = 0, j = 1;  // a_ij = -1, so n = 2
  auto D = serre_element(inst, i, j);
  REQUIRE(D.size() == 3);
  auto b = inst.beta.at(i, j);
  auto f2 = quantum_factorial(2, inst.v_mono(i), inst.params);
  CHECK(D.coeff({1, 0, 0}) == f2.inverse());
  CHECK(D.coeff({0, 1, 0}) == -b.inverse());
  CHECK(D.coeff({0, 0, 1}) == b.pow(-2) * f2.inverse());
}

TEST_CASE("serre elements are killed by every peeling derivation") {
  for (auto& inst : {canon::two_parameter_a2(), canon::multi_super_ii_b2()}) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        if (i == j) continue;
        auto D = serre_element(inst, i, j);
        for (int l = 0; l < 2; ++l) {
          CHECK(r_first(inst, l, D).is_zero());
          CHECK(r_last(inst, l, D).is_zero());
        }
      }
  }
}

}  // TEST_SUITE
