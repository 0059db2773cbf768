#include "doctest.h"
#include "fbeta/presets.hpp"
#include "fbeta/text.hpp"
#include "fbeta/twist.hpp"

using namespace fbeta;

TEST_SUITE("twist") {

TEST_CASE("star product twists by gamma on the weights") {
  auto inst = canon::two_parameter_a2();
  REQUIRE(inst.gamma.present());
  auto unit = FieldElem::one(inst.params);
  auto g0 = FreeElem::generator(0, inst.params);
  auto g1 = FreeElem::generator(1, inst.params);
  CHECK(star_mul(inst, g0, g1) ==
        inst.gamma.at(0, 1) * FreeElem::word({0, 1}, unit));
  // associativity of the twisted product (gamma is a bicharacter)
  auto left = star_mul(inst, star_mul(inst, g0, g1), g0);
  auto right = star_mul(inst, g0, star_mul(inst, g1, g0));
  CHECK(left == right);
  // the star monomial scalar collects all ordered gamma factors
  auto want = inst.gamma.at(0, 1) * inst.gamma.at(0, 0) * inst.gamma.at(1, 0);
  CHECK(star_word_scalar(inst, {0, 1, 0}) == want);
  CHECK(star_word_scalar(inst, {1}).is_one());
  CHECK(left == star_word_scalar(inst, {0, 1, 0}) *
                    FreeElem::word({0, 1, 0}, unit));
}

TEST_CASE("star product requires the gamma table") {
  auto inst = canon::two_parameter_a2();
  inst.gamma = FormTable();
  auto g0 = FreeElem::generator(0, inst.params);
  CHECK_THROWS_AS(star_mul(inst, g0, g0), ConfigError);
}

TEST_CASE("reference instance is the trivial twist") {
  auto inst = canon::super_b2(false);
  auto ref = reference_instance(inst.datum, inst.params);
  CHECK(validate(ref).all_pass());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(ref.beta.at(i, j).is_one());
      CHECK(ref.alpha.at(i, j).is_one());
      CHECK(ref.gamma.at(i, j).is_one());
      CHECK(ref.xi.at(i, j).is_one());
    }
  CHECK(ref.params == inst.params);  // scalars stay comparable
}

TEST_CASE("star serre expansion collapses to the predicted multiple") {
  auto inst = canon::super_b2(false);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == j) continue;
      long n = 1 - inst.datum.a(i, j);
      auto scale = inst.gamma.at(i, i).pow(n * (n - 1) / 2) *
                   inst.gamma.at(j, i).pow(n) *
                   quantum_factorial(n, inst.v_mono(i), inst.params);
      CHECK(star_serre_element(inst, i, j) ==
            scale * serre_element(inst, i, j));
    }
}

TEST_CASE("twist isomorphism certificates") {
  for (auto& inst :
       {canon::two_parameter_a2(false), canon::two_parameter_a2(true),
        canon::super_a2(false), canon::super_a2(true),
        canon::multi_parameter_b2()}) {
    auto rep = verify_twist_iso(inst, {3, ""});
    CHECK_MESSAGE(rep.all_pass(), inst.label, ":\n", render_text(rep));
  }
}

TEST_CASE("twist verification falls back to the canonical gamma") {
  auto inst = canon::multi_super_ii_a2();
  inst.gamma = FormTable();
  auto rep = verify_twist_iso(inst, {3, ""});
  CHECK_MESSAGE(rep.all_pass(), render_text(rep));
}

}  // TEST_SUITE
