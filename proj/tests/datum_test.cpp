#include "doctest.h"
#include "fbeta/presets.hpp"
#include "fbeta/text.hpp"

using namespace fbeta;

TEST_SUITE("datum") {

TEST_CASE("cartan accessors") {
  auto b2 = canon::b2();
  CHECK(b2.rank() == 2);
  CHECK_FALSE(b2.super());
  CHECK(b2.d(0) == 2);
  CHECK(b2.d(1) == 1);
  CHECK(b2.a(0, 1) == -1);
  CHECK(b2.a(1, 0) == -2);
  auto bs = canon::b2_super();
  CHECK(bs.super());
  CHECK(bs.p(0) == 0);
  CHECK(bs.p(1) == 1);
}

TEST_CASE("datum check rejects malformed pairings") {
  CartanDatum odd{{}, {{3}}, {}};
  CHECK_THROWS_AS(odd.check(), ConfigError);
  CartanDatum asym{{}, {{2, -1}, {-2, 2}}, {}};
  CHECK_THROWS_AS(asym.check(), ConfigError);
  CartanDatum posoff{{}, {{2, 1}, {1, 2}}, {}};
  CHECK_THROWS_AS(posoff.check(), ConfigError);
  CartanDatum nondiv{{}, {{4, -1}, {-1, 2}}, {}};
  CHECK_THROWS_AS(nondiv.check(), ConfigError);
  CHECK_NOTHROW(canon::a3().check());
  CHECK_NOTHROW(canon::b3_super().check());
}

TEST_CASE("weight helpers") {
  CHECK(render_weight({2, 0, 1}) == "2_0_1");
  CHECK(weight_height({2, 0, 1}) == 3);
  auto ws = weights_of_height(2, 3);
  REQUIRE(ws.size() == 4);
  CHECK(ws.front() == Weight{3, 0});
  CHECK(ws.back() == Weight{0, 3});
  auto a2 = canon::a2();
  CHECK(weight_dot(a2, {1, 0}, {0, 1}) == -1);
  CHECK(weight_dot(a2, {2, 1}, {1, 1}) == 2 * 2 + 2 * (-1) + 1 * (-1) + 1 * 2);
  CHECK(weight_add({1, 2}, {3, 0}) == Weight{4, 2});
  CHECK(unit_weight(3, 1) == Weight{0, 1, 0});
}

TEST_CASE("form tables extend multiplicatively") {
  auto inst = canon::two_parameter_b2();
  Weight nu{2, 1}, tau{1, 1};
  auto direct = inst.beta.at(0, 0).pow(2) * inst.beta.at(0, 1).pow(2) *
                inst.beta.at(1, 0) * inst.beta.at(1, 1);
  CHECK(inst.beta.eval(nu, tau) == direct);
  CHECK(inst.beta.eval(nu, 1) == inst.beta.at(0, 1).pow(2) * inst.beta.at(1, 1));
  CHECK_FALSE(FormTable().present());
}

TEST_CASE("every canonical instance validates") {
  auto all = canon::all_double_ready();
  all.push_back(canon::two_parameter_a3());
  all.push_back(canon::super_b3());
  all.push_back(canon::two_parameter_a2(true));
  all.push_back(canon::super_b2(true));
  for (const auto& inst : all) {
    auto rep = validate(inst);
    CHECK_MESSAGE(rep.all_pass(), inst.label, ":\n", render_text(rep));
  }
}

TEST_CASE("validate names the broken property") {
  auto inst = canon::two_parameter_a2();

  SUBCASE("beta inverse") {
    inst.beta.at(0, 1) = inst.beta.at(0, 1) * inst.v_pow(2);
    auto rep = validate(inst);
    CHECK_FALSE(rep.all_pass());
    for (const auto& l : rep.lines) {
      if (l.id == "beta_inverse") CHECK_FALSE(l.pass);
      if (l.id == "beta_diagonal") CHECK(l.pass);
    }
  }
  SUBCASE("beta diagonal") {
    inst.beta.at(1, 1) = inst.v_pow(1);
    auto rep = validate(inst);
    for (const auto& l : rep.lines)
      if (l.id == "beta_diagonal") CHECK_FALSE(l.pass);
  }
  SUBCASE("gamma condition") {
    inst.gamma = FormTable::ones(2, inst.params);
    auto rep = validate(inst);
    for (const auto& l : rep.lines)
      if (l.id == "gamma_condition") CHECK_FALSE(l.pass);
  }
  SUBCASE("xi symmetric") {
    inst.xi = FormTable::ones(2, inst.params);
    inst.xi.at(0, 1) = inst.v_pow(1);
    auto rep = validate(inst);
    for (const auto& l : rep.lines)
      if (l.id == "xi_symmetric") CHECK_FALSE(l.pass);
  }
  SUBCASE("missing alpha") {
    inst.alpha = FormTable();
    auto rep = validate(inst);
    CHECK_FALSE(rep.all_pass());
    bool seen = false;
    for (const auto& l : rep.lines)
      if (l.id == "tables_shape") { seen = true; CHECK_FALSE(l.pass); }
    CHECK(seen);
  }
  SUBCASE("nonunit table entry") {
    inst.beta.at(0, 1) = inst.v_pow(1) + FieldElem::one(inst.params);
    auto rep = validate(inst);
    for (const auto& l : rep.lines)
      if (l.id == "tables_unit") CHECK_FALSE(l.pass);
  }
}

TEST_CASE("canonical gamma satisfies the twist condition everywhere") {
  for (auto& inst : canon::all_double_ready()) {
    auto with = inst;
    with.gamma = canonical_gamma(inst);
    auto rep = validate(with);
    CHECK_MESSAGE(rep.all_pass(), inst.label, ":\n", render_text(rep));
  }
}

TEST_CASE("refinement cocycle and its closed forms") {
  for (auto& inst : canon::all_double_ready()) {
    auto rep = verify_refine_cocycle(inst, 3);
    CHECK_MESSAGE(rep.all_pass(), inst.label, ":\n", render_text(rep));
  }
  // xi == 1 presets refine trivially
  for (auto mk : {canon::multi_parameter_a2, canon::multi_parameter_b2}) {
    auto inst = mk();
    for (int h = 1; h <= 4; ++h)
      for (const auto& nu : weights_of_height(2, h))
        CHECK(inst.g_refine(nu).is_one());
  }
  // super presets refine by t^(P(nu)^2), P(nu) = sum nu_i p(i)
  for (auto mk : {canon::super_a2, canon::super_b2}) {
    auto inst = mk(false);
    int tid = inst.params->find_torsion(-1);
    REQUIRE(tid >= 0);
    for (int h = 1; h <= 4; ++h)
      for (const auto& nu : weights_of_height(2, h)) {
        long p = 0;
        for (int i = 0; i < 2; ++i) p += nu[i] * inst.datum.p(i);
        CHECK(inst.g_refine(nu) == unit_of({{tid, Rat(p * p)}}, inst.params));
      }
  }
}

TEST_CASE("bracket is the xi-refined pairing scalar") {
  auto inst = canon::multi_super_i_b2();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto want = inst.v_pow(-inst.datum.dot[i][j]) * inst.beta.at(i, j) *
                  inst.xi.at(j, i);
      CHECK(inst.bracket(i, j) == want);
    }
  // multiplicative in both slots
  Weight nu{1, 2}, tau{2, 1};
  auto direct = inst.bracket(0, 0).pow(2) * inst.bracket(0, 1) *
                inst.bracket(1, 0).pow(4) * inst.bracket(1, 1).pow(2);
  CHECK(inst.bracket(nu, tau) == direct);
}

}  // TEST_SUITE
