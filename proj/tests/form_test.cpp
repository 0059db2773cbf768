#include <filesystem>
#include <memory>

#include "doctest.h"
#include "fbeta/form.hpp"
#include "fbeta/presets.hpp"
#include "fbeta/text.hpp"

using namespace fbeta;

namespace {

// Kostant-style oracle: the number of multiset root decompositions of the
// weight, over the positive-root list of the instance's Cartan type.
long root_decompositions(const std::vector<Weight>& roots, Weight nu,
                         size_t idx = 0) {
  if (weight_height(nu) == 0) return 1;
  if (idx == roots.size()) return 0;
  long total = 0;
  Weight rest = nu;
  while (true) {
    total += root_decompositions(roots, rest, idx + 1);
    bool fits = true;
    for (size_t i = 0; i < nu.size(); ++i)
      if ((rest[i] -= roots[idx][i]) < 0) fits = false;
    if (!fits) break;
  }
  return total;
}

std::vector<Weight> positive_roots(const CartanDatum& dm) {
  int prod = dm.a(0, 1) * dm.a(1, 0);
  if (prod == 1) return {{1, 0}, {0, 1}, {1, 1}};            // A2 type
  REQUIRE(prod == 2);                                        // B2 type
  if (dm.a(0, 1) == -1) return {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  return {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
}

}  // namespace

TEST_SUITE("form") {

TEST_CASE("generator pairing closed form") {
  for (auto& inst : canon::all_double_ready()) {
    FormEngine fe(inst);
    for (int i = 0; i < inst.rank(); ++i) {
      auto want =
          (FieldElem::one(inst.params) - inst.v_pow(-2 * inst.datum.d(i)))
              .inverse();
      CHECK_MESSAGE(fe.pair_gen(i) == want, inst.label, " i=", i);
      auto g = FreeElem::generator(i, inst.params);
      CHECK(fe.pair(g, g) == want);
    }
  }
}

TEST_CASE("pairing is symmetric and matches the oracle route") {
  for (auto& inst : {canon::two_parameter_a2(), canon::multi_super_i_b2()}) {
    FormEngine fe(inst);
    auto unit = FieldElem::one(inst.params);
    for (int h = 1; h <= 3; ++h)
      for (const auto& nu : weights_of_height(2, h)) {
        auto ws = words_of_weight(nu);
        for (size_t a = 0; a < ws.size(); ++a)
          for (size_t b = a; b < ws.size(); ++b) {
            auto xy = fe.pair_words(ws[a], ws[b]);
            CHECK(xy == fe.pair_words(ws[b], ws[a]));
            CHECK(xy == fe.pair_oracle(FreeElem::word(ws[a], unit),
                                       FreeElem::word(ws[b], unit)));
          }
      }
    // graded orthogonality and normalization
    CHECK(fe.pair(FreeElem::one(inst.params), FreeElem::one(inst.params))
              .is_one());
    CHECK(fe.pair_words({0}, {1}).is_zero());
    CHECK(fe.pair_words({0, 1}, {0, 0}).is_zero());
  }
}

TEST_CASE("graded dimensions match the root-decomposition oracle") {
  for (auto& inst : canon::all_double_ready()) {
    FormEngine fe(inst);
    auto roots = positive_roots(inst.datum);
    for (int h = 1; h <= 4; ++h)
      for (const auto& nu : weights_of_height(2, h))
        CHECK_MESSAGE(fe.graded_dim(nu) == root_decompositions(roots, nu),
                      inst.label, " at ", render_weight(nu));
  }
}

TEST_CASE("gram blocks expose basis, rank and kernel") {
  auto inst = canon::two_parameter_a2();
  FormEngine fe(inst);
  const auto& b11 = fe.gram({1, 1});
  CHECK(b11.basis.size() == 2);
  CHECK(b11.rank() == 2);
  CHECK(b11.kernel.empty());
  const auto& b21 = fe.gram({2, 1});
  CHECK(b21.basis.size() == 3);
  CHECK(b21.rank() == 2);
  REQUIRE(b21.kernel.size() == 1);
  // the kernel is spanned by the Serre element's image
  CHECK(fe.normal_form(serre_element(inst, 0, 1)).is_zero());
  for (const auto& k : b21.kernel)
    for (const auto& w : b21.basis)
      CHECK(fe.pair(FreeElem::word(w, FieldElem::one(inst.params)), k)
                .is_zero());
}

TEST_CASE("serre elements lie in the radical with full witness") {
  auto inst = canon::super_b2(false);
  FormEngine fe(inst);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == j) continue;
      auto cert = fe.serre_in_radical(i, j);
      CHECK(cert.in_radical);
      CHECK(cert.i == i);
      CHECK(cert.j == j);
      long n = 1 - inst.datum.a(i, j);
      Weight wt(2, 0);
      wt[i] = static_cast<int>(n);
      wt[j] += 1;
      CHECK(cert.witness.size() == words_of_weight(wt).size());
      for (const auto& [w, val] : cert.witness) CHECK(val.is_zero());
    }
  auto rep = fe.serre_report();
  CHECK(rep.all_pass());
  CHECK(rep.lines.size() == 2);
}

TEST_CASE("foreign serre coefficients do not reach the radical") {
  // Hand-built two-parameter shape over t, plus an unrelated unit u. The
  // instance with beta(0,1) = u does not kill the t-coefficient element.
  auto tbl = std::make_shared<ParamTable>();
  int tid = tbl->add({"t", ParamKind::Free, 0});
  int uid = tbl->add({"u", ParamKind::Free, 0});
  ParamTablePtr pt = tbl;
  auto t = unit_of({{tid, Rat(1)}}, pt);
  auto u = unit_of({{uid, Rat(1)}}, pt);
  AlgebraInstance orig;
  orig.label = "hand.t";
  orig.datum = canon::a2();
  orig.params = pt;
  orig.beta = FormTable::ones(2, pt);
  orig.beta.at(0, 1) = t;
  orig.beta.at(1, 0) = t.inverse();
  orig.alpha = orig.beta;
  REQUIRE(validate(orig).all_pass());
  auto perturbed = orig;
  perturbed.label = "hand.u";
  perturbed.beta.at(0, 1) = u;
  perturbed.beta.at(1, 0) = u.inverse();
  perturbed.alpha = perturbed.beta;
  REQUIRE(validate(perturbed).all_pass());

  auto D = serre_element(orig, 0, 1);
  FormEngine oe(orig), pe(perturbed);
  CHECK(oe.serre_in_radical(0, 1).in_radical);
  CHECK(pe.serre_in_radical(0, 1).in_radical);  // its own element adapts
  bool nonzero = false;
  for (const auto& w : words_of_weight({2, 1}))
    if (!pe.pair(FreeElem::word(w, FieldElem::one(pt)), D).is_zero())
      nonzero = true;
  CHECK(nonzero);  // the transplanted element is not radical here
  CHECK_FALSE(pe.normal_form(D).is_zero());
}

TEST_CASE("normal form reduces modulo the radical only") {
  auto inst = canon::multi_parameter_a2();
  FormEngine fe(inst);
  auto unit = FieldElem::one(inst.params);
  for (int h = 1; h <= 3; ++h)
    for (const auto& nu : weights_of_height(2, h)) {
      const auto& blk = fe.gram(nu);
      for (int c : blk.quotient) {
        auto w = FreeElem::word(blk.basis[c], unit);
        CHECK(fe.normal_form(w) == w);
      }
    }
  auto x = FreeElem::word({0, 0, 1, 1}, unit);
  auto nf = fe.normal_form(x);
  CHECK(fe.normal_form(nf) == nf);
  // adding a multiple of a Serre element does not change the class
  auto shift = free_mul(serre_element(inst, 0, 1),
                        FreeElem::generator(1, inst.params));
  CHECK(fe.normal_form(x + inst.v_pow(3) * shift) == nf);
  // the difference x - nf pairs to zero against the whole weight space
  auto diff = x - nf;
  for (const auto& w : words_of_weight({2, 2}))
    CHECK(fe.pair(FreeElem::word(w, unit), diff).is_zero());
}

TEST_CASE("peeling maps preserve the radical and detect nonzero classes") {
  auto inst = canon::super_a2(false);
  FormEngine fe(inst);
  auto unit = FieldElem::one(inst.params);
  for (int h = 2; h <= 4; ++h)
    for (const auto& nu : weights_of_height(2, h)) {
      const auto& blk = fe.gram(nu);
      for (const auto& k : blk.kernel)
        for (int l = 0; l < 2; ++l) {
          CHECK(fe.normal_form(r_last(inst, l, k)).is_zero());
          CHECK(fe.normal_form(r_first(inst, l, k)).is_zero());
        }
      // every nonzero class keeps some peeling derivative nonzero
      for (int c : blk.quotient) {
        bool hit = false;
        for (int l = 0; l < 2 && !hit; ++l)
          if (!fe.normal_form(
                   r_last(inst, l, FreeElem::word(blk.basis[c], unit)))
                   .is_zero())
            hit = true;
        CHECK(hit);
      }
    }
}

TEST_CASE("disk cache returns identical blocks and reports") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "fbeta_form_cache_test";
  fs::remove_all(dir);
  auto inst = canon::multi_super_ii_b2();
  std::string first, second;
  {
    FormEngine fe(inst, {0, dir.string()});
    fe.gram({2, 1});
    first = render_text(fe.serre_report());
  }
  CHECK(fs::exists(dir));
  CHECK_FALSE(fs::is_empty(dir));
  {
    FormEngine fe(inst, {0, dir.string()});
    second = render_text(fe.serre_report());
    const auto& blk = fe.gram({2, 1});
    FormEngine fresh(inst);
    const auto& ref = fresh.gram({2, 1});
    REQUIRE(blk.basis == ref.basis);
    CHECK(blk.quotient == ref.quotient);
    for (size_t r = 0; r < ref.mat.size(); ++r)
      for (size_t c = 0; c < ref.mat.size(); ++c)
        CHECK(blk.mat[r][c] == ref.mat[r][c]);
  }
  CHECK(first == second);
  fs::remove_all(dir);
}

TEST_CASE("height bound is enforced") {
  auto inst = canon::two_parameter_a2();
  FormEngine fe(inst, {2, ""});
  CHECK(fe.graded_dim({1, 1}) == 2);
  CHECK_THROWS_AS(fe.gram({2, 1}), ResourceLimit);
}

}  // TEST_SUITE
