#include "fbeta/twist.hpp"

#include <algorithm>

#include "fbeta/text.hpp"

namespace fbeta {

namespace {

// x |-> sum c_w g_w^e w for e = +-1.
FreeElem dress(const AlgebraInstance& inst, const FreeElem& x, int e) {
  FreeElem out;
  for (const auto& [w, c] : x.terms()) {
    FieldElem g = star_word_scalar(inst, w);
    if (e < 0) g = g.inverse();
    out.add_term(w, c * g);
  }
  return out;
}

}  // namespace

FreeElem star_mul(const AlgebraInstance& inst, const FreeElem& x,
                  const FreeElem& y) {
  if (!inst.gamma.present())
    throw ConfigError("instance '" + inst.label +
                      "' has no gamma table for the star product");
  const int rank = inst.rank();
  FreeElem out;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      Word wz = wx;
      wz.insert(wz.end(), wy.begin(), wy.end());
      out.add_term(wz, cx * cy *
                           inst.gamma.eval(word_weight(wx, rank),
                                           word_weight(wy, rank)));
    }
  return out;
}

FieldElem star_word_scalar(const AlgebraInstance& inst, const Word& w) {
  if (!inst.gamma.present())
    throw ConfigError("instance '" + inst.label +
                      "' has no gamma table for the star product");
  FieldElem g = FieldElem::one(inst.params);
  for (size_t s = 0; s < w.size(); ++s)
    for (size_t t = s + 1; t < w.size(); ++t) g *= inst.gamma.at(w[s], w[t]);
  return g;
}

AlgebraInstance reference_instance(const CartanDatum& dm,
                                   const ParamTablePtr& pt) {
  AlgebraInstance ref;
  ref.label = "reference";
  ref.preset = "reference";
  ref.datum = dm;
  ref.params = pt;
  ref.beta = FormTable::ones(dm.rank(), pt);
  ref.alpha = FormTable::ones(dm.rank(), pt);
  ref.gamma = FormTable::ones(dm.rank(), pt);
  ref.xi = FormTable::ones(dm.rank(), pt);
  return ref;
}

FreeElem star_serre_element(const AlgebraInstance& inst, int i, int j) {
  const int rank = inst.rank();
  if (i < 0 || i >= rank || j < 0 || j >= rank || i == j)
    throw InvalidArgument("serre element needs two distinct indices");
  const int n = 1 - inst.datum.a(i, j);
  const FreeElem ti = FreeElem::generator(i, inst.params);
  const FreeElem tj = FreeElem::generator(j, inst.params);
  std::vector<FreeElem> p{FreeElem::one(inst.params)};
  for (int k = 1; k <= n; ++k) p.push_back(star_mul(inst, p.back(), ti));
  FreeElem acc;
  for (int k = 0; k <= n; ++k) {
    FieldElem c = quantum_binom(n, k, inst.v_mono(i), inst.params);
    if (k % 2) c = -c;
    acc = acc + c * star_mul(inst, star_mul(inst, p[k], tj), p[n - k]);
  }
  return acc;
}

Report verify_twist_iso(const AlgebraInstance& inst0, const TwistOptions& opt) {
  AlgebraInstance inst = inst0;
  std::string note;
  if (!inst.gamma.present()) {
    inst.gamma = canonical_gamma(inst);
    note = " (canonical gamma)";
  }
  const int rank = inst.rank();
  const int bound =
      opt.height_bound > 0 ? opt.height_bound : (rank <= 2 ? 4 : 3);

  Report rep;
  rep.title = "twist isomorphism: " + inst.label + note;

  const AlgebraInstance ref = reference_instance(inst.datum, inst.params);
  FormOptions fo;
  fo.height_bound = bound;
  fo.cache_dir = opt.cache_dir;
  FormEngine eng(inst, fo);
  FormEngine eref(ref, fo);

  std::vector<Weight> in_range;
  std::map<Weight, bool> dim_ok;
  for (int h = 1; h <= bound; ++h)
    for (const Weight& nu : weights_of_height(rank, h)) in_range.push_back(nu);

  for (const Weight& nu : in_range) {
    const long di = eng.graded_dim(nu);
    const long dr = eref.graded_dim(nu);
    dim_ok[nu] = di == dr;
    rep.add("dim(" + render_weight(nu) + ")", di == dr,
            di == dr ? std::to_string(di)
                     : std::to_string(di) + " != " + std::to_string(dr));
  }

  // The dressing w |-> g_w^-1 w must carry the radical onto the radical;
  // with equal dimensions this makes the induced map an isomorphism.
  for (const Weight& nu : in_range) {
    bool pass = true;
    std::string detail;
    for (const FreeElem& k : eng.gram(nu).kernel)
      if (!eref.normal_form(dress(inst, k, -1)).is_zero()) {
        pass = false;
        detail = "instance kernel vector survives in the reference";
        break;
      }
    if (pass)
      for (const FreeElem& k : eref.gram(nu).kernel)
        if (!eng.normal_form(dress(inst, k, +1)).is_zero()) {
          pass = false;
          detail = "reference kernel vector survives in the instance";
          break;
        }
    rep.add("radical(" + render_weight(nu) + ")", pass, detail);
  }

  // Dressed products against reference products: for quotient words p, q,
  //   (g_p p) * (g_q q) = g_pq pq   reduces on the instance side,
  // and its dressing must reduce in the reference to the reference product.
  for (const Weight& n1 : in_range)
    for (const Weight& n2 : in_range) {
      const Weight nu = weight_add(n1, n2);
      if (weight_height(nu) > bound) continue;
      if (!dim_ok[n1] || !dim_ok[n2] || !dim_ok[nu]) continue;
      const GramBlock& b1 = eng.gram(n1);
      const GramBlock& b2 = eng.gram(n2);
      bool pass = true;
      std::string detail;
      for (int ci : b1.quotient) {
        for (int cj : b2.quotient) {
          const Word& p = b1.basis[ci];
          const Word& q = b2.basis[cj];
          Word pq = p;
          pq.insert(pq.end(), q.begin(), q.end());
          const FieldElem scal = star_word_scalar(inst, p) *
                                 star_word_scalar(inst, q) *
                                 inst.gamma.eval(n1, n2);
          const FreeElem z = eng.normal_form(FreeElem::word(pq, scal));
          const FreeElem lhs = eref.normal_form(dress(inst, z, -1));
          const FreeElem rhs = eref.normal_form(
              FreeElem::word(pq, FieldElem::one(inst.params)));
          if (!(lhs == rhs)) {
            pass = false;
            detail = render_word(p) + " times " + render_word(q);
            break;
          }
        }
        if (!pass) break;
      }
      rep.add("product(" + render_weight(n1) + "|" + render_weight(n2) + ")",
              pass, detail);
    }

  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      const int n = 1 - inst.datum.a(i, j);
      const FreeElem dstar = star_serre_element(inst, i, j);
      // predicted collapse scalar
      FieldElem c = quantum_factorial(n, inst.v_mono(i), inst.params);
      c *= inst.gamma.at(i, i).pow(static_cast<long>(n) * (n - 1) / 2);
      c *= inst.gamma.at(j, i).pow(n);
      bool pass = dstar == c * serre_element(inst, i, j);
      std::string detail = pass ? "" : "expansion is not the predicted multiple";
      const long h = n + 1;
      if (pass && h <= bound) {
        pass = eng.normal_form(dstar).is_zero();
        if (!pass) detail = "expansion does not reduce to zero";
      } else if (pass) {
        detail = "multiple only (weight above height bound)";
      }
      rep.add("star_serre(" + std::to_string(i + 1) + "," +
                  std::to_string(j + 1) + ")",
              pass, detail);

      if (h <= bound) {
        const FreeElem dref = star_serre_element(ref, i, j);
        rep.add("reference_serre(" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ")",
                eref.normal_form(dref).is_zero(), "");
      }
    }

  return rep;
}

}  // namespace fbeta
