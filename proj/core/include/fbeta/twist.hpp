#pragma once

#include "fbeta/form.hpp"

namespace fbeta {

// The star product x*y = gamma(|x|,|y|) xy, extended bilinearly over the
// homogeneous components. Requires the gamma table (ConfigError otherwise).
FreeElem star_mul(const AlgebraInstance& inst, const FreeElem& x,
                  const FreeElem& y);

// Scalar relating the star monomial to the plain word:
//   theta_{w_1} * ... * theta_{w_k} = g_w w,  g_w = prod_{s<t} gamma(w_s, w_t).
FieldElem star_word_scalar(const AlgebraInstance& inst, const Word& w);

// The comparison target: beta, alpha, gamma and xi all 1 over the same
// datum and parameter registry, so scalars stay directly comparable.
AlgebraInstance reference_instance(const CartanDatum& dm,
                                   const ParamTablePtr& pt);

// Star expansion of the classical Serre combination (n = 1 - a_ij):
//   D'_ij = sum_{k+k'=n} (-1)^k [n;k]_{v_i} theta_i^{*k} * theta_j * theta_i^{*k'}.
// Expanding the star products collapses it to a scalar multiple of the
// deformed Serre element:  D'_ij = gamma(i,i)^(n(n-1)/2) gamma(j,i)^n [n]_{v_i}! D_ij.
FreeElem star_serre_element(const AlgebraInstance& inst, int i, int j);

struct TwistOptions {
  // Weight height explored. 0 picks the rank default: 4 for rank <= 2,
  // 3 above.
  int height_bound = 0;
  std::string cache_dir;
};

// Degree-by-degree certificate that theta_i |-> theta_i extends to an
// algebra isomorphism from the star-twisted algebra onto the reference.
// The dressing w |-> g_w^-1 w identifies star monomials with plain words;
// per weight nu of height <= bound the report checks
//   dim(nu)      quotient dimensions agree,
//   radical(nu)  dressing maps radical onto radical (both directions),
//   product(...) dressed products match reference products on quotient
//                bases, for every ordered weight pair in range,
// plus per ordered pair i != j
//   star_serre(i,j)      D'_ij expands to the predicted multiple of D_ij
//                        (and reduces to zero when within the bound),
//   reference_serre(i,j) the untwisted combination reduces to zero in the
//                        reference.
// Uses canonical_gamma when the instance has no gamma table.
Report verify_twist_iso(const AlgebraInstance& inst,
                        const TwistOptions& opt = {});

}  // namespace fbeta
