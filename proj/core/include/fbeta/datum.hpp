#pragma once

#include <string>
#include <vector>

#include "fbeta/report.hpp"
#include "fbeta/scalar.hpp"

namespace fbeta {

// Symmetric integer pairing on the index set I = {0..rank-1}, with i.i a
// positive even integer so that d_i = (i.i)/2 and a_ij = 2(i.j)/(i.i) are
// defined. An optional parity vector marks odd indices.
struct CartanDatum {
  std::vector<std::string> labels;        // one per index, declaration order
  std::vector<std::vector<int>> dot;      // the pairing i.j
  std::vector<int> parity;                // empty, or 0/1 per index

  int rank() const { return static_cast<int>(dot.size()); }
  bool super() const { return !parity.empty(); }
  int d(int i) const { return dot[i][i] / 2; }
  int a(int i, int j) const { return 2 * dot[i][j] / dot[i][i]; }
  int p(int i) const { return parity.empty() ? 0 : parity[i]; }

  // Structural validity; throws ConfigError naming the offending entry.
  void check() const;
};

// Weights live in Z[I] as integer coordinate vectors.
using Weight = std::vector<int>;

long weight_height(const Weight& nu);
long weight_dot(const CartanDatum& dm, const Weight& nu, const Weight& tau);
long weight_parity(const CartanDatum& dm, const Weight& nu);
Weight weight_add(const Weight& a, const Weight& b);
Weight unit_weight(int rank, int i);
// All weights of the given height, lexicographically descending first
// coordinate (the order compositions are usually listed in).
std::vector<Weight> weights_of_height(int rank, int height);
std::string render_weight(const Weight& nu);  // "2_0_1"

// Square table of scalars indexed by I x I, extended multiplicatively to
// Z[I] x Z[I] via eval. Entries are expected to be units (validated at the
// instance level). A default-constructed table is "absent".
class FormTable {
 public:
  FormTable() = default;
  FormTable(int rank, const FieldElem& fill);
  static FormTable ones(int rank, const ParamTablePtr& pt);

  bool present() const { return rank_ > 0; }
  int rank() const { return rank_; }
  FieldElem& at(int i, int j);
  const FieldElem& at(int i, int j) const;

  // Multiplicative extension: prod_{i,j} at(i,j)^(nu_i tau_j).
  FieldElem eval(const Weight& nu, const Weight& tau) const;
  FieldElem eval(const Weight& nu, int j) const;  // tau = basis vector j
  FieldElem eval(int i, const Weight& tau) const;

  bool operator==(const FormTable& o) const;

 private:
  int rank_ = 0;
  std::vector<FieldElem> e_;
};

// One deformed-algebra instance: the datum, the parameter registry and the
// defining tables. beta and alpha are required; gamma (twist) and xi
// (refinement) are optional and their absence disables the corresponding
// operations.
struct AlgebraInstance {
  std::string label;
  std::string preset;  // builder name, empty for hand-made instances
  CartanDatum datum;
  ParamTablePtr params;
  FormTable beta;
  FormTable alpha;
  FormTable gamma;
  FormTable xi;

  int rank() const { return datum.rank(); }
  // v_i = v^(d_i) as a unit scalar.
  FieldElem v_i(int i) const;
  Monomial v_mono(int i) const;  // the monomial v^(d_i)
  FieldElem v_pow(long e) const;

  // <i,j> = v^(-i.j) beta(i,j) xi(j,i); requires xi. Extended
  // multiplicatively to weights.
  FieldElem bracket(int i, int j) const;
  FieldElem bracket(const Weight& nu, const Weight& tau) const;

  // G(nu) = prod_i sqrt(xi(i,i))^(nu_i^2) prod_{i<j} xi(i,j)^(nu_i nu_j);
  // requires xi with representable diagonal square roots.
  FieldElem g_refine(const Weight& nu) const;

  // Stable hex fingerprint of everything the radical computation depends
  // on: datum, parameter signature, beta and alpha. gamma/xi and the label
  // are deliberately excluded so twist variants share cached blocks.
  std::string gram_fingerprint() const;
};

// Named checks for every defining property:
//   datum            structural datum validity
//   parity_bar       d_i parity matches the declared index parity
//   tables_unit      every table entry is a unit scalar
//   beta_diagonal    beta(i,i) = 1
//   beta_inverse     beta(i,j) beta(j,i) = 1
//   alpha_beta       beta(i,j) alpha(j,i) = beta(j,i) alpha(i,j)
//   gamma_condition  gamma(i,j) = gamma(j,i) beta(j,i)     [gamma present]
//   xi_symmetric     xi(i,j) = xi(j,i)                      [xi present]
//   xi_diagonal_sqrt sqrt(xi(i,i)) representable            [xi present]
// Failures carry the witnessing (i,j).
Report validate(const AlgebraInstance& inst);

// The distinguished twist table derived from beta:
// gamma(i,j) = 1 for i <= j, beta(j,i) for i > j.
FormTable canonical_gamma(const AlgebraInstance& inst);

// The refinement cocycle law G(nu) G(tau) xi(tau, nu) = G(nu + tau),
// swept over all weight pairs with height(nu) + height(tau) <= bound.
// Requires xi.
Report verify_refine_cocycle(const AlgebraInstance& inst, int height_bound = 4);

}  // namespace fbeta
