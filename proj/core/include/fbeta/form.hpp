#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "fbeta/freealg.hpp"
#include "fbeta/report.hpp"

namespace fbeta {

// Everything known about one weight space of the pairing:
//   basis     all words of the weight, lexicographic
//   mat       Gram matrix mat[r][c] = (basis[r], basis[c])
//   quotient  indices of the lexicographically earliest independent
//             columns; their words form a basis of the quotient
//   kernel    one radical element per non-quotient word f, of the shape
//             e_f - sum_{c in quotient} s_c e_c, so reduction modulo the
//             radical rewrites f in terms of quotient words alone
struct GramBlock {
  Weight weight;
  std::vector<Word> basis;
  std::vector<std::vector<FieldElem>> mat;
  std::vector<int> quotient;
  std::vector<FreeElem> kernel;
  int rank() const { return static_cast<int>(quotient.size()); }
};

struct FormOptions {
  // gram() refuses heavier weights (ResourceLimit). 0 picks the rank
  // default: 6 for rank <= 2, 4 above.
  int height_bound = 0;
  std::string cache_dir;  // persist Gram blocks here; empty disables
};

// Pairing, Gram blocks and radical quotient for one instance. Results are
// memoized in memory and, when cache_dir is set, on disk keyed by the
// instance fingerprint (label and twist tables excluded).
class FormEngine {
 public:
  explicit FormEngine(AlgebraInstance inst, FormOptions opt = {});

  const AlgebraInstance& instance() const { return inst_; }
  const FormOptions& options() const { return opt_; }

  // The bilinear form, computed by peeling the last letter of the first
  // argument:
  //   (u theta_i, y) = alpha(|u|, i) (u, r_i(y)) (theta_i, theta_i),
  //   (theta_i, theta_i) = (1 - v_i^-2)^-1.
  FieldElem pair(const FreeElem& x, const FreeElem& y);
  FieldElem pair_words(const Word& a, const Word& b);
  FieldElem pair_gen(int i) const;  // (theta_i, theta_i)

  // Independent evaluation route peeling the first letter of the second
  // argument through the full coproduct of the first; no shared state
  // with pair(). Used to cross-check pair() in tests.
  FieldElem pair_oracle(const FreeElem& x, const FreeElem& y);

  const GramBlock& gram(const Weight& nu);
  long graded_dim(const Weight& nu);  // rank of the block

  // Projection to quotient-basis support: every non-quotient word is
  // rewritten through its kernel vector. Identity on radical-free input
  // classes; output coefficients sit on quotient words only.
  FreeElem normal_form(const FreeElem& x);

  struct SerreCertificate {
    int i = 0, j = 0;
    bool in_radical = false;
    // (w, D_ij) for every basis word w of the weight of D_ij
    std::vector<std::pair<Word, FieldElem>> witness;
  };
  SerreCertificate serre_in_radical(int i, int j);
  Report serre_report();  // serre(i,j) line per ordered pair i != j

 private:
  const GramBlock& block_locked(const Weight& nu);
  GramBlock compute_block(const Weight& nu);
  std::optional<GramBlock> load_block(const Weight& nu) const;
  void store_block(const GramBlock& b) const;
  std::string cache_path(const Weight& nu) const;
  FieldElem pair_words_locked(const Word& a, const Word& b);

  AlgebraInstance inst_;
  FormOptions opt_;
  std::string fingerprint_;
  std::vector<FieldElem> gen_;  // pair_gen per index
  std::map<std::pair<Word, Word>, FieldElem, Word2Less> pair_memo_;
  std::map<Weight, GramBlock> blocks_;
  mutable std::recursive_mutex mu_;
};

}  // namespace fbeta
