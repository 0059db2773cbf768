#pragma once

#include <map>

#include "fbeta/datum.hpp"

namespace fbeta {

// A word in the free algebra on the generators theta_i: the sequence of
// letter indices. The empty word is the unit.
using Word = std::vector<int>;

// Degree first, then lexicographic: the basis order used everywhere.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

Weight word_weight(const Word& w, int rank);
std::string render_word(const Word& w);  // "theta[1 2 1]", "1" for empty

// All words of the given weight, in lexicographic order.
std::vector<Word> words_of_weight(const Weight& nu);

// Finite scalar combination of words; ordered term map, no zero
// coefficients.
class FreeElem {
 public:
  using TermMap = std::map<Word, FieldElem, WordLess>;

  FreeElem() = default;  // zero

  static FreeElem word(Word w, FieldElem c);
  static FreeElem one(const ParamTablePtr& pt);
  static FreeElem generator(int i, const ParamTablePtr& pt);

  bool is_zero() const { return t_.empty(); }
  const TermMap& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  void add_term(const Word& w, const FieldElem& c);
  FieldElem coeff(const Word& w) const;  // zero when absent

  friend FreeElem operator+(const FreeElem& a, const FreeElem& b);
  friend FreeElem operator-(const FreeElem& a, const FreeElem& b);
  FreeElem operator-() const;
  friend FreeElem operator*(const FieldElem& c, const FreeElem& x);

  bool operator==(const FreeElem& o) const;

 private:
  TermMap t_;
};

// Concatenation product.
FreeElem free_mul(const FreeElem& a, const FreeElem& b);

struct Word2Less {
  bool operator()(const std::pair<Word, Word>& a,
                  const std::pair<Word, Word>& b) const {
    WordLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

// Element of the twisted tensor square of the free algebra.
class Tensor2 {
 public:
  using TermMap = std::map<std::pair<Word, Word>, FieldElem, Word2Less>;

  Tensor2() = default;

  bool is_zero() const { return t_.empty(); }
  const TermMap& terms() const { return t_; }
  void add_term(const Word& w1, const Word& w2, const FieldElem& c);

  friend Tensor2 operator+(const Tensor2& a, const Tensor2& b);
  friend Tensor2 operator-(const Tensor2& a, const Tensor2& b);
  bool operator==(const Tensor2& o) const;

 private:
  TermMap t_;
};

Tensor2 tensor_prod(const FreeElem& a, const FreeElem& b);  // a (x) b

// Twisted multiplication:
// (x1 (x) x2)(y1 (x) y2) = v^(-|y1|.|x2|) beta(|x2|,|y1|) x1y1 (x) x2y2.
Tensor2 tensor_mul(const AlgebraInstance& inst, const Tensor2& a,
                   const Tensor2& b);

// The algebra map r with r(theta_i) = theta_i (x) 1 + 1 (x) theta_i into
// the twisted tensor square.
Tensor2 coproduct(const AlgebraInstance& inst, const FreeElem& x);

// Letter-peeling derivations determined by the coproduct:
//   r_last:  r_i(u theta_j) = v^(-i.j) beta(i,j) r_i(u) theta_j + delta_ij u
//   r_first: ir(theta_j u) = delta_ij u + v^(-i.j) beta(j,i) theta_j ir(u)
// (r_last reads the (w, theta_i) components of r, r_first the (theta_i, w)
// components.)
FreeElem r_last(const AlgebraInstance& inst, int i, const FreeElem& x);
FreeElem r_first(const AlgebraInstance& inst, int i, const FreeElem& x);

// theta_i^(n) = theta_i^n / [n]_{v_i}!.
FreeElem divided_power(const AlgebraInstance& inst, int i, int n);

// The deformed Serre element for i != j:
//   D_ij = sum_k (-1)^k beta(i,j)^(-k) theta_i^(k) theta_j theta_i^(k'),
// k + k' = 1 - a_ij.
FreeElem serre_element(const AlgebraInstance& inst, int i, int j);

}  // namespace fbeta
