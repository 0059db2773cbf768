#include "fbeta/freealg.hpp"

#include <algorithm>
#include <sstream>

namespace fbeta {

Weight word_weight(const Word& w, int rank) {
  Weight nu(static_cast<size_t>(rank), 0);
  for (int letter : w) nu[static_cast<size_t>(letter)] += 1;
  return nu;
}

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  os << "theta[";
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) os << " ";
    os << w[k] + 1;
  }
  os << "]";
  return os.str();
}

std::vector<Word> words_of_weight(const Weight& nu) {
  Word base;
  for (size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < 0) throw InvalidArgument("word enumeration needs nu >= 0");
    base.insert(base.end(), static_cast<size_t>(nu[i]), static_cast<int>(i));
  }
  std::vector<Word> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

FreeElem FreeElem::word(Word w, FieldElem c) {
  FreeElem x;
  x.add_term(w, c);
  return x;
}

FreeElem FreeElem::one(const ParamTablePtr& pt) {
  return word({}, FieldElem::one(pt));
}

FreeElem FreeElem::generator(int i, const ParamTablePtr& pt) {
  return word({i}, FieldElem::one(pt));
}

void FreeElem::add_term(const Word& w, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

FieldElem FreeElem::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? FieldElem() : it->second;
}

FreeElem operator+(const FreeElem& a, const FreeElem& b) {
  FreeElem r = a;
  for (const auto& [w, c] : b.t_) r.add_term(w, c);
  return r;
}

FreeElem operator-(const FreeElem& a, const FreeElem& b) {
  FreeElem r = a;
  for (const auto& [w, c] : b.t_) r.add_term(w, -c);
  return r;
}

FreeElem FreeElem::operator-() const {
  FreeElem r;
  for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
  return r;
}

FreeElem operator*(const FieldElem& c, const FreeElem& x) {
  FreeElem r;
  if (c.is_zero()) return r;
  for (const auto& [w, xc] : x.terms()) r.add_term(w, c * xc);
  return r;
}

bool FreeElem::operator==(const FreeElem& o) const {
  if (t_.size() != o.t_.size()) return false;
  auto it = t_.begin();
  auto jt = o.t_.begin();
  for (; it != t_.end(); ++it, ++jt)
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  return true;
}

FreeElem free_mul(const FreeElem& a, const FreeElem& b) {
  FreeElem r;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

void Tensor2::add_term(const Word& w1, const Word& w2, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(std::make_pair(w1, w2), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Tensor2 operator+(const Tensor2& a, const Tensor2& b) {
  Tensor2 r = a;
  for (const auto& [ww, c] : b.t_) r.add_term(ww.first, ww.second, c);
  return r;
}

Tensor2 operator-(const Tensor2& a, const Tensor2& b) {
  Tensor2 r = a;
  for (const auto& [ww, c] : b.t_) r.add_term(ww.first, ww.second, -c);
  return r;
}

bool Tensor2::operator==(const Tensor2& o) const {
  if (t_.size() != o.t_.size()) return false;
  auto it = t_.begin();
  auto jt = o.t_.begin();
  for (; it != t_.end(); ++it, ++jt)
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  return true;
}

Tensor2 tensor_prod(const FreeElem& a, const FreeElem& b) {
  Tensor2 r;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r.add_term(wa, wb, ca * cb);
  return r;
}

Tensor2 tensor_mul(const AlgebraInstance& inst, const Tensor2& a,
                   const Tensor2& b) {
  const CartanDatum& dm = inst.datum;
  int n = dm.rank();
  Tensor2 r;
  for (const auto& [aw, ac] : a.terms())
    for (const auto& [bw, bc] : b.terms()) {
      Weight x2 = word_weight(aw.second, n);
      Weight y1 = word_weight(bw.first, n);
      FieldElem scal = inst.v_pow(-weight_dot(dm, y1, x2)) *
                       inst.beta.eval(x2, y1);
      Word w1 = aw.first;
      w1.insert(w1.end(), bw.first.begin(), bw.first.end());
      Word w2 = aw.second;
      w2.insert(w2.end(), bw.second.begin(), bw.second.end());
      r.add_term(w1, w2, ac * bc * scal);
    }
  return r;
}

Tensor2 coproduct(const AlgebraInstance& inst, const FreeElem& x) {
  Tensor2 r;
  for (const auto& [w, c] : x.terms()) {
    Tensor2 acc;
    acc.add_term({}, {}, c);
    for (int letter : w) {
      Tensor2 gen;
      gen.add_term({letter}, {}, FieldElem::one(inst.params));
      gen.add_term({}, {letter}, FieldElem::one(inst.params));
      acc = tensor_mul(inst, acc, gen);
    }
    r = r + acc;
  }
  return r;
}

FreeElem r_last(const AlgebraInstance& inst, int i, const FreeElem& x) {
  FreeElem r;
  for (const auto& [w, c] : x.terms()) {
    if (w.empty()) continue;
    // r_i(w) = sum over positions of theta_i, each commuted past the
    // letters to its right: unrolling the recursion
    //   r_i(u theta_j) = v^(-i.j) beta(i,j) r_i(u) theta_j + delta_ij u.
    FieldElem scal = FieldElem::one(inst.params);
    for (size_t k = w.size(); k-- > 0;) {
      int j = w[k];
      if (j == i) {
        Word rest(w.begin(), w.begin() + static_cast<long>(k));
        rest.insert(rest.end(), w.begin() + static_cast<long>(k) + 1, w.end());
        r.add_term(rest, c * scal);
      }
      scal = scal * inst.v_pow(-inst.datum.dot[i][j]) * inst.beta.at(i, j);
    }
  }
  return r;
}

FreeElem r_first(const AlgebraInstance& inst, int i, const FreeElem& x) {
  FreeElem r;
  for (const auto& [w, c] : x.terms()) {
    if (w.empty()) continue;
    // ir(theta_j u) = delta_ij u + v^(-i.j) beta(j,i) theta_j ir(u)
    FieldElem scal = FieldElem::one(inst.params);
    for (size_t k = 0; k < w.size(); ++k) {
      int j = w[k];
      if (j == i) {
        Word rest(w.begin(), w.begin() + static_cast<long>(k));
        rest.insert(rest.end(), w.begin() + static_cast<long>(k) + 1, w.end());
        r.add_term(rest, c * scal);
      }
      scal = scal * inst.v_pow(-inst.datum.dot[i][j]) * inst.beta.at(j, i);
    }
  }
  return r;
}

FreeElem divided_power(const AlgebraInstance& inst, int i, int n) {
  if (n < 0) throw InvalidArgument("divided power needs n >= 0");
  Word w(static_cast<size_t>(n), i);
  FieldElem c =
      quantum_factorial(n, inst.v_mono(i), inst.params).inverse();
  return FreeElem::word(std::move(w), c);
}

FreeElem serre_element(const AlgebraInstance& inst, int i, int j) {
  if (i == j) throw InvalidArgument("Serre element needs i != j");
  int m = 1 - inst.datum.a(i, j);
  FreeElem d;
  FieldElem bij = inst.beta.at(i, j);
  for (int k = 0; k <= m; ++k) {
    FieldElem c = bij.pow(-static_cast<long>(k));
    if (k % 2 != 0) c = -c;
    FreeElem t = free_mul(divided_power(inst, i, k),
                          free_mul(FreeElem::generator(j, inst.params),
                                   divided_power(inst, i, m - k)));
    d = d + c * t;
  }
  return d;
}

}  // namespace fbeta
