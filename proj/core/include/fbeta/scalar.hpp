#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fbeta/error.hpp"

namespace fbeta {

// Exact scalars: the fraction field F of Laurent polynomials in a quantum
// parameter v and declared extra parameters, with rational exponents of
// bounded denominator and order-2 torsion parameters (h^2 = +1 or i^2 = -1).
// All arithmetic is exact; no floating point anywhere.

using Rat = mpq_class;
using Int = mpz_class;

enum class ParamKind { Free, Torsion };

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::Free;
  int torsion_square = +1;  // +1 or -1; only read for ParamKind::Torsion
};

// Immutable registry of the parameters of one instance. Id 0 is always the
// quantum parameter "v". Shared by every scalar built for the instance.
class ParamTable {
 public:
  static constexpr int kQuantum = 0;

  explicit ParamTable(int exp_den_bound = 4);

  // Returns the new id. Rejects duplicate names and torsion squares other
  // than +1/-1 (torsion parameters have order 2 by design).
  int add(const ParamSpec& spec);

  int find(std::string_view name) const;  // -1 when absent
  const ParamSpec& spec(int id) const;
  int size() const { return static_cast<int>(specs_.size()); }
  int exp_den_bound() const { return exp_den_bound_; }

  // First declared torsion parameter with the given square, or -1.
  int find_torsion(int square) const;

  // Canonical one-line description, used in cache keys.
  std::string signature() const;

 private:
  std::vector<ParamSpec> specs_;
  int exp_den_bound_;
};

using ParamTablePtr = std::shared_ptr<const ParamTable>;

ParamTablePtr merge_table(const ParamTablePtr& a, const ParamTablePtr& b);

// Product of parameter powers with rational exponents, kept sorted by
// parameter id with no zero exponents. Torsion exponents are reduced to
// {0,1}; the sign byproduct of reduction is reported to the caller.
class Monomial {
 public:
  Monomial() = default;

  static Monomial one() { return {}; }
  // Single parameter power; exponent unreduced (use mono_* helpers to stay
  // canonical for torsion parameters).
  static Monomial param(int id, Rat exp = Rat(1));

  bool is_one() const { return f_.empty(); }
  const std::vector<std::pair<int, Rat>>& factors() const { return f_; }
  Rat exponent(int id) const;  // 0 when absent

  int compare(const Monomial& o) const;  // lex by id; larger exponent later
  bool operator==(const Monomial& o) const { return compare(o) == 0; }
  bool operator<(const Monomial& o) const { return compare(o) < 0; }

 private:
  friend Monomial mono_make(std::vector<std::pair<int, Rat>>, const ParamTable&, int&);
  std::vector<std::pair<int, Rat>> f_;
};

// Canonicalize raw factors against a table: sorts, merges, drops zeros,
// reduces torsion exponents into {0,1} accumulating the sign into *sign*,
// enforces integral torsion exponents and the exponent denominator bound.
Monomial mono_make(std::vector<std::pair<int, Rat>> raw, const ParamTable& pt,
                   int& sign);
Monomial mono_mul(const Monomial& a, const Monomial& b, const ParamTable& pt,
                  int& sign);
Monomial mono_div(const Monomial& a, const Monomial& b, const ParamTable& pt,
                  int& sign);
// a^e for rational e; torsion exponents must stay integral.
Monomial mono_pow(const Monomial& a, const Rat& e, const ParamTable& pt,
                  int& sign);

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.compare(b) < 0;
  }
};

// Exact multivariate Laurent polynomial: ordered term map, no zero
// coefficients, deterministic iteration. A poly with any named parameter
// carries the instance's ParamTable pointer.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rat, MonoLess>;

  LaurentPoly() = default;  // zero

  static LaurentPoly constant(const Rat& c, ParamTablePtr pt = nullptr);
  static LaurentPoly term(const Monomial& m, const Rat& c, ParamTablePtr pt);

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
  const TermMap& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  const ParamTablePtr& table() const { return pt_; }

  bool operator==(const LaurentPoly& o) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  // Largest term in the monomial order.
  std::pair<Monomial, Rat> leading() const;
  // Per-parameter minimum exponent over all terms (the monomial gcd).
  Monomial content() const;

  // Multiply every term by (m, c sign included in c). The monomial's
  // parameters must be covered by this poly's table; widen first if needed.
  LaurentPoly scaled(const Monomial& m, const Rat& c) const;

  // Same terms with the parameter table widened (merged with pt).
  LaurentPoly with_table(const ParamTablePtr& pt) const;

  // Exact division; throws DivisionByZero if b == 0 and InvalidArgument if
  // b does not divide a.
  static LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

  void add_term(const Monomial& m, const Rat& c);  // canonical accumulate

 private:
  TermMap t_;
  ParamTablePtr pt_;
};

// Element of the fraction field F. Invariants: den != 0; den's leading
// coefficient is 1 and its monomial content is trivial (both folded into
// num); zero is 0/1. Fractions are otherwise left unreduced; equality is
// decided by cross multiplication.
class FieldElem {
 public:
  FieldElem() : den_(LaurentPoly::constant(1)) {}  // zero

  static FieldElem from_poly(LaurentPoly p);
  static FieldElem fraction(LaurentPoly num, LaurentPoly den);
  static FieldElem constant(const Rat& c, ParamTablePtr pt = nullptr);
  static FieldElem one(ParamTablePtr pt = nullptr);
  // sign * m as a field element.
  static FieldElem unit(const Monomial& m, int sign, ParamTablePtr pt);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  // Single-term numerator with coefficient +-1 over denominator 1.
  bool is_unit() const;
  // Decompose a unit into (monomial, sign); throws InvalidArgument otherwise.
  std::pair<Monomial, int> unit_parts() const;

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const ParamTablePtr& table() const;

  FieldElem inverse() const;  // throws DivisionByZero on zero
  FieldElem pow(long k) const;
  // Rational power; defined for units only (branch: exponents scaled by e,
  // -1^(odd/2) resolved through a declared i-type torsion parameter).
  FieldElem pow(const Rat& e) const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  // Cross-multiplied exact equality.
  bool equals(const FieldElem& o) const;
  bool operator==(const FieldElem& o) const { return equals(o); }

 private:
  void normalize();
  LaurentPoly num_, den_;
};

// Square root of a unit: +exponent/2 branch; a sign -1 consumes a declared
// torsion parameter squaring to -1 (throws ConfigError when none exists or
// an exponent cannot be halved).
FieldElem unit_sqrt(const FieldElem& u);

// Unit scalar from raw (id, exponent) factors, canonicalized against the
// table (torsion reduction signs included).
FieldElem unit_of(std::vector<std::pair<int, Rat>> raw, const ParamTablePtr& pt);

// Balanced quantum integer [n]_c = (c^n - c^-n)/(c - c^-1), computed as the
// balanced power sum. Requires c^2 != 1 (else DegenerateQuantumParameter).
FieldElem quantum_int(long n, const Monomial& c, const ParamTablePtr& pt);
FieldElem quantum_factorial(long n, const Monomial& c, const ParamTablePtr& pt);
// Balanced quantum binomial via the Pascal recurrence
//   [n;k] = c^k [n-1;k] + c^(k-n) [n-1;k-1].
FieldElem quantum_binom(long n, long k, const Monomial& c, const ParamTablePtr& pt);

}  // namespace fbeta
