#include "fbeta/scalar.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace fbeta {

namespace {

bool is_integer(const Rat& r) { return r.get_den() == 1; }

long to_long(const Rat& r) {
  if (!is_integer(r)) throw InvalidArgument("expected integer exponent");
  if (!r.get_num().fits_slong_p()) throw ResourceLimit("exponent too large");
  return r.get_num().get_si();
}

const ParamTable& table_or_base(const ParamTablePtr& pt) {
  static const ParamTable base{};  // covers only the built-in v, default bound
  return pt ? *pt : base;
}

}  // namespace

ParamTable::ParamTable(int exp_den_bound) : exp_den_bound_(exp_den_bound) {
  if (exp_den_bound < 1) throw ConfigError("exponent denominator bound must be >= 1");
  specs_.push_back(ParamSpec{"v", ParamKind::Free, +1});
}

int ParamTable::add(const ParamSpec& spec) {
  if (spec.name.empty()) throw ConfigError("parameter name must be nonempty");
  if (find(spec.name) >= 0)
    throw ConfigError("duplicate parameter name '" + spec.name + "'");
  if (spec.kind == ParamKind::Torsion && spec.torsion_square != 1 &&
      spec.torsion_square != -1)
    throw ConfigError("torsion parameter '" + spec.name +
                      "' must square to +1 or -1 (order 2 only)");
  specs_.push_back(spec);
  return static_cast<int>(specs_.size()) - 1;
}

int ParamTable::find(std::string_view name) const {
  for (size_t i = 0; i < specs_.size(); ++i)
    if (specs_[i].name == name) return static_cast<int>(i);
  return -1;
}

const ParamSpec& ParamTable::spec(int id) const {
  if (id < 0 || id >= size()) throw InvalidArgument("parameter id out of range");
  return specs_[id];
}

int ParamTable::find_torsion(int square) const {
  for (size_t i = 0; i < specs_.size(); ++i)
    if (specs_[i].kind == ParamKind::Torsion && specs_[i].torsion_square == square)
      return static_cast<int>(i);
  return -1;
}

std::string ParamTable::signature() const {
  std::ostringstream os;
  os << "D=" << exp_den_bound_;
  for (const auto& s : specs_) {
    os << ";" << s.name;
    if (s.kind == ParamKind::Torsion)
      os << ":t" << (s.torsion_square > 0 ? "+" : "-");
  }
  return os.str();
}

ParamTablePtr merge_table(const ParamTablePtr& a, const ParamTablePtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || a->signature() == b->signature()) return a;
  throw InvalidArgument("mixing scalars from different parameter tables");
}

Monomial Monomial::param(int id, Rat exp) {
  Monomial m;
  if (exp != 0) m.f_.push_back({id, std::move(exp)});
  return m;
}

Rat Monomial::exponent(int id) const {
  for (const auto& [pid, e] : f_)
    if (pid == id) return e;
  return Rat(0);
}

int Monomial::compare(const Monomial& o) const {
  size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    // A missing factor counts as exponent 0 on that parameter.
    bool ha = i < f_.size(), hb = j < o.f_.size();
    int ida = ha ? f_[i].first : std::numeric_limits<int>::max();
    int idb = hb ? o.f_[j].first : std::numeric_limits<int>::max();
    if (ida < idb) {
      int s = sgn(f_[i].second);
      if (s != 0) return s;
      ++i;
    } else if (idb < ida) {
      int s = sgn(o.f_[j].second);
      if (s != 0) return -s;
      ++j;
    } else {
      int c = cmp(f_[i].second, o.f_[j].second);
      if (c != 0) return c;
      ++i;
      ++j;
    }
  }
  return 0;
}

Monomial mono_make(std::vector<std::pair<int, Rat>> raw, const ParamTable& pt,
                   int& sign) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Monomial m;
  sign = +1;
  size_t i = 0;
  while (i < raw.size()) {
    int id = raw[i].first;
    Rat e = raw[i].second;
    ++i;
    while (i < raw.size() && raw[i].first == id) {
      e += raw[i].second;
      ++i;
    }
    if (e == 0) continue;
    const ParamSpec& sp = pt.spec(id);
    if (sp.kind == ParamKind::Torsion) {
      if (!is_integer(e))
        throw ConfigError("fractional exponent on torsion parameter '" +
                          sp.name + "'");
      // e = 2q + r with r in {0,1}; each paired-off square contributes
      // the declared torsion square to the sign.
      Int q = e.get_num() / 2;
      Int r = e.get_num() - 2 * q;
      if (r < 0) {
        r += 2;
        q -= 1;
      }
      if (sp.torsion_square == -1 && mpz_odd_p(q.get_mpz_t())) sign = -sign;
      if (r == 1) m.f_.push_back({id, Rat(1)});
    } else {
      if (e.get_den() > pt.exp_den_bound())
        throw ConfigError("exponent denominator exceeds bound on parameter '" +
                          sp.name + "'");
      m.f_.push_back({id, e});
    }
  }
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b, const ParamTable& pt,
                  int& sign) {
  std::vector<std::pair<int, Rat>> raw(a.factors());
  raw.insert(raw.end(), b.factors().begin(), b.factors().end());
  return mono_make(std::move(raw), pt, sign);
}

Monomial mono_div(const Monomial& a, const Monomial& b, const ParamTable& pt,
                  int& sign) {
  std::vector<std::pair<int, Rat>> raw(a.factors());
  for (const auto& [id, e] : b.factors()) raw.push_back({id, -e});
  return mono_make(std::move(raw), pt, sign);
}

Monomial mono_pow(const Monomial& a, const Rat& e, const ParamTable& pt,
                  int& sign) {
  std::vector<std::pair<int, Rat>> raw;
  raw.reserve(a.factors().size());
  for (const auto& [id, x] : a.factors()) raw.push_back({id, x * e});
  return mono_make(std::move(raw), pt, sign);
}

LaurentPoly LaurentPoly::constant(const Rat& c, ParamTablePtr pt) {
  LaurentPoly p;
  p.pt_ = std::move(pt);
  if (c != 0) p.t_.emplace(Monomial::one(), c);
  return p;
}

LaurentPoly LaurentPoly::term(const Monomial& m, const Rat& c, ParamTablePtr pt) {
  // A null table admits only the built-in quantum parameter.
  if (!pt)
    for (const auto& [id, e] : m.factors())
      if (id != ParamTable::kQuantum)
        throw InvalidArgument("non-quantum monomial requires a parameter table");
  LaurentPoly p;
  p.pt_ = std::move(pt);
  if (c != 0) p.t_.emplace(m, c);
  return p;
}

bool LaurentPoly::is_one() const {
  return t_.size() == 1 && t_.begin()->first.is_one() && t_.begin()->second == 1;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  auto it = t_.begin();
  auto jt = o.t_.begin();
  for (; it != t_.end(); ++it, ++jt)
    if (it->first.compare(jt->first) != 0 || it->second != jt->second)
      return false;
  return true;
}

void LaurentPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r.pt_ = merge_table(a.pt_, b.pt_);
  for (const auto& [m, c] : b.t_) r.add_term(m, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r.pt_ = merge_table(a.pt_, b.pt_);
  for (const auto& [m, c] : b.t_) r.add_term(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  r.pt_ = pt_;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.pt_ = merge_table(a.pt_, b.pt_);
  if (a.is_zero() || b.is_zero()) return r;
  const ParamTable& tab = table_or_base(r.pt_);
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      int sign = +1;
      Monomial m = mono_mul(ma, mb, tab, sign);
      r.add_term(m, ca * cb * sign);
    }
  return r;
}

std::pair<Monomial, Rat> LaurentPoly::leading() const {
  if (t_.empty()) throw InvalidArgument("leading term of zero polynomial");
  auto it = std::prev(t_.end());
  return {it->first, it->second};
}

Monomial LaurentPoly::content() const {
  if (t_.empty()) return Monomial::one();
  std::map<int, Rat> mins;
  std::map<int, size_t> counts;
  for (const auto& [m, c] : t_)
    for (const auto& [id, e] : m.factors()) {
      auto it = mins.find(id);
      if (it == mins.end())
        mins[id] = e;
      else
        it->second = std::min(it->second, e);
      counts[id]++;
    }
  std::vector<std::pair<int, Rat>> fs;
  for (auto& [id, e] : mins) {
    // A parameter absent from some term has exponent 0 there.
    if (counts[id] < t_.size()) e = std::min(e, Rat(0));
    if (e != 0) fs.push_back({id, e});
  }
  int sign = +1;
  // minima of {0,1}-valued torsion exponents stay in {0,1}: no sign flips
  return mono_make(std::move(fs), table_or_base(pt_), sign);
}

LaurentPoly LaurentPoly::scaled(const Monomial& m, const Rat& c) const {
  LaurentPoly r;
  r.pt_ = pt_;
  if (c == 0) return r;
  const ParamTable& tab = table_or_base(pt_);
  for (const auto& [tm, tc] : t_) {
    int sign = +1;
    Monomial nm = mono_mul(tm, m, tab, sign);
    r.add_term(nm, tc * c * sign);
  }
  return r;
}

LaurentPoly LaurentPoly::with_table(const ParamTablePtr& pt) const {
  LaurentPoly r = *this;
  r.pt_ = merge_table(pt_, pt);
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  LaurentPoly q;
  q.pt_ = merge_table(a.pt_, b.pt_);
  if (a.is_zero()) return q;
  const ParamTable& tab = table_or_base(q.pt_);
  auto [lbm, lbc] = b.leading();
  // In an exact division every quotient monomial is >= trailing(a)/trailing(b).
  // Exponent denominators are bounded per parameter, so the strictly
  // decreasing leading monomial cannot descend forever above that floor.
  int tsign = +1;
  Monomial tmin =
      mono_div(a.terms().begin()->first, b.terms().begin()->first, tab, tsign);
  LaurentPoly r = a.with_table(q.pt_);
  while (!r.is_zero()) {
    auto [lrm, lrc] = r.leading();
    int sign = +1;
    Monomial qm = mono_div(lrm, lbm, tab, sign);
    if (qm.compare(tmin) < 0) throw InvalidArgument("inexact polynomial division");
    Rat qc = lrc / lbc * sign;
    q.add_term(qm, qc);
    r = r - b.with_table(q.pt_).scaled(qm, qc);
    if (!r.is_zero() && r.leading().first.compare(lrm) >= 0)
      throw InvalidArgument("inexact polynomial division");
  }
  return q;
}

FieldElem FieldElem::from_poly(LaurentPoly p) {
  FieldElem e;
  e.den_ = LaurentPoly::constant(1, p.table());
  e.num_ = std::move(p);
  e.normalize();
  return e;
}

FieldElem FieldElem::fraction(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  FieldElem e;
  e.num_ = std::move(num);
  e.den_ = std::move(den);
  e.normalize();
  return e;
}

FieldElem FieldElem::constant(const Rat& c, ParamTablePtr pt) {
  return from_poly(LaurentPoly::constant(c, std::move(pt)));
}

FieldElem FieldElem::one(ParamTablePtr pt) { return constant(1, std::move(pt)); }

FieldElem FieldElem::unit(const Monomial& m, int sign, ParamTablePtr pt) {
  return from_poly(LaurentPoly::term(m, Rat(sign), std::move(pt)));
}

void FieldElem::normalize() {
  ParamTablePtr pt = merge_table(num_.table(), den_.table());
  if (num_.is_zero()) {
    num_ = LaurentPoly::constant(0, pt);
    den_ = LaurentPoly::constant(1, pt);
    return;
  }
  if (den_.is_zero()) throw DivisionByZero();
  auto [lm, lc] = den_.leading();
  Monomial content = den_.content();
  if (lc == 1 && content.is_one()) return;
  // Fold den's leading coefficient and monomial content into num so that
  // products of the same units yield structurally equal denominators.
  const ParamTable& tab = table_or_base(pt);
  int s = +1;
  Monomial inv = mono_div(Monomial::one(), content, tab, s);
  Rat scale = Rat(s) / lc;
  num_ = num_.with_table(pt).scaled(inv, scale);
  den_ = den_.with_table(pt).scaled(inv, scale);
}

bool FieldElem::is_one() const { return num_ == den_; }

bool FieldElem::is_unit() const {
  if (!den_.is_one() || num_.size() != 1) return false;
  const Rat& c = num_.terms().begin()->second;
  return c == 1 || c == -1;
}

std::pair<Monomial, int> FieldElem::unit_parts() const {
  if (!is_unit()) throw InvalidArgument("not a unit scalar");
  const auto& [m, c] = *num_.terms().begin();
  return {m, c > 0 ? +1 : -1};
}

const ParamTablePtr& FieldElem::table() const {
  return num_.table() ? num_.table() : den_.table();
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return fraction(den_, num_);
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return FieldElem::fraction(a.num_ + b.num_, a.den_);
  return FieldElem::fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  if (a.den_ == b.den_) return FieldElem::fraction(a.num_ - b.num_, a.den_);
  return FieldElem::fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  r.num_ = -r.num_;
  return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  ParamTablePtr pt = merge_table(a.table(), b.table());
  if (a.is_zero() || b.is_zero()) return FieldElem::constant(0, pt);
  if (a.is_unit()) {
    auto [m, s] = a.unit_parts();
    return FieldElem::fraction(b.num_.with_table(pt).scaled(m, Rat(s)),
                               b.den_.with_table(pt));
  }
  if (b.is_unit()) {
    auto [m, s] = b.unit_parts();
    return FieldElem::fraction(a.num_.with_table(pt).scaled(m, Rat(s)),
                               a.den_.with_table(pt));
  }
  return FieldElem::fraction(a.num_ * b.num_, a.den_ * b.den_);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  return a * b.inverse();
}

FieldElem FieldElem::pow(long k) const {
  if (k == 0) return FieldElem::one(table());
  if (is_unit()) {
    auto [m, s] = unit_parts();
    int sign = +1;
    Monomial p = mono_pow(m, Rat(k), table_or_base(table()), sign);
    if (s == -1 && (k % 2 != 0)) sign = -sign;
    return FieldElem::unit(p, sign, table());
  }
  FieldElem base = k > 0 ? *this : inverse();
  unsigned long n = k > 0 ? static_cast<unsigned long>(k)
                          : -static_cast<unsigned long>(k);
  FieldElem acc = FieldElem::one(table());
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

FieldElem FieldElem::pow(const Rat& e) const {
  if (is_integer(e)) return pow(to_long(e));
  auto [m, s] = unit_parts();  // rational powers are for units only
  const ParamTablePtr& pt = table();
  const ParamTable& tab = table_or_base(pt);
  int sign = +1;
  Monomial p = mono_pow(m, e, tab, sign);
  if (s == +1) return FieldElem::unit(p, sign, pt);
  // (-1)^(a/2) = i^a for a declared torsion parameter i with i^2 = -1.
  if (e.get_den() != 2)
    throw ConfigError("unsupported fractional power of a negative unit");
  long a = to_long(e * 2);
  int iid = pt ? pt->find_torsion(-1) : -1;
  if (iid < 0)
    throw ConfigError(
        "fractional power of a negative unit requires a torsion parameter "
        "with square -1");
  int s2 = +1;
  Monomial ipow = mono_pow(Monomial::param(iid), Rat(a), tab, s2);
  int s3 = +1;
  Monomial full = mono_mul(p, ipow, tab, s3);
  return FieldElem::unit(full, sign * s2 * s3, pt);
}

bool FieldElem::equals(const FieldElem& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

FieldElem unit_sqrt(const FieldElem& u) {
  try {
    return u.pow(Rat(1, 2));
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("unit has no representable square root: ") +
                      e.what());
  }
}

FieldElem unit_of(std::vector<std::pair<int, Rat>> raw, const ParamTablePtr& pt) {
  int sign = +1;
  Monomial m = mono_make(std::move(raw), table_or_base(pt), sign);
  return FieldElem::unit(m, sign, pt);
}

FieldElem quantum_int(long n, const Monomial& c, const ParamTablePtr& pt) {
  if (n < 0) throw InvalidArgument("quantum integer needs n >= 0");
  const ParamTable& tab = table_or_base(pt);
  {
    int sign = +1;
    Monomial sq = mono_pow(c, Rat(2), tab, sign);
    if (sq.is_one() && sign == +1)
      throw DegenerateQuantumParameter("quantum parameter satisfies c^2 = 1");
  }
  LaurentPoly p = LaurentPoly::constant(0, pt);
  for (long k = 0; k < n; ++k) {
    int sign = +1;
    Monomial m = mono_pow(c, Rat(n - 1 - 2 * k), tab, sign);
    p.add_term(m, Rat(sign));
  }
  return FieldElem::from_poly(std::move(p));
}

FieldElem quantum_factorial(long n, const Monomial& c, const ParamTablePtr& pt) {
  if (n < 0) throw InvalidArgument("quantum factorial needs n >= 0");
  FieldElem r = quantum_int(1, c, pt);  // = 1; also validates nondegeneracy
  for (long k = 2; k <= n; ++k) r = r * quantum_int(k, c, pt);
  return r;
}

FieldElem quantum_binom(long n, long k, const Monomial& c,
                        const ParamTablePtr& pt) {
  if (n < 0) throw InvalidArgument("quantum binomial needs n >= 0");
  const ParamTable& tab = table_or_base(pt);
  {
    int sign = +1;
    Monomial sq = mono_pow(c, Rat(2), tab, sign);
    if (sq.is_one() && sign == +1)
      throw DegenerateQuantumParameter("quantum parameter satisfies c^2 = 1");
  }
  if (k < 0 || k > n) return FieldElem::constant(0, pt);
  // Row-by-row balanced Pascal recurrence:
  //   [m;j] = c^j [m-1;j] + c^(j-m) [m-1;j-1]
  std::vector<FieldElem> row{FieldElem::one(pt)};
  for (long m = 1; m <= n; ++m) {
    std::vector<FieldElem> next(static_cast<size_t>(m) + 1,
                                FieldElem::constant(0, pt));
    for (long j = 0; j <= m; ++j) {
      FieldElem acc = FieldElem::constant(0, pt);
      if (j <= m - 1) {
        int s = +1;
        Monomial cj = mono_pow(c, Rat(j), tab, s);
        acc += FieldElem::unit(cj, s, pt) * row[static_cast<size_t>(j)];
      }
      if (j >= 1) {
        int s = +1;
        Monomial cjm = mono_pow(c, Rat(j - m), tab, s);
        acc += FieldElem::unit(cjm, s, pt) * row[static_cast<size_t>(j - 1)];
      }
      next[static_cast<size_t>(j)] = acc;
    }
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

}  // namespace fbeta
