#include "fbeta/datum.hpp"

#include <cstdint>
#include <sstream>

#include "fbeta/text.hpp"

namespace fbeta {

namespace {

std::string ij(int i, int j) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

}  // namespace

void CartanDatum::check() const {
  int n = rank();
  if (n <= 0) throw ConfigError("datum needs at least one index");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw ConfigError("datum label count does not match rank");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(dot[i].size()) != n)
      throw ConfigError("dot matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (dot[i][j] != dot[j][i])
        throw ConfigError("dot matrix is not symmetric at " + ij(i, j));
  for (int i = 0; i < n; ++i) {
    if (dot[i][i] <= 0 || dot[i][i] % 2 != 0)
      throw ConfigError("dot(" + std::to_string(i + 1) + "," +
                        std::to_string(i + 1) + ") must be positive even");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((2 * dot[i][j]) % dot[i][i] != 0)
        throw ConfigError("2*dot" + ij(i, j) + " is not divisible by dot(" +
                          std::to_string(i + 1) + "," + std::to_string(i + 1) +
                          ")");
      if (dot[i][j] > 0)
        throw ConfigError("dot" + ij(i, j) + " must be nonpositive off the diagonal");
    }
  }
  if (!parity.empty()) {
    if (static_cast<int>(parity.size()) != n)
      throw ConfigError("parity vector length does not match rank");
    for (int i = 0; i < n; ++i)
      if (parity[i] != 0 && parity[i] != 1)
        throw ConfigError("parity entries must be 0 or 1");
  }
}

long weight_height(const Weight& nu) {
  long h = 0;
  for (int x : nu) h += x;
  return h;
}

long weight_dot(const CartanDatum& dm, const Weight& nu, const Weight& tau) {
  long s = 0;
  for (size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] == 0) continue;
    for (size_t j = 0; j < tau.size(); ++j)
      s += static_cast<long>(nu[i]) * tau[j] * dm.dot[i][j];
  }
  return s;
}

long weight_parity(const CartanDatum& dm, const Weight& nu) {
  long s = 0;
  for (size_t i = 0; i < nu.size(); ++i) s += static_cast<long>(nu[i]) * dm.p(static_cast<int>(i));
  return s;
}

Weight weight_add(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Weight unit_weight(int rank, int i) {
  Weight w(static_cast<size_t>(rank), 0);
  w[static_cast<size_t>(i)] = 1;
  return w;
}

namespace {
void fill_weights(Weight& w, int pos, int left, std::vector<Weight>& out) {
  if (pos + 1 == static_cast<int>(w.size())) {
    w[pos] = left;
    out.push_back(w);
    return;
  }
  for (int c = left; c >= 0; --c) {
    w[pos] = c;
    fill_weights(w, pos + 1, left - c, out);
  }
}
}  // namespace

std::vector<Weight> weights_of_height(int rank, int height) {
  if (rank <= 0 || height < 0)
    throw InvalidArgument("weights_of_height needs positive rank and height >= 0");
  std::vector<Weight> out;
  Weight w(static_cast<size_t>(rank), 0);
  fill_weights(w, 0, height, out);
  return out;
}

std::string render_weight(const Weight& nu) {
  std::string s;
  for (size_t k = 0; k < nu.size(); ++k) {
    if (k) s += '_';
    s += std::to_string(nu[k]);
  }
  return s;
}

FormTable::FormTable(int rank, const FieldElem& fill)
    : rank_(rank), e_(static_cast<size_t>(rank) * rank, fill) {
  if (rank <= 0) throw InvalidArgument("form table needs positive rank");
}

FormTable FormTable::ones(int rank, const ParamTablePtr& pt) {
  return FormTable(rank, FieldElem::one(pt));
}

FieldElem& FormTable::at(int i, int j) {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_)
    throw InvalidArgument("form table index out of range");
  return e_[static_cast<size_t>(i) * rank_ + j];
}

const FieldElem& FormTable::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_)
    throw InvalidArgument("form table index out of range");
  return e_[static_cast<size_t>(i) * rank_ + j];
}

FieldElem FormTable::eval(const Weight& nu, const Weight& tau) const {
  if (!present()) throw InvalidArgument("evaluating an absent form table");
  FieldElem r = FieldElem::one(e_.empty() ? nullptr : e_[0].table());
  for (int i = 0; i < rank_; ++i) {
    if (nu[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      long e = static_cast<long>(nu[static_cast<size_t>(i)]) *
               tau[static_cast<size_t>(j)];
      if (e == 0) continue;
      r = r * at(i, j).pow(e);
    }
  }
  return r;
}

FieldElem FormTable::eval(const Weight& nu, int j) const {
  return eval(nu, unit_weight(rank_, j));
}

FieldElem FormTable::eval(int i, const Weight& tau) const {
  return eval(unit_weight(rank_, i), tau);
}

bool FormTable::operator==(const FormTable& o) const {
  if (rank_ != o.rank_) return false;
  for (size_t k = 0; k < e_.size(); ++k)
    if (!(e_[k] == o.e_[k])) return false;
  return true;
}

FieldElem AlgebraInstance::v_i(int i) const {
  return FieldElem::unit(v_mono(i), +1, params);
}

Monomial AlgebraInstance::v_mono(int i) const {
  return Monomial::param(ParamTable::kQuantum, Rat(datum.d(i)));
}

FieldElem AlgebraInstance::v_pow(long e) const {
  return FieldElem::unit(Monomial::param(ParamTable::kQuantum, Rat(e)), +1,
                         params);
}

FieldElem AlgebraInstance::bracket(int i, int j) const {
  if (!xi.present())
    throw ConfigError("instance '" + label + "' has no xi table");
  return v_pow(-datum.dot[i][j]) * beta.at(i, j) * xi.at(j, i);
}

FieldElem AlgebraInstance::bracket(const Weight& nu, const Weight& tau) const {
  if (!xi.present())
    throw ConfigError("instance '" + label + "' has no xi table");
  return v_pow(-weight_dot(datum, nu, tau)) * beta.eval(nu, tau) *
         xi.eval(tau, nu);
}

FieldElem AlgebraInstance::g_refine(const Weight& nu) const {
  if (!xi.present())
    throw ConfigError("instance '" + label + "' has no xi table");
  FieldElem r = FieldElem::one(params);
  for (int i = 0; i < rank(); ++i) {
    long ni = nu[static_cast<size_t>(i)];
    if (ni == 0) continue;
    r = r * unit_sqrt(xi.at(i, i)).pow(ni * ni);
    for (int j = i + 1; j < rank(); ++j) {
      long nj = nu[static_cast<size_t>(j)];
      if (nj == 0) continue;
      r = r * xi.at(i, j).pow(ni * nj);
    }
  }
  return r;
}

namespace {

void fnv_feed(uint64_t& h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  h ^= 0xff;
  h *= 1099511628211ull;  // field separator
}

void feed_table(uint64_t& h, const FormTable& t) {
  if (!t.present()) {
    fnv_feed(h, "-");
    return;
  }
  for (int i = 0; i < t.rank(); ++i)
    for (int j = 0; j < t.rank(); ++j) fnv_feed(h, render(t.at(i, j)));
}

}  // namespace

std::string AlgebraInstance::gram_fingerprint() const {
  uint64_t h = 1469598103934665603ull;
  std::ostringstream os;
  os << rank();
  for (const auto& row : datum.dot)
    for (int x : row) os << "," << x;
  os << ";";
  for (int x : datum.parity) os << x;
  fnv_feed(h, os.str());
  fnv_feed(h, params ? params->signature() : "");
  feed_table(h, beta);
  feed_table(h, alpha);
  std::ostringstream hex;
  hex << std::hex;
  for (int k = 15; k >= 0; --k) hex << ((h >> (4 * k)) & 0xf);
  return hex.str();
}

Report validate(const AlgebraInstance& inst) {
  Report rep;
  rep.title = "instance '" + inst.label + "'";
  int n = inst.rank();

  try {
    inst.datum.check();
    rep.add("datum", true);
  } catch (const ConfigError& e) {
    rep.add("datum", false, e.what());
    return rep;  // nothing below is meaningful on a broken datum
  }

  if (inst.datum.super()) {
    std::string bad;
    for (int i = 0; i < n; ++i)
      if (inst.datum.d(i) % 2 != inst.datum.p(i))
        bad += (bad.empty() ? "" : " ") + std::to_string(i + 1);
    rep.add("parity_bar", bad.empty(),
            bad.empty() ? "" : "d_i parity mismatch at index " + bad);
  }

  if (!inst.beta.present() || inst.beta.rank() != n ||
      !inst.alpha.present() || inst.alpha.rank() != n ||
      (inst.gamma.present() && inst.gamma.rank() != n) ||
      (inst.xi.present() && inst.xi.rank() != n)) {
    rep.add("tables_shape", false, "beta/alpha required with matching rank");
    return rep;
  }
  rep.add("tables_shape", true);

  {
    std::string bad;
    auto scan = [&](const char* name, const FormTable& t) {
      if (!t.present()) return;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!t.at(i, j).is_unit())
            bad += (bad.empty() ? "" : " ") + std::string(name) + ij(i, j);
    };
    scan("beta", inst.beta);
    scan("alpha", inst.alpha);
    scan("gamma", inst.gamma);
    scan("xi", inst.xi);
    rep.add("tables_unit", bad.empty(), bad);
    if (!bad.empty()) return rep;  // property checks assume units
  }

  {
    std::string bad;
    for (int i = 0; i < n; ++i)
      if (!inst.beta.at(i, i).is_one()) bad += (bad.empty() ? "" : " ") + ij(i, i);
    rep.add("beta_diagonal", bad.empty(), bad);
  }
  {
    std::string bad;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!(inst.beta.at(i, j) * inst.beta.at(j, i)).is_one())
          bad += (bad.empty() ? "" : " ") + ij(i, j);
    rep.add("beta_inverse", bad.empty(), bad);
  }
  {
    std::string bad;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!(inst.beta.at(i, j) * inst.alpha.at(j, i) ==
              inst.beta.at(j, i) * inst.alpha.at(i, j)))
          bad += (bad.empty() ? "" : " ") + ij(i, j);
    rep.add("alpha_beta", bad.empty(), bad);
  }
  if (inst.gamma.present()) {
    std::string bad;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!(inst.gamma.at(i, j) ==
              inst.gamma.at(j, i) * inst.beta.at(j, i)))
          bad += (bad.empty() ? "" : " ") + ij(i, j);
    rep.add("gamma_condition", bad.empty(), bad);
  }
  if (inst.xi.present()) {
    std::string bad;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!(inst.xi.at(i, j) == inst.xi.at(j, i)))
          bad += (bad.empty() ? "" : " ") + ij(i, j);
    rep.add("xi_symmetric", bad.empty(), bad);
    std::string nosqrt;
    for (int i = 0; i < n; ++i) {
      try {
        unit_sqrt(inst.xi.at(i, i));
      } catch (const Error&) {
        nosqrt += (nosqrt.empty() ? "" : " ") + ij(i, i);
      }
    }
    rep.add("xi_diagonal_sqrt", nosqrt.empty(), nosqrt);
  }
  return rep;
}

FormTable canonical_gamma(const AlgebraInstance& inst) {
  int n = inst.rank();
  FormTable g = FormTable::ones(n, inst.params);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) g.at(i, j) = inst.beta.at(j, i);
  return g;
}

Report verify_refine_cocycle(const AlgebraInstance& inst, int height_bound) {
  Report rep;
  rep.title = "refine cocycle " + inst.label;
  long total = 0, failed = 0;
  std::string first;
  for (int h1 = 1; h1 < height_bound; ++h1)
    for (const Weight& nu : weights_of_height(inst.rank(), h1))
      for (int h2 = 1; h1 + h2 <= height_bound; ++h2)
        for (const Weight& tau : weights_of_height(inst.rank(), h2)) {
          bool ok = inst.g_refine(nu) * inst.g_refine(tau) *
                        inst.xi.eval(tau, nu) ==
                    inst.g_refine(weight_add(nu, tau));
          ++total;
          if (!ok && failed++ == 0)
            first = render_weight(nu) + " | " + render_weight(tau);
        }
  std::string detail = std::to_string(total) + " pairs, height <= " +
                       std::to_string(height_bound);
  if (failed)
    detail = std::to_string(failed) + " of " + detail + " failed; first: " +
             first;
  rep.add("cocycle", failed == 0, detail);
  return rep;
}

}  // namespace fbeta
