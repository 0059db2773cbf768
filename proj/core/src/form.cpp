#include "fbeta/form.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fbeta/text.hpp"

namespace fbeta {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void check_letters(const AlgebraInstance& inst, const Word& w) {
  for (int l : w)
    if (l < 0 || l >= inst.rank())
      throw InvalidArgument("word letter " + std::to_string(l + 1) +
                            " outside the index range of instance '" +
                            inst.label + "'");
}

// Split into homogeneous components.
std::map<Weight, FreeElem> by_weight(const FreeElem& x, int rank) {
  std::map<Weight, FreeElem> parts;
  for (const auto& [w, c] : x.terms()) parts[word_weight(w, rank)].add_term(w, c);
  return parts;
}

// Oracle recursion on homogeneous arguments of common weight nu:
//   (x, theta_j u') = sum over coproduct components (theta_j, x2) of x:
//       alpha(j, nu - e_j) (theta_j, theta_j) (x2, u').
FieldElem oracle_hom(const AlgebraInstance& inst,
                     const std::vector<FieldElem>& gen, const FreeElem& x,
                     const FreeElem& y, const Weight& nu) {
  if (x.is_zero() || y.is_zero()) return FieldElem();
  if (weight_height(nu) == 0) return x.coeff({}) * y.coeff({});
  const Tensor2 rx = coproduct(inst, x);
  FieldElem out;
  for (const auto& [u, cu] : y.terms()) {
    const int j = u.front();
    FreeElem x2;
    for (const auto& [ww, c] : rx.terms())
      if (ww.first.size() == 1 && ww.first[0] == j) x2.add_term(ww.second, c);
    Weight nr = nu;
    --nr[j];
    const FreeElem rest =
        FreeElem::word(Word(u.begin() + 1, u.end()), FieldElem::one(inst.params));
    out += cu * inst.alpha.eval(j, nr) * gen[j] * oracle_hom(inst, gen, x2, rest, nr);
  }
  return out;
}

}  // namespace

FormEngine::FormEngine(AlgebraInstance inst, FormOptions opt)
    : inst_(std::move(inst)), opt_(std::move(opt)) {
  inst_.datum.check();
  if (!inst_.beta.present() || !inst_.alpha.present())
    throw ConfigError("instance '" + inst_.label +
                      "' needs beta and alpha tables for the pairing");
  if (opt_.height_bound <= 0) opt_.height_bound = inst_.rank() <= 2 ? 6 : 4;
  fingerprint_ = inst_.gram_fingerprint();
  for (int i = 0; i < inst_.rank(); ++i) {
    // (theta_i, theta_i) = (1 - v_i^-2)^-1 = v_i^2 / (v_i^2 - 1)
    const LaurentPoly vi2 = LaurentPoly::term(
        Monomial::param(ParamTable::kQuantum, Rat(2 * inst_.datum.d(i))), 1,
        inst_.params);
    gen_.push_back(
        FieldElem::fraction(vi2, vi2 - LaurentPoly::constant(1, inst_.params)));
  }
  if (!opt_.cache_dir.empty()) fs::create_directories(opt_.cache_dir);
}

FieldElem FormEngine::pair_gen(int i) const {
  if (i < 0 || i >= static_cast<int>(gen_.size()))
    throw InvalidArgument("generator index out of range");
  return gen_[i];
}

FieldElem FormEngine::pair(const FreeElem& x, const FreeElem& y) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  FieldElem out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      out += ca * cb * pair_words_locked(a, b);
  return out;
}

FieldElem FormEngine::pair_words(const Word& a, const Word& b) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  return pair_words_locked(a, b);
}

FieldElem FormEngine::pair_words_locked(const Word& a, const Word& b) {
  check_letters(inst_, a);
  check_letters(inst_, b);
  const int rank = inst_.rank();
  if (word_weight(a, rank) != word_weight(b, rank)) return FieldElem();
  if (a.empty()) return FieldElem::one(inst_.params);
  auto key = std::make_pair(a, b);
  if (auto it = pair_memo_.find(key); it != pair_memo_.end()) return it->second;
  // (u theta_i, b) = alpha(|u|, i) (u, r_i(b)) (theta_i, theta_i)
  const int i = a.back();
  const Word u(a.begin(), a.end() - 1);
  const FreeElem rb =
      r_last(inst_, i, FreeElem::word(b, FieldElem::one(inst_.params)));
  FieldElem acc;
  for (const auto& [w, c] : rb.terms()) acc += c * pair_words_locked(u, w);
  FieldElem res = inst_.alpha.eval(word_weight(u, rank), i) * acc * gen_[i];
  return pair_memo_.emplace(std::move(key), std::move(res)).first->second;
}

FieldElem FormEngine::pair_oracle(const FreeElem& x, const FreeElem& y) {
  const int rank = inst_.rank();
  const auto xs = by_weight(x, rank);
  const auto ys = by_weight(y, rank);
  FieldElem out;
  for (const auto& [nu, xc] : xs) {
    auto it = ys.find(nu);
    if (it != ys.end()) out += oracle_hom(inst_, gen_, xc, it->second, nu);
  }
  return out;
}

const GramBlock& FormEngine::gram(const Weight& nu) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  return block_locked(nu);
}

long FormEngine::graded_dim(const Weight& nu) { return gram(nu).rank(); }

const GramBlock& FormEngine::block_locked(const Weight& nu) {
  if (static_cast<int>(nu.size()) != inst_.rank())
    throw InvalidArgument("weight length does not match the instance rank");
  for (int c : nu)
    if (c < 0) throw InvalidArgument("weight coordinates must be nonnegative");
  if (auto it = blocks_.find(nu); it != blocks_.end()) return it->second;
  if (weight_height(nu) > opt_.height_bound)
    throw ResourceLimit("weight height " + std::to_string(weight_height(nu)) +
                        " exceeds the bound " +
                        std::to_string(opt_.height_bound));
  if (!opt_.cache_dir.empty()) {
    if (auto b = load_block(nu))
      return blocks_.emplace(nu, std::move(*b)).first->second;
  }
  GramBlock b = compute_block(nu);
  if (!opt_.cache_dir.empty()) store_block(b);
  return blocks_.emplace(nu, std::move(b)).first->second;
}

GramBlock FormEngine::compute_block(const Weight& nu) {
  GramBlock b;
  b.weight = nu;
  b.basis = words_of_weight(nu);
  const int n = static_cast<int>(b.basis.size());
  b.mat.assign(n, {});
  for (int r = 0; r < n; ++r) {
    b.mat[r].reserve(n);
    for (int c = 0; c < n; ++c)
      b.mat[r].push_back(pair_words_locked(b.basis[r], b.basis[c]));
  }

  // Denominator-cleared copy; scaling a row by a nonzero polynomial keeps
  // every column relation intact.
  std::vector<std::vector<LaurentPoly>> e(n);
  for (int r = 0; r < n; ++r) {
    std::vector<LaurentPoly> dens;
    for (int c = 0; c < n; ++c) {
      if (b.mat[r][c].is_zero()) continue;
      const LaurentPoly& d = b.mat[r][c].den();
      if (std::none_of(dens.begin(), dens.end(),
                       [&](const LaurentPoly& q) { return q == d; }))
        dens.push_back(d);
    }
    LaurentPoly row_den = LaurentPoly::constant(1, inst_.params);
    for (const LaurentPoly& d : dens) row_den = row_den * d;
    e[r].reserve(n);
    for (int c = 0; c < n; ++c)
      e[r].push_back(b.mat[r][c].is_zero()
                         ? LaurentPoly()
                         : b.mat[r][c].num() * LaurentPoly::divide_exact(
                                                   row_den, b.mat[r][c].den()));
  }

  // Fraction-free echelon form: columns scanned left to right so the pivot
  // set is the lexicographically earliest independent one; each step divides
  // by the previous pivot, exactly.
  LaurentPoly prev = LaurentPoly::constant(1, inst_.params);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (!e[r][col].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(e[pr], e[row]);
    for (int r = row + 1; r < n; ++r) {
      for (int c = col + 1; c < n; ++c)
        e[r][c] = LaurentPoly::divide_exact(
            e[r][c] * e[row][col] - e[r][col] * e[row][c], prev);
      e[r][col] = LaurentPoly();
    }
    prev = e[row][col];
    b.quotient.push_back(col);
    ++row;
  }

  // One kernel vector per free column f: in the echelon form col_f is a
  // combination of the pivot columns above it; back-substitution gives
  //   k_f = e_f - sum_c s_c e_c,  M k_f = 0.
  for (int f = 0; f < n; ++f) {
    if (std::binary_search(b.quotient.begin(), b.quotient.end(), f)) continue;
    const int m = static_cast<int>(
        std::lower_bound(b.quotient.begin(), b.quotient.end(), f) -
        b.quotient.begin());
    std::vector<FieldElem> s(m);
    for (int r = m - 1; r >= 0; --r) {
      FieldElem acc = FieldElem::from_poly(e[r][f]);
      for (int r2 = r + 1; r2 < m; ++r2)
        acc -= FieldElem::from_poly(e[r][b.quotient[r2]]) * s[r2];
      s[r] = acc * FieldElem::from_poly(e[r][b.quotient[r]]).inverse();
    }
    FreeElem k = FreeElem::word(b.basis[f], FieldElem::one(inst_.params));
    for (int r = 0; r < m; ++r)
      if (!s[r].is_zero()) k.add_term(b.basis[b.quotient[r]], -s[r]);
    b.kernel.push_back(std::move(k));
  }

  // Paranoia: every kernel vector must annihilate the Gram matrix.
  for (const FreeElem& k : b.kernel)
    for (int r = 0; r < n; ++r) {
      FieldElem acc;
      for (const auto& [kw, kc] : k.terms()) {
        const auto it = std::lower_bound(b.basis.begin(), b.basis.end(), kw);
        acc += b.mat[r][it - b.basis.begin()] * kc;
      }
      if (!acc.is_zero())
        throw Error("internal: kernel vector fails Gram annihilation");
    }

  return b;
}

FreeElem FormEngine::normal_form(const FreeElem& x) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  FreeElem out;
  for (const auto& [w, c] : x.terms()) {
    check_letters(inst_, w);
    const GramBlock& b = block_locked(word_weight(w, inst_.rank()));
    const auto it = std::lower_bound(b.basis.begin(), b.basis.end(), w);
    const int p = static_cast<int>(it - b.basis.begin());
    if (std::binary_search(b.quotient.begin(), b.quotient.end(), p)) {
      out.add_term(w, c);
      continue;
    }
    const int t = p - static_cast<int>(std::lower_bound(b.quotient.begin(),
                                                        b.quotient.end(), p) -
                                       b.quotient.begin());
    // w = k_f + sum_c s_c c with k_f radical: rewrite through the kernel
    // vector, landing on quotient words.
    for (const auto& [kw, kc] : b.kernel[t].terms())
      if (kw != w) out.add_term(kw, -(c * kc));
  }
  return out;
}

FormEngine::SerreCertificate FormEngine::serre_in_radical(int i, int j) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  const int rank = inst_.rank();
  if (i < 0 || i >= rank || j < 0 || j >= rank || i == j)
    throw InvalidArgument("serre element needs two distinct indices");
  Weight nu = unit_weight(rank, j);
  nu[i] += 1 - inst_.datum.a(i, j);
  if (weight_height(nu) > opt_.height_bound)
    throw ResourceLimit("serre weight height " +
                        std::to_string(weight_height(nu)) +
                        " exceeds the bound " +
                        std::to_string(opt_.height_bound));
  const FreeElem d = serre_element(inst_, i, j);
  SerreCertificate cert;
  cert.i = i;
  cert.j = j;
  cert.in_radical = true;
  for (const Word& w : words_of_weight(nu)) {
    FieldElem val;
    for (const auto& [dw, dc] : d.terms()) val += dc * pair_words_locked(w, dw);
    if (!val.is_zero()) cert.in_radical = false;
    cert.witness.emplace_back(w, std::move(val));
  }
  return cert;
}

Report FormEngine::serre_report() {
  Report rep;
  rep.title = "serre radical membership: " + inst_.label;
  for (int i = 0; i < inst_.rank(); ++i)
    for (int j = 0; j < inst_.rank(); ++j) {
      if (i == j) continue;
      const auto cert = serre_in_radical(i, j);
      std::string detail;
      if (!cert.in_radical)
        for (const auto& [w, val] : cert.witness)
          if (!val.is_zero()) {
            detail = "(" + render_word(w) + ", D) = " + render(val);
            break;
          }
      rep.add("serre(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                  ")",
              cert.in_radical, detail);
    }
  return rep;
}

std::string FormEngine::cache_path(const Weight& nu) const {
  const std::string name = fingerprint_ + "-" + render_weight(nu) + ".json";
  return (fs::path(opt_.cache_dir) / name).string();
}

void FormEngine::store_block(const GramBlock& b) const {
  json j;
  j["format"] = "fbeta-gram-1";
  j["fingerprint"] = fingerprint_;
  j["weight"] = b.weight;
  j["basis"] = b.basis;
  json mat = json::array();
  for (const auto& row : b.mat) {
    json jr = json::array();
    for (const auto& x : row) jr.push_back(render(x));
    mat.push_back(std::move(jr));
  }
  j["mat"] = std::move(mat);
  j["quotient"] = b.quotient;
  json ker = json::array();
  for (const FreeElem& k : b.kernel) {
    json jk = json::array();
    for (const auto& [w, c] : k.terms())
      jk.push_back(json::array({json(w), json(render(c))}));
    ker.push_back(std::move(jk));
  }
  j["kernel"] = std::move(ker);

  const std::string path = cache_path(b.weight);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << j.dump(1, '\t') << '\n';
    if (!out.good()) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw ConfigError("cannot write cache file '" + tmp + "'");
    }
  }
  fs::rename(tmp, path);
}

std::optional<GramBlock> FormEngine::load_block(const Weight& nu) const {
  const std::string path = cache_path(nu);
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return std::nullopt;
  try {
    const json j = json::parse(in);
    if (j.at("format").get<std::string>() != "fbeta-gram-1")
      return std::nullopt;
    if (j.at("fingerprint").get<std::string>() != fingerprint_)
      return std::nullopt;
    GramBlock b;
    b.weight = j.at("weight").get<Weight>();
    if (b.weight != nu) return std::nullopt;
    b.basis = j.at("basis").get<std::vector<Word>>();
    if (b.basis != words_of_weight(nu)) return std::nullopt;
    const int n = static_cast<int>(b.basis.size());
    const auto& mat = j.at("mat");
    if (static_cast<int>(mat.size()) != n) return std::nullopt;
    for (const auto& row : mat) {
      if (static_cast<int>(row.size()) != n) return std::nullopt;
      std::vector<FieldElem> r;
      r.reserve(n);
      for (const auto& s : row)
        r.push_back(parse_scalar(s.get<std::string>(), inst_.params));
      b.mat.push_back(std::move(r));
    }
    b.quotient = j.at("quotient").get<std::vector<int>>();
    if (!std::is_sorted(b.quotient.begin(), b.quotient.end()))
      return std::nullopt;
    for (int c : b.quotient)
      if (c < 0 || c >= n) return std::nullopt;
    const auto& ker = j.at("kernel");
    if (ker.size() + b.quotient.size() != static_cast<size_t>(n))
      return std::nullopt;
    for (const auto& jk : ker) {
      FreeElem k;
      for (const auto& term : jk) {
        const Word w = term.at(0).get<Word>();
        if (!std::binary_search(b.basis.begin(), b.basis.end(), w))
          return std::nullopt;
        k.add_term(w, parse_scalar(term.at(1).get<std::string>(), inst_.params));
      }
      b.kernel.push_back(std::move(k));
    }
    return b;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace fbeta
