#include "fbeta/config.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "json.hpp"

#include "fbeta/presets.hpp"
#include "fbeta/text.hpp"

namespace fbeta {

namespace {

using Json = nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

const Json& field(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail("missing field '" + key + "'");
  return *it;
}

std::vector<std::vector<int>> int_matrix(const Json& j,
                                         const std::string& key) {
  if (!j.is_array()) fail("'" + key + "' must be a matrix of integers");
  std::vector<std::vector<int>> m;
  for (const Json& row : j) {
    if (!row.is_array()) fail("'" + key + "' must be a matrix of integers");
    std::vector<int> r;
    for (const Json& e : row) {
      if (!e.is_number_integer())
        fail("'" + key + "' must be a matrix of integers");
      r.push_back(e.get<int>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

CartanDatum read_datum(const Json& j) {
  if (!j.is_object()) fail("'datum' must be an object");
  CartanDatum dm;
  dm.dot = int_matrix(field(j, "dot"), "datum.dot");
  if (j.contains("parity")) {
    for (const Json& e : j.at("parity")) {
      if (!e.is_number_integer()) fail("'datum.parity' must be 0/1 entries");
      dm.parity.push_back(e.get<int>());
    }
  }
  if (j.contains("labels"))
    for (const Json& e : j.at("labels")) dm.labels.push_back(e.get<std::string>());
  return dm;
}

ParamTablePtr read_params(const Json& root) {
  int bound = 4;
  if (root.contains("exp_den_bound")) {
    const Json& b = root.at("exp_den_bound");
    if (!b.is_number_integer() || b.get<int>() < 1)
      fail("'exp_den_bound' must be a positive integer");
    bound = b.get<int>();
  }
  auto tbl = std::make_shared<ParamTable>(bound);
  if (root.contains("params")) {
    const Json& list = root.at("params");
    if (!list.is_array()) fail("'params' must be an array");
    for (const Json& p : list) {
      ParamSpec spec;
      spec.name = field(p, "name").get<std::string>();
      std::string kind = p.value("kind", std::string("free"));
      if (kind == "free") {
        spec.kind = ParamKind::Free;
      } else if (kind == "torsion") {
        spec.kind = ParamKind::Torsion;
        spec.torsion_square = p.value("square", 1);
      } else {
        fail("param '" + spec.name + "': kind must be 'free' or 'torsion'");
      }
      tbl->add(spec);
    }
  }
  return tbl;
}

FieldElem read_scalar(const Json& j, const ParamTablePtr& pt,
                      const std::string& where) {
  if (!j.is_string()) fail("'" + where + "' must be a scalar string");
  return parse_scalar(j.get<std::string>(), pt);
}

FormTable read_table(const Json& j, int rank, const ParamTablePtr& pt,
                     const std::string& key) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    fail("'" + key + "' must be a " + std::to_string(rank) + "x" +
         std::to_string(rank) + " table of scalar strings");
  FormTable t = FormTable::ones(rank, pt);
  for (int i = 0; i < rank; ++i) {
    const Json& row = j.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != rank)
      fail("'" + key + "' must be a " + std::to_string(rank) + "x" +
           std::to_string(rank) + " table of scalar strings");
    for (int c = 0; c < rank; ++c)
      t.at(i, c) = read_scalar(row.at(static_cast<size_t>(c)), pt,
                               key + "[" + std::to_string(i + 1) + "," +
                                   std::to_string(c + 1) + "]");
  }
  return t;
}

std::vector<std::vector<int>> upper_omega(const CartanDatum& dm) {
  int n = dm.rank();
  std::vector<std::vector<int>> om(static_cast<size_t>(n),
                                   std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    om[static_cast<size_t>(i)][static_cast<size_t>(i)] = dm.d(i);
    for (int j = i + 1; j < n; ++j)
      om[static_cast<size_t>(i)][static_cast<size_t>(j)] = dm.dot[i][j];
  }
  return om;
}

AlgebraInstance build(const Json& root) {
  if (!root.is_object()) fail("instance file must hold a JSON object");
  CartanDatum dm = read_datum(field(root, "datum"));
  dm.check();
  int rank = dm.rank();

  AlgebraInstance inst;
  std::string preset = root.value("preset", std::string());
  if (preset.empty()) {
    ParamTablePtr pt = read_params(root);
    inst.datum = dm;
    inst.params = pt;
    inst.beta = read_table(field(root, "beta"), rank, pt, "beta");
    inst.alpha = read_table(field(root, "alpha"), rank, pt, "alpha");
    if (root.contains("gamma"))
      inst.gamma = read_table(root.at("gamma"), rank, pt, "gamma");
    if (root.contains("xi"))
      inst.xi = read_table(root.at("xi"), rank, pt, "xi");
    inst.label = root.value("label", std::string("custom"));
  } else if (preset == "two_parameter") {
    std::vector<std::vector<int>> omega =
        root.contains("omega") ? int_matrix(root.at("omega"), "omega")
                               : upper_omega(dm);
    inst = preset_two_parameter(dm, omega, root.value("alt_gamma", false));
  } else if (preset == "super") {
    inst = preset_super(dm, root.value("alt_gamma", false));
  } else if (preset == "multi_parameter") {
    inst = preset_multi_parameter(dm);
  } else if (preset == "multi_super_I") {
    ParamTablePtr pt = read_params(root);
    const Json& pd = field(root, "p_diag");
    if (!pd.is_array() || static_cast<int>(pd.size()) != rank)
      fail("'p_diag' must list one scalar per index");
    std::vector<FieldElem> p_diag;
    for (int i = 0; i < rank; ++i)
      p_diag.push_back(read_scalar(pd.at(static_cast<size_t>(i)), pt,
                                   "p_diag[" + std::to_string(i + 1) + "]"));
    inst = preset_multi_super_I(dm, pt, std::move(p_diag),
                                read_table(field(root, "p"), rank, pt, "p"),
                                read_table(field(root, "s"), rank, pt, "s"));
  } else if (preset == "multi_super_II") {
    ParamTablePtr pt = read_params(root);
    inst = preset_multi_super_II(
        dm, pt, read_table(field(root, "s_tilde"), rank, pt, "s_tilde"));
  } else {
    fail("unknown preset '" + preset + "'");
  }
  if (root.contains("label")) inst.label = root.at("label").get<std::string>();
  return inst;
}

// Line/column of a byte offset, for JSON syntax errors.
std::pair<int, int> line_col(std::string_view text, size_t byte) {
  int line = 1, col = 1;
  for (size_t p = 0; p < byte && p < text.size(); ++p) {
    if (text[p] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

AlgebraInstance parse_instance(std::string_view text,
                               const std::string& origin) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte ? e.byte - 1 : 0);
    throw ParseError(origin + ": " + e.what(), line, col);
  }
  try {
    return build(root);
  } catch (const Json::exception& e) {
    throw ConfigError(origin + ": " + e.what());
  }
}

AlgebraInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path);
}

}  // namespace fbeta
