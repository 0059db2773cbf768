#include <string>

#include "doctest.h"
#include "fbeta/config.hpp"
#include "fbeta/presets.hpp"
#include "fbeta/text.hpp"

using namespace fbeta;

namespace {

const std::string kConfigDir = FBETA_CONFIG_DIR;
const std::string kDataDir = FBETA_TEST_DATA_DIR;

void check_same(const AlgebraInstance& got, const AlgebraInstance& want) {
  CHECK(got.label == want.label);
  CHECK(got.preset == want.preset);
  CHECK(got.datum.dot == want.datum.dot);
  CHECK(got.datum.parity == want.datum.parity);
  CHECK(got.params->signature() == want.params->signature());
  CHECK(got.beta == want.beta);
  CHECK(got.alpha == want.alpha);
  CHECK(got.gamma == want.gamma);
  CHECK(got.xi == want.xi);
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("preset files rebuild the canonical instances") {
  struct Row {
    const char* file;
    AlgebraInstance reference;
  };
  const Row rows[] = {
      {"two_parameter.a2.json", canon::two_parameter_a2()},
      {"two_parameter.b2.json", canon::two_parameter_b2()},
      {"two_parameter.a3.json", canon::two_parameter_a3()},
      {"super.a2.json", canon::super_a2()},
      {"super.b2.json", canon::super_b2()},
      {"super.b3.json", canon::super_b3()},
      {"multi_parameter.a2.json", canon::multi_parameter_a2()},
      {"multi_parameter.b2.json", canon::multi_parameter_b2()},
      {"multi_super_I.a2.json", canon::multi_super_i_a2()},
      {"multi_super_I.b2.json", canon::multi_super_i_b2()},
      {"multi_super_I.b2_asym.json", canon::multi_super_i_b2_asym()},
      {"multi_super_II.a2.json", canon::multi_super_ii_a2()},
      {"multi_super_II.b2.json", canon::multi_super_ii_b2()},
  };
  for (const auto& row : rows) {
    CAPTURE(row.file);
    auto inst = load_instance(kConfigDir + "/" + row.file);
    check_same(inst, row.reference);
    CHECK(validate(inst).all_pass());
  }
}

TEST_CASE("custom instances come straight from their tables") {
  auto inst = load_instance(kConfigDir + "/reference.a2.json");
  CHECK(inst.label == "reference.a2");
  CHECK(inst.preset.empty());
  CHECK(validate(inst).all_pass());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(inst.beta.at(i, j).is_one());
      CHECK(inst.alpha.at(i, j).is_one());
      CHECK(inst.gamma.at(i, j).is_one());
      CHECK(inst.xi.at(i, j).is_one());
    }
}

TEST_CASE("violating tables load but fail validation by name") {
  auto inst = load_instance(kDataDir + "/bad_beta.json");
  auto rep = validate(inst);
  CHECK_FALSE(rep.all_pass());
  bool named = false;
  for (const auto& l : rep.lines)
    if (l.id == "beta_inverse" && !l.pass) named = true;
  CHECK(named);
}

TEST_CASE("malformed input raises the right error type") {
  CHECK_THROWS_AS(parse_instance("{"), ParseError);
  CHECK_THROWS_AS(parse_instance("[1, 2]"), ConfigError);
  CHECK_THROWS_AS(load_instance(kDataDir + "/no_such_file.json"), ConfigError);
  // missing alpha on a custom instance
  CHECK_THROWS_AS(
      parse_instance(R"({"label": "x", "datum": {"dot": [[2]]},
                        "params": [], "beta": [["1"]]})"),
      ConfigError);
  CHECK_THROWS_AS(
      parse_instance(R"({"preset": "no_such_family",
                        "datum": {"dot": [[2]]}})"),
      ConfigError);
  // scalar grammar errors surface with position info
  CHECK_THROWS_AS(
      parse_instance(R"({"label": "x", "datum": {"dot": [[2]]},
                        "params": [], "beta": [["v^"]],
                        "alpha": [["1"]]})"),
      ParseError);
  try {
    parse_instance("{\n  \"label\": \"x\",\n  ???\n}");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line >= 2);  // the json error points past the first line
  }
}

TEST_CASE("preset side conditions are enforced at build time") {
  // super requires every off-diagonal product even: A2 with dot -1 fails
  CHECK_THROWS_AS(
      parse_instance(R"({"preset": "super",
                        "datum": {"dot": [[2, -1], [-1, 2]],
                                  "parity": [0, 0]}})"),
      ConfigError);
  // multi_super_I requires a symmetric-or-registered s table shape
  CHECK_THROWS_AS(
      parse_instance(R"({"preset": "multi_super_I",
                        "datum": {"dot": [[4, -2], [-2, 4]]},
                        "params": [{"name": "s[1,2]", "kind": "torsion",
                                    "square": 1}],
                        "p_diag": ["v^2", "v^2"],
                        "p": [["v^4", "v^-2"], ["v^-2", "v^4"]],
                        "s": [["1", "s[1,2]"], ["v*s[1,2]", "1"]]})"),
      ConfigError);
}

}  // TEST_SUITE
