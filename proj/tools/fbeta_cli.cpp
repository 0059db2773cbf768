#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fbeta/config.hpp"
#include "fbeta/double_alg.hpp"
#include "fbeta/twist.hpp"

namespace {

using namespace fbeta;

struct RunConfig {
  std::string instance_path;
  std::string cache_dir;
  std::string format = "text";
  std::string out_path;
  int height = 0;  // 0 = command default
  int length = 0;
  int jobs = 1;  // accepted for interface stability; execution is serial
};

FormOptions form_options(const RunConfig& rc) {
  FormOptions fo;
  fo.cache_dir = rc.cache_dir;
  if (rc.height > 0) fo.height_bound = rc.height;
  return fo;
}

int default_height(const AlgebraInstance& inst, const RunConfig& rc) {
  if (rc.height > 0) return rc.height;
  return inst.rank() <= 2 ? 4 : 3;
}

Report run_dims(const AlgebraInstance& inst, const RunConfig& rc) {
  FormEngine eng(inst, form_options(rc));
  FormEngine ref(reference_instance(inst.datum, inst.params),
                 form_options(rc));
  int bound = default_height(inst, rc);
  Report rep;
  rep.title = "dims " + inst.label;
  for (int h = 1; h <= bound; ++h)
    for (const Weight& nu : weights_of_height(inst.rank(), h)) {
      long a = eng.graded_dim(nu);
      long b = ref.graded_dim(nu);
      rep.add("dim(" + render_weight(nu) + ")", a == b,
              std::to_string(a) + " vs reference " + std::to_string(b));
    }
  return rep;
}

Report run_serre(const AlgebraInstance& inst, const RunConfig& rc) {
  FormEngine eng(inst, form_options(rc));
  return eng.serre_report();
}

Report run_twist(const AlgebraInstance& inst, const RunConfig& rc) {
  TwistOptions opt;
  opt.height_bound = rc.height;
  opt.cache_dir = rc.cache_dir;
  return verify_twist_iso(inst, opt);
}

Report run_pairing(const AlgebraInstance& inst, const RunConfig& rc) {
  PairingOptions opt;
  if (rc.length > 0) opt.length_bound = rc.length;
  FormEngine form(inst, form_options(rc));
  PairingEngine eng(inst);
  Report rep = verify_skew_hopf(eng, opt, &form);
  rep.merge(verify_refine_cocycle(inst, default_height(inst, rc)), "refine");
  return rep;
}

Report run_double(const AlgebraInstance& inst, const RunConfig& rc) {
  DoubleEngine eng(inst, form_options(rc));
  DoubleOptions opt;
  if (rc.length > 0) opt.length_bound = rc.length;
  Report rep = verify_double(eng, opt);
  rep.merge(verify_hopf(eng), "hopf");
  return rep;
}

Report run_preset_relations(const AlgebraInstance& inst,
                            const RunConfig& rc) {
  DoubleEngine eng(inst, form_options(rc));
  return specialized_presentation(eng);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fbeta: exact structure checks for deformed half quantum algebras "
      "and their doubles"};
  app.require_subcommand(1);

  RunConfig rc;
  auto add_common = [&rc](CLI::App* cmd) {
    cmd->add_option("--instance", rc.instance_path,
                    "instance description file (JSON)")
        ->required();
    cmd->add_option("--height", rc.height,
                    "weight height bound (0 = command default)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--length", rc.length,
                    "word length bound (0 = command default)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--cache", rc.cache_dir, "Gram block cache directory");
    cmd->add_option("--format", rc.format, "report format")
        ->check(CLI::IsMember({"text", "lines"}));
    cmd->add_option("--jobs", rc.jobs, "parallelism degree")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", rc.out_path,
                    "also write the report to this file");
  };

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "defining-table invariants");
  CLI::App* cmd_dims = app.add_subcommand(
      "dims", "graded dimensions against the undeformed reference");
  CLI::App* cmd_serre =
      app.add_subcommand("serre", "Serre elements lie in the form radical");
  CLI::App* cmd_twist = app.add_subcommand(
      "twist", "twist isomorphism onto the reference algebra");
  CLI::App* cmd_pairing = app.add_subcommand(
      "pairing", "skew-Hopf pairing axioms, refinement laws");
  CLI::App* cmd_double = app.add_subcommand(
      "double", "double multiplication oracle agreement and Hopf axioms");
  CLI::App* cmd_preset = app.add_subcommand(
      "preset-relations", "published presentation tables and comparison maps");
  for (CLI::App* cmd : {cmd_validate, cmd_dims, cmd_serre, cmd_twist,
                        cmd_pairing, cmd_double, cmd_preset})
    add_common(cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    fbeta::AlgebraInstance inst = fbeta::load_instance(rc.instance_path);
    fbeta::Report rep;
    if (*cmd_validate)
      rep = fbeta::validate(inst);
    else if (*cmd_dims)
      rep = run_dims(inst, rc);
    else if (*cmd_serre)
      rep = run_serre(inst, rc);
    else if (*cmd_twist)
      rep = run_twist(inst, rc);
    else if (*cmd_pairing)
      rep = run_pairing(inst, rc);
    else if (*cmd_double)
      rep = run_double(inst, rc);
    else
      rep = run_preset_relations(inst, rc);

    std::string text =
        rc.format == "lines" ? fbeta::render_lines(rep) : fbeta::render_text(rep);
    std::cout << text;
    if (!rc.out_path.empty()) {
      std::ofstream out(rc.out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write '" << rc.out_path << "'\n";
        return 2;
      }
      out << text;
    }
    return rep.all_pass() ? 0 : 1;
  } catch (const fbeta::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
