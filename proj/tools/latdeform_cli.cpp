#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "latdeform/errors.hpp"
#include "latdeform/json_io.hpp"
#include "latdeform/pipeline.hpp"
#include "latdeform/rational.hpp"

namespace {

int emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "cannot open output file: " << output_path << "\n";
    return latdeform::kExitError;
  }
  out << text;
  return 0;
}

std::string read_input(const std::string& input_path) {
  if (input_path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(input_path);
  if (!in) {
    throw latdeform::SchemaError("cannot open input file: " + input_path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  using latdeform::PipelineConfig;

  CLI::App app{"Exact chip-firing presentations, deformations, and "
               "Scarf resolutions of sublattices of the root lattice"};
  app.fallthrough();

  bool show_version = false;
  app.add_flag("--version", show_version,
               "print the algorithm-parameter fingerprint and exit");

  std::string input_path;
  std::string output_path;
  std::string delta_text = "1";
  std::string field_text = "rationals";
  PipelineConfig cfg;
  app.add_option("--input", input_path, "read JSON from this file");
  app.add_option("--output", output_path, "write JSON to this file");
  app.add_option("--seed", cfg.seed, "rng seed (reserved; output is "
                                     "seed-independent)");
  app.add_option("--threads", cfg.threads,
                 "worker count (reserved; output is thread-independent)");

  CLI::App* c_lap = app.add_subcommand(
      "laplacianize", "lattice basis -> digraph presentation");
  CLI::App* c_stab = app.add_subcommand(
      "superstabilize", "run chip-firing stabilization");
  c_stab->add_option("--config", cfg.config_vector,
                     "initial chip configuration, JSON array")
      ->required();
  CLI::App* c_grob = app.add_subcommand(
      "grobner", "chip-firing Groebner basis of a Laplacian");
  c_grob->add_flag("--check-spairs", cfg.check_spairs,
                   "verify every S-pair reduces to zero");
  CLI::App* c_def = app.add_subcommand(
      "deform", "deform a lattice presentation until generic");
  c_def->add_option("--delta", delta_text, "total drift budget, p/q");
  c_def->add_option("--levels", cfg.levels,
                    "stability levels; >= 2 replays with halved steps");
  CLI::App* c_res = app.add_subcommand(
      "resolve", "full pipeline to the minimized resolution");
  c_res->add_option("--delta", delta_text, "total drift budget, p/q");
  c_res->add_option("--field", field_text,
                    "homology field: rationals or a prime");
  CLI::App* c_demo = app.add_subcommand(
      "demo-pitfall", "non-saturation example family");
  c_demo->add_option("--k", cfg.pitfall_k, "family parameter, >= 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return latdeform::kExitSchema;
  }

  if (show_version) {
    std::cout << latdeform::version_fingerprint();
    return 0;
  }

  CLI::App* chosen = nullptr;
  for (CLI::App* sub : {c_lap, c_stab, c_grob, c_def, c_res, c_demo}) {
    if (sub->parsed()) chosen = sub;
  }
  if (chosen == nullptr) {
    std::cerr << app.help();
    return latdeform::kExitSchema;
  }
  cfg.command = chosen->get_name();

  try {
    cfg.delta = latdeform::rat_from_string(delta_text);
  } catch (const latdeform::Error&) {
    std::cout << latdeform::error_document(
        "--delta must be a rational p/q", latdeform::kExitSchema);
    return latdeform::kExitSchema;
  }
  if (field_text == "rationals") {
    cfg.field.rationals = true;
  } else {
    cfg.field.rationals = false;
    try {
      latdeform::Int p = latdeform::int_from_string(field_text);
      if (p < 2 || !p.fits_ulong_p()) throw latdeform::Error("range");
      cfg.field.prime = p.get_ui();
    } catch (const latdeform::Error&) {
      std::cout << latdeform::error_document(
          "--field must be \"rationals\" or a prime >= 2",
          latdeform::kExitSchema);
      return latdeform::kExitSchema;
    }
  }

  std::string input;
  if (cfg.command != "demo-pitfall") {
    try {
      input = read_input(input_path);
    } catch (const latdeform::Error& e) {
      std::cout << latdeform::error_document(e.what(), e.exit_code());
      return e.exit_code();
    }
  }

  latdeform::RunResult rr = latdeform::run(cfg, input);
  int write_rc = emit(rr.output, output_path);
  if (write_rc != 0) return write_rc;
  return rr.exit_code;
}
