#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "toric/cli_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Poset of layers of a toric arrangement / intersection lattice of a "
               "hyperplane arrangement, from an integer matrix of column vectors"};

  toric::RunConfig config;
  std::string positional_input, option_input;
  std::string mode = "toric";
  std::string format = "summary";

  app.add_option("file", positional_input, "input matrix file");
  app.add_option("--input", option_input, "input matrix file (wins over the positional)");
  app.add_option("--mode", mode, "arrangement kind")
      ->check(CLI::IsMember({"toric", "hyperplane"}))
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "dot", "summary"}))
      ->capture_default_str();
  app.add_flag("--invariants", config.compute_invariants,
               "also compute Moebius values and the characteristic polynomial");
  app.add_flag("--verify", config.verify,
               "cross-check the result against the brute-force reconstruction");
  app.add_option("--max-n", config.max_ground_set, "refuse inputs with more columns")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  config.input_path = option_input.empty() ? positional_input : option_input;
  if (config.input_path.empty()) {
    std::cerr << "error: no input file given\n";
    return 1;
  }
  config.mode = mode == "toric" ? toric::ArrangementKind::toric
                                : toric::ArrangementKind::hyperplane;
  config.format = format == "json"  ? toric::OutputFormat::json
                  : format == "dot" ? toric::OutputFormat::dot
                                    : toric::OutputFormat::summary;

  return toric::run(config, std::cout, std::cerr);
}
