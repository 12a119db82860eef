#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hardy/config.hpp"
#include "hardy/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Truncated Hardy-space experiments: kernels, Berezin symbols, W_n, h_k subspaces, orbits"};
  std::string config_path;
  std::string out_dir;
  std::string format;
  bool quiet = false;
  app.add_option("config", config_path, "key=value run configuration")->required();
  app.add_option("--out", out_dir, "output directory (overrides outputDir)");
  app.add_option("--format", format, "csv, json or both")->check(CLI::IsMember({"csv", "json", "both"}));
  app.add_flag("--quiet", quiet, "only print errors");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : hardy::kExitValidation;
  }

  hardy::RunConfig cfg;
  try {
    cfg = hardy::load_config(config_path);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    if (!format.empty()) cfg.format = hardy::parse_format(format);
  } catch (const hardy::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hardy::kExitValidation;
  }
  return hardy::run(cfg, std::cerr, quiet);
}
