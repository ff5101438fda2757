// idemgeo: run one verification suite and report.
//
//   idemgeo thmC --domain fp --p 5 --dim 2
//   idemgeo witness --domain q --s '[[1,1],[0,1]]'
//   idemgeo enumerate --domain fp --p 5 --dim 2 --kind idempotent --json

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "idemgeo/harness.hpp"

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitConfig = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace idemgeo;

  CLI::App app{"Exact verification workbench for idempotent classes in matrix algebras"};
  RunConfig cfg;
  std::string domain = "fp";
  std::uint32_t p = 5;
  std::string mode;

  app.add_option("command", cfg.command, "axioms | classtwo | thmC | deltaB | thmD | witness | enumerate")
      ->required()
      ->check(CLI::IsMember(subcommands()));
  app.add_option("--domain", domain, "scalar domain")->check(CLI::IsMember({"q", "fp"}))->capture_default_str();
  app.add_option("--p", p, "prime modulus for --domain fp (p >= 5)")->capture_default_str();
  auto* dim_opt = app.add_option("--dim", cfg.dim, "matrix size n")->capture_default_str();
  app.add_option("--mode", mode, "exhaustive | sampled (default: exhaustive over F_p, sampled over Q)")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  app.add_option("--samples", cfg.samples, "sample count per section")->capture_default_str();
  app.add_option("--t-samples", cfg.t_samples, "inner sample count (t per s, tuples per set)")->capture_default_str();
  app.add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  app.add_option("--out", cfg.out, "write the JSON report here");
  app.add_flag("--json", cfg.json, "print the JSON report to stdout");
  app.add_option("--s", cfg.s, "matrix literal, e.g. [[1,1],[0,1]] or [[\"1/2\",0],[0,1]]");
  app.add_option("--kind", cfg.kind, "enumerate: idempotent | involution | invertible | class | delta");
  app.add_option("--workers", cfg.workers, "worker threads (overrides WORKBENCH_WORKERS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    cfg.domain = domain == "q" ? ScalarDomain::rationals() : ScalarDomain::prime_field(p);
    if (!mode.empty()) cfg.mode = mode == "exhaustive" ? RunMode::exhaustive : RunMode::sampled;
    if (!cfg.s.empty() && dim_opt->count() == 0) {
      const Json rows = Json::parse(cfg.s, nullptr, false);
      if (rows.is_array() && !rows.empty()) cfg.dim = rows.size();
    }

    const VerificationReport report = run(cfg);
    const std::string json = report.to_json().dump(2);
    if (!cfg.out.empty()) {
      std::ofstream out(cfg.out);
      if (!out) throw ConfigError("cannot write " + cfg.out);
      out << json << '\n';
    }
    if (cfg.json && cfg.command == "thmC") {
      // One verdict row per element, then the report itself on the last line.
      for (const auto& row : report.records) std::cout << row.dump() << '\n';
      std::cout << report.to_json().dump() << '\n';
    } else if (cfg.json) {
      std::cout << json << '\n';
    } else {
      std::cout << report.summary();
    }
    return report.ok() ? 0 : kExitFailures;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailures;
  }
}
