#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idemgeo/errors.hpp"
#include "idemgeo/serialize.hpp"

namespace idemgeo {

/// Bad flags or an infeasible run; maps to exit status 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class RunMode { exhaustive, sampled };
const char* run_mode_name(RunMode mode);

struct RunConfig {
  std::string command;  ///< axioms | classtwo | thmC | deltaB | thmD | witness | enumerate
  ScalarDomain domain;
  std::size_t dim = 2;
  std::optional<RunMode> mode;  ///< defaults to exhaustive over F_p, sampled over Q
  std::size_t samples = 1000;
  std::size_t t_samples = 1000;
  std::uint64_t seed = 0;
  std::string out;   ///< JSON report path, empty for none
  bool json = false; ///< also print the JSON report to stdout
  std::string s;     ///< matrix literal for thmC / witness
  std::string kind;  ///< enumerate: idempotent | involution | invertible | class | delta
  std::size_t workers = 0;  ///< 0: WORKBENCH_WORKERS or hardware concurrency
};

const std::vector<std::string>& subcommands();

/// Resolves the mode and rejects infeasible configurations (ConfigError).
RunConfig validated(RunConfig cfg);
Json config_to_json(const RunConfig& cfg);
std::size_t worker_count(const RunConfig& cfg);

struct CaseFailure {
  std::string section;
  std::uint64_t index = 0;
  std::string detail;
  Json witness;
};

struct SectionTally {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t passed = 0;
  std::map<std::string, std::uint64_t> counts;
};

struct VerificationReport {
  std::string suite;
  Json config;
  std::uint64_t cases = 0;
  std::uint64_t passed = 0;
  std::vector<SectionTally> sections;
  std::vector<CaseFailure> failures;
  Json records = Json::array();
  Json result;  ///< subcommand payload (witness, enumerate, single-s thmC)
  double wall_seconds = 0;  ///< summary only; kept out of the JSON so reruns are byte-identical

  [[nodiscard]] bool ok() const { return failures.empty() && passed == cases; }
  [[nodiscard]] const SectionTally* section(const std::string& name) const;
  [[nodiscard]] Json to_json() const;
  [[nodiscard]] std::string summary() const;
};

/// Runs one subcommand. Invalid configurations throw ConfigError; anything
/// thrown while checking a case becomes a failure record.
VerificationReport run(const RunConfig& cfg);

}  // namespace idemgeo
