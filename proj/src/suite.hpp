#pragma once

// Shared plumbing for the verification suites. Not installed.

#include <atomic>
#include <exception>
#include <functional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "idemgeo/harness.hpp"
#include "idemgeo/random.hpp"

namespace idemgeo::suite {

struct Outcome {
  bool ok = true;
  std::string detail;
  Json witness = Json::object();
  Json record;  ///< appended to the report records when not null
  std::map<std::string, std::uint64_t> counts;

  /// Records the first failed expectation; returns cond.
  bool expect(bool cond, std::string_view what, std::initializer_list<std::pair<const char*, const Matrix*>> w = {});
  void count(const std::string& key, std::uint64_t by = 1) { counts[key] += by; }
};

struct Context {
  const RunConfig& cfg;
  VerificationReport& report;
  std::size_t workers;

  /// Stream for case `index` of `section`; sections never share streams.
  [[nodiscard]] SplitMix64 rng(std::string_view section, std::uint64_t index) const;
};

/// Runs fn(i) for i in [0, count) across the workers and merges the outcomes
/// into the report in index order.
void run_section(Context& ctx, const std::string& name, std::size_t count,
                 const std::function<Outcome(std::size_t)>& fn);

void axioms(Context& ctx);
void class_two(Context& ctx);
void theorem_c(Context& ctx);
void delta_b(Context& ctx);
void theorem_d(Context& ctx);
void witness(Context& ctx);
void enumerate(Context& ctx);

/// Parses cfg.s over the configured domain; ConfigError if missing or malformed.
Matrix parse_s(const RunConfig& cfg);

}  // namespace idemgeo::suite
