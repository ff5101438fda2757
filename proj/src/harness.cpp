#include "idemgeo/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>

#include "idemgeo/sampling.hpp"
#include "suite.hpp"

namespace idemgeo {

const char* run_mode_name(RunMode mode) { return mode == RunMode::exhaustive ? "exhaustive" : "sampled"; }

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"axioms", "classtwo", "thmC", "deltaB", "thmD", "witness", "enumerate"};
  return names;
}

RunConfig validated(RunConfig cfg) {
  const auto& names = subcommands();
  if (std::find(names.begin(), names.end(), cfg.command) == names.end())
    throw ConfigError("unknown subcommand '" + cfg.command + "'");
  if (cfg.dim < 1 || cfg.dim > 6) throw ConfigError("dim must be between 1 and 6");
  if (!cfg.mode) cfg.mode = cfg.domain.is_finite() ? RunMode::exhaustive : RunMode::sampled;
  if (*cfg.mode == RunMode::exhaustive) {
    if (!cfg.domain.is_finite()) throw ConfigError("exhaustive mode needs a prime-field domain");
    try {
      (void)enumeration_size(cfg.domain, cfg.dim);
    } catch (const GuardExceeded& e) {
      throw ConfigError(e.what());
    }
  }
  if (cfg.command == "enumerate") {
    static const std::vector<std::string> kinds{"idempotent", "involution", "invertible", "class", "delta"};
    if (std::find(kinds.begin(), kinds.end(), cfg.kind) == kinds.end())
      throw ConfigError("enumerate needs --kind idempotent|involution|invertible|class|delta");
    if (*cfg.mode != RunMode::exhaustive) throw ConfigError("enumerate is exhaustive only");
  }
  if (cfg.command == "witness" && cfg.s.empty()) throw ConfigError("witness needs --s");
  return cfg;
}

Json config_to_json(const RunConfig& cfg) {
  Json j{{"command", cfg.command},
         {"domain", domain_to_json(cfg.domain)},
         {"dim", cfg.dim},
         {"mode", cfg.mode ? run_mode_name(*cfg.mode) : nullptr},
         {"samples", cfg.samples},
         {"t_samples", cfg.t_samples},
         {"seed", cfg.seed}};
  if (!cfg.s.empty()) j["s"] = cfg.s;
  if (!cfg.kind.empty()) j["kind"] = cfg.kind;
  return j;
}

std::size_t worker_count(const RunConfig& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  if (const char* env = std::getenv("WORKBENCH_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw ConfigError("WORKBENCH_WORKERS must be a positive integer");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

const SectionTally* VerificationReport::section(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

Json VerificationReport::to_json() const {
  Json secs = Json::array();
  for (const auto& s : sections) {
    Json entry{{"name", s.name}, {"cases", s.cases}, {"passed", s.passed}};
    if (!s.counts.empty()) {
      Json counts = Json::object();
      for (const auto& [k, v] : s.counts) counts[k] = v;
      entry["counts"] = std::move(counts);
    }
    secs.push_back(std::move(entry));
  }
  Json fails = Json::array();
  for (const auto& f : failures)
    fails.push_back(Json{{"section", f.section}, {"case", f.index}, {"detail", f.detail}, {"witness", f.witness}});
  Json j{{"suite", suite},
         {"generator", SplitMix64::kName},
         {"config", config},
         {"cases", cases},
         {"passed", passed},
         {"ok", ok()},
         {"sections", std::move(secs)},
         {"failures", std::move(fails)}};
  if (!records.empty()) j["records"] = records;
  if (!result.is_null()) j["result"] = result;
  return j;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << suite << ' ' << config.value("/domain/kind"_json_pointer, std::string("?"));
  if (config.contains("domain") && config["domain"].contains("p")) os << config["domain"]["p"].get<unsigned>();
  os << " n=" << config.value("dim", 0) << ' ' << config.value("mode", std::string("?")) << ": " << passed << '/'
     << cases << " passed";
  os.setf(std::ios::fixed);
  os.precision(2);
  os << " (" << wall_seconds << " s)\n";
  for (const auto& s : sections) {
    os << "  " << s.name << ": " << s.passed << '/' << s.cases;
    for (const auto& [k, v] : s.counts) os << ' ' << k << '=' << v;
    os << '\n';
  }
  const std::size_t shown = std::min<std::size_t>(failures.size(), 10);
  for (std::size_t i = 0; i < shown; ++i)
    os << "  FAIL " << failures[i].section << '#' << failures[i].index << ": " << failures[i].detail << '\n';
  if (failures.size() > shown) os << "  ... " << failures.size() - shown << " more failures\n";
  return os.str();
}

VerificationReport run(const RunConfig& raw) {
  const RunConfig cfg = validated(raw);
  VerificationReport report;
  report.suite = cfg.command;
  report.config = config_to_json(cfg);
  suite::Context ctx{cfg, report, worker_count(cfg)};
  const auto start = std::chrono::steady_clock::now();
  if (cfg.command == "axioms") suite::axioms(ctx);
  else if (cfg.command == "classtwo") suite::class_two(ctx);
  else if (cfg.command == "thmC") suite::theorem_c(ctx);
  else if (cfg.command == "deltaB") suite::delta_b(ctx);
  else if (cfg.command == "thmD") suite::theorem_d(ctx);
  else if (cfg.command == "witness") suite::witness(ctx);
  else suite::enumerate(ctx);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace suite {

bool Outcome::expect(bool cond, std::string_view what,
                     std::initializer_list<std::pair<const char*, const Matrix*>> w) {
  if (cond || !ok) return cond;
  ok = false;
  detail = std::string(what);
  for (const auto& [name, m] : w) witness[name] = matrix_to_json(*m);
  return cond;
}

SplitMix64 Context::rng(std::string_view section, std::uint64_t index) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (const char c : section) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return SplitMix64::for_case(cfg.seed ^ h, index);
}

void run_section(Context& ctx, const std::string& name, std::size_t count,
                 const std::function<Outcome(std::size_t)>& fn) {
  std::vector<Outcome> results(count);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (const std::exception& e) {
        results[i] = Outcome{};
        results[i].ok = false;
        results[i].detail = std::string("exception: ") + e.what();
      }
    }
  };
  const std::size_t workers = std::min(ctx.workers, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SectionTally tally;
  tally.name = name;
  for (std::size_t i = 0; i < count; ++i) {
    auto& r = results[i];
    ++tally.cases;
    if (r.ok) ++tally.passed;
    else ctx.report.failures.push_back({name, i, std::move(r.detail), std::move(r.witness)});
    for (const auto& [k, v] : r.counts) tally.counts[k] += v;
    if (!r.record.is_null()) ctx.report.records.push_back(std::move(r.record));
  }
  ctx.report.cases += tally.cases;
  ctx.report.passed += tally.passed;
  ctx.report.sections.push_back(std::move(tally));
}

Matrix parse_s(const RunConfig& cfg) {
  if (cfg.s.empty()) throw ConfigError("--s is required");
  try {
    Matrix s = parse_matrix_literal(cfg.domain, cfg.s);
    if (s.dim() != cfg.dim) throw ConfigError("--s has dimension " + std::to_string(s.dim()) + ", --dim is " +
                                              std::to_string(cfg.dim));
    return s;
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace suite
}  // namespace idemgeo
