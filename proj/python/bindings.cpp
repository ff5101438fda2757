// Thin layer over the C++ library. Everything crosses as JSON text; the
// Python package decodes it.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "idemgeo/delta_sets.hpp"
#include "idemgeo/harness.hpp"

namespace py = pybind11;
using namespace idemgeo;

namespace {

ScalarDomain domain_of(const std::string& name, std::uint32_t p) {
  if (name == "q") return ScalarDomain::rationals();
  if (name == "fp") return ScalarDomain::prime_field(p);
  throw ConfigError("domain must be q or fp");
}

Matrix literal(const std::string& domain, std::uint32_t p, const std::string& s) {
  return parse_matrix_literal(domain_of(domain, p), s);
}

Mode mode_of(const std::string& mode) {
  if (mode == "structural") return Mode::structural;
  if (mode == "exhaustive") return Mode::exhaustive;
  throw ConfigError("mode must be structural or exhaustive");
}

std::string run_json(const std::string& command, const std::string& domain, std::uint32_t p, std::size_t dim,
                     const std::optional<std::string>& mode, std::size_t samples, std::size_t t_samples,
                     std::uint64_t seed, const std::string& s, const std::string& kind, std::size_t workers) {
  RunConfig cfg;
  cfg.command = command;
  cfg.domain = domain_of(domain, p);
  cfg.dim = dim;
  if (mode) {
    if (*mode != "exhaustive" && *mode != "sampled") throw ConfigError("mode must be exhaustive or sampled");
    cfg.mode = *mode == "exhaustive" ? RunMode::exhaustive : RunMode::sampled;
  }
  cfg.samples = samples;
  cfg.t_samples = t_samples;
  cfg.seed = seed;
  cfg.s = s;
  cfg.kind = kind;
  cfg.workers = workers;
  VerificationReport report;
  {
    py::gil_scoped_release release;
    report = run(cfg);
  }
  Json j = report.to_json();
  j["wall_seconds"] = report.wall_seconds;
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_idemgeo, m) {
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def("run", &run_json, py::arg("command"), py::arg("domain") = "fp", py::arg("p") = 5, py::arg("dim") = 2,
        py::arg("mode") = std::nullopt, py::arg("samples") = 1000, py::arg("t_samples") = 1000, py::arg("seed") = 0,
        py::arg("s") = "", py::arg("kind") = "", py::arg("workers") = 0);

  m.def("subcommands", &subcommands);

  m.def(
      "is_class_two",
      [](const std::string& s, const std::string& domain, std::uint32_t p) { return is_class_two(literal(domain, p, s)); },
      py::arg("s"), py::arg("domain") = "q", py::arg("p") = 5);

  m.def(
      "theorem_c",
      [](const std::string& s, const std::string& domain, std::uint32_t p, const std::string& mode) {
        return theorem_c_to_json(theorem_c_decide(literal(domain, p, s), mode_of(mode))).dump();
      },
      py::arg("s"), py::arg("domain") = "q", py::arg("p") = 5, py::arg("mode") = "structural");

  m.def(
      "witness",
      [](const std::string& s, const std::string& domain, std::uint32_t p) {
        const ClassTwoWitness w = witness_u_r(literal(domain, p, s));
        Json j;
        j["u"] = matrix_to_json(w.u);
        j["r"] = matrix_to_json(w.r);
        j["r_inverse"] = matrix_to_json(w.r_inverse);
        j["frame"] = frame_to_json(w.frame);
        return j.dump();
      },
      py::arg("s"), py::arg("domain") = "q", py::arg("p") = 5);

  m.def(
      "delta_sets",
      [](std::uint32_t p, std::size_t dim) {
        Json out = Json::array();
        for (const auto& d : enumerate_delta_sets(ScalarDomain::prime_field(p), dim)) {
          Json j = delta_to_json(d);
          j["size"] = d.members().size();
          out.push_back(std::move(j));
        }
        return out.dump();
      },
      py::arg("p") = 5, py::arg("dim") = 2);
}
