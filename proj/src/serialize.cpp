#include "idemgeo/serialize.hpp"

#include "idemgeo/errors.hpp"

namespace idemgeo {

Json domain_to_json(const ScalarDomain& domain) {
  if (!domain.is_finite()) return Json{{"kind", "Q"}};
  return Json{{"kind", "Fp"}, {"p", domain.modulus()}};
}

ScalarDomain domain_from_json(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return ScalarDomain::rationals();
    if (kind == "Fp") return ScalarDomain::prime_field(j.at("p").get<std::uint32_t>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("domain: ") + e.what());
  }
  throw ParseError("domain: unknown kind");
}

Json scalar_to_json(const Scalar& x) { return x.to_string(); }

Scalar scalar_from_json(const ScalarDomain& domain, const Json& j) {
  if (j.is_string()) return domain.parse(j.get<std::string>());
  if (j.is_number_integer()) return domain.from_int(j.get<std::int64_t>());
  throw ParseError("scalar: expected a string or an integer");
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"domain", domain_to_json(m.domain())}, {"rows", std::move(rows)}};
}

Matrix matrix_from_rows_json(const ScalarDomain& domain, const Json& rows) {
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix: expected a nonempty array of rows");
  const std::size_t n = rows.size();
  Matrix m(domain, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("matrix: rows must form a square array");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar_from_json(domain, rows[i][j]);
  }
  return m;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("rows")) throw ParseError("matrix: missing domain or rows");
  return matrix_from_rows_json(domain_from_json(j.at("domain")), j.at("rows"));
}

Matrix parse_matrix_literal(const ScalarDomain& domain, const std::string& text) {
  Json rows;
  try {
    rows = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError("matrix literal: " + std::string(e.what()));
  }
  return matrix_from_rows_json(domain, rows);
}

Json ideal_to_json(const RightIdeal& ideal) {
  Json out = Json::array();
  for (const auto& v : ideal.basis()) {
    Json col = Json::array();
    for (const auto& x : v) col.push_back(scalar_to_json(x));
    out.push_back(std::move(col));
  }
  return out;
}

Json delta_to_json(const DeltaSet& d) {
  return Json{{"sign", sign_name(d.sign())}, {"ideal", ideal_to_json(d.ideal())}};
}

Json frame_to_json(const NilpotentFrame& frame) {
  return Json{{"n", matrix_to_json(frame.n())},
              {"e", matrix_to_json(frame.e())},
              {"g", matrix_to_json(frame.g())},
              {"f", matrix_to_json(frame.f())},
              {"k", matrix_to_json(frame.k())}};
}

Json iso_to_json(const IsoSpec& f) {
  Json steps = Json::array();
  for (const auto& s : f.steps()) {
    Json step{{"kind", s.kind == IsoStep::Kind::inner               ? "inner"
                       : s.kind == IsoStep::Kind::transpose_inverse ? "transpose_inverse"
                                                                    : "field_automorphism"}};
    if (s.g) step["g"] = matrix_to_json(*s.g);
    if (s.kind == IsoStep::Kind::field_automorphism) step["power"] = s.frobenius_power;
    steps.push_back(std::move(step));
  }
  return Json{{"description", f.describe()}, {"domain", domain_to_json(f.domain())}, {"dim", f.dim()},
              {"steps", std::move(steps)}};
}

Json theorem_c_to_json(const TheoremC& c) {
  Json j{{"verdict", c.verdict},
         {"conditions", c.conditions},
         {"mode", mode_name(c.mode)},
         {"u", c.u ? matrix_to_json(*c.u) : Json()},
         {"r", c.r ? matrix_to_json(*c.r) : Json()}};
  if (c.condition_one_witness) j["condition_one_witness"] = matrix_to_json(*c.condition_one_witness);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

}  // namespace idemgeo
