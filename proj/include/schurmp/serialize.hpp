#pragma once

// JSON descriptors for fields, codes, coset sets, matrix-product specs and
// tables, plus the plain-text generator export.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "schurmp/cyclic.hpp"
#include "schurmp/linear_code.hpp"
#include "schurmp/matrix_product.hpp"
#include "schurmp/tables.hpp"

namespace schurmp {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// ---- fields ---------------------------------------------------------------

// The primitive element is written as its coefficient vector, low degree first.
inline json field_to_json(const FiniteField& f) {
  std::vector<std::uint32_t> prim(f.degree());
  for (std::uint32_t i = 0; i < f.degree(); ++i) prim[i] = f.digit(f.primitive(), i);
  return {{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}, {"primitive", prim}};
}

inline FieldPtr field_from_json(const json& j) {
  const auto p = j.at("p").get<std::uint32_t>(), m = j.at("m").get<std::uint32_t>();
  auto modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  std::optional<Elem> prim;
  if (j.contains("primitive")) {
    const auto coeffs = j.at("primitive").get<std::vector<std::uint32_t>>();
    Elem e = 0, scale = 1;
    for (auto c : coeffs) {
      if (c >= p) fail(Errc::InvalidArgument, "primitive coefficient out of range");
      e += c * scale;
      scale *= p;
    }
    prim = e;
  }
  const auto canonical = make_field(p, m);
  if (canonical->modulus() == modulus && (!prim || *prim == canonical->primitive())) return canonical;
  return std::make_shared<const FiniteField>(p, m, std::move(modulus), prim);
}

// ---- codes ----------------------------------------------------------------

inline json code_to_json(const LinearCode& c) {
  return {{"field", field_to_json(*c.field())}, {"n", c.length()}, {"generators", c.generator().to_rows()}};
}

inline LinearCode code_from_json(const json& j) {
  const auto field = field_from_json(j.at("field"));
  return LinearCode::from_generators(field, j.at("n").get<std::size_t>(),
                                     j.at("generators").get<std::vector<Vector>>());
}

// One row per line, entries as discrete logarithms, "-" for zero.
inline std::string generator_text(const LinearCode& c) {
  const auto& f = *c.field();
  std::ostringstream os;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    const auto row = c.basis_row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      if (row[j] == 0)
        os << '-';
      else
        os << f.log(row[j]);
    }
    os << '\n';
  }
  return os.str();
}

inline json matrix_to_json(const Matrix& m) { return m.to_rows(); }

// ---- coset sets -----------------------------------------------------------

inline json coset_to_json(const CosetSet& s) { return {{"q", s.q()}, {"n", s.n()}, {"elems", s.elems()}}; }

inline CosetSet coset_from_json(const json& j) {
  return CosetSet(j.at("q").get<std::uint64_t>(), j.at("n").get<std::uint32_t>(),
                  j.at("elems").get<std::vector<std::uint32_t>>());
}

// ---- matrix-product specs -------------------------------------------------

inline json spec_to_json(const MatrixProductSpec& spec) {
  json cs = json::array();
  for (const auto& c : spec.constituents) cs.push_back(code_to_json(c));
  return {{"A", matrix_to_json(spec.A)}, {"constituents", cs}};
}

inline MatrixProductSpec spec_from_json(const json& j) {
  MatrixProductSpec spec;
  for (const auto& c : j.at("constituents")) spec.constituents.push_back(code_from_json(c));
  if (spec.constituents.empty()) fail(Errc::InvalidArgument, "spec needs at least one constituent");
  const auto rows = j.at("A").get<std::vector<Vector>>();
  if (rows.empty()) fail(Errc::InvalidArgument, "defining matrix has no rows");
  spec.A = Matrix::from_rows(spec.constituents.front().field(), rows.front().size(), rows);
  validate(spec);
  return spec;
}

// Aligned integer table.
inline std::string matrix_text(const Matrix& m) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, std::to_string(m(i, j)).size());
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto s = std::to_string(m(i, j));
      os << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

// ---- distances and tables -------------------------------------------------

inline json distance_to_json(const DistanceValue& d) {
  if (d.infinite) return {{"value", nullptr}, {"kind", "infinite"}};
  return {{"value", d.value}, {"kind", d.exact ? "exact" : "bound"}};
}

inline json cell_to_json(const Cell& c) {
  if (c.infinite) return {{"value", nullptr}, {"kind", "infinite"}};
  return {{"value", c.value}, {"kind", cell_kind_name(c.kind)}};
}

inline json table_to_json(const std::string& name, const std::vector<TableRow>& rows) {
  json out = {{"schema_version", kSchemaVersion}, {"table", name}, {"rows", json::array()}};
  for (const auto& row : rows) {
    json r;
    for (const auto& [k, v] : row.labels) r[k] = v;
    r["n"] = row.n;
    r["dim"] = cell_to_json(row.dim);
    r["d"] = cell_to_json(row.d);
    r["dim_square"] = cell_to_json(row.dim_square);
    r["d_square"] = cell_to_json(row.d_square);
    for (const auto& [k, c] : row.extra) r[k] = cell_to_json(c);
    if (row.verified) r["verified"] = *row.verified;
    out["rows"].push_back(std::move(r));
  }
  return out;
}

}  // namespace schurmp
