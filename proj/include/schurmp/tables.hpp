#pragma once

// Parameter tables: binary (u,u+v) codes from restricted-weight cyclic codes,
// and Hermitian matrix-product codes C(r, s) with their squares.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schurmp/cyclic.hpp"
#include "schurmp/hermitian.hpp"
#include "schurmp/matrix_product.hpp"

namespace schurmp {

enum class CellKind { exact, bound, designed };

inline const char* cell_kind_name(CellKind k) {
  switch (k) {
    case CellKind::exact: return "exact";
    case CellKind::bound: return "bound";
    case CellKind::designed: return "designed";
  }
  return "?";
}

struct Cell {
  std::uint64_t value = 0;
  CellKind kind = CellKind::exact;
  bool infinite = false;

  friend bool operator==(const Cell&, const Cell&) = default;
};

inline Cell to_cell(const DistanceValue& d) {
  return {d.value, d.exact ? CellKind::exact : CellKind::bound, d.infinite};
}

struct TableRow {
  std::vector<std::pair<std::string, std::uint64_t>> labels;
  std::uint64_t n = 0;
  Cell dim, d, dim_square, d_square;
  std::vector<std::pair<std::string, Cell>> extra;
  std::optional<bool> verified;
};

// ---- restricted-weight table ----------------------------------------------

struct RestrictedWeightTableConfig {
  std::uint32_t r_min = 5;
  std::uint32_t r_max = 11;
  std::uint32_t s = 5;
  std::uint32_t m1 = 2;
  std::uint32_t m2 = 1;
  std::uint32_t q = 2;
};

namespace detail {

// n - a + 1 for an amplitude a; the zero code contributes no term.
inline DistanceValue cyclic_bound(const CosetSet& I, std::uint32_t amp) {
  if (I.empty()) return DistanceValue::none();
  return DistanceValue::lower_bound(I.n() - amp + 1);
}

// min_i D_i d_i of [C(I_1), C(I_2)] A for the (u,u+v) matrix over GF(q).
inline MPDistanceReport uuv_cyclic_bound(const Matrix& a, const CosetSet& i1, const CosetSet& i2, bool max_element) {
  auto amp = [max_element](const CosetSet& s) { return max_element ? max_element_amplitude(s) : amplitude(s); };
  std::vector<RowDistance> rows;
  rows.push_back({defining_row_distance(a, 1), cyclic_bound(i1, i1.empty() ? 0 : amp(i1))});
  rows.push_back({defining_row_distance(a, 2), cyclic_bound(i2, i2.empty() ? 0 : amp(i2))});
  return combine_row_distances(std::move(rows), std::includes(i1.elems().begin(), i1.elems().end(),
                                                              i2.elems().begin(), i2.elems().end()));
}

}  // namespace detail

// C = [C(W_{m1}), C(W_{m2})] (u,u+v) of length 2(q^r - 1) for each r.
inline std::vector<TableRow> table_restricted_weight(const RestrictedWeightTableConfig& cfg) {
  if (cfg.m1 < cfg.m2) fail(Errc::InvalidArgument, "require m1 >= m2");
  const auto field = make_field_of_size(cfg.q);
  const auto A = uuv_matrix(field);
  const auto A_dual = reversed_dual_matrix(A);
  std::vector<TableRow> out;
  for (auto r = cfg.r_min; r <= cfg.r_max; ++r) {
    const RestrictedWeightConfig w1cfg{cfg.q, r, cfg.s, cfg.m1}, w2cfg{cfg.q, r, cfg.s, cfg.m2};
    const auto w1 = restricted_weight_set(w1cfg), w2 = restricted_weight_set(w2cfg);
    // Square constituents: I1 + I1 and I2 + (I1 ∪ I2).
    const auto s1 = coset_sum(w1, w1), s2 = coset_sum(w2, coset_union(w1, w2));

    TableRow row;
    row.labels = {{"r", r}};
    row.n = 2 * std::uint64_t{w1.n()};
    row.dim = {w1.size() + w2.size(), CellKind::exact};
    row.dim_square = {s1.size() + s2.size(), CellKind::exact};
    row.d = to_cell(detail::uuv_cyclic_bound(A, w1, w2, false).bound);
    row.d_square = to_cell(detail::uuv_cyclic_bound(A, s1, s2, false).bound);
    row.extra.emplace_back("d_max_element", to_cell(detail::uuv_cyclic_bound(A, w1, w2, true).bound));
    row.extra.emplace_back("d_square_max_element", to_cell(detail::uuv_cyclic_bound(A, s1, s2, true).bound));

    // C^⊥ = [C(W_{m2})^⊥, C(W_{m1})^⊥] J (A^{-1})^T
    std::vector<RowDistance> dual_rows;
    dual_rows.push_back({defining_row_distance(A_dual, 1), dual_distance_bound_W(w2cfg)});
    dual_rows.push_back({defining_row_distance(A_dual, 2), dual_distance_bound_W(w1cfg)});
    row.extra.emplace_back("d_dual", to_cell(combine_row_distances(std::move(dual_rows), true).bound));
    out.push_back(std::move(row));
  }
  return out;
}

// ---- Hermitian table ------------------------------------------------------

inline std::vector<std::pair<std::uint32_t, std::uint32_t>> default_hermitian_rows() {
  return {{13, 2}, {16, 2}, {19, 2}, {22, 2}, {13, 4}, {16, 4}, {19, 4},
          {13, 6}, {16, 6}, {13, 7}, {16, 7}, {13, 8}, {16, 8}};
}

struct HermitianRanks {
  std::uint64_t k = 0;
  std::uint64_t k_star = 0;
};

// Dimensions of C(r, s) and its square by explicit rank at length q^3 (q^2 - 1).
inline HermitianRanks hermitian_ranks(const HermitianCurve& curve, std::uint32_t r, std::uint32_t s) {
  const auto code = build(build_C_rs(curve, r, s));
  return {code.dimension(), schur_square(code).dimension()};
}

inline TableRow hermitian_row(std::uint32_t q, std::uint32_t r, std::uint32_t s, const HermitianCurve* curve) {
  const auto p = C_rs_params(q, r, s);
  TableRow row;
  row.labels = {{"q", q}, {"r", r}, {"s", s}};
  row.n = p.n;
  row.dim = {p.k, CellKind::exact};
  row.d = {p.d, CellKind::designed};
  row.dim_square = {p.k_star, CellKind::exact};
  row.d_square = {p.d_star, CellKind::designed};
  if (curve) {
    const auto ranks = hermitian_ranks(*curve, r, s);
    row.verified = ranks.k == p.k && ranks.k_star == p.k_star;
    if (!*row.verified)
      fail(Errc::RankMismatch, "rank of C(" + std::to_string(r) + "," + std::to_string(s) + ") or its square is " +
                                   std::to_string(ranks.k) + "/" + std::to_string(ranks.k_star) + ", expected " +
                                   std::to_string(p.k) + "/" + std::to_string(p.k_star));
  }
  return row;
}

inline std::vector<TableRow> table_hermitian(std::uint32_t q,
                                             const std::vector<std::pair<std::uint32_t, std::uint32_t>>& rows,
                                             bool verify_ranks = false) {
  std::optional<HermitianCurve> curve;
  if (verify_ranks) curve.emplace(q);
  std::vector<TableRow> out;
  for (const auto& [r, s] : rows) out.push_back(hermitian_row(q, r, s, curve ? &*curve : nullptr));
  return out;
}

// ---- rendering ------------------------------------------------------------

namespace detail {

inline std::string cell_text(const Cell& c, bool unicode) {
  if (c.infinite) return "inf";
  std::string prefix;
  if (c.kind != CellKind::exact) prefix = unicode ? "≥" : ">=";
  return prefix + std::to_string(c.value);
}

}  // namespace detail

// Markdown table; lower bounds and designed distances carry a ≥ prefix.
inline std::string to_markdown(const std::vector<TableRow>& rows) {
  if (rows.empty()) return "";
  std::ostringstream os;
  const auto& head = rows.front();
  std::vector<std::string> cols;
  for (const auto& [name, v] : head.labels) cols.push_back(name);
  for (const char* c : {"n", "dim(C)", "d(C)", "dim(C^*2)", "d(C^*2)"}) cols.emplace_back(c);
  for (const auto& [name, c] : head.extra) cols.push_back(name);
  if (head.verified) cols.emplace_back("verified");
  os << "|";
  for (const auto& c : cols) os << ' ' << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < cols.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& row : rows) {
    os << "|";
    for (const auto& [name, v] : row.labels) os << ' ' << v << " |";
    os << ' ' << row.n << " |";
    for (const auto* c : {&row.dim, &row.d, &row.dim_square, &row.d_square}) os << ' ' << detail::cell_text(*c, true) << " |";
    for (const auto& [name, c] : row.extra) os << ' ' << detail::cell_text(c, true) << " |";
    if (row.verified) os << ' ' << (*row.verified ? "yes" : "no") << " |";
    os << '\n';
  }
  return os.str();
}

// CSV with one kind column per numeric column.
inline std::string to_csv(const std::vector<TableRow>& rows) {
  if (rows.empty()) return "";
  std::ostringstream os;
  const auto& head = rows.front();
  std::vector<std::string> cols;
  for (const auto& [name, v] : head.labels) cols.push_back(name);
  cols.emplace_back("n");
  std::vector<std::string> cell_names = {"dim", "d", "dim_square", "d_square"};
  for (const auto& [name, c] : head.extra) cell_names.push_back(name);
  for (const auto& c : cell_names) {
    cols.push_back(c);
    cols.push_back(c + "_kind");
  }
  if (head.verified) cols.emplace_back("verified");
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const auto& row : rows) {
    for (const auto& [name, v] : row.labels) os << v << ',';
    os << row.n;
    auto emit = [&os](const Cell& c) {
      os << ',' << (c.infinite ? std::string("inf") : std::to_string(c.value)) << ',' << cell_kind_name(c.kind);
    };
    for (const auto* c : {&row.dim, &row.d, &row.dim_square, &row.d_square}) emit(*c);
    for (const auto& [name, c] : row.extra) emit(c);
    if (row.verified) os << ',' << (*row.verified ? "true" : "false");
    os << '\n';
  }
  return os.str();
}

}  // namespace schurmp
