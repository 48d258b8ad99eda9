#pragma once

// Matrix-product codes [C_1, ..., C_s] A and the closed forms for squares of
// the (u,u+v), Vandermonde and MS_p families.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schurmp/error.hpp"
#include "schurmp/linear_code.hpp"
#include "schurmp/matrix.hpp"

namespace schurmp {

struct MatrixProductSpec {
  Matrix A;  // s x l defining matrix of rank s
  std::vector<LinearCode> constituents;

  std::size_t rows() const noexcept { return A.rows(); }
  std::size_t cols() const noexcept { return A.cols(); }
  const FieldPtr& field() const noexcept { return A.field(); }
  std::size_t constituent_length() const { return constituents.empty() ? 0 : constituents.front().length(); }
};

namespace detail {

inline void require_same_constituents(std::span<const LinearCode> codes) {
  if (codes.empty()) fail(Errc::InvalidArgument, "at least one constituent code is required");
  for (const auto& c : codes)
    if (!same_field(c.field(), codes.front().field()) || c.length() != codes.front().length())
      fail(Errc::MixedConstituents, "constituents must share field and length");
}

}  // namespace detail

inline void validate(const MatrixProductSpec& spec) {
  detail::require_same_constituents(spec.constituents);
  if (!same_field(spec.field(), spec.constituents.front().field()))
    fail(Errc::MixedConstituents, "defining matrix and constituents over different fields");
  if (spec.constituents.size() != spec.rows())
    fail(Errc::MixedConstituents, "need one constituent per row of the defining matrix");
  if (spec.rows() > spec.cols() || spec.A.rank() != spec.rows())
    fail(Errc::RankDeficientA, "defining matrix must have rank equal to its row count");
}

// Generator rows (a_i1 g, ..., a_il g) for every basis row g of C_i, with
// blocks of length n laid out column by column of A.
inline LinearCode build(const MatrixProductSpec& spec) {
  validate(spec);
  const auto& f = *spec.field();
  const std::size_t n = spec.constituent_length(), l = spec.cols();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < spec.rows(); ++i) {
    const auto& c = spec.constituents[i];
    for (std::size_t r = 0; r < c.dimension(); ++r) {
      Vector v(n * l, 0);
      const auto g = c.basis_row(r);
      for (std::size_t j = 0; j < l; ++j) {
        const auto a = spec.A(i, j);
        if (a)
          for (std::size_t t = 0; t < n; ++t) v[j * n + t] = f.mul(a, g[t]);
      }
      rows.push_back(std::move(v));
    }
  }
  return LinearCode::from_generators(spec.field(), n * l, rows);
}

// C_1 ⊇ C_2 ⊇ ... ⊇ C_s
inline bool is_nested_chain(std::span<const LinearCode> codes) {
  for (std::size_t i = 1; i < codes.size(); ++i)
    if (!codes[i - 1].contains(codes[i])) return false;
  return true;
}

// ---- defining matrices ----------------------------------------------------

inline Matrix uuv_matrix(FieldPtr field) {
  Matrix a(std::move(field), 2, 2);
  a(0, 0) = a(0, 1) = a(1, 1) = 1;
  return a;
}

// All nonzero elements in primitive-power order.
inline std::vector<Elem> default_alphas(const FiniteField& f) {
  std::vector<Elem> out(f.size() - 1);
  for (std::uint32_t i = 0; i + 1 < f.size(); ++i) out[i] = f.exp(i);
  return out;
}

inline void require_distinct_nonzero(std::span<const Elem> alphas) {
  std::vector<Elem> sorted(alphas.begin(), alphas.end());
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() == 0) fail(Errc::InvalidArgument, "Vandermonde points must be nonzero");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Errc::RepeatedAlpha, "Vandermonde points must be distinct");
}

// Rows alpha_k^i for i = 0..s-1.
inline Matrix vandermonde_matrix(FieldPtr field, std::size_t s, std::span<const Elem> alphas) {
  require_distinct_nonzero(alphas);
  const auto& f = *field;
  Matrix v(field, s, alphas.size());
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t k = 0; k < alphas.size(); ++k) v(i, k) = f.pow(alphas[k], i);
  return v;
}

// Binomial coefficient modulo a prime via Lucas' theorem.
inline std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n || k) {
    const auto ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    // C(ni, ki) mod p with ni < p: multiplicative formula and Fermat inverse.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t t = 0; t < ki; ++t) {
      num = num * ((ni - t) % p) % p;
      den = den * ((t + 1) % p) % p;
    }
    std::uint64_t inv = 1, b = den;
    for (auto e = p - 2; e; e >>= 1) {
      if (e & 1) inv = inv * b % p;
      b = b * b % p;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return result;
}

// MS_p = [C(p-i, j-1) mod p], i, j = 1..p
inline Matrix ms_p_matrix(FieldPtr field, std::uint32_t p) {
  if (field->characteristic() != p) fail(Errc::CharacteristicMismatch, "MS_p needs a field of characteristic p");
  Matrix a(field, p, p);
  for (std::uint32_t i = 1; i <= p; ++i)
    for (std::uint32_t j = 1; j <= p; ++j) a(i - 1, j - 1) = field->from_int(binom_mod_p(p - i, j - 1, p));
  return a;
}

// MS_p^* = [C(p-i, j-1) C(p-1, j-1) mod p]
inline Matrix ms_p_star_matrix(FieldPtr field, std::uint32_t p) {
  if (field->characteristic() != p) fail(Errc::CharacteristicMismatch, "MS_p needs a field of characteristic p");
  Matrix a(field, p, p);
  for (std::uint32_t i = 1; i <= p; ++i)
    for (std::uint32_t j = 1; j <= p; ++j)
      a(i - 1, j - 1) = field->from_int(binom_mod_p(p - i, j - 1, p) * binom_mod_p(p - 1, j - 1, p) % p);
  return a;
}

// ---- distance bound -------------------------------------------------------

struct RowDistance {
  DistanceValue row_code;     // D_i, distance of the span of the first i rows of A
  DistanceValue constituent;  // d_i
};

struct MPDistanceReport {
  DistanceValue bound;  // min_i D_i d_i; exact when the bound is attained
  bool nested = false;
  std::vector<RowDistance> per_row;
};

namespace detail {

// Rows 1, a, a^2, ... for distinct nonzero a.
inline bool is_vandermonde(const Matrix& a) {
  const auto& f = *a.field();
  for (std::size_t k = 0; k < a.cols(); ++k)
    if (a(0, k) != 1) return false;
  if (a.rows() < 2) return true;
  std::vector<Elem> pts(a.row(1).begin(), a.row(1).end());
  std::sort(pts.begin(), pts.end());
  if (pts.front() == 0 || std::adjacent_find(pts.begin(), pts.end()) != pts.end()) return false;
  for (std::size_t i = 2; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != f.pow(a(1, k), i)) return false;
  return true;
}

inline DistanceValue times(const DistanceValue& a, const DistanceValue& b) {
  if (a.infinite || b.infinite) return DistanceValue::none();
  return {a.value * b.value, a.exact && b.exact, false};
}

}  // namespace detail

// D_i for the code spanned by the first i rows of A: brute force within the
// budget, else the MDS value l - i + 1 for Vandermonde matrices.
inline DistanceValue defining_row_distance(const Matrix& a, std::size_t i,
                                           std::uint64_t budget = kDefaultDistanceBudget) {
  auto code = LinearCode::from_matrix(a.top_rows(i));
  auto d = min_distance(code, budget);
  if (d.exact) return d;
  if (detail::is_vandermonde(a.top_rows(i))) return DistanceValue::exact_value(a.cols() - i + 1);
  return d;
}

// min_i D_i d_i over precomputed row terms; exact only for nested
// constituents with every term exact.
inline MPDistanceReport combine_row_distances(std::vector<RowDistance> per_row, bool nested) {
  MPDistanceReport rep;
  rep.nested = nested;
  rep.per_row = std::move(per_row);
  std::optional<DistanceValue> best;
  bool all_exact = true;
  for (const auto& rd : rep.per_row) {
    const auto prod = detail::times(rd.row_code, rd.constituent);
    if (prod.infinite) continue;
    all_exact = all_exact && prod.exact;
    if (!best || prod.value < best->value) best = prod;
  }
  rep.bound = best ? DistanceValue{best->value, nested && all_exact, false} : DistanceValue::none();
  return rep;
}

// min_i D_i d_i. `known` optionally supplies constituent distances (exact or
// lower bounds); missing ones are brute-forced within the budget.
inline MPDistanceReport distance_bound(const MatrixProductSpec& spec, std::span<const DistanceValue> known = {},
                                       std::uint64_t budget = kDefaultDistanceBudget) {
  validate(spec);
  std::vector<RowDistance> per_row;
  for (std::size_t i = 0; i < spec.rows(); ++i)
    per_row.push_back({defining_row_distance(spec.A, i + 1, budget),
                       i < known.size() ? known[i] : min_distance(spec.constituents[i], budget)});
  return combine_row_distances(std::move(per_row), is_nested_chain(spec.constituents));
}

// ---- duals ----------------------------------------------------------------

struct DualForms {
  MatrixProductSpec standard;  // [C_1^⊥, ..., C_s^⊥] (A^{-1})^T
  MatrixProductSpec reversed;  // [C_s^⊥, ..., C_1^⊥] J (A^{-1})^T
};

// J (A^{-1})^T: rows of the inverse transpose in reverse order.
inline Matrix reversed_dual_matrix(const Matrix& a) {
  const auto inv_t = a.inverse().transpose();
  const auto s = a.rows();
  Matrix out(a.field(), s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) out(i, j) = inv_t(s - 1 - i, j);
  return out;
}

inline DualForms dual_mp(const MatrixProductSpec& spec) {
  validate(spec);
  if (spec.rows() != spec.cols()) fail(Errc::NotSquare, "dual form needs a square defining matrix");
  DualForms out;
  out.standard.A = spec.A.inverse().transpose();
  out.reversed.A = reversed_dual_matrix(spec.A);
  for (std::size_t i = 0; i < spec.rows(); ++i) out.standard.constituents.push_back(dual(spec.constituents[i]));
  out.reversed.constituents.assign(out.standard.constituents.rbegin(), out.standard.constituents.rend());
  return out;
}

// ---- (u,u+v) --------------------------------------------------------------

// [C1, C2]A * [C1', C2']A = [C1*C1', C1*C2' + C2*C1' + C2*C2']A
inline MatrixProductSpec product_uuv(const LinearCode& c1, const LinearCode& c2, const LinearCode& c1p,
                                     const LinearCode& c2p) {
  const LinearCode all[] = {c1, c2, c1p, c2p};
  detail::require_same_constituents(all);
  MatrixProductSpec out;
  out.A = uuv_matrix(c1.field());
  out.constituents.push_back(schur_product(c1, c1p));
  out.constituents.push_back(sum(sum(schur_product(c1, c2p), schur_product(c2, c1p)), schur_product(c2, c2p)));
  return out;
}

struct UuvSquare {
  MatrixProductSpec spec;
  bool nested = false;  // C2 ⊆ C1, in which case the report's bound is the exact distance
  MPDistanceReport report;
};

inline UuvSquare square_uuv(const LinearCode& c1, const LinearCode& c2,
                            std::uint64_t budget = kDefaultDistanceBudget) {
  const LinearCode both[] = {c1, c2};
  detail::require_same_constituents(both);
  UuvSquare out;
  out.nested = c1.contains(c2);
  out.spec.A = uuv_matrix(c1.field());
  out.spec.constituents.push_back(schur_square(c1));
  out.spec.constituents.push_back(out.nested ? schur_product(c1, c2) : schur_product(sum(c1, c2), c2));
  out.report = distance_bound(out.spec, {}, budget);
  return out;
}

// ---- Vandermonde ----------------------------------------------------------

// [C_0, ..., C_{s-1}] V(s)  ->  [E_0, ..., E_{s~-1}] V(s~) with
// E_l = sum_{i+j = l mod (q-1)} C_i * C_j and s~ = min(2s-1, q-1).
inline MatrixProductSpec square_vandermonde(std::span<const LinearCode> codes, std::span<const Elem> alphas = {}) {
  detail::require_same_constituents(codes);
  const auto field = codes.front().field();
  const auto& f = *field;
  const std::size_t q = f.size(), s = codes.size(), n = codes.front().length();
  if (s > q - 1) fail(Errc::TooManyRows, "Vandermonde construction needs s <= q - 1");
  std::vector<Elem> pts = alphas.empty() ? default_alphas(f) : std::vector<Elem>(alphas.begin(), alphas.end());
  require_distinct_nonzero(pts);
  const std::size_t s_sq = std::min(2 * s - 1, q - 1);
  if (pts.size() < s_sq) fail(Errc::TooFewColumns, "square needs at least " + std::to_string(s_sq) + " columns");

  std::vector<RowEchelon> parts(s_sq, RowEchelon(field, n));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      const auto l = (i + j) % (q - 1);
      if (l >= s_sq) continue;
      auto& e = parts[l];
      for (std::size_t a = 0; a < codes[i].dimension() && !e.full(); ++a)
        for (std::size_t b = (i == j ? a : 0); b < codes[j].dimension() && !e.full(); ++b)
          e.insert(schur(f, codes[i].basis_row(a), codes[j].basis_row(b)));
    }
  MatrixProductSpec out;
  out.A = vandermonde_matrix(field, s_sq, pts);
  for (const auto& e : parts) out.constituents.push_back(LinearCode::from_echelon(e));
  return out;
}

// min_l (q - l - 1) d(E_l) for a square in the Vandermonde form.
inline DistanceValue vandermonde_square_distance_bound(const MatrixProductSpec& square,
                                                       std::span<const DistanceValue> known = {},
                                                       std::uint64_t budget = kDefaultDistanceBudget) {
  return distance_bound(square, known, budget).bound;
}

// ---- MS_p -----------------------------------------------------------------

// [C_1 ⊇ ... ⊇ C_p] MS_p  ->  [E_2, ..., E_{p+1}] MS_p^*, E_k = sum_{i+j=k} C_i * C_j.
inline MatrixProductSpec square_msp(std::span<const LinearCode> codes, std::uint32_t p) {
  detail::require_same_constituents(codes);
  const auto field = codes.front().field();
  const auto& f = *field;
  if (f.characteristic() != p)
    fail(Errc::CharacteristicMismatch, "field characteristic " + std::to_string(f.characteristic()) + " != " +
                                           std::to_string(p));
  if (codes.size() != p) fail(Errc::InvalidArgument, "MS_p needs exactly p constituents");
  if (!is_nested_chain(codes)) fail(Errc::NotNested, "MS_p square requires C_1 ⊇ ... ⊇ C_p");
  const std::size_t n = codes.front().length();
  std::vector<RowEchelon> parts(p, RowEchelon(field, n));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i; j < p; ++j) {
      const auto k = i + j;  // 0-based, so E index k covers i+j = k+2 in 1-based terms
      if (k >= p) continue;
      auto& e = parts[k];
      for (std::size_t a = 0; a < codes[i].dimension() && !e.full(); ++a)
        for (std::size_t b = (i == j ? a : 0); b < codes[j].dimension() && !e.full(); ++b)
          e.insert(schur(f, codes[i].basis_row(a), codes[j].basis_row(b)));
    }
  MatrixProductSpec out;
  out.A = ms_p_star_matrix(field, p);
  for (const auto& e : parts) out.constituents.push_back(LinearCode::from_echelon(e));
  return out;
}

}  // namespace schurmp
