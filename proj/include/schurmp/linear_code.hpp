#pragma once

// Linear codes over GF(q), stored as canonical RREF generator matrices.

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "schurmp/error.hpp"
#include "schurmp/galois.hpp"
#include "schurmp/matrix.hpp"

namespace schurmp {

using Vector = std::vector<Elem>;

inline std::size_t hamming_weight(std::span<const Elem> v) {
  std::size_t w = 0;
  for (auto x : v) w += x != 0;
  return w;
}

// Component-wise product x * y.
inline Vector schur(const FiniteField& f, std::span<const Elem> x, std::span<const Elem> y) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(x[i], y[i]);
  return out;
}

class LinearCode {
 public:
  LinearCode() = default;

  static LinearCode from_generators(FieldPtr field, std::size_t n, const std::vector<Vector>& rows) {
    RowEchelon e(field, n);
    for (const auto& r : rows) {
      if (r.size() != n) fail(Errc::LengthMismatch, "generator of length " + std::to_string(r.size()) +
                                                        ", expected " + std::to_string(n));
      for (auto x : r)
        if (x >= field->size()) fail(Errc::FieldMismatch, "entry is not an element of " + field->name());
      if (!e.full()) e.insert(r);
    }
    return from_echelon(e);
  }

  static LinearCode from_echelon(const RowEchelon& e) {
    LinearCode c;
    c.gen_ = e.to_rref();
    c.field_ = c.gen_.field();
    c.n_ = e.cols();
    c.pivots_ = e.pivots();
    return c;
  }

  static LinearCode from_matrix(const Matrix& g) { return from_generators(g.field(), g.cols(), g.to_rows()); }

  static LinearCode zero(FieldPtr field, std::size_t n) { return from_generators(std::move(field), n, {}); }

  static LinearCode full(FieldPtr field, std::size_t n) {
    return from_matrix(Matrix::identity(std::move(field), n));
  }

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return gen_.rows(); }
  const Matrix& generator() const noexcept { return gen_; }
  std::span<const Elem> basis_row(std::size_t i) const { return gen_.row(i); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Elem> v) const {
    if (v.size() != n_) return false;
    const auto& f = *field_;
    Vector w(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const auto c = w[pivots_[i]];
      if (c) detail::axpy(f, w, gen_.row(i), f.neg(c));
    }
    return hamming_weight(w) == 0;
  }

  bool contains(const LinearCode& other) const {
    if (other.n_ != n_ || !same_field(other.field_, field_)) return false;
    for (std::size_t i = 0; i < other.dimension(); ++i)
      if (!contains(other.basis_row(i))) return false;
    return true;
  }

  // Codeword for the message `msg` in the canonical basis.
  Vector encode(std::span<const Elem> msg) const {
    if (msg.size() != dimension()) fail(Errc::LengthMismatch, "message length differs from dimension");
    Vector out(n_, 0);
    for (std::size_t i = 0; i < msg.size(); ++i) detail::axpy(*field_, out, gen_.row(i), msg[i]);
    return out;
  }

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.n_ == b.n_ && a.gen_ == b.gen_;
  }

 private:
  FieldPtr field_;
  std::size_t n_ = 0;
  Matrix gen_;
  std::vector<std::size_t> pivots_;
};

namespace detail {

inline void require_compatible(const LinearCode& a, const LinearCode& b) {
  if (!same_field(a.field(), b.field())) fail(Errc::FieldMismatch, "codes over different fields");
  if (a.length() != b.length())
    fail(Errc::LengthMismatch, "lengths " + std::to_string(a.length()) + " and " + std::to_string(b.length()));
}

}  // namespace detail

inline LinearCode sum(const LinearCode& a, const LinearCode& b) {
  detail::require_compatible(a, b);
  RowEchelon e(a.field(), a.length());
  for (std::size_t i = 0; i < a.dimension(); ++i) e.insert(a.basis_row(i));
  for (std::size_t i = 0; i < b.dimension() && !e.full(); ++i) e.insert(b.basis_row(i));
  return LinearCode::from_echelon(e);
}

// Kernel of the generator matrix: from RREF, one vector per non-pivot column.
inline LinearCode dual(const LinearCode& c) {
  const auto& f = *c.field();
  const auto n = c.length();
  const auto& piv = c.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vector> rows;
  rows.reserve(n - piv.size());
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vector v(n, 0);
    v[j] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(c.generator()(i, j));
    rows.push_back(std::move(v));
  }
  return LinearCode::from_generators(c.field(), n, rows);
}

// Span of all pairwise products of basis rows.
inline LinearCode schur_product(const LinearCode& a, const LinearCode& b) {
  detail::require_compatible(a, b);
  const auto& f = *a.field();
  RowEchelon e(a.field(), a.length());
  const bool same = a == b;
  for (std::size_t i = 0; i < a.dimension() && !e.full(); ++i)
    for (std::size_t j = same ? i : 0; j < b.dimension() && !e.full(); ++j)
      e.insert(schur(f, a.basis_row(i), b.basis_row(j)));
  return LinearCode::from_echelon(e);
}

inline LinearCode schur_square(const LinearCode& c) { return schur_product(c, c); }

// max{1, n - 2k + 2}
inline std::int64_t singleton_square_bound(std::int64_t n, std::int64_t k) {
  if (k < 1 || k > n) fail(Errc::InvalidArgument, "require 1 <= k <= n");
  return std::max<std::int64_t>(1, n - 2 * k + 2);
}

// ---- minimum distance -----------------------------------------------------

inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 26;

// A distance that is either exact or a lower bound; `infinite` marks the
// zero code, which has no nonzero codewords.
struct DistanceValue {
  std::uint64_t value = 0;
  bool exact = false;
  bool infinite = false;

  static DistanceValue exact_value(std::uint64_t v) { return {v, true, false}; }
  static DistanceValue lower_bound(std::uint64_t v) { return {v, false, false}; }
  static DistanceValue none() { return {0, true, true}; }

  friend bool operator==(const DistanceValue&, const DistanceValue&) = default;
};

inline std::string to_string(const DistanceValue& d) {
  if (d.infinite) return "inf";
  return (d.exact ? "" : ">=") + std::to_string(d.value);
}

namespace detail {

inline std::uint64_t codeword_count(const LinearCode& c) {
  return checked_pow(c.field()->size(), c.dimension(), std::numeric_limits<std::uint64_t>::max() / 2);
}

// Gray-code walk over GF(2) messages with bit-packed codewords.
inline std::size_t min_distance_binary(const LinearCode& c) {
  const std::size_t n = c.length(), k = c.dimension();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c.generator()(i, j)) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
  std::vector<std::uint64_t> cur(words, 0);
  std::size_t best = n;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t g = 1; g < total; ++g) {
    const auto& r = rows[std::countr_zero(g)];
    std::size_t w = 0;
    for (std::size_t t = 0; t < words; ++t) {
      cur[t] ^= r[t];
      w += std::popcount(cur[t]);
    }
    if (w < best) {
      best = w;
      if (best == 1) break;
    }
  }
  return best;
}

// Odometer over the message space viewed as (Z/p)^{k m}: every digit step
// adds one scaled basis row, including the wrap p-1 -> 0.
inline std::size_t min_distance_general(const LinearCode& c) {
  const auto& f = *c.field();
  const std::size_t n = c.length(), k = c.dimension(), m = f.degree(), p = f.characteristic();
  std::vector<Vector> steps;
  steps.reserve(k * m);
  Elem unit = 1;
  std::vector<Elem> units;
  for (std::size_t t = 0; t < m; ++t) {
    units.push_back(unit);
    unit *= static_cast<Elem>(p);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (auto u : units) {
      Vector v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = f.mul(u, c.generator()(i, j));
      steps.push_back(std::move(v));
    }
  std::vector<std::uint32_t> digits(steps.size(), 0);
  Vector cur(n, 0);
  std::size_t best = n;
  for (;;) {
    std::size_t pos = 0;
    for (; pos < digits.size(); ++pos) {
      for (std::size_t j = 0; j < n; ++j) cur[j] = f.add(cur[j], steps[pos][j]);
      if (++digits[pos] < p) break;
      digits[pos] = 0;
    }
    if (pos == digits.size()) break;
    const auto w = hamming_weight(cur);
    if (w < best) {
      best = w;
      if (best == 1) break;
    }
  }
  return best;
}

}  // namespace detail

// Exact minimum distance by exhaustive enumeration of q^k codewords.
inline std::uint64_t min_distance_exact(const LinearCode& c, std::uint64_t budget = kDefaultDistanceBudget) {
  if (c.dimension() == 0) fail(Errc::InvalidArgument, "zero code has no minimum distance");
  if (detail::codeword_count(c) > budget)
    fail(Errc::BudgetExceeded, std::to_string(c.field()->size()) + "^" + std::to_string(c.dimension()) +
                                   " codewords exceed the enumeration budget");
  if (c.field()->size() == 2) return detail::min_distance_binary(c);
  return detail::min_distance_general(c);
}

// Exact distance within budget, otherwise the trivial lower bound 1.
inline DistanceValue min_distance(const LinearCode& c, std::uint64_t budget = kDefaultDistanceBudget) {
  if (c.dimension() == 0) return DistanceValue::none();
  if (detail::codeword_count(c) > budget) return DistanceValue::lower_bound(1);
  return DistanceValue::exact_value(min_distance_exact(c, budget));
}

}  // namespace schurmp
