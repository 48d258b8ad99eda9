#pragma once

// One-point Hermitian codes over GF(q^2) and the Vandermonde matrix-product
// codes C(r, s) = [C_{r+s-1}, ..., C_r] V_{q^2}(s) built from them.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schurmp/error.hpp"
#include "schurmp/galois.hpp"
#include "schurmp/linear_code.hpp"
#include "schurmp/matrix_product.hpp"

namespace schurmp {

// Affine points of y^q + y = x^(q+1) over GF(q^2).
class HermitianCurve {
 public:
  explicit HermitianCurve(std::uint32_t q) : q_(q) {
    auto pm = detail::split_prime_power(q);
    if (!pm) fail(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
    field_ = make_field(pm->first, 2 * pm->second);
    const auto& f = *field_;
    for (Elem x = 0; x < f.size(); ++x) {
      const auto rhs = f.pow(x, q + 1);
      for (Elem y = 0; y < f.size(); ++y)
        if (f.add(f.pow(y, q), y) == rhs) points_.emplace_back(x, y);
    }
    // Lexicographic in (x, y) by discrete logarithm, zero first.
    auto key = [&f](Elem e) -> std::uint64_t { return e == 0 ? 0 : std::uint64_t{f.log(e)} + 1; };
    std::sort(points_.begin(), points_.end(), [&](const auto& a, const auto& b) {
      return std::pair(key(a.first), key(a.second)) < std::pair(key(b.first), key(b.second));
    });
    if (points_.size() != std::uint64_t{q} * q * q)
      fail(Errc::VerificationFailed, "found " + std::to_string(points_.size()) + " affine points, expected q^3");
  }

  std::uint32_t q() const noexcept { return q_; }
  const FieldPtr& field() const noexcept { return field_; }
  std::uint32_t genus() const noexcept { return q_ * (q_ - 1) / 2; }
  std::size_t length() const noexcept { return points_.size(); }
  const std::vector<std::pair<Elem, Elem>>& points() const noexcept { return points_; }

 private:
  std::uint32_t q_;
  FieldPtr field_;
  std::vector<std::pair<Elem, Elem>> points_;
};

struct Monomial {
  std::uint32_t a = 0;  // power of x
  std::uint32_t b = 0;  // power of y, below q
  std::uint32_t pole_order = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// x^a y^b with a q + b (q+1) <= r and b < q, sorted by pole order.
inline std::vector<Monomial> riemann_roch_basis(std::uint32_t q, std::uint32_t r) {
  std::vector<Monomial> out;
  for (std::uint32_t b = 0; b < q && b * (q + 1) <= r; ++b)
    for (std::uint32_t a = 0; a * q + b * (q + 1) <= r; ++a) out.push_back({a, b, a * q + b * (q + 1)});
  std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.pole_order < v.pole_order; });
  return out;
}

// 2g <= r <= q^3 - q^2 - 1, where [q^3, r - g + 1, q^3 - r] holds.
inline bool hermitian_in_window(std::uint32_t q, std::uint32_t r) {
  const std::uint32_t g = q * (q - 1) / 2;
  return 2 * g <= r && r + q * q + 1 <= q * q * q;
}

// C_r = evaluation of L(rQ) at the affine points. The rank is checked
// whenever evaluation is injective (r < q^3).
inline LinearCode hermitian_code(const HermitianCurve& curve, std::uint32_t r) {
  const auto& f = *curve.field();
  const auto basis = riemann_roch_basis(curve.q(), r);
  std::vector<Vector> rows;
  rows.reserve(basis.size());
  for (const auto& mono : basis) {
    Vector v(curve.length());
    for (std::size_t i = 0; i < curve.length(); ++i) {
      const auto& [x, y] = curve.points()[i];
      v[i] = f.mul(f.pow(x, mono.a), f.pow(y, mono.b));
    }
    rows.push_back(std::move(v));
  }
  auto code = LinearCode::from_generators(curve.field(), curve.length(), rows);
  if (r < curve.length() && code.dimension() != basis.size())
    fail(Errc::RankMismatch, "C_" + std::to_string(r) + " has rank " + std::to_string(code.dimension()) +
                                 ", basis size " + std::to_string(basis.size()));
  if (hermitian_in_window(curve.q(), r) && code.dimension() != r - curve.genus() + 1)
    fail(Errc::RankMismatch, "C_" + std::to_string(r) + " dimension differs from r - g + 1");
  return code;
}

struct ProductVerdict {
  bool inclusion = false;          // C_ri * C_rj ⊆ C_{ri+rj}
  bool equality_expected = false;  // degree condition (or a constant factor) holds
  bool equality = false;
  std::size_t product_dimension = 0;
  std::size_t target_dimension = 0;

  bool ok() const { return inclusion && (!equality_expected || equality); }
};

inline ProductVerdict hermitian_product_check(const HermitianCurve& curve, std::uint32_t ri, std::uint32_t rj) {
  const auto g = curve.genus();
  const auto prod = schur_product(hermitian_code(curve, ri), hermitian_code(curve, rj));
  const auto target = hermitian_code(curve, ri + rj);
  ProductVerdict v;
  v.product_dimension = prod.dimension();
  v.target_dimension = target.dimension();
  v.inclusion = target.contains(prod);
  v.equality_expected = ri == 0 || rj == 0 || (ri >= 2 * g + 1 && rj >= 2 * g) || (rj >= 2 * g + 1 && ri >= 2 * g);
  v.equality = prod == target;
  return v;
}

// ---- C(r, s) --------------------------------------------------------------

struct CrsParams {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;       // designed
  std::uint64_t k_star = 0;
  std::uint64_t d_star = 0;  // designed

  friend bool operator==(const CrsParams&, const CrsParams&) = default;
};

// 2 <= s <= q^2/2, 2g+1 <= r, r + s <= (q^3 - q^2 + 1)/2
inline void require_crs_window(std::uint32_t q, std::uint32_t r, std::uint32_t s) {
  const std::uint64_t g = q * (q - 1) / 2, q2 = std::uint64_t{q} * q, q3 = q2 * q;
  if (s < 2 || 2 * s > q2)
    fail(Errc::ParameterWindow, "s=" + std::to_string(s) + " outside [2, q^2/2]");
  if (r < 2 * g + 1) fail(Errc::ParameterWindow, "r=" + std::to_string(r) + " below 2g+1");
  if (2 * (std::uint64_t{r} + s) > q3 - q2 + 1)
    fail(Errc::ParameterWindow, "r+s=" + std::to_string(r + s) + " above (q^3-q^2+1)/2");
}

namespace detail {

inline MatrixProductSpec crs_spec(const HermitianCurve& curve, std::uint32_t r, std::uint32_t s) {
  MatrixProductSpec spec;
  spec.A = vandermonde_matrix(curve.field(), s, default_alphas(*curve.field()));
  for (std::uint32_t i = 0; i < s; ++i) spec.constituents.push_back(hermitian_code(curve, r + s - 1 - i));
  return spec;
}

}  // namespace detail

inline MatrixProductSpec build_C_rs(const HermitianCurve& curve, std::uint32_t r, std::uint32_t s) {
  require_crs_window(curve.q(), r, s);
  return detail::crs_spec(curve, r, s);
}

// C(r, s)^{*2} = C(2r, 2s - 1), checked against the generic Vandermonde
// square of the constituents.
inline MatrixProductSpec square_C_rs(const HermitianCurve& curve, std::uint32_t r, std::uint32_t s) {
  const auto original = build_C_rs(curve, r, s);
  auto closed = detail::crs_spec(curve, 2 * r, 2 * s - 1);
  const auto generic = square_vandermonde(original.constituents);
  if (!(generic.A == closed.A) || generic.constituents != closed.constituents)
    fail(Errc::VerificationFailed, "Vandermonde square of C(r,s) differs from C(2r, 2s-1)");
  return closed;
}

// Closed-form parameters of C(r, s) and its square. The distance closed forms
// are cross-checked against the term-by-term minima they summarize.
inline CrsParams C_rs_params(std::uint32_t q, std::uint32_t r, std::uint32_t s) {
  require_crs_window(q, r, s);
  const std::int64_t g = q * (q - 1) / 2, q2 = std::int64_t{q} * q, q3 = q2 * q;
  const std::int64_t R = r, S = s;
  CrsParams p;
  p.n = static_cast<std::uint64_t>(q3 * (q2 - 1));
  p.k = static_cast<std::uint64_t>(S * (R - g) + S * (S + 1) / 2);
  p.d = static_cast<std::uint64_t>((q2 - S) * (q3 - R));
  p.k_star = static_cast<std::uint64_t>((2 * S - 1) * (2 * R - g + S));
  p.d_star = static_cast<std::uint64_t>((q2 - 2 * S + 1) * (q3 - 2 * R));

  // Constituent i of C(r, s) is C_{r+s-1-i}: dimension r+s-1-i-g+1, designed
  // distance q^3-(r+s-1-i), row distance q^2-i-1.
  std::int64_t k_sum = 0, d_min = INT64_MAX;
  for (std::int64_t i = 0; i < S; ++i) {
    k_sum += R + S - 1 - i - g + 1;
    d_min = std::min(d_min, (q2 - i - 1) * (q3 - (R + S - 1 - i)));
  }
  std::int64_t k2_sum = 0, d2_min = INT64_MAX;
  for (std::int64_t i = 0; i <= 2 * S - 2; ++i) {
    k2_sum += 2 * R + 2 * S - 2 - i - g + 1;
    d2_min = std::min(d2_min, (q2 - i - 1) * (q3 - 2 * R - 2 * S + 2 + i));
  }
  if (k_sum != static_cast<std::int64_t>(p.k) || d_min != static_cast<std::int64_t>(p.d) ||
      k2_sum != static_cast<std::int64_t>(p.k_star) || d2_min != static_cast<std::int64_t>(p.d_star))
    fail(Errc::VerificationFailed, "closed-form parameters disagree with term-by-term evaluation");
  return p;
}

}  // namespace schurmp
