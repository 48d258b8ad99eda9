#pragma once

// Seeded oracle-equality suites: every closed form for a product, square,
// dual or sum is compared against the code spanned directly.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "schurmp/cyclic.hpp"
#include "schurmp/hermitian.hpp"
#include "schurmp/matrix_product.hpp"
#include "schurmp/random.hpp"

namespace schurmp {

enum class Tier { small, full };

struct CaseResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  Tier tier = Tier::small;
  std::vector<CaseResult> cases;

  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& c : cases) f += !c.pass;
    return f;
  }
  bool ok() const { return failures() == 0; }
};

using ProductFn = std::function<LinearCode(const LinearCode&, const LinearCode&)>;

// Reference products the suites compare against. The faulty variant drops
// the first coordinate of every component-wise product.
struct Oracle {
  ProductFn product = [](const LinearCode& a, const LinearCode& b) { return schur_product(a, b); };

  LinearCode square(const LinearCode& c) const { return product(c, c); }

  static Oracle faulty() {
    Oracle o;
    o.product = [](const LinearCode& a, const LinearCode& b) {
      const auto& f = *a.field();
      const auto n = a.length();
      RowEchelon e(a.field(), n);
      for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t j = 0; j < b.dimension(); ++j) {
          auto v = schur(f, a.basis_row(i), b.basis_row(j));
          if (n) v[0] = 0;
          e.insert(v);
        }
      return LinearCode::from_echelon(e);
    };
    return o;
  }
};

namespace detail {

template <class Fn>
void run_case(std::vector<CaseResult>& out, std::string suite, std::string name, Fn&& fn) {
  CaseResult r{std::move(suite), std::move(name), false, {}};
  try {
    r.detail = fn();
    r.pass = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  out.push_back(std::move(r));
}

inline std::string params(const LinearCode& c) {
  return "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]_" +
         std::to_string(c.field()->size());
}

inline std::string dims(std::span<const LinearCode> cs) {
  std::string s;
  for (const auto& c : cs) s += (s.empty() ? "" : ",") + std::to_string(c.dimension());
  return "(" + s + ")";
}

inline std::string mismatch(const LinearCode& got, const LinearCode& want) {
  if (got == want) return {};
  return "closed form " + params(got) + " differs from direct span " + params(want);
}

inline std::vector<std::size_t> random_dims(Rng& rng, std::size_t count, std::size_t n, std::size_t max_total) {
  std::vector<std::size_t> d(count);
  std::size_t total = 0;
  for (auto& x : d) {
    x = uniform(rng, 0, std::min<std::size_t>(n, max_total - total));
    total += x;
  }
  return d;
}

inline std::vector<std::size_t> random_nonincreasing(Rng& rng, std::size_t count, std::size_t n, std::size_t max_total) {
  auto d = random_dims(rng, count, n, max_total);
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace detail

// ---- (u,u+v) ----------------------------------------------------------------

// Products [C1,C2]A * [C1',C2']A and squares over GF(2) and GF(3).
inline void suite_uuv(Rng& rng, std::size_t count, const Oracle& oracle, std::vector<CaseResult>& out) {
  for (std::size_t t = 0; t < count; ++t) {
    const std::uint32_t q = t % 2 ? 3 : 2;
    const auto field = make_field_of_size(q);
    const std::size_t n = uniform(rng, 2, q == 2 ? 10 : 7);
    const bool square = t % 4 < 2;
    std::vector<LinearCode> cs;
    for (std::size_t i = 0; i < (square ? 2 : 4); ++i) cs.push_back(random_code(field, n, uniform(rng, 0, n), rng));
    const auto name = std::string(square ? "square" : "product") + " q=" + std::to_string(q) + " n=" +
                      std::to_string(n) + " dims=" + detail::dims(cs);
    detail::run_case(out, "uuv", name, [&]() -> std::string {
      const MatrixProductSpec left{uuv_matrix(field), {cs[0], cs[1]}};
      const auto x = build(left);
      if (square) {
        const auto sq = square_uuv(cs[0], cs[1]);
        return detail::mismatch(build(sq.spec), oracle.square(x));
      }
      const MatrixProductSpec right{uuv_matrix(field), {cs[2], cs[3]}};
      return detail::mismatch(build(product_uuv(cs[0], cs[1], cs[2], cs[3])), oracle.product(x, build(right)));
    });
  }
}

// ---- Vandermonde ----------------------------------------------------------

inline void suite_vandermonde(Rng& rng, std::size_t count, const Oracle& oracle, std::vector<CaseResult>& out) {
  static constexpr std::uint32_t kQs[] = {4, 5, 7};
  for (std::size_t t = 0; t < count; ++t) {
    const auto q = kQs[t % 3];
    const auto field = make_field_of_size(q);
    const std::size_t s = uniform(rng, 1, std::min<std::uint32_t>(q - 1, 4));
    const std::size_t n = uniform(rng, 2, 8);
    std::vector<LinearCode> cs;
    for (auto k : detail::random_dims(rng, s, n, 12)) cs.push_back(random_code(field, n, k, rng));
    const auto name = "q=" + std::to_string(q) + " s=" + std::to_string(s) + " n=" + std::to_string(n) +
                      " dims=" + detail::dims(cs);
    detail::run_case(out, "vandermonde", name, [&]() -> std::string {
      const auto alphas = default_alphas(*field);
      const MatrixProductSpec spec{vandermonde_matrix(field, s, alphas), cs};
      return detail::mismatch(build(square_vandermonde(cs, alphas)), oracle.square(build(spec)));
    });
  }
}

// ---- MS_p -------------------------------------------------------------------

inline void suite_msp(Rng& rng, std::size_t count, const Oracle& oracle, std::vector<CaseResult>& out) {
  static constexpr std::uint32_t kPs[] = {2, 3, 5};
  for (std::size_t t = 0; t < count; ++t) {
    const auto p = kPs[t % 3];
    const auto field = make_field(p, 1);
    const std::size_t n = uniform(rng, 2, p == 5 ? 6 : 9);
    const auto cs = random_nested_chain(field, n, detail::random_nonincreasing(rng, p, n, 16), rng);
    const auto name = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " dims=" + detail::dims(cs);
    detail::run_case(out, "msp", name, [&]() -> std::string {
      const MatrixProductSpec spec{ms_p_matrix(field, p), cs};
      return detail::mismatch(build(square_msp(cs, p)), oracle.square(build(spec)));
    });
  }
}

// ---- distance exactness for nested constituents -----------------------------

// Random full-rank A and nested chains over GF(2)/GF(3); the brute-force
// distance must equal min_i D_i d_i.
inline void suite_nested_distance(Rng& rng, std::size_t count, std::vector<CaseResult>& out) {
  for (std::size_t t = 0; t < count; ++t) {
    const std::uint32_t q = t % 2 ? 3 : 2;
    const auto field = make_field_of_size(q);
    const std::size_t s = uniform(rng, 1, 3), l = uniform(rng, s, 3);
    const std::size_t n = uniform(rng, 2, q == 2 ? 10 : 6);
    const std::size_t max_total = q == 2 ? 16 : 9;
    auto ds = detail::random_nonincreasing(rng, s, n, max_total);
    if (ds[0] == 0) ds[0] = 1;
    const MatrixProductSpec spec{random_full_rank(field, s, l, rng), random_nested_chain(field, n, ds, rng)};
    const auto name = "q=" + std::to_string(q) + " s=" + std::to_string(s) + " l=" + std::to_string(l) +
                      " n=" + std::to_string(n) + " dims=" + detail::dims(spec.constituents);
    detail::run_case(out, "nested", name, [&]() -> std::string {
      const auto rep = distance_bound(spec);
      const auto d = min_distance_exact(build(spec));
      if (!rep.bound.exact) return "bound not flagged exact";
      if (rep.bound.value != d)
        return "bound " + std::to_string(rep.bound.value) + " differs from distance " + std::to_string(d);
      return {};
    });
  }
}

// ---- cyclic -------------------------------------------------------------------

inline std::vector<CosetSet> all_coset_closed(std::uint64_t q, std::uint32_t n) {
  const auto cosets = cyclotomic_cosets(q, n);
  std::vector<CosetSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cosets.size()); ++mask) {
    std::vector<std::uint32_t> e;
    for (std::size_t i = 0; i < cosets.size(); ++i)
      if (mask >> i & 1) e.insert(e.end(), cosets[i].elems().begin(), cosets[i].elems().end());
    out.emplace_back(q, n, std::move(e));
  }
  return out;
}

inline std::string set_text(const CosetSet& s) {
  std::string t;
  for (auto a : s.elems()) t += (t.empty() ? "" : ",") + std::to_string(a);
  return "{" + t + "}";
}

namespace detail {

// Product, sum and dual by coset arithmetic against the direct spans.
inline std::string cyclic_pair_check(const CyclicCode& a, const CyclicCode& b, const Oracle& oracle) {
  for (const auto* h : {&a, &b})
    if (h->code().dimension() != h->dimension()) return "dimension differs from |I|";
  if (auto m = mismatch(cyclic_product(a, b).code(), oracle.product(a.code(), b.code())); !m.empty())
    return "product: " + m;
  if (auto m = mismatch(cyclic_sum(a, b).code(), sum(a.code(), b.code())); !m.empty()) return "sum: " + m;
  if (auto m = mismatch(cyclic_dual(a).code(), dual(a.code())); !m.empty()) return "dual: " + m;
  return {};
}

}  // namespace detail

// All pairs at n=7, `count` random pairs each at n=15 and n=31, plus the
// distance bound against brute force for every generating set at n=7, 15.
inline void suite_cyclic(Rng& rng, std::size_t count, const Oracle& oracle, std::vector<CaseResult>& out) {
  const auto f2 = make_field(2, 1);
  const auto sets7 = all_coset_closed(2, 7);
  for (const auto& i1 : sets7)
    for (const auto& i2 : sets7)
      detail::run_case(out, "cyclic", "n=7 I1=" + set_text(i1) + " I2=" + set_text(i2), [&] {
        return detail::cyclic_pair_check(cyclic_code(f2, i1), cyclic_code(f2, i2), oracle);
      });
  for (std::uint32_t n : {15u, 31u})
    for (std::size_t t = 0; t < count; ++t) {
      const auto i1 = random_coset_closed(2, n, rng), i2 = random_coset_closed(2, n, rng);
      detail::run_case(out, "cyclic", "n=" + std::to_string(n) + " I1=" + set_text(i1) + " I2=" + set_text(i2), [&] {
        return detail::cyclic_pair_check(cyclic_code(f2, i1), cyclic_code(f2, i2), oracle);
      });
    }
  for (std::uint32_t n : {7u, 15u})
    for (const auto& I : all_coset_closed(2, n)) {
      if (I.empty()) continue;
      detail::run_case(out, "cyclic", "distance n=" + std::to_string(n) + " I=" + set_text(I), [&]() -> std::string {
        const auto h = cyclic_code(f2, I);
        const auto d = min_distance_exact(h.code());
        if (d < h.designed_distance())
          return "distance " + std::to_string(d) + " below n - Amp(I) + 1 = " + std::to_string(h.designed_distance());
        return {};
      });
    }
}

// ---- evaluation-code description ------------------------------------------------

// C(I) = B(-I) ∩ F_q^n for every I, and B(-I1) * B(-I2) = B(-(I1 + I2)) for
// every pair, at n = 7 and 15.
inline void suite_evaluation(const Oracle& oracle, std::vector<CaseResult>& out) {
  const auto f2 = make_field(2, 1);
  for (std::uint32_t n : {7u, 15u}) {
    const auto root = nth_root_of_unity(f2, n);
    const auto sets = all_coset_closed(2, n);
    for (const auto& I : sets)
      detail::run_case(out, "evaluation", "subfield n=" + std::to_string(n) + " I=" + set_text(I), [&] {
        return detail::mismatch(subfield_subcode(eval_code_oracle(root, negate(I)), *root.embedding),
                                cyclic_code(f2, I).code());
      });
    for (std::size_t a = 0; a < sets.size(); ++a)
      for (std::size_t b = a; b < sets.size(); ++b)
        detail::run_case(out, "evaluation",
                         "product n=" + std::to_string(n) + " I1=" + set_text(sets[a]) + " I2=" + set_text(sets[b]),
                         [&] {
                           const auto lhs = oracle.product(eval_code_oracle(root, negate(sets[a])),
                                                           eval_code_oracle(root, negate(sets[b])));
                           return detail::mismatch(eval_code_oracle(root, negate(coset_sum(sets[a], sets[b]))), lhs);
                         });
  }
}

// ---- Hermitian ------------------------------------------------------------------

// Dimensions over the valid window, product verdicts for all pairs below q^3,
// and the square of C(r, s) where the window is non-empty.
inline void suite_hermitian(Tier tier, const Oracle& oracle, std::vector<CaseResult>& out) {
  for (std::uint32_t q : {2u, 3u}) {
    const HermitianCurve curve(q);
    const auto q3 = q * q * q;
    for (std::uint32_t r = 0; r < q3; ++r)
      detail::run_case(out, "hermitian", "dim q=" + std::to_string(q) + " r=" + std::to_string(r),
                       [&]() -> std::string {
                         const auto c = hermitian_code(curve, r);
                         if (hermitian_in_window(q, r) && c.dimension() != r - curve.genus() + 1)
                           return "dimension " + std::to_string(c.dimension());
                         return {};
                       });
    for (std::uint32_t ri = 0; ri < q3; ++ri)
      for (std::uint32_t rj = ri; rj < q3; ++rj)
        detail::run_case(out, "hermitian",
                         "product q=" + std::to_string(q) + " r=" + std::to_string(ri) + "," + std::to_string(rj),
                         [&]() -> std::string {
                           const auto v = hermitian_product_check(curve, ri, rj);
                           if (!v.inclusion) return "product not contained in C_{ri+rj}";
                           if (v.equality_expected && !v.equality)
                             return "dimension " + std::to_string(v.product_dimension) + " of " +
                                    std::to_string(v.target_dimension);
                           return {};
                         });
  }
  const HermitianCurve curve3(3);
  detail::run_case(out, "hermitian", "C(7,2) q=3", [&]() -> std::string {
    const auto p = C_rs_params(3, 7, 2);
    const auto code = build(build_C_rs(curve3, 7, 2));
    const auto sq = build(square_C_rs(curve3, 7, 2));
    if (code.dimension() != p.k) return "k=" + std::to_string(code.dimension());
    if (auto m = detail::mismatch(sq, oracle.square(code)); !m.empty()) return m;
    if (sq.dimension() != p.k_star) return "k*=" + std::to_string(sq.dimension());
    return {};
  });
  if (tier == Tier::full) {
    const HermitianCurve curve4(4);
    for (auto [r, s] : {std::pair{13u, 2u}, std::pair{16u, 4u}})
      detail::run_case(out, "hermitian", "C(" + std::to_string(r) + "," + std::to_string(s) + ") q=4",
                       [&]() -> std::string {
                         const auto p = C_rs_params(4, r, s);
                         const auto code = build(build_C_rs(curve4, r, s));
                         const auto sq = oracle.square(code);
                         if (code.dimension() != p.k || sq.dimension() != p.k_star)
                           return "ranks " + std::to_string(code.dimension()) + "/" + std::to_string(sq.dimension());
                         return {};
                       });
  }
}

// ---- driver ---------------------------------------------------------------------

inline constexpr std::string_view kSuiteNames[] = {"uuv", "vandermonde", "msp", "nested", "cyclic",
                                                   "evaluation", "hermitian", "all"};

inline VerifyReport verify(std::string_view suite, std::uint64_t seed = 1, Tier tier = Tier::small,
                           const Oracle& oracle = {}) {
  if (std::find(std::begin(kSuiteNames), std::end(kSuiteNames), suite) == std::end(kSuiteNames))
    fail(Errc::UnknownSuite, "unknown suite '" + std::string(suite) + "'");
  VerifyReport rep{std::string(suite), seed, tier, {}};
  const std::size_t count = tier == Tier::full ? 200 : 25;
  const bool all = suite == "all";
  // Each suite gets its own stream so results do not depend on which others run.
  auto rng_for = [seed](std::uint64_t salt) { return Rng(seed * 0x9e3779b97f4a7c15ULL + salt); };
  if (all || suite == "uuv") {
    auto rng = rng_for(1);
    suite_uuv(rng, count, oracle, rep.cases);
  }
  if (all || suite == "vandermonde") {
    auto rng = rng_for(2);
    suite_vandermonde(rng, count, oracle, rep.cases);
  }
  if (all || suite == "msp") {
    auto rng = rng_for(3);
    suite_msp(rng, count, oracle, rep.cases);
  }
  if (all || suite == "nested") {
    auto rng = rng_for(4);
    suite_nested_distance(rng, tier == Tier::full ? 100 : 20, rep.cases);
  }
  if (all || suite == "cyclic") {
    auto rng = rng_for(5);
    suite_cyclic(rng, tier == Tier::full ? 100 : 10, oracle, rep.cases);
  }
  if (all || suite == "evaluation") suite_evaluation(oracle, rep.cases);
  if (all || suite == "hermitian") suite_hermitian(tier, oracle, rep.cases);
  return rep;
}

}  // namespace schurmp
