#pragma once

// Cyclic codes C(I) described by q-cyclotomic generating sets, with coset
// arithmetic for sums and Schur products, s-restricted weights, and the
// evaluation-code description used as an independent check.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "schurmp/error.hpp"
#include "schurmp/galois.hpp"
#include "schurmp/linear_code.hpp"

namespace schurmp {

// A subset of Z/nZ, usually a union of q-cyclotomic cosets.
class CosetSet {
 public:
  CosetSet() = default;
  CosetSet(std::uint64_t q, std::uint32_t n, std::vector<std::uint32_t> elems)
      : q_(q), n_(n), elems_(std::move(elems)) {
    if (n == 0) fail(Errc::InvalidArgument, "modulus n must be positive");
    if (std::gcd<std::uint64_t>(n, q) != 1)
      fail(Errc::GcdNotOne, "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
    for (auto a : elems_)
      if (a >= n) fail(Errc::OutOfRange, std::to_string(a) + " is not a residue mod " + std::to_string(n));
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  static CosetSet full(std::uint64_t q, std::uint32_t n) {
    std::vector<std::uint32_t> all(n);
    std::iota(all.begin(), all.end(), 0u);
    return CosetSet(q, n, std::move(all));
  }

  std::uint64_t q() const noexcept { return q_; }
  std::uint32_t n() const noexcept { return n_; }
  const std::vector<std::uint32_t>& elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }

  bool contains(std::uint32_t a) const { return std::binary_search(elems_.begin(), elems_.end(), a % n_); }

  // Closed under multiplication by q mod n.
  bool is_closed() const {
    for (auto a : elems_)
      if (!contains(static_cast<std::uint32_t>(a * (q_ % n_) % n_))) return false;
    return true;
  }

  friend bool operator==(const CosetSet&, const CosetSet&) = default;

 private:
  std::uint64_t q_ = 2;
  std::uint32_t n_ = 1;
  std::vector<std::uint32_t> elems_;
};

// [a] = {a q^j mod n}
inline CosetSet coset(std::uint64_t q, std::uint32_t n, std::uint32_t a) {
  CosetSet probe(q, n, {});  // validates (q, n)
  std::vector<std::uint32_t> orbit;
  std::uint64_t x = a % n;
  do {
    orbit.push_back(static_cast<std::uint32_t>(x));
    x = x * (q % n) % n;
  } while (x != a % n);
  return CosetSet(q, n, std::move(orbit));
}

// Smallest coset-closed set containing the given representatives.
inline CosetSet coset_closure(std::uint64_t q, std::uint32_t n, const std::vector<std::uint32_t>& reps) {
  std::vector<std::uint32_t> all;
  for (auto a : reps) {
    if (a >= n) fail(Errc::OutOfRange, std::to_string(a) + " is not a residue mod " + std::to_string(n));
    auto c = coset(q, n, a);
    all.insert(all.end(), c.elems().begin(), c.elems().end());
  }
  return CosetSet(q, n, std::move(all));
}

// All q-cyclotomic cosets mod n, ordered by smallest element.
inline std::vector<CosetSet> cyclotomic_cosets(std::uint64_t q, std::uint32_t n) {
  std::vector<bool> seen(n, false);
  std::vector<CosetSet> out;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    auto c = coset(q, n, a);
    for (auto x : c.elems()) seen[x] = true;
    out.push_back(std::move(c));
  }
  return out;
}

namespace detail {

inline void require_same_modulus(const CosetSet& a, const CosetSet& b) {
  if (a.q() != b.q() || a.n() != b.n()) fail(Errc::ModulusMismatch, "coset sets over different (q, n)");
}

}  // namespace detail

// {a + b mod n}
inline CosetSet coset_sum(const CosetSet& a, const CosetSet& b) {
  detail::require_same_modulus(a, b);
  const auto n = a.n();
  std::vector<bool> hit(n, false);
  for (auto x : a.elems())
    for (auto y : b.elems()) hit[(x + y) % n] = true;
  std::vector<std::uint32_t> out;
  for (std::uint32_t t = 0; t < n; ++t)
    if (hit[t]) out.push_back(t);
  return CosetSet(a.q(), n, std::move(out));
}

inline CosetSet coset_union(const CosetSet& a, const CosetSet& b) {
  detail::require_same_modulus(a, b);
  auto all = a.elems();
  all.insert(all.end(), b.elems().begin(), b.elems().end());
  return CosetSet(a.q(), a.n(), std::move(all));
}

// {-a mod n}
inline CosetSet negate(const CosetSet& a) {
  std::vector<std::uint32_t> out;
  for (auto x : a.elems()) out.push_back((a.n() - x) % a.n());
  return CosetSet(a.q(), a.n(), std::move(out));
}

inline CosetSet complement(const CosetSet& a) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t t = 0; t < a.n(); ++t)
    if (!a.contains(t)) out.push_back(t);
  return CosetSet(a.q(), a.n(), std::move(out));
}

// Length of the shortest cyclic window {c, ..., c+i-1} containing the set.
inline std::uint32_t amplitude(const CosetSet& s) {
  if (s.empty()) fail(Errc::EmptySet, "amplitude of the empty set");
  const auto& e = s.elems();
  const auto n = s.n();
  std::uint32_t max_gap = e.front() + n - e.back();
  for (std::size_t i = 1; i < e.size(); ++i) max_gap = std::max(max_gap, e[i] - e[i - 1]);
  return n - max_gap + 1;
}

// Upper bound max(I) + 1 on the amplitude.
inline std::uint32_t max_element_amplitude(const CosetSet& s) {
  if (s.empty()) fail(Errc::EmptySet, "amplitude of the empty set");
  return s.elems().back() + 1;
}

// Size of the largest cyclic run {i, i+1, ..., i+t-1} inside the set.
inline std::uint32_t longest_run(const CosetSet& s) {
  const auto n = s.n();
  if (s.size() == n) return n;
  std::uint32_t start = 0;
  while (s.contains(start)) ++start;  // a gap exists, so runs never wrap past it
  std::uint32_t best = 0, cur = 0;
  for (std::uint32_t k = 1; k <= n; ++k) {
    if (s.contains((start + k) % n)) {
      best = std::max(best, ++cur);
    } else {
      cur = 0;
    }
  }
  return best;
}

// n - Amp(I) + 1
inline std::uint64_t bch_bound(const CosetSet& s) { return s.n() - amplitude(s) + 1; }

// ---- cyclic code handles --------------------------------------------------

class CyclicCode {
 public:
  CyclicCode(FieldPtr base, CosetSet generating) : state_(std::make_shared<State>()) {
    if (generating.q() != base->size())
      fail(Errc::ModulusMismatch, "generating set is over q=" + std::to_string(generating.q()) + ", field is " +
                                      base->name());
    if (!generating.is_closed()) fail(Errc::NotCosetClosed, "generating set is not a union of cyclotomic cosets");
    state_->root = nth_root_of_unity(base, generating.n());
    state_->generating = std::move(generating);
    state_->defining = complement(state_->generating);
    const auto& I = state_->generating;
    const auto& J = state_->defining;

    // g = prod over cosets of J of the coset's minimal polynomial.
    Poly g{1};
    std::vector<bool> seen(I.n(), false);
    for (auto a : J.elems()) {
      if (seen[a]) continue;
      auto c = coset(I.q(), I.n(), a);
      for (auto x : c.elems()) seen[x] = true;
      auto mp = minimal_polynomial(state_->root, a);
      if (mp.size() != c.size() + 1) fail(Errc::DescentFailed, "minimal polynomial degree differs from coset size");
      g = poly_mul(*base, g, mp);
    }
    if (g.size() != J.size() + 1) fail(Errc::DescentFailed, "generator polynomial degree differs from |J|");
    state_->generator = std::move(g);
  }

  const FieldPtr& field() const noexcept { return state_->root.base(); }
  std::uint32_t length() const noexcept { return state_->generating.n(); }
  std::size_t dimension() const noexcept { return state_->generating.size(); }
  const CosetSet& generating_set() const noexcept { return state_->generating; }
  const CosetSet& defining_set() const noexcept { return state_->defining; }
  const Poly& generator_polynomial() const noexcept { return state_->generator; }
  const RootOfUnity& root() const noexcept { return state_->root; }

  // n - Amp(I) + 1; 0 for the zero code.
  std::uint64_t designed_distance() const {
    return state_->generating.empty() ? 0 : bch_bound(state_->generating);
  }

  // Rows x^i g(x), i < |I|; built once and shared between copies.
  const LinearCode& code() const {
    std::call_once(state_->once, [this] {
      const auto n = length();
      const auto& g = state_->generator;
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < dimension(); ++i) {
        Vector v(n, 0);
        for (std::size_t t = 0; t < g.size(); ++t) v[i + t] = g[t];
        rows.push_back(std::move(v));
      }
      state_->code = LinearCode::from_generators(field(), n, rows);
    });
    return state_->code;
  }

 private:
  struct State {
    RootOfUnity root;
    CosetSet generating;
    CosetSet defining;
    Poly generator;
    std::once_flag once;
    LinearCode code;
  };
  std::shared_ptr<State> state_;
};

inline CyclicCode cyclic_code(const FieldPtr& base, const CosetSet& generating) {
  return CyclicCode(base, generating);
}

inline CyclicCode cyclic_code(std::uint64_t q, std::uint32_t n, const CosetSet& generating) {
  if (generating.q() != q || generating.n() != n) fail(Errc::ModulusMismatch, "generating set over other (q, n)");
  return CyclicCode(make_field_of_size(q), generating);
}

// C(I)^⊥ = C(-J)
inline CyclicCode cyclic_dual(const CyclicCode& h) { return CyclicCode(h.field(), negate(h.defining_set())); }

// C(I1) * C(I2) = C(I1 + I2)
inline CyclicCode cyclic_product(const CyclicCode& a, const CyclicCode& b) {
  if (!same_field(a.field(), b.field())) fail(Errc::ModulusMismatch, "cyclic codes over different fields");
  return CyclicCode(a.field(), coset_sum(a.generating_set(), b.generating_set()));
}

// C(I1) + C(I2) = C(I1 ∪ I2)
inline CyclicCode cyclic_sum(const CyclicCode& a, const CyclicCode& b) {
  if (!same_field(a.field(), b.field())) fail(Errc::ModulusMismatch, "cyclic codes over different fields");
  return CyclicCode(a.field(), coset_union(a.generating_set(), b.generating_set()));
}

// ---- s-restricted weights -------------------------------------------------

struct RestrictedWeightConfig {
  std::uint32_t q = 2;
  std::uint32_t r = 1;
  std::uint32_t s = 1;
  std::uint32_t m = 0;

  std::uint32_t modulus() const {
    const auto n = detail::checked_pow(q, r, std::uint64_t{1} << 31);
    if (n > (std::uint64_t{1} << 31)) fail(Errc::OutOfRange, "q^r too large");
    return static_cast<std::uint32_t>(n - 1);
  }

  void validate() const {
    if (q < 2 || !detail::split_prime_power(q)) fail(Errc::InvalidArgument, "q must be a prime power");
    if (s < 1 || s > r) fail(Errc::InvalidArgument, "require 1 <= s <= r");
    if (m > s * (q - 1)) fail(Errc::InvalidArgument, "require m <= s(q-1)");
  }
};

// max over the r cyclic windows of length s of the q-ary digit sums of t.
inline std::uint32_t restricted_weight(const RestrictedWeightConfig& cfg, std::uint64_t t) {
  cfg.validate();
  if (t + 1 > cfg.modulus()) fail(Errc::OutOfRange, "t must lie in [0, q^r - 2]");
  std::vector<std::uint32_t> digits(cfg.r);
  for (auto& d : digits) {
    d = static_cast<std::uint32_t>(t % cfg.q);
    t /= cfg.q;
  }
  std::uint32_t best = 0;
  for (std::uint32_t i = 0; i < cfg.r; ++i) {
    std::uint32_t w = 0;
    for (std::uint32_t j = 0; j < cfg.s; ++j) w += digits[(i + j) % cfg.r];
    best = std::max(best, w);
  }
  return best;
}

// W_{r,s,m} = {t : w^(s)(t) <= m} as a subset of Z/(q^r - 1)Z.
inline CosetSet restricted_weight_set(const RestrictedWeightConfig& cfg) {
  cfg.validate();
  const auto n = cfg.modulus();
  std::vector<std::uint32_t> out;
  for (std::uint32_t t = 0; t < n; ++t)
    if (restricted_weight(cfg, t) <= cfg.m) out.push_back(t);
  return CosetSet(cfg.q, n, std::move(out));
}

// Dual distance bound from the consecutive run in W. For q = 2 the run must
// be exactly {0, ..., 2^(m+1) - 2}, giving 2^(m+1). A full W has the zero code
// as dual and yields an infinite distance.
inline DistanceValue dual_distance_bound_W(const RestrictedWeightConfig& cfg) {
  const auto w = restricted_weight_set(cfg);
  if (w.size() == w.n()) return DistanceValue::none();
  const auto run = longest_run(w);
  if (cfg.q == 2) {
    const std::uint64_t expected = (std::uint64_t{1} << (cfg.m + 1)) - 1;
    bool ok = run == expected && !w.contains(w.n() - 1);
    for (std::uint64_t t = 0; ok && t < expected; ++t) ok = w.contains(static_cast<std::uint32_t>(t));
    if (!ok)
      fail(Errc::RunMismatch, "largest run in W has length " + std::to_string(run) + ", expected " +
                                  std::to_string(expected));
  }
  return DistanceValue::lower_bound(run + 1);
}

// ---- evaluation-code description -------------------------------------------

// B(M) = span{ev_beta(X^i) : i in M} over the extension, ev_beta(f) = (f(beta^k))_k.
inline LinearCode eval_code_oracle(const RootOfUnity& root, const CosetSet& exponents) {
  if (exponents.n() != root.n) fail(Errc::ModulusMismatch, "exponent set modulus differs from root order");
  const auto& F = *root.ext();
  std::vector<Vector> rows;
  for (auto i : exponents.elems()) {
    Vector v(root.n);
    const auto bi = root.power(i);
    Elem x = 1;
    for (std::uint32_t k = 0; k < root.n; ++k) {
      v[k] = x;
      x = F.mul(x, bi);
    }
    rows.push_back(std::move(v));
  }
  return LinearCode::from_generators(root.ext(), root.n, rows);
}

// Vectors over the base field lying in `code`: every parity check of the
// extension code is expanded in the base-field basis of the extension.
inline LinearCode subfield_subcode(const LinearCode& code, const ExtensionEmbedding& emb) {
  if (!same_field(code.field(), emb.ext())) fail(Errc::NoEmbedding, "code is not over the embedding's extension");
  const auto checks = dual(code);
  const auto n = code.length();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < checks.dimension(); ++i) {
    std::vector<Vector> expanded(emb.degree(), Vector(n));
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = emb.coordinates(checks.generator()(i, j));
      for (std::uint32_t t = 0; t < emb.degree(); ++t) expanded[t][j] = c[t];
    }
    for (auto& v : expanded) rows.push_back(std::move(v));
  }
  return dual(LinearCode::from_generators(emb.base(), n, rows));
}

}  // namespace schurmp
