#pragma once

// Finite fields GF(p^m) with log/antilog tables, subfield embeddings and
// roots of unity.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schurmp/error.hpp"

namespace schurmp {

// Field elements are encoded as integers sum_i c_i p^i, where c_i are the
// coefficients of the polynomial-basis representation. 0 and 1 are the
// additive and multiplicative identities in every field.
using Elem = std::uint32_t;

// Polynomial over a finite field, lowest degree first.
using Poly = std::vector<Elem>;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Splits q = p^m; returns nullopt when q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> split_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = prime_factors(q);
  if (f.size() != 1) return std::nullopt;
  std::uint32_t m = 0;
  while (q > 1) {
    q /= f[0];
    ++m;
  }
  return std::make_pair(static_cast<std::uint32_t>(f[0]), m);
}

// Polynomials over Z/p used for the irreducibility test.
namespace zp {

using P = std::vector<std::uint32_t>;

inline void trim(P& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

inline P mod(P a, const P& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * f[i] % p) % p);
    trim(a);
  }
  return a;
}

inline P mulmod(const P& a, const P& b, const P& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return mod(std::move(r), f, p);
}

inline P powmod(P base, std::uint64_t e, const P& f, std::uint32_t p) {
  P r{1};
  base = mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline P sub(P a, const P& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline P gcd(P a, P b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    P r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace zp

// Rabin's test for a monic polynomial over Z/p.
inline bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  zp::P g(f.begin(), f.end());
  zp::trim(g);
  if (g.size() < 2) return false;
  const std::size_t m = g.size() - 1;
  if (m == 1) return true;
  const zp::P x{0, 1};
  std::vector<zp::P> frob(m + 1);  // frob[i] = x^(p^i) mod f
  frob[0] = x;
  for (std::size_t i = 1; i <= m; ++i) frob[i] = zp::powmod(frob[i - 1], p, g, p);
  if (!zp::sub(frob[m], x, p).empty()) return false;
  for (auto l : prime_factors(m)) {
    auto d = zp::gcd(zp::sub(frob[m / l], x, p), g, p);
    if (d.size() > 1) return false;
  }
  return true;
}

}  // namespace detail

class FiniteField {
 public:
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 22;

  // `modulus` holds the coefficients c_0..c_m of a monic irreducible
  // polynomial over GF(p). When `primitive` is empty the smallest encoding of
  // multiplicative order p^m - 1 is chosen.
  FiniteField(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
              std::optional<Elem> primitive = std::nullopt)
      : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!detail::is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m == 0) fail(Errc::DegreeZero, "extension degree must be at least 1");
    const auto size = detail::checked_pow(p, m, kMaxSize);
    if (size > kMaxSize) fail(Errc::FieldTooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
    size_ = static_cast<std::uint32_t>(size);
    if (modulus_.size() != m + 1 || modulus_.back() != 1 ||
        std::any_of(modulus_.begin(), modulus_.end(), [p](std::uint32_t c) { return c >= p; }))
      fail(Errc::InvalidArgument, "modulus must be monic of degree m with coefficients in [0,p)");
    if (!detail::is_irreducible(modulus_, p)) fail(Errc::NotIrreducible, "modulus is reducible over GF(p)");
    pow_p_.resize(m + 1);
    pow_p_[0] = 1;
    for (std::uint32_t i = 1; i <= m; ++i) pow_p_[i] = pow_p_[i - 1] * p;

    if (primitive) {
      if (*primitive >= size_ || !has_full_order(*primitive))
        fail(Errc::NotPrimitive, "element " + std::to_string(*primitive) + " is not primitive");
      primitive_ = *primitive;
    } else {
      primitive_ = 1;
      while (!has_full_order(primitive_)) ++primitive_;
    }
    build_tables();
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t size() const noexcept { return size_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Elem primitive() const noexcept { return primitive_; }

  std::string name() const { return "GF(" + std::to_string(size_) + ")"; }

  Elem add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return static_cast<Elem>((std::uint64_t{a} + b) % p_);
    Elem r = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
      r += ((a % p_ + b % p_) % p_) * pow_p_[i];
      a /= p_;
      b /= p_;
    }
    return r;
  }

  Elem neg(Elem a) const noexcept {
    if (p_ == 2) return a;
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    Elem r = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
      r += ((p_ - a % p_) % p_) * pow_p_[i];
      a /= p_;
    }
    return r;
  }

  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  Elem inv(Elem a) const {
    if (a == 0) fail(Errc::InvalidArgument, "inverse of zero");
    return exp_[(size_ - 1) - log_[a]];
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const noexcept {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[(std::uint64_t{log_[a]} * (e % (size_ - 1))) % (size_ - 1)];
  }

  // primitive^k
  Elem exp(std::uint64_t k) const noexcept { return exp_[k % (size_ - 1)]; }

  std::uint32_t log(Elem a) const {
    if (a == 0) fail(Errc::InvalidArgument, "logarithm of zero");
    return log_[a];
  }

  // Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  std::uint32_t digit(Elem e, std::uint32_t i) const noexcept { return (e / pow_p_[i]) % p_; }

  // Multiplicative order of a nonzero element.
  std::uint64_t order(Elem a) const {
    const std::uint64_t n = size_ - 1;
    return n / std::gcd<std::uint64_t>(n, log(a));
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_ && a.primitive_ == b.primitive_;
  }

 private:
  Elem slow_mul(Elem a, Elem b) const {
    if (m_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
      const auto ai = digit(a, i);
      if (!ai) continue;
      for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ai} * digit(b, j)) % p_;
    }
    for (std::size_t d = prod.size(); d-- > m_;) {
      const auto c = prod[d];
      if (!c) continue;
      for (std::uint32_t i = 0; i <= m_; ++i)
        prod[d - m_ + i] = (prod[d - m_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
    Elem r = 0;
    for (std::uint32_t i = 0; i < m_; ++i) r += static_cast<Elem>(prod[i]) * pow_p_[i];
    return r;
  }

  Elem slow_pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }

  bool has_full_order(Elem g) const {
    if (g == 0) return false;
    const std::uint64_t n = size_ - 1;
    if (slow_pow(g, n) != 1) return false;
    for (auto l : detail::prime_factors(n))
      if (slow_pow(g, n / l) == 1) return false;
    return true;
  }

  void build_tables() {
    const std::uint32_t n = size_ - 1;
    exp_.assign(2 * static_cast<std::size_t>(n) + 1, 0);
    log_.assign(size_, 0);
    Elem e = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = e;
      log_[e] = i;
      e = slow_mul(e, primitive_);
    }
    for (std::size_t i = n; i < exp_.size(); ++i) exp_[i] = exp_[i - n];
  }

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t size_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem primitive_ = 1;
  std::vector<Elem> pow_p_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

inline bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && *a == *b); }

namespace detail {

inline std::optional<std::vector<std::uint32_t>> table_modulus(std::uint32_t p, std::uint32_t m) {
  if (m == 1) return std::vector<std::uint32_t>{0, 1};
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {{2, 10}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 12}, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{7, 2}, {3, 6, 1}},
  };
  auto it = table.find({p, m});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

// Smallest monic irreducible of degree m, ordering lower coefficients as
// the integer sum c_i p^i.
inline std::vector<std::uint32_t> search_modulus(std::uint32_t p, std::uint32_t m) {
  const std::uint64_t count = checked_pow(p, m, FiniteField::kMaxSize);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> f(m + 1, 0);
    f[m] = 1;
    auto c = code;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (f[0] != 0 && is_irreducible(f, p)) return f;
  }
  fail(Errc::NotIrreducible, "no irreducible polynomial found");
}

}  // namespace detail

// Deterministic field for (p, m): built-in modulus table first, then search.
// Results are cached and shared.
inline FieldPtr make_field(std::uint32_t p, std::uint32_t m) {
  if (!detail::is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) fail(Errc::DegreeZero, "extension degree must be at least 1");
  if (detail::checked_pow(p, m, FiniteField::kMaxSize) > FiniteField::kMaxSize)
    fail(Errc::FieldTooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, m}];
  if (!slot) {
    auto modulus = detail::table_modulus(p, m);
    slot = std::make_shared<const FiniteField>(p, m, modulus ? *modulus : detail::search_modulus(p, m));
  }
  return slot;
}

inline FieldPtr make_field_of_size(std::uint64_t q) {
  auto pm = detail::split_prime_power(q);
  if (!pm) fail(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  return make_field(pm->first, pm->second);
}

// ---- polynomial helpers over an arbitrary field --------------------------

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul(const FiniteField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  poly_trim(r);
  return r;
}

inline Elem poly_eval(const FiniteField& f, const Poly& a, Elem x) {
  Elem r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

// ---- subfield embeddings --------------------------------------------------

// GF(q) inside GF(q^r), with the basis 1, g, ..., g^{r-1} where g is the
// primitive element of the extension.
class ExtensionEmbedding {
 public:
  static constexpr Elem kNotInBase = ~Elem{0};

  ExtensionEmbedding(FieldPtr base, FieldPtr ext) : base_(std::move(base)), ext_(std::move(ext)) {
    if (base_->characteristic() != ext_->characteristic() || ext_->degree() % base_->degree() != 0)
      fail(Errc::NoEmbedding, base_->name() + " does not embed in " + ext_->name());
    degree_ = ext_->degree() / base_->degree();
    const auto& F = *ext_;

    // A root of the base modulus in the extension is the image of the base
    // polynomial generator.
    const auto& bm = base_->modulus();
    Elem root = 0;
    for (;; ++root) {
      Elem acc = 0;
      for (std::size_t i = bm.size(); i-- > 0;) acc = F.add(F.mul(acc, root), bm[i]);
      if (acc == 0) break;
      if (root + 1 == F.size()) fail(Errc::NoEmbedding, "base modulus has no root in extension");
    }

    const std::uint32_t q = base_->size();
    embed_.resize(q);
    project_.assign(F.size(), kNotInBase);
    for (Elem b = 0; b < q; ++b) {
      Elem acc = 0, rp = 1;
      for (std::uint32_t i = 0; i < base_->degree(); ++i) {
        acc = F.add(acc, F.mul(base_->digit(b, i), rp));
        rp = F.mul(rp, root);
      }
      embed_[b] = acc;
      if (project_[acc] != kNotInBase) fail(Errc::NoEmbedding, "embedding is not injective");
      project_[acc] = b;
    }

    basis_.resize(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) basis_[i] = F.exp(i);

    // Packed coordinates sum_i c_i q^i for every extension element.
    coord_index_.assign(F.size(), kNotInBase);
    std::vector<Elem> c(degree_, 0);
    for (std::uint32_t idx = 0; idx < F.size(); ++idx) {
      auto t = idx;
      for (std::uint32_t i = 0; i < degree_; ++i) {
        c[i] = t % q;
        t /= q;
      }
      const Elem x = reconstruct(c);
      if (coord_index_[x] != kNotInBase) fail(Errc::NoEmbedding, "basis is not linearly independent");
      coord_index_[x] = idx;
    }
  }

  const FieldPtr& base() const noexcept { return base_; }
  const FieldPtr& ext() const noexcept { return ext_; }
  std::uint32_t degree() const noexcept { return degree_; }
  const std::vector<Elem>& basis() const noexcept { return basis_; }

  Elem embed(Elem b) const { return embed_.at(b); }

  std::optional<Elem> project(Elem e) const {
    auto b = project_.at(e);
    if (b == kNotInBase) return std::nullopt;
    return b;
  }

  std::vector<Elem> coordinates(Elem e) const {
    auto idx = coord_index_.at(e);
    std::vector<Elem> c(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) {
      c[i] = idx % base_->size();
      idx /= base_->size();
    }
    return c;
  }

  Elem reconstruct(std::span<const Elem> coords) const {
    const auto& F = *ext_;
    Elem acc = 0;
    for (std::uint32_t i = 0; i < degree_; ++i) acc = F.add(acc, F.mul(embed(coords[i]), basis_[i]));
    return acc;
  }

 private:
  FieldPtr base_;
  FieldPtr ext_;
  std::uint32_t degree_ = 1;
  std::vector<Elem> embed_;
  std::vector<Elem> project_;
  std::vector<Elem> basis_;
  std::vector<std::uint32_t> coord_index_;
};

using EmbeddingPtr = std::shared_ptr<const ExtensionEmbedding>;

struct RootOfUnity {
  EmbeddingPtr embedding;
  std::uint32_t n = 1;
  std::uint32_t r = 1;  // extension degree over the base field
  Elem beta = 1;

  const FieldPtr& base() const { return embedding->base(); }
  const FieldPtr& ext() const { return embedding->ext(); }
  Elem power(std::uint64_t k) const { return ext()->pow(beta, k % n); }
};

// Multiplicative order of q modulo n.
inline std::uint32_t order_mod(std::uint64_t q, std::uint32_t n) {
  if (n == 1) return 1;
  std::uint64_t x = q % n;
  std::uint32_t r = 1;
  while (x != 1) {
    x = x * (q % n) % n;
    ++r;
    if (r > n) fail(Errc::GcdNotOne, "q is not invertible modulo n");
  }
  return r;
}

// beta = g^((q^r - 1)/n) in GF(q^r), r minimal with n | q^r - 1.
inline RootOfUnity nth_root_of_unity(const FieldPtr& base, std::uint32_t n) {
  if (n == 0) fail(Errc::InvalidArgument, "n must be positive");
  if (std::gcd<std::uint64_t>(n, base->size()) != 1)
    fail(Errc::GcdNotOne, "gcd(" + std::to_string(n) + ", " + std::to_string(base->size()) + ") != 1");
  const auto r = order_mod(base->size(), n);
  auto ext = make_field(base->characteristic(), base->degree() * r);
  RootOfUnity out;
  out.embedding = std::make_shared<const ExtensionEmbedding>(base, ext);
  out.n = n;
  out.r = r;
  out.beta = ext->exp((ext->size() - 1) / n);
  return out;
}

// Monic minimal polynomial over the base field of an extension element,
// built as the product over its Frobenius orbit.
inline Poly minimal_polynomial(const ExtensionEmbedding& emb, Elem e) {
  const auto& F = *emb.ext();
  const auto q = emb.base()->size();
  std::vector<Elem> orbit{e};
  for (Elem x = F.pow(e, q); x != e; x = F.pow(x, q)) orbit.push_back(x);
  Poly prod{1};
  for (auto root : orbit) prod = poly_mul(F, prod, Poly{F.neg(root), 1});
  Poly out(prod.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    auto b = emb.project(prod[i]);
    if (!b) fail(Errc::DescentFailed, "minimal polynomial coefficient outside the base field");
    out[i] = *b;
  }
  return out;
}

inline Poly minimal_polynomial(const RootOfUnity& root, std::uint32_t exponent) {
  return minimal_polynomial(*root.embedding, root.power(exponent));
}

}  // namespace schurmp
