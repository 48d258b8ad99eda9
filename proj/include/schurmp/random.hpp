#pragma once

// Seeded random codes, chains and coset-closed sets for property suites.

#include <cstdint>
#include <random>
#include <vector>

#include "schurmp/cyclic.hpp"
#include "schurmp/linear_code.hpp"

namespace schurmp {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t bound) { return bound ? rng() % bound : 0; }

// Uniform in [lo, hi].
inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) { return lo + uniform(rng, hi - lo + 1); }

inline Vector random_vector(const FiniteField& f, std::size_t n, Rng& rng) {
  Vector v(n);
  for (auto& x : v) x = static_cast<Elem>(uniform(rng, f.size()));
  return v;
}

// Code of dimension exactly k.
inline LinearCode random_code(const FieldPtr& field, std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) fail(Errc::InvalidArgument, "dimension exceeds length");
  RowEchelon e(field, n);
  while (e.rank() < k) e.insert(random_vector(*field, n, rng));
  return LinearCode::from_echelon(e);
}

// Subcode of dimension exactly k.
inline LinearCode random_subcode(const LinearCode& c, std::size_t k, Rng& rng) {
  if (k > c.dimension()) fail(Errc::InvalidArgument, "subcode dimension exceeds code dimension");
  RowEchelon e(c.field(), c.length());
  while (e.rank() < k) e.insert(c.encode(random_vector(*c.field(), c.dimension(), rng)));
  return LinearCode::from_echelon(e);
}

// C_1 ⊇ C_2 ⊇ ... with the given non-increasing dimensions.
inline std::vector<LinearCode> random_nested_chain(const FieldPtr& field, std::size_t n,
                                                   const std::vector<std::size_t>& dims, Rng& rng) {
  std::vector<LinearCode> out;
  for (std::size_t i = 0; i < dims.size(); ++i)
    out.push_back(i == 0 ? random_code(field, n, dims[0], rng) : random_subcode(out.back(), dims[i], rng));
  return out;
}

// Union of a random subset of the cyclotomic cosets.
inline CosetSet random_coset_closed(std::uint64_t q, std::uint32_t n, Rng& rng) {
  std::vector<std::uint32_t> elems;
  for (const auto& c : cyclotomic_cosets(q, n))
    if (rng() & 1) elems.insert(elems.end(), c.elems().begin(), c.elems().end());
  return CosetSet(q, n, std::move(elems));
}

// Full-rank s x l matrix.
inline Matrix random_full_rank(const FieldPtr& field, std::size_t s, std::size_t l, Rng& rng) {
  for (;;) {
    Matrix a(field, s, l);
    for (std::size_t i = 0; i < s; ++i) {
      const auto v = random_vector(*field, l, rng);
      std::copy(v.begin(), v.end(), a.row(i).begin());
    }
    if (a.rank() == s) return a;
  }
}

}  // namespace schurmp
