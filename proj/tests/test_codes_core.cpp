#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "schurmp/linear_code.hpp"
#include "schurmp/random.hpp"

using namespace schurmp;

namespace {

void expect_errc(Errc want, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << errc_name(want);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), want) << e.what();
  }
}

LinearCode hamming7() {
  // Generator of the binary cyclic code with g = 1 + x + x^3.
  const auto f = make_field(2, 1);
  std::vector<Vector> rows;
  for (int i = 0; i < 4; ++i) {
    Vector v(7, 0);
    v[i] = v[i + 1] = v[i + 3] = 1;
    rows.push_back(v);
  }
  return LinearCode::from_generators(f, 7, rows);
}

LinearCode repetition(const FieldPtr& f, std::size_t n) { return LinearCode::from_generators(f, n, {Vector(n, 1)}); }

std::vector<Vector> rows_of(const LinearCode& c) { return c.generator().to_rows(); }

}  // namespace

TEST(FromGenerators, Examples) {
  const auto f = make_field(2, 1);
  EXPECT_EQ(LinearCode::from_generators(f, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}).dimension(), 2u);
  EXPECT_EQ(LinearCode::zero(f, 5).dimension(), 0u);
  EXPECT_EQ(LinearCode::from_generators(f, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), LinearCode::full(f, 3));
}

TEST(FromGenerators, Preconditions) {
  const auto f = make_field(2, 1);
  expect_errc(Errc::LengthMismatch, [&] { LinearCode::from_generators(f, 3, {{1, 0}}); });
  expect_errc(Errc::FieldMismatch, [&] { LinearCode::from_generators(f, 2, {{1, 2}}); });
  expect_errc(Errc::LengthMismatch,
              [&] { sum(LinearCode::full(f, 2), LinearCode::full(f, 3)); });
  expect_errc(Errc::FieldMismatch,
              [&] { schur_product(LinearCode::full(f, 2), LinearCode::full(make_field(3, 1), 2)); });
}

TEST(FromGenerators, CanonicalFormIsBasisIndependent) {
  Rng rng(3);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 30; ++t) {
      const auto c = random_code(f, 8, uniform(rng, 0, 8), rng);
      std::vector<Vector> other;
      for (std::size_t i = 0; i < c.dimension() + 2; ++i) other.push_back(c.encode(random_vector(*f, c.dimension(), rng)));
      const auto d = LinearCode::from_generators(f, 8, other);
      if (d.dimension() == c.dimension()) EXPECT_EQ(d, c);
      EXPECT_TRUE(c.contains(d));
    }
  }
}

TEST(Matrix, RrefIdempotentAndRankBounded) {
  Rng rng(5);
  for (std::uint32_t q : {2u, 3u, 7u, 16u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 20; ++t) {
      const std::size_t r = uniform(rng, 1, 6), c = uniform(rng, 1, 6);
      Matrix m(f, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(uniform(rng, q));
      EXPECT_EQ(m.rref().rref(), m.rref());
      EXPECT_LE(m.rank(), std::min(r, c));
    }
  }
}

TEST(Matrix, InverseRoundTrip) {
  Rng rng(6);
  for (std::uint32_t q : {2u, 3u, 9u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 20; ++t) {
      const auto a = random_full_rank(f, 4, 4, rng);
      EXPECT_EQ(a * a.inverse(), Matrix::identity(f, 4));
    }
  }
  Matrix singular(make_field(2, 1), 2, 2);
  expect_errc(Errc::Singular, [&] { singular.inverse(); });
  expect_errc(Errc::NotSquare, [&] { Matrix(make_field(2, 1), 2, 3).inverse(); });
}

TEST(Sum, Examples) {
  const auto f = make_field(2, 1);
  const auto h = hamming7();
  EXPECT_EQ(sum(h, h), h);
  EXPECT_EQ(sum(h, LinearCode::zero(f, 7)), h);
  const auto a = LinearCode::from_generators(f, 3, {{1, 0, 0}}), b = LinearCode::from_generators(f, 3, {{0, 1, 0}});
  EXPECT_EQ(sum(a, b), LinearCode::from_generators(f, 3, {{1, 0, 0}, {0, 1, 0}}));
}

TEST(Dual, Examples) {
  const auto f = make_field(2, 1);
  EXPECT_EQ(dual(LinearCode::full(f, 4)).dimension(), 0u);
  const auto even = dual(repetition(f, 4));
  EXPECT_EQ(even.dimension(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(hamming_weight(even.basis_row(i)) % 2, 0u);
}

TEST(Dual, InvolutionAndOrthogonality) {
  Rng rng(12);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 40; ++t) {
      const auto c = random_code(f, 12, q == 2 ? 5 : uniform(rng, 0, 12), rng);
      const auto d = dual(c);
      EXPECT_EQ(c.dimension() + d.dimension(), 12u);
      EXPECT_EQ(dual(d), c);
      for (std::size_t i = 0; i < c.dimension(); ++i)
        for (std::size_t j = 0; j < d.dimension(); ++j) {
          Elem ip = 0;
          for (std::size_t k = 0; k < 12; ++k) ip = f->add(ip, f->mul(c.basis_row(i)[k], d.basis_row(j)[k]));
          EXPECT_EQ(ip, 0u);
        }
    }
  }
}

TEST(Schur, HammingSquareIsFullSpace) {
  EXPECT_EQ(schur_square(hamming7()).dimension(), 7u);
}

TEST(Schur, ZeroAnnihilates) {
  const auto f = make_field(3, 1);
  EXPECT_EQ(schur_product(LinearCode::zero(f, 5), LinearCode::full(f, 5)).dimension(), 0u);
}

TEST(Schur, MatchesEnumeratedSpan) {
  Rng rng(21);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 15; ++t) {
      const std::size_t n = uniform(rng, 2, 5);
      const auto a = random_code(f, n, uniform(rng, 0, std::min<std::size_t>(n, 3)), rng);
      const auto b = random_code(f, n, uniform(rng, 0, std::min<std::size_t>(n, 3)), rng);
      const auto words = oracle::span(*f, n, oracle::pairwise_products(*f, rows_of(a), rows_of(b)));
      const auto p = schur_product(a, b);
      EXPECT_EQ(words.size(), static_cast<std::size_t>(std::pow(q, p.dimension())));
      EXPECT_EQ(words, oracle::span(*f, n, rows_of(p)));
    }
  }
}

TEST(SchurProperty, DimensionRange) {
  Rng rng(31);
  const auto f = make_field(2, 1);
  for (int t = 0; t < 100; ++t) {
    const auto c = random_code(f, 10, 4, rng);
    const auto k2 = schur_square(c).dimension();
    EXPECT_GE(k2, 4u);
    EXPECT_LE(k2, 10u);
  }
}

TEST(SchurProperty, CommutativeMonotoneDistributive) {
  Rng rng(32);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = uniform(rng, 3, 9);
      const auto c = random_code(f, n, uniform(rng, 0, n), rng);
      const auto sub = random_subcode(c, uniform(rng, 0, c.dimension()), rng);
      const auto d = random_code(f, n, uniform(rng, 0, n), rng);
      const auto e = random_code(f, n, uniform(rng, 0, n), rng);
      EXPECT_EQ(schur_product(c, d), schur_product(d, c));
      EXPECT_TRUE(schur_product(c, d).contains(schur_product(sub, d)));
      EXPECT_EQ(schur_product(sum(c, e), d), sum(schur_product(c, d), schur_product(e, d)));
    }
  }
}

TEST(SchurProperty, SquareDistanceAtMostDistance) {
  Rng rng(33);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = uniform(rng, 3, 10);
      const auto c = random_code(f, n, uniform(rng, 1, std::min<std::size_t>(n, q == 2 ? 8 : 4)), rng);
      EXPECT_LE(min_distance_exact(schur_square(c)), min_distance_exact(c));
    }
  }
}

TEST(Singleton, Examples) {
  EXPECT_EQ(singleton_square_bound(10, 3), 6);
  EXPECT_EQ(singleton_square_bound(10, 6), 1);
  expect_errc(Errc::InvalidArgument, [] { singleton_square_bound(3, 0); });
}

TEST(SingletonProperty, SquareDistanceBelowBound) {
  Rng rng(34);
  const auto f = make_field(2, 1);
  for (int t = 0; t < 100; ++t) {
    const auto c = random_code(f, 10, 3, rng);
    EXPECT_LE(min_distance_exact(schur_square(c)), 6u);
  }
}

TEST(MinDistance, Examples) {
  EXPECT_EQ(min_distance_exact(hamming7()), 3u);
  for (std::uint32_t q : {2u, 3u, 5u, 8u}) {
    const auto f = make_field_of_size(q);
    EXPECT_EQ(min_distance_exact(repetition(f, 6)), 6u);
    EXPECT_EQ(min_distance_exact(LinearCode::full(f, 4)), 1u);
  }
}

TEST(MinDistance, MatchesEnumeration) {
  Rng rng(41);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = uniform(rng, 2, 9);
      const std::size_t kmax = q == 2 ? 8 : q <= 5 ? 4 : 3;
      const auto c = random_code(f, n, uniform(rng, 1, std::min(n, kmax)), rng);
      EXPECT_EQ(min_distance_exact(c), oracle::min_weight(oracle::span(*f, n, rows_of(c))));
    }
  }
}

TEST(MinDistance, BinaryWideCode) {
  // Length > 64 exercises multi-word packing.
  Rng rng(42);
  const auto f = make_field(2, 1);
  const auto c = random_code(f, 150, 10, rng);
  EXPECT_EQ(min_distance_exact(c), oracle::min_weight(oracle::span(*f, 150, rows_of(c))));
}

TEST(MinDistance, BudgetAndFlags) {
  const auto f = make_field(2, 1);
  const auto h = hamming7();
  expect_errc(Errc::BudgetExceeded, [&] { min_distance_exact(h, 8); });
  expect_errc(Errc::InvalidArgument, [&] { min_distance_exact(LinearCode::zero(f, 3)); });
  EXPECT_EQ(min_distance(h, 8), DistanceValue::lower_bound(1));
  EXPECT_EQ(min_distance(h), DistanceValue::exact_value(3));
  EXPECT_TRUE(min_distance(LinearCode::zero(f, 3)).infinite);
  EXPECT_EQ(to_string(min_distance(h, 8)), ">=1");
}

TEST(SchurProperty, MinimumWeightWitnessInSquare) {
  // c * c has the support of c, so every minimum-weight word of C gives a
  // word of the same weight in the square.
  Rng rng(35);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = uniform(rng, 3, 8);
      const auto c = random_code(f, n, uniform(rng, 1, std::min<std::size_t>(n, 3)), rng);
      const auto sq = schur_square(c);
      const auto d = min_distance_exact(c);
      for (const auto& w : oracle::span(*f, n, rows_of(c))) {
        if (hamming_weight(w) != d) continue;
        const auto ww = schur(*f, w, w);
        EXPECT_EQ(hamming_weight(ww), d);
        EXPECT_TRUE(sq.contains(ww));
      }
    }
  }
}
