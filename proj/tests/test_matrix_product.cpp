#include <gtest/gtest.h>

#include "oracle.hpp"
#include "schurmp/matrix_product.hpp"
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

MatrixProductSpec vandermonde_spec(std::vector<LinearCode> codes) {
  const auto field = codes.front().field();
  MatrixProductSpec spec;
  spec.A = vandermonde_matrix(field, codes.size(), default_alphas(*field));
  spec.constituents = std::move(codes);
  return spec;
}

// Pascal's triangle reduced mod p, built row by row.
std::vector<std::vector<std::uint64_t>> pascal_mod(std::uint64_t rows, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> t(rows, std::vector<std::uint64_t>(rows, 0));
  for (std::uint64_t n = 0; n < rows; ++n) {
    t[n][0] = 1 % p;
    for (std::uint64_t k = 1; k <= n; ++k) t[n][k] = (t[n - 1][k - 1] + t[n - 1][k]) % p;
  }
  return t;
}

}  // namespace

TEST(Build, UuvOfFullAndRepetition) {
  const auto f = make_field(2, 1);
  MatrixProductSpec spec{uuv_matrix(f), {LinearCode::full(f, 2), LinearCode::from_generators(f, 2, {{1, 1}})}};
  const auto c = build(spec);
  EXPECT_EQ(c.length(), 4u);
  EXPECT_EQ(c.dimension(), 3u);
  EXPECT_EQ(min_distance_exact(c), 2u);
  const auto rep = distance_bound(spec);
  EXPECT_EQ(rep.bound, DistanceValue::exact_value(2));
  EXPECT_TRUE(rep.nested);
}

TEST(Build, DimensionIsSumOfConstituents) {
  Rng rng(1);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 20; ++t) {
      const std::size_t s = uniform(rng, 1, 3), l = uniform(rng, s, 4), n = uniform(rng, 1, 5);
      MatrixProductSpec spec{random_full_rank(f, s, l, rng), {}};
      std::size_t total = 0;
      for (std::size_t i = 0; i < s; ++i) {
        spec.constituents.push_back(random_code(f, n, uniform(rng, 0, n), rng));
        total += spec.constituents.back().dimension();
      }
      EXPECT_EQ(build(spec).dimension(), total);
    }
  }
}

TEST(Build, Preconditions) {
  const auto f2 = make_field(2, 1), f4 = make_field(2, 2);
  Matrix rank_one(f2, 2, 2);
  rank_one(0, 0) = rank_one(1, 0) = 1;
  expect_errc(Errc::RankDeficientA,
              [&] { build({rank_one, {LinearCode::full(f2, 2), LinearCode::full(f2, 2)}}); });
  expect_errc(Errc::MixedConstituents,
              [&] { build({uuv_matrix(f2), {LinearCode::full(f2, 2), LinearCode::full(f2, 3)}}); });
  expect_errc(Errc::MixedConstituents,
              [&] { build({uuv_matrix(f2), {LinearCode::full(f2, 2), LinearCode::full(f4, 2)}}); });
  expect_errc(Errc::MixedConstituents, [&] { build({uuv_matrix(f2), {LinearCode::full(f2, 2)}}); });
}

TEST(DefiningMatrices, UuvAndVandermonde) {
  const auto f = make_field(2, 1);
  EXPECT_EQ(uuv_matrix(f).to_rows(), (std::vector<Vector>{{1, 1}, {0, 1}}));
  const auto f5 = make_field(5, 1);
  const Elem pts[] = {1, 2, 3, 4};
  EXPECT_EQ(vandermonde_matrix(f5, 3, pts).to_rows(), (std::vector<Vector>{{1, 1, 1, 1}, {1, 2, 3, 4}, {1, 4, 4, 1}}));
  const Elem repeated[] = {1, 2, 2};
  expect_errc(Errc::RepeatedAlpha, [&] { vandermonde_matrix(f5, 2, repeated); });
  const Elem with_zero[] = {0, 1};
  expect_errc(Errc::InvalidArgument, [&] { vandermonde_matrix(f5, 2, with_zero); });
}

TEST(DefiningMatrices, MsTwo) {
  // [C(2-i, j-1)] for i, j = 1, 2.
  const auto f = make_field(2, 1);
  EXPECT_EQ(ms_p_matrix(f, 2).to_rows(), (std::vector<Vector>{{1, 1}, {1, 0}}));
  EXPECT_EQ(ms_p_star_matrix(f, 2).to_rows(), (std::vector<Vector>{{1, 1}, {1, 0}}));
  expect_errc(Errc::CharacteristicMismatch, [&] { ms_p_matrix(make_field(3, 1), 2); });
}

TEST(DefiningMatrices, MsPMatchesPascalTriangle) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    const auto f = make_field(p, 1);
    const auto tri = pascal_mod(p, p);
    const auto ms = ms_p_matrix(f, p), star = ms_p_star_matrix(f, p);
    for (std::uint32_t i = 1; i <= p; ++i)
      for (std::uint32_t j = 1; j <= p; ++j) {
        const auto b = j - 1 <= p - i ? tri[p - i][j - 1] : 0;
        EXPECT_EQ(ms(i - 1, j - 1), b);
        EXPECT_EQ(star(i - 1, j - 1), b * tri[p - 1][j - 1] % p);
      }
    EXPECT_EQ(ms.rank(), p);
  }
}

TEST(DefiningMatrices, LucasBinomials) {
  const auto tri = pascal_mod(60, 7);
  for (std::uint64_t n = 0; n < 60; ++n)
    for (std::uint64_t k = 0; k <= n + 2; ++k) EXPECT_EQ(binom_mod_p(n, k, 7), k <= n ? tri[n][k] : 0);
}

TEST(Distance, VandermondeRowDistanceIsMds) {
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u}) {
    const auto f = make_field_of_size(q);
    const auto v = vandermonde_matrix(f, q - 1, default_alphas(*f));
    for (std::size_t i = 1; i < q; ++i) {
      EXPECT_EQ(defining_row_distance(v, i), DistanceValue::exact_value(q - i)) << "q=" << q << " i=" << i;
      // Budget 1 forces the closed-form fallback.
      EXPECT_EQ(defining_row_distance(v, i, 1), DistanceValue::exact_value(q - i));
    }
  }
}

TEST(Distance, BoundFlagsAndInfiniteRows) {
  const auto f = make_field(2, 1);
  const auto c = LinearCode::from_generators(f, 3, {{1, 1, 0}});
  const auto not_nested = distance_bound({uuv_matrix(f), {c, LinearCode::from_generators(f, 3, {{0, 1, 1}})}});
  EXPECT_FALSE(not_nested.nested);
  EXPECT_EQ(not_nested.bound, DistanceValue::lower_bound(2));
  const auto zero_second = distance_bound({uuv_matrix(f), {c, LinearCode::zero(f, 3)}});
  EXPECT_EQ(zero_second.bound, DistanceValue::exact_value(4));
  const auto all_zero = distance_bound({uuv_matrix(f), {LinearCode::zero(f, 3), LinearCode::zero(f, 3)}});
  EXPECT_TRUE(all_zero.bound.infinite);
}

TEST(DistanceProperty, BoundBelowTrueDistanceAndExactWhenNested) {
  Rng rng(4);
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 40; ++t) {
      const std::size_t s = uniform(rng, 1, 3), l = uniform(rng, s, 3), n = uniform(rng, 2, 5);
      const bool nested = t % 2 == 0;
      MatrixProductSpec spec{random_full_rank(f, s, l, rng), {}};
      if (nested) {
        std::vector<std::size_t> dims;
        std::size_t k = n;
        for (std::size_t i = 0; i < s; ++i) dims.push_back(k = uniform(rng, 1, k));
        spec.constituents = random_nested_chain(f, n, dims, rng);
      } else {
        for (std::size_t i = 0; i < s; ++i) spec.constituents.push_back(random_code(f, n, uniform(rng, 1, 2), rng));
      }
      const auto rep = distance_bound(spec);
      const auto d = min_distance_exact(build(spec));
      EXPECT_LE(rep.bound.value, d);
      if (nested) {
        EXPECT_TRUE(rep.bound.exact);
        EXPECT_EQ(rep.bound.value, d);
      }
    }
  }
}

TEST(Dual, StandardAndReversedFormsMatchDirectDual) {
  Rng rng(7);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 15; ++t) {
      const std::size_t s = uniform(rng, 1, 3), n = uniform(rng, 1, 4);
      MatrixProductSpec spec{random_full_rank(f, s, s, rng), {}};
      for (std::size_t i = 0; i < s; ++i) spec.constituents.push_back(random_code(f, n, uniform(rng, 0, n), rng));
      const auto want = dual(build(spec));
      const auto forms = dual_mp(spec);
      EXPECT_EQ(build(forms.standard), want);
      EXPECT_EQ(build(forms.reversed), want);
    }
  }
}

TEST(Dual, RoundTrip) {
  Rng rng(8);
  const auto f = make_field(3, 1);
  MatrixProductSpec spec{random_full_rank(f, 3, 3, rng),
                         {random_code(f, 4, 3, rng), random_code(f, 4, 2, rng), random_code(f, 4, 1, rng)}};
  const auto twice = dual_mp(dual_mp(spec).standard).standard;
  EXPECT_EQ(twice.A, spec.A);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(twice.constituents[i], spec.constituents[i]);
  expect_errc(Errc::NotSquare, [&] {
    dual_mp({vandermonde_matrix(f, 1, default_alphas(*f)), {LinearCode::full(f, 2)}});
  });
}

TEST(UuvSquare, MatchesDirectSquare) {
  Rng rng(10);
  for (std::uint32_t q : {2u, 3u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = uniform(rng, 2, 6);
      const auto c1 = random_code(f, n, uniform(rng, 1, n), rng);
      const auto c2 = t % 2 ? random_subcode(c1, uniform(rng, 0, c1.dimension()), rng)
                            : random_code(f, n, uniform(rng, 0, n), rng);
      const auto sq = square_uuv(c1, c2);
      const auto direct = schur_square(build({uuv_matrix(f), {c1, c2}}));
      EXPECT_EQ(build(sq.spec), direct);
      const auto d = min_distance(direct);
      if (sq.nested) EXPECT_EQ(sq.report.bound, d);
      else EXPECT_LE(sq.report.bound.value, d.value);
    }
  }
}

TEST(UuvProduct, MatchesEnumeratedProduct) {
  Rng rng(11);
  const auto f = make_field(2, 1);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = uniform(rng, 2, 3);
    const auto c1 = random_code(f, n, uniform(rng, 0, n), rng), c2 = random_code(f, n, uniform(rng, 0, n), rng);
    const auto d1 = random_code(f, n, uniform(rng, 0, n), rng), d2 = random_code(f, n, uniform(rng, 0, n), rng);
    const auto a = build({uuv_matrix(f), {c1, c2}}), b = build({uuv_matrix(f), {d1, d2}});
    const auto words = oracle::span(*f, 2 * n, oracle::pairwise_products(*f, a.generator().to_rows(),
                                                                         b.generator().to_rows()));
    const auto closed = build(product_uuv(c1, c2, d1, d2));
    EXPECT_EQ(words, oracle::span(*f, 2 * n, closed.generator().to_rows()));
  }
}

TEST(VandermondeSquare, MatchesDirectSquare) {
  Rng rng(12);
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    const auto f = make_field_of_size(q);
    for (int t = 0; t < 15; ++t) {
      const std::size_t s = uniform(rng, 1, std::min<std::size_t>(q - 1, 3)), n = uniform(rng, 2, 4);
      std::vector<LinearCode> codes;
      for (std::size_t i = 0; i < s; ++i) codes.push_back(random_code(f, n, uniform(rng, 0, 2), rng));
      const auto spec = vandermonde_spec(codes);
      const auto sq = square_vandermonde(codes);
      EXPECT_EQ(sq.rows(), std::min(2 * s - 1, static_cast<std::size_t>(q - 1)));
      EXPECT_EQ(build(sq), schur_square(build(spec))) << "q=" << q << " s=" << s;
    }
  }
}

TEST(VandermondeSquare, Preconditions) {
  const auto f = make_field(5, 1);
  const std::vector<LinearCode> five(5, LinearCode::full(f, 2)), three(3, LinearCode::full(f, 2));
  expect_errc(Errc::TooManyRows, [&] { square_vandermonde(five); });
  const Elem pts[] = {1, 2, 3};
  expect_errc(Errc::TooFewColumns, [&] { square_vandermonde(three, pts); });
  const Elem repeated[] = {1, 2, 3, 3};
  expect_errc(Errc::RepeatedAlpha, [&] { square_vandermonde(three, repeated); });
}

TEST(MsPSquare, MatchesDirectSquare) {
  Rng rng(13);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto f = make_field(p, 1);
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = uniform(rng, 2, p == 5 ? 3 : 4);
      std::vector<std::size_t> dims;
      std::size_t k = n;
      for (std::uint32_t i = 0; i < p; ++i) dims.push_back(k = uniform(rng, 0, k));
      const auto chain = random_nested_chain(f, n, dims, rng);
      const auto sq = square_msp(chain, p);
      EXPECT_EQ(build(sq), schur_square(build({ms_p_matrix(f, p), chain}))) << "p=" << p;
    }
  }
}

TEST(MsPSquare, Preconditions) {
  const auto f = make_field(3, 1);
  Rng rng(14);
  const auto small = random_code(f, 3, 1, rng);
  const std::vector<LinearCode> not_nested{small, LinearCode::full(f, 3), LinearCode::zero(f, 3)};
  expect_errc(Errc::NotNested, [&] { square_msp(not_nested, 3); });
  expect_errc(Errc::CharacteristicMismatch, [&] { square_msp(not_nested, 2); });
  const std::vector<LinearCode> two{LinearCode::full(f, 3), small};
  expect_errc(Errc::InvalidArgument, [&] { square_msp(two, 3); });
}
