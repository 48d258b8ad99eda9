#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "schurmp/serialize.hpp"
#include "schurmp/tables.hpp"

using namespace schurmp;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(SCHURMP_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in) << "missing golden file " << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RestrictedRow {
  std::uint32_t r;
  std::uint64_t n, dim, d, dim_square, d_square;
};

// Published restricted-weight rows (q=2, s=5, m1=2, m2=1).
const RestrictedRow kRestricted[] = {
    {5, 62, 22, 14, 57, 2},         {6, 126, 29, 30, 99, 6},         {7, 254, 37, 62, 163, 14},
    {8, 510, 54, 126, 348, 18},     {9, 1022, 86, 238, 650, 38},     {10, 2046, 142, 462, 1319, 66},
    {11, 4094, 233, 926, 2543, 134}};

struct HermitianRow {
  std::uint32_t r, s;
  std::uint64_t k, d, k_star, d_star;
};

// Published Hermitian rows (q=4, n=960).
const HermitianRow kHermitian[] = {
    {13, 2, 17, 714, 66, 494}, {16, 2, 23, 672, 84, 416}, {19, 2, 29, 630, 102, 338}, {22, 2, 35, 588, 120, 260},
    {13, 4, 38, 612, 168, 342}, {16, 4, 50, 576, 210, 288}, {19, 4, 62, 540, 252, 234}, {13, 6, 63, 510, 286, 190},
    {16, 6, 81, 480, 352, 160}, {13, 7, 77, 459, 351, 114}, {16, 7, 98, 432, 429, 96},  {13, 8, 92, 408, 420, 38},
    {16, 8, 116, 384, 510, 32}};

const Cell* extra(const TableRow& row, const std::string& name) {
  for (const auto& [k, c] : row.extra)
    if (k == name) return &c;
  return nullptr;
}

}  // namespace

TEST(RestrictedWeightTable, MatchesPublishedRows) {
  const auto rows = table_restricted_weight({});
  ASSERT_EQ(rows.size(), std::size(kRestricted));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& want = kRestricted[i];
    const auto& got = rows[i];
    EXPECT_EQ(got.labels.front().second, want.r);
    EXPECT_EQ(got.n, want.n);
    EXPECT_EQ(got.dim, (Cell{want.dim, CellKind::exact}));
    EXPECT_EQ(got.dim_square, (Cell{want.dim_square, CellKind::exact}));
    EXPECT_EQ(got.d, (Cell{want.d, CellKind::bound}));
    EXPECT_EQ(got.d_square, (Cell{want.d_square, CellKind::bound}));
    EXPECT_EQ(*extra(got, "d_max_element"), (Cell{want.d, CellKind::bound}));
    EXPECT_EQ(*extra(got, "d_square_max_element"), (Cell{want.d_square, CellKind::bound}));
    EXPECT_EQ(*extra(got, "d_dual"), (Cell{8, CellKind::bound}));
  }
}

TEST(RestrictedWeightTable, Preconditions) {
  RestrictedWeightTableConfig cfg;
  cfg.m1 = 1;
  cfg.m2 = 2;
  EXPECT_THROW(table_restricted_weight(cfg), Error);
}

TEST(HermitianTable, MatchesPublishedRows) {
  const auto rows = table_hermitian(4, default_hermitian_rows());
  ASSERT_EQ(rows.size(), std::size(kHermitian));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& want = kHermitian[i];
    const auto& got = rows[i];
    EXPECT_EQ(got.labels[1].second, want.r);
    EXPECT_EQ(got.labels[2].second, want.s);
    EXPECT_EQ(got.n, 960u);
    EXPECT_EQ(got.dim, (Cell{want.k, CellKind::exact}));
    EXPECT_EQ(got.d, (Cell{want.d, CellKind::designed}));
    EXPECT_EQ(got.dim_square, (Cell{want.k_star, CellKind::exact}));
    EXPECT_EQ(got.d_square, (Cell{want.d_star, CellKind::designed}));
    EXPECT_FALSE(got.verified.has_value());
  }
}

TEST(HermitianTable, RankVerificationSmallCurve) {
  const auto rows = table_hermitian(3, {{7, 2}}, true);
  ASSERT_TRUE(rows.front().verified.has_value());
  EXPECT_TRUE(*rows.front().verified);
}

TEST(Golden, RestrictedWeight) {
  const auto rows = table_restricted_weight({});
  EXPECT_EQ(to_markdown(rows), read_golden("restricted_weight.md"));
  EXPECT_EQ(to_csv(rows), read_golden("restricted_weight.csv"));
  EXPECT_EQ(table_to_json("restricted-weight", rows).dump(2) + "\n", read_golden("restricted_weight.json"));
}

TEST(Golden, Hermitian) {
  const auto rows = table_hermitian(4, default_hermitian_rows());
  EXPECT_EQ(to_markdown(rows), read_golden("hermitian.md"));
  EXPECT_EQ(to_csv(rows), read_golden("hermitian.csv"));
  EXPECT_EQ(table_to_json("hermitian", rows).dump(2) + "\n", read_golden("hermitian.json"));
}

TEST(Rendering, BoundMarkers) {
  TableRow row;
  row.labels = {{"r", 1}};
  row.n = 4;
  row.dim = {2, CellKind::exact};
  row.d = {3, CellKind::bound};
  row.dim_square = {4, CellKind::exact};
  row.d_square = {0, CellKind::exact, true};
  const std::vector<TableRow> rows{row};
  EXPECT_EQ(to_markdown(rows), "| r | n | dim(C) | d(C) | dim(C^*2) | d(C^*2) |\n|---|---|---|---|---|---|\n"
                               "| 1 | 4 | 2 | ≥3 | 4 | inf |\n");
  EXPECT_EQ(to_csv(rows), "r,n,dim,dim_kind,d,d_kind,dim_square,dim_square_kind,d_square,d_square_kind\n"
                          "1,4,2,exact,3,bound,4,exact,inf,exact\n");
}
