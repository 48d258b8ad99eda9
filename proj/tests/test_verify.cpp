#include <gtest/gtest.h>

#include "schurmp/verify.hpp"

using namespace schurmp;

TEST(Verify, SmallSuitesPass) {
  for (const auto& suite : {"uuv", "vandermonde", "msp", "nested", "cyclic"}) {
    const auto rep = verify(suite, 1, Tier::small);
    EXPECT_TRUE(rep.ok()) << suite;
    EXPECT_FALSE(rep.cases.empty()) << suite;
    for (const auto& c : rep.cases) EXPECT_EQ(c.suite, suite);
  }
}

TEST(Verify, EvaluationCoversBothLengths) {
  const auto rep = verify("evaluation", 1, Tier::small);
  EXPECT_TRUE(rep.ok());
  bool n7 = false, n15 = false;
  for (const auto& c : rep.cases) {
    n7 = n7 || c.name.find("n=7 ") != std::string::npos;
    n15 = n15 || c.name.find("n=15 ") != std::string::npos;
  }
  EXPECT_TRUE(n7);
  EXPECT_TRUE(n15);
}

TEST(Verify, FaultyOracleIsDetected) {
  for (const auto& suite : {"uuv", "vandermonde", "msp", "cyclic", "evaluation", "hermitian"}) {
    const auto rep = verify(suite, 1, Tier::small, Oracle::faulty());
    EXPECT_FALSE(rep.ok()) << suite;
  }
}

TEST(Verify, SameSeedSameCases) {
  const auto a = verify("uuv", 42, Tier::small), b = verify("uuv", 42, Tier::small), c = verify("uuv", 43, Tier::small);
  ASSERT_EQ(a.cases.size(), b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) EXPECT_EQ(a.cases[i].name, b.cases[i].name);
  bool differs = false;
  for (std::size_t i = 0; i < std::min(a.cases.size(), c.cases.size()); ++i) differs = differs || a.cases[i].name != c.cases[i].name;
  EXPECT_TRUE(differs);
}

TEST(Verify, UnknownSuite) {
  try {
    verify("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownSuite);
  }
}
