#include "pellcount/quartic.hpp"

#include <gtest/gtest.h>

#include "pellcount/oracle.hpp"
#include "pellcount/pell.hpp"

namespace pellcount {
namespace {

using Pairs = std::vector<std::pair<Nat, Nat>>;

Pairs as_pairs(const QuarticOutcome& q, std::uint64_t y_max) {
  Pairs out;
  for (const QuarticSolution& s : q.solutions)
    if (s.Y <= y_max) out.emplace_back(s.X, s.Y);
  return out;
}

void expect_consistent(const QuarticOutcome& q, const Pairs& brute, std::uint64_t y_max, const std::string& ctx) {
  EXPECT_TRUE(q.findings.empty()) << ctx << ": " << (q.findings.empty() ? "" : q.findings.front());
  if (q.complete()) EXPECT_EQ(as_pairs(q, y_max), brute) << ctx;
  else {
    // Everything the solver reports is real, even when it may miss some.
    for (const auto& pt : as_pairs(q, y_max))
      EXPECT_NE(std::find(brute.begin(), brute.end(), pt), brute.end()) << ctx;
  }
}

TEST(X2DY4, AgreesWithSearchUpTo2000) {
  constexpr std::uint64_t kY = 200;
  int incomplete = 0;
  for (unsigned long D = 2; D <= 2000; ++D) {
    if (as_perfect_square(Nat(D))) continue;
    const QuarticOutcome q = solve_x2_Dy4_1(Nat(D));
    const Pairs brute = oracle::brute_quartic(QuarticForm::X2_DY4_1, 1, Nat(D), kY);
    expect_consistent(q, brute, kY, "D=" + std::to_string(D));
    EXPECT_LE(q.solutions.size(), 2u) << D;
    if (!q.complete()) ++incomplete;
  }
  EXPECT_EQ(incomplete, 0);
}

TEST(X2DY4, ExceptionalDiscriminants) {
  EXPECT_TRUE(is_exceptional_discriminant(1785));
  EXPECT_TRUE(is_exceptional_discriminant(28560));
  EXPECT_FALSE(is_exceptional_discriminant(57120));

  for (unsigned long D : {1785ul, 28560ul}) {
    const QuarticOutcome q = solve_x2_Dy4_1(Nat(D));
    ASSERT_TRUE(q.complete()) << D;
    ASSERT_EQ(q.solutions.size(), 2u) << D;
    EXPECT_TRUE(q.findings.empty()) << D;
    for (const QuarticSolution& s : q.solutions) EXPECT_EQ(s.X * s.X - D * s.Y * s.Y * s.Y * s.Y, 1);
  }
  const QuarticOutcome q = solve_x2_Dy4_1(Nat(1785));
  EXPECT_EQ(q.solutions[0].X, 169);
  EXPECT_EQ(q.solutions[0].Y, 2);
  EXPECT_EQ(q.solutions[1].index, 4u);
}

TEST(X2DY4, SquareAndDomain) {
  const QuarticOutcome q = solve_x2_Dy4_1(Nat(49));
  EXPECT_TRUE(q.complete());
  EXPECT_TRUE(q.solutions.empty());
  EXPECT_THROW(solve_x2_Dy4_1(Nat(1)), std::invalid_argument);
}

TEST(AX2BY4Eq2, AgreesWithSearchAndIsOneOfTwoCandidates) {
  constexpr std::uint64_t kY = 200;
  for (unsigned long a = 1; a <= 30; a += 2)
    for (unsigned long b = 1; b <= 30; b += 2) {
      const QuarticOutcome q = solve_ax2_by4_2(Nat(a), Nat(b));
      const std::string ctx = "a=" + std::to_string(a) + " b=" + std::to_string(b);
      ASSERT_TRUE(q.complete()) << ctx;
      expect_consistent(q, oracle::brute_quartic(QuarticForm::AX2_BY4_2, Nat(a), Nat(b), kY), kY, ctx);

      const auto m = minimal_ab(Nat(a), Nat(b), 2);
      if (!m) {
        EXPECT_TRUE(q.solutions.empty()) << ctx;
        continue;
      }
      for (const QuarticSolution& s : q.solutions) {
        EXPECT_TRUE(s.index == 1 || s.index == 3) << ctx;
        const ABPower pk = ab_odd_power(*m, s.index);
        EXPECT_EQ(s.X, pk.ak) << ctx;
        EXPECT_EQ(s.Y * s.Y, pk.bk) << ctx;
      }
    }
}

TEST(AX2BY4Eq2, Examples) {
  const QuarticOutcome q = solve_ax2_by4_2(5, 3);
  ASSERT_EQ(q.solutions.size(), 2u);
  EXPECT_EQ(q.solutions[0].X, 1);
  EXPECT_EQ(q.solutions[0].Y, 1);
  EXPECT_EQ(q.solutions[1].X, 7);
  EXPECT_EQ(q.solutions[1].Y, 3);
  EXPECT_THROW(solve_ax2_by4_2(2, 3), std::invalid_argument);
}

TEST(AX2BY4Eq1, AgreesWithSearch) {
  constexpr std::uint64_t kY = 200;
  int incomplete = 0;
  for (unsigned long a = 2; a <= 40; ++a)
    for (unsigned long b = 1; b <= 40; ++b) {
      const QuarticOutcome q = solve_ax2_by4_1(Nat(a), Nat(b));
      const std::string ctx = "a=" + std::to_string(a) + " b=" + std::to_string(b);
      expect_consistent(q, oracle::brute_quartic(QuarticForm::AX2_BY4_1, Nat(a), Nat(b), kY), kY, ctx);
      EXPECT_LE(q.solutions.size(), 1u) << ctx;
      if (!q.complete()) ++incomplete;
    }
  EXPECT_EQ(incomplete, 0);
}

TEST(AX2BY4Eq1, CapWithoutSieveIsHonest) {
  QuarticCaps caps;
  caps.use_sieve = false;
  caps.odd_power_cap = 3;
  // 3X^2 - 2Y^4 = 1 has (1, 1); with a solution in hand the answer is settled.
  const QuarticOutcome found = solve_ax2_by4_1(3, 2, caps);
  EXPECT_TRUE(found.complete());
  ASSERT_EQ(found.solutions.size(), 1u);
  // 7X^2 - 3Y^2 = 1 starts at (2, 3); b_1 = 3 and b_3 = 333 are not squares,
  // so a bare search to k = 3 cannot settle 7X^2 - 3Y^4 = 1.
  const QuarticOutcome open = solve_ax2_by4_1(7, 3, caps);
  EXPECT_TRUE(open.solutions.empty());
  EXPECT_FALSE(open.complete());
  EXPECT_TRUE(solve_ax2_by4_1(7, 3).complete());
}

TEST(Caps, Validation) {
  QuarticCaps caps;
  EXPECT_NO_THROW(validate(caps));
  caps.odd_power_cap = 4;
  EXPECT_THROW(validate(caps), std::invalid_argument);
  caps.odd_power_cap = 1;
  EXPECT_THROW(validate(caps), std::invalid_argument);
  caps = {};
  caps.ell_cap = kMaxPowerIndex + 1;
  EXPECT_THROW(validate(caps), std::invalid_argument);
}

}  // namespace
}  // namespace pellcount
