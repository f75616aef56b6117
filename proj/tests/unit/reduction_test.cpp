#include "pellcount/reduction.hpp"

#include <gtest/gtest.h>

#include "pellcount/oracle.hpp"

namespace pellcount {
namespace {

using Points = std::vector<std::pair<Nat, Nat>>;

Points points(const std::vector<Solution>& sols) {
  Points out;
  for (const Solution& s : sols) out.emplace_back(s.x, s.y);
  return out;
}

TEST(SolveAll, Cassels) {
  const SolveOutcome r = solve_all({3, 1, true});
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(r.findings.empty());
  EXPECT_EQ(points(r.solutions), (Points{{1, 3}, {2, 6}, {24, 204}}));
  for (const Solution& s : r.solutions) ASSERT_TRUE(s.certificate);
  EXPECT_EQ(r.solutions[0].certificate->tag, SubEquationTag::E4);
  EXPECT_EQ(r.solutions[1].certificate->tag, SubEquationTag::E2);
  EXPECT_EQ(r.solutions[2].certificate->tag, SubEquationTag::E1);
}

TEST(SolveAll, Examples) {
  SolveOutcome r = solve_all({2, 3});
  EXPECT_EQ(points(r.solutions), (Points{{4, 20}}));
  EXPECT_EQ(r.solutions[0].certificate->tag, SubEquationTag::P2Odd);

  r = solve_all({7, 7});
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(r.findings.empty());
  EXPECT_EQ(points(r.solutions), points(oracle::brute_eqM(7, 7, 100'000)));

  // A' = 16 * 1785: the exceptional quartic contributes two points.
  r = solve_all({2, 32 * 1785});
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.solutions.size(), 2u);
  EXPECT_TRUE(r.findings.empty());
  for (const Solution& s : r.solutions) EXPECT_TRUE(satisfies_curve(2, 32 * 1785, s.x, s.y));

  // A = 2 * 16 * 1785 * 2: A' = 2^5 * 1785 allows only one.
  r = solve_all({2, 64 * 1785});
  EXPECT_LE(r.solutions.size(), 1u);
  EXPECT_TRUE(r.findings.empty());
}

TEST(SolveAll, CounterexampleToTheSharpBoundInClass13) {
  const SolveOutcome r = solve_all({3, 73});
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(points(r.solutions), (Points{{1, 15}, {2, 42}, {24, 1740}}));
  EXPECT_EQ(r.bound.conjectured, 2u);
  EXPECT_EQ(r.bound.proved, 3u);
}

TEST(SolveAll, AgreesWithOracleOnSmallGrid) {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul})
    for (unsigned long A = 2; A <= 60; ++A) {
      const SolveOutcome r = solve_all({p, A});
      const std::string ctx = "p=" + std::to_string(p) + " A=" + std::to_string(A);
      ASSERT_TRUE(r.complete) << ctx << ": " << r.notes;
      ASSERT_TRUE(r.findings.empty()) << ctx << ": " << r.findings.front();
      Points solved;
      for (const Solution& s : r.solutions)
        if (s.x <= 20'000) solved.emplace_back(s.x, s.y);
      EXPECT_EQ(solved, points(oracle::brute_eqM(p, A, 20'000))) << ctx;
      EXPECT_LE(r.solutions.size(), r.bound.proved) << ctx;
    }
}

TEST(SolveAll, FastAndVerifyModesAgree) {
  for (unsigned long p : {3ul, 5ul, 17ul, 41ul})
    for (unsigned long A = 2; A <= 80; ++A) {
      const SolveOutcome fast = solve_all({p, A}, {}, SolveMode::Fast);
      const SolveOutcome full = solve_all({p, A}, {}, SolveMode::Verify);
      EXPECT_EQ(points(fast.solutions), points(full.solutions)) << p << "," << A;
      for (const SubOutcome& s : full.subs) {
        EXPECT_TRUE(s.solved);
        if (!s.admitted) {
          EXPECT_TRUE(s.outcome.solutions.empty()) << p << "," << A << " " << to_string(s.tag);
        }
      }
    }
}

TEST(Validate, RejectsBadInstances) {
  EXPECT_THROW(solve_all({4, 5}), InvalidInstance);
  EXPECT_THROW(solve_all({1, 5}), InvalidInstance);
  EXPECT_THROW(solve_all({3, 1}), InvalidInstance);
  EXPECT_THROW(solve_all({3, 0, true}), InvalidInstance);
  EXPECT_THROW(solve_all({primality_bound() + 2, 5}), InvalidInstance);
  EXPECT_NO_THROW(validate(Instance{3, 1, true}));
}

TEST(Lift, InverseSubstitution) {
  // E1 for (3, 1): v^2 - 18 u^4 = 1 at (u, v) = (2, 17).
  const Solution s = lift(SubEquationTag::E1, 3, 1, 2, 17);
  EXPECT_EQ(s.x, 24);
  EXPECT_EQ(s.y, 204);
  EXPECT_THROW(lift(SubEquationTag::E1, 3, 1, 2, 18), std::invalid_argument);
  EXPECT_THROW(lift(SubEquationTag::E9, 3, 1, 1, 1), std::invalid_argument);
}

TEST(Decompose, TagsByParity) {
  using T = SubEquationTag;
  EXPECT_EQ(decompose(3, 5), (std::vector<T>{T::E1, T::E2, T::E3, T::E4}));
  EXPECT_EQ(decompose(3, 6), (std::vector<T>{T::E5, T::E6, T::E7, T::E8}));
  EXPECT_EQ(decompose(2, 6), (std::vector<T>{T::E9}));
  EXPECT_EQ(decompose(2, 5), (std::vector<T>{T::P2Odd}));
  for (T t : kAllTags) EXPECT_EQ(parse_tag(to_string(t)), t);
  EXPECT_FALSE(parse_tag("E10"));
}

TEST(Filters, RejectedSubEquationsAreEmptyOnAWideGrid) {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul, 43ul, 47ul})
    for (unsigned long A = 2; A <= 150; ++A)
      for (SubEquationTag t : decompose(p, A)) {
        if (filter_admits(t, p, A)) continue;
        const QuarticOutcome q = solve_sub(t, p, A, {});
        EXPECT_TRUE(q.solutions.empty()) << "p=" << p << " A=" << A << " " << to_string(t);
      }
}

}  // namespace
}  // namespace pellcount
