#include "pellcount/classify.hpp"

#include <algorithm>
#include <map>

#include <gtest/gtest.h>

namespace pellcount {
namespace {

std::vector<unsigned long> odd_primes_below(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long p = 3; p < n; p += 2)
    if (is_prime(Nat(p))) out.push_back(p);
  return out;
}

TEST(Label, Fields) {
  ClassLabel l = label_of(17, 7);
  EXPECT_FALSE(l.p_is_two);
  EXPECT_TRUE(l.A_odd);
  EXPECT_EQ(l.A_mod, 7u);
  EXPECT_EQ(l.p_mod, 1u);
  EXPECT_EQ(l.legendre, -1);

  l = label_of(7, 14);
  EXPECT_FALSE(l.A_odd);
  EXPECT_EQ(l.A_mod, 2u);
  EXPECT_EQ(l.legendre, 0);

  l = label_of(2, 32 * 1785);
  EXPECT_TRUE(l.p_is_two);
  EXPECT_TRUE(l.exceptional);
  EXPECT_FALSE(label_of(2, 64 * 1785).exceptional);
}

TEST(Bounds, Examples) {
  BoundReport b = proved_bound(17, 7);
  EXPECT_EQ(b.proved, 3u);  // jacobi(-14, 17) = -1 puts it in the "at most three" branch
  EXPECT_EQ(b.conjectured, 2u);

  b = proved_bound(7, 23);
  EXPECT_EQ(jacobi(-46, 7), -1);
  EXPECT_EQ(b.proved, 3u);
  EXPECT_EQ(b.conjectured, 3u);

  b = proved_bound(2, 5);
  EXPECT_EQ(b.proved, 1u);
  EXPECT_FALSE(b.conjectured);

  b = proved_bound(3, 1);
  EXPECT_EQ(b.proved, 3u);  // Cassels' curve: sharp
}

TEST(Bounds, CapSumsMatchTheStatedTableForOddA) {
  for (unsigned long p : odd_primes_below(200))
    for (unsigned long A = 3; A < 200; A += 2) {
      const BoundReport b = proved_bound(p, A);
      ASSERT_EQ(b.proved, b.stated) << "p=" << p << " A=" << A;
    }
  for (unsigned long A = 3; A < 200; A += 2) EXPECT_EQ(proved_bound(2, A).proved, 1u);
}

TEST(Bounds, CapSumsMatchTheStatedTableForEvenA) {
  for (unsigned long p : odd_primes_below(200))
    for (unsigned long A = 2; A < 400; A += 2) {
      const BoundReport b = proved_bound(p, A);
      ASSERT_EQ(b.proved, b.stated) << "p=" << p << " A=" << A;
    }
  for (unsigned long A = 2; A < 4000; A += 2) EXPECT_EQ(proved_bound(2, A).proved, proved_bound(2, A).stated) << A;
}

TEST(Bounds, ExceptionalPowerOfTwo) {
  // D = 16 * 1785 is the even discriminant with two quartic solutions; it
  // arises from A = 2 * 16 * 1785.
  EXPECT_EQ(proved_bound(2, 32 * 1785).proved, 2u);
  EXPECT_EQ(proved_bound(2, 64 * 1785).proved, 1u);
  EXPECT_EQ(stated_bound(2, 32 * 1785), 1u);
  EXPECT_EQ(stated_bound(2, 64 * 1785), 2u);
  EXPECT_EQ(proved_bound(2, 16 * 1785).proved, 1u);
}

TEST(Bounds, PerEquationCaps) {
  const ClassLabel l71 = label_of(17, 7);
  EXPECT_EQ(per_equation_cap(SubEquationTag::E3, l71), 2u);
  EXPECT_EQ(per_equation_cap(SubEquationTag::E2, l71), 0u);
  const ClassLabel l13 = label_of(3, 73);
  EXPECT_EQ(l13.legendre, 1);
  EXPECT_EQ(per_equation_cap(SubEquationTag::E1, l13), 1u);
  EXPECT_EQ(per_equation_cap(SubEquationTag::E2, l13), 1u);
  EXPECT_EQ(per_equation_cap(SubEquationTag::E4, l13), 1u);
  EXPECT_EQ(per_equation_cap(SubEquationTag::E3, l13), 0u);
}

TEST(Conjecture, Table) {
  const std::map<std::pair<unsigned, unsigned>, std::optional<unsigned>> expect{
      {{1, 1}, 1}, {{1, 3}, 2}, {{1, 5}, 1}, {{1, 7}, 1}, {{3, 1}, 1}, {{3, 3}, 1},
      {{3, 5}, 3}, {{3, 7}, 1}, {{5, 1}, 1}, {{5, 3}, std::nullopt}, {{5, 5}, 1}, {{5, 7}, 1},
      {{7, 1}, 2}, {{7, 3}, 1}, {{7, 5}, 1}, {{7, 7}, 3}};
  for (const auto& [key, bound] : expect) {
    const auto [Amod, pmod] = key;
    for (unsigned long p : odd_primes_below(200)) {
      if (p % 8 != pmod) continue;
      const unsigned long A = Amod == 1 ? 9 : Amod;
      EXPECT_EQ(conjectured_bound(p, A), bound) << Amod << "," << pmod;
    }
  }
  EXPECT_FALSE(conjectured_bound(2, 7));
  EXPECT_FALSE(conjectured_bound(3, 4));
  EXPECT_FALSE(conjectured_bound(3, 1));
}

TEST(Conjecture, ProvedBoundIsSharpExactlyOnTheSettledClasses) {
  // Per class, the largest proved bound over both Legendre branches equals
  // the conjectured bound on the classes the bounds settle, and exceeds it
  // elsewhere.
  std::map<std::pair<unsigned, unsigned>, unsigned> best;
  for (unsigned long p : odd_primes_below(200))
    for (unsigned long A = 3; A < 400; A += 2) {
      auto& m = best[{static_cast<unsigned>(A % 8), static_cast<unsigned>(p % 8)}];
      m = std::max(m, proved_bound(p, A).proved);
    }
  const std::vector<std::pair<unsigned, unsigned>> settled{{1, 5}, {1, 7}, {3, 3}, {3, 5}, {5, 5}, {7, 3}, {7, 5}};
  for (const auto& [key, m] : best) {
    const unsigned long A = key.first == 1 ? 9 : key.first;
    unsigned long p = 0;
    for (unsigned long q : odd_primes_below(200))
      if (q % 8 == key.second) { p = q; break; }
    const auto c = conjectured_bound(p, A);
    if (!c) continue;
    if (std::find(settled.begin(), settled.end(), key) != settled.end()) EXPECT_EQ(m, *c) << key.first << "," << key.second;
    else EXPECT_GT(m, *c) << key.first << "," << key.second;
  }
}

}  // namespace
}  // namespace pellcount
