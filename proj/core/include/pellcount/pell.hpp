#pragma once

// Pell machinery: fundamental norm-1 units of Z[sqrt(D)], minimal solutions
// of aX^2 - bY^2 = N for N in {1, 2}, and their power sequences.

#include <cstdint>
#include <optional>

#include "pellcount/intmath.hpp"

namespace pellcount {

/// Largest power index any sequence accessor will produce. Values grow
/// geometrically in k, so this is a guard against runaway requests.
inline constexpr std::uint64_t kMaxPowerIndex = 1024;

/// eps_D = T1 + U1*sqrt(D), the minimal unit > 1 of norm 1.
struct PellFundamental {
  Nat D;
  Nat T1;
  Nat U1;
};

/// An element t + u*sqrt(D) of Z[sqrt(D)].
struct QuadElement {
  Nat t;
  Nat u;
};

/// (x + y*sqrt(D)) * (z + w*sqrt(D)).
QuadElement multiply(const QuadElement& lhs, const QuadElement& rhs, const Nat& D);

/// base^k by square-and-multiply; k = 0 gives 1.
QuadElement power(const QuadElement& base, std::uint64_t k, const Nat& D);

/// Empty iff D is a perfect square. Throws std::invalid_argument for D < 2.
std::optional<PellFundamental> fundamental_norm1(const Nat& D);

struct PellPower {
  Nat T;
  Nat U;
};

/// (T_k, U_k) with T_k + U_k sqrt(D) = eps_D^k. Throws std::invalid_argument
/// for k = 0 and std::out_of_range for k > kMaxPowerIndex.
PellPower norm1_power(const PellFundamental& f, std::uint64_t k);

/// Minimal positive solution (a1, b1) of a*X^2 - b*Y^2 = N.
///
/// Stores the unit alpha^2 = T + U*sqrt(ab) as well, where
/// alpha = (a1 sqrt(a) + b1 sqrt(b)) / sqrt(N). For a > 1 with N = 1, and for
/// odd a, b with N = 2, every positive solution is alpha^k for odd k. The
/// Pell-like cases a = 1 (N = 1) and a = 2 (N = 2) also have solutions at
/// even powers.
struct MinimalAB {
  Nat a;
  Nat b;
  unsigned N = 1;
  Nat a1;
  Nat b1;
  QuadElement alpha_squared;  // in Z[sqrt(a*b)]
};

/// Empty when the equation has no positive solution; that answer is
/// certified, not a search timeout. Throws std::invalid_argument for a or b
/// below 1 or N outside {1, 2}.
std::optional<MinimalAB> minimal_ab(const Nat& a, const Nat& b, unsigned N);

struct ABPower {
  Nat ak;
  Nat bk;
};

/// Coefficients of alpha^k for odd k >= 1, computed as alpha * (alpha^2)^((k-1)/2).
/// Throws std::invalid_argument for even k, std::out_of_range beyond kMaxPowerIndex.
ABPower ab_odd_power(const MinimalAB& m, std::uint64_t k);

}  // namespace pellcount
