#pragma once

// Congruence certificates that a binary recurrence has no further squares.
//
// A state s_j = (x_j, y_j) evolving by s_{j+1} = M s_j with det M = 1 is
// purely periodic modulo every m. If, for each index class j mod L still in
// play, some modulus m whose period divides L sees y_j as a quadratic
// non-residue, then y_j is never a perfect square on those classes.

#include <cstdint>
#include <span>
#include <vector>

#include "pellcount/intmath.hpp"

namespace pellcount::sieve {

/// Index modulus L = 2^3 * 3^2 * 5 * 7 * 11.
inline constexpr std::uint32_t kIndexModulus = 27720;

struct LinearRecurrence {
  Nat x0;
  Nat y0;
  Nat m00, m01;
  Nat m10, m11;
};

/// Residues j mod kIndexModulus that survive every available modulus.
/// Throws std::invalid_argument if det M != 1.
std::vector<std::uint32_t> surviving_classes(const LinearRecurrence& rec,
                                             std::span<const std::uint32_t> classes);

/// True iff every listed class is excluded.
bool excludes_all(const LinearRecurrence& rec, std::span<const std::uint32_t> classes);

/// y_j mod m for j in [0, period), or empty if the period exceeds `limit`.
/// Throws std::invalid_argument if det M != 1.
std::vector<std::uint32_t> residue_cycle(const LinearRecurrence& rec, std::uint32_t m,
                                         std::uint32_t limit);

}  // namespace pellcount::sieve
