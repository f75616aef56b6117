#pragma once

// Brute-force ground truth. Deliberately shares nothing with the Pell,
// quartic or reduction code beyond the integer kernel.

#include <cstdint>
#include <utility>
#include <vector>

#include "pellcount/intmath.hpp"
#include "pellcount/solution.hpp"
#include "pellcount/subequation.hpp"

namespace pellcount::oracle {

/// All (x, y) with 1 <= x <= x_max on y^2 = p x (A x^2 + 2), ascending in x.
/// Throws std::invalid_argument for x_max < 1.
std::vector<Solution> brute_eqM(const Nat& p, const Nat& A, std::uint64_t x_max);

/// All (X, Y) with 1 <= Y <= y_max solving the given quartic form, ascending
/// in Y. For X2_DY4_1 the coefficient D is passed as `b` and `a` is ignored.
std::vector<std::pair<Nat, Nat>> brute_quartic(QuarticForm form, const Nat& a, const Nat& b,
                                               std::uint64_t y_max);

}  // namespace pellcount::oracle
