#pragma once

// Complete solvers for the three quartic families produced by the reduction:
//   X^2 - D Y^4 = 1,   a X^2 - b Y^4 = 2,   a X^2 - b Y^4 = 1.

#include <cstdint>
#include <string>
#include <vector>

#include "pellcount/intmath.hpp"

namespace pellcount {

enum class Completeness { Complete, PossiblyIncomplete };

struct QuarticSolution {
  Nat X;
  Nat Y;
  std::uint64_t index = 0;  // k such that the solution comes from the k-th power
};

struct QuarticOutcome {
  std::vector<QuarticSolution> solutions;  // distinct, ascending in Y
  Completeness status = Completeness::Complete;
  std::string note;  // how completeness was established, or why it was not
  // Statements of the governing theorems that the data contradicted. Empty
  // unless something is badly wrong; callers surface these as findings.
  std::vector<std::string> findings;

  bool complete() const { return status == Completeness::Complete; }
};

struct QuarticCaps {
  std::uint64_t ell_cap = 97;
  std::uint64_t odd_power_cap = 9;
  FactorEffort factor_effort{};
  bool use_sieve = true;
};

/// Throws std::invalid_argument when a cap is out of range (odd_power_cap
/// must be odd and >= 3; both caps at most kMaxPowerIndex).
void validate(const QuarticCaps& caps);

/// D = 1785 or 16 * 1785, where the second solution sits at U_4.
bool is_exceptional_discriminant(const Nat& D);

/// X^2 - D Y^4 = 1 for D >= 2.
QuarticOutcome solve_x2_Dy4_1(const Nat& D, const QuarticCaps& caps = {});

/// a X^2 - b Y^4 = 2 for odd a, b >= 1. Always Complete.
QuarticOutcome solve_ax2_by4_2(const Nat& a, const Nat& b);

/// a X^2 - b Y^4 = 1 for a >= 2, b >= 1.
QuarticOutcome solve_ax2_by4_1(const Nat& a, const Nat& b, const QuarticCaps& caps = {});

}  // namespace pellcount
