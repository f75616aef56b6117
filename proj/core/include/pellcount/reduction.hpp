#pragma once

// Reduction of y^2 = p x (A x^2 + 2) to quartic sub-equations: filter,
// solve, lift back to (x, y), and assemble a certified solution set.

#include <stdexcept>
#include <string>
#include <vector>

#include "pellcount/classify.hpp"
#include "pellcount/quartic.hpp"
#include "pellcount/solution.hpp"
#include "pellcount/subequation.hpp"

namespace pellcount {

struct Instance {
  Nat p;
  Nat A;
  bool allow_small_A = false;  // admit A = 1 (the classical Cassels curve)
};

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InvalidInstance unless p is a prime below primality_bound() and
/// A >= 2 (A >= 1 with allow_small_A).
void validate(const Instance& inst);

/// Necessary condition for `tag` to have a solution at (p, A): the class
/// conditions plus "A' is not a perfect square" for E6 and E9.
/// Throws std::invalid_argument when the tag does not arise for (p, A).
bool filter_admits(SubEquationTag tag, const Nat& p, const Nat& A);

/// Solves the tagged sub-equation; solutions are reported as (X, Y) = (v, u).
/// Runs regardless of filter_admits.
QuarticOutcome solve_sub(SubEquationTag tag, const Nat& p, const Nat& A, const QuarticCaps& caps);

/// Inverse substitution (u, v) -> (x, y). Throws std::invalid_argument if
/// (u, v) does not solve the sub-equation and std::logic_error if the lifted
/// point is not on the curve.
Solution lift(SubEquationTag tag, const Nat& p, const Nat& A, const Nat& u, const Nat& v);

enum class SolveMode {
  Fast,    // skip sub-equations rejected by filter_admits
  Verify,  // solve everything and check the filters against the results
};

struct SubOutcome {
  SubEquationTag tag;
  bool admitted = true;
  bool solved = false;
  QuarticOutcome outcome;
};

struct SolveOutcome {
  Instance instance;
  std::vector<Solution> solutions;  // distinct, ascending in x
  bool complete = true;
  std::string notes;
  BoundReport bound;
  std::vector<SubOutcome> subs;
  // Contradictions with the bounds, filters or structural facts. A correct
  // implementation of true theorems leaves this empty.
  std::vector<std::string> findings;
};

SolveOutcome solve_all(const Instance& inst, const QuarticCaps& caps = {},
                       SolveMode mode = SolveMode::Verify);

}  // namespace pellcount
