#pragma once

// Residue-class bookkeeping: which sub-equations a class admits, how many
// solutions each can contribute, and the resulting proved and conjectured
// bounds on the number of positive solutions of y^2 = p x (A x^2 + 2).

#include <optional>
#include <utility>
#include <vector>

#include "pellcount/intmath.hpp"
#include "pellcount/subequation.hpp"

namespace pellcount {

struct ClassLabel {
  bool p_is_two = false;
  bool A_odd = true;
  unsigned A_mod = 0;  // A mod 8 when A is odd, A mod 4 when A is even
  unsigned p_mod = 0;  // p mod 8; 2 when p = 2
  int legendre = 0;    // jacobi(-2A, p) for odd p (0 iff p | A); 0 for p = 2
  // p = 2 and A' = A/2 = 16 * 1785: the one even A' for which
  // v^2 - A' u^4 = 1 can have two solutions.
  bool exceptional = false;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

ClassLabel label_of(const Nat& p, const Nat& A);

/// Residue and Legendre conditions under which `tag` can have a solution.
/// Instance-level conditions (A' a perfect square) are not part of the label.
bool class_admits(SubEquationTag tag, const ClassLabel& label);

/// Largest number of solutions `tag` can contribute in this class (0 when
/// the class does not admit it).
unsigned per_equation_cap(SubEquationTag tag, const ClassLabel& label);

struct BoundReport {
  ClassLabel label;
  std::vector<std::pair<SubEquationTag, unsigned>> per_eq_caps;
  unsigned proved = 0;  // sum of per_eq_caps
  unsigned stated = 0;  // the number as printed in the theorem statements
  std::optional<unsigned> conjectured;
};

BoundReport proved_bound(const Nat& p, const Nat& A);

/// Theorem-statement lookup, independent of the cap sums. Differs from
/// `proved` only for p = 2 and A in {2^5 * 1785, 2^6 * 1785}, where the
/// printed exception is off by one power of two.
unsigned stated_bound(const Nat& p, const Nat& A);

/// Sharp bound conjectured for odd A > 1 and odd p; empty otherwise and for
/// the class (A, p) = (5, 3) mod 8, which the conjecture does not cover.
std::optional<unsigned> conjectured_bound(const Nat& p, const Nat& A);

}  // namespace pellcount
