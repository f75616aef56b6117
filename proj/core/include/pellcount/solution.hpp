#pragma once

#include <optional>

#include "pellcount/intmath.hpp"
#include "pellcount/subequation.hpp"

namespace pellcount {

/// Names the sub-equation a solution came from and the (u, v) it lifted.
struct Certificate {
  SubEquationTag tag;
  Nat u;
  Nat v;
};

/// A positive solution (x, y) of y^2 = p x (A x^2 + 2). Oracle-found
/// solutions carry no certificate.
struct Solution {
  Nat x;
  Nat y;
  std::optional<Certificate> certificate;
};

/// y^2 == p x (A x^2 + 2), exactly.
inline bool satisfies_curve(const Nat& p, const Nat& A, const Nat& x, const Nat& y) {
  return y * y == p * x * (A * x * x + 2);
}

}  // namespace pellcount
