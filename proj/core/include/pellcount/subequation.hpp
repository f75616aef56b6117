#pragma once

// The quartic sub-equations that y^2 = p x (A x^2 + 2) splits into.
//
//   odd A, odd p : E1 v^2 - 2Ap^2 u^4 = 1     E2 p v^2 - 2A u^4 = 1
//                  E3 v^2 - Ap^2 u^4 = 2      E4 p v^2 - A u^4 = 2
//   even A = 2A', odd p :
//                  E5 p v^2 - 4A' u^4 = 1     E6 v^2 - 4A'p^2 u^4 = 1
//                  E7 2p v^2 - A' u^4 = 1     E8 2 v^2 - A'p^2 u^4 = 1
//   even A, p = 2: E9 v^2 - A' u^4 = 1
//   odd A, p = 2 : P2Odd v^2 - 8A u^4 = 1

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "pellcount/intmath.hpp"

namespace pellcount {

enum class SubEquationTag { E1, E2, E3, E4, E5, E6, E7, E8, E9, P2Odd };

inline constexpr std::array<SubEquationTag, 10> kAllTags = {
    SubEquationTag::E1, SubEquationTag::E2, SubEquationTag::E3, SubEquationTag::E4,
    SubEquationTag::E5, SubEquationTag::E6, SubEquationTag::E7, SubEquationTag::E8,
    SubEquationTag::E9, SubEquationTag::P2Odd};

std::string_view to_string(SubEquationTag tag);
std::optional<SubEquationTag> parse_tag(std::string_view name);

/// Shape of the quartic, in the (X, Y) = (v, u) variables.
enum class QuarticForm {
  X2_DY4_1,   // X^2 - D Y^4 = 1, coefficient D stored in `b`
  AX2_BY4_2,  // a X^2 - b Y^4 = 2
  AX2_BY4_1,  // a X^2 - b Y^4 = 1
};

struct SubEquation {
  SubEquationTag tag;
  QuarticForm form;
  Nat a;  // coefficient of v^2 (1 for the X^2 - D Y^4 = 1 form)
  Nat b;  // coefficient of u^4
  unsigned rhs;
};

/// Which sub-equations apply to (p, A), by parity of p and A, in tag order.
std::vector<SubEquationTag> decompose(const Nat& p, const Nat& A);

/// Coefficients of `tag` for (p, A). Throws std::invalid_argument if the tag
/// does not belong to decompose(p, A).
SubEquation sub_equation(SubEquationTag tag, const Nat& p, const Nat& A);

}  // namespace pellcount
