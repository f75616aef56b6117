#include "pellcount/subequation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pellcount {

std::string_view to_string(SubEquationTag tag) {
  switch (tag) {
    case SubEquationTag::E1: return "E1";
    case SubEquationTag::E2: return "E2";
    case SubEquationTag::E3: return "E3";
    case SubEquationTag::E4: return "E4";
    case SubEquationTag::E5: return "E5";
    case SubEquationTag::E6: return "E6";
    case SubEquationTag::E7: return "E7";
    case SubEquationTag::E8: return "E8";
    case SubEquationTag::E9: return "E9";
    case SubEquationTag::P2Odd: return "P2ODD";
  }
  return "?";
}

std::optional<SubEquationTag> parse_tag(std::string_view name) {
  for (SubEquationTag t : kAllTags) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::vector<SubEquationTag> decompose(const Nat& p, const Nat& A) {
  using T = SubEquationTag;
  const bool odd_A = mpz_odd_p(A.get_mpz_t());
  if (p == 2) return odd_A ? std::vector{T::P2Odd} : std::vector{T::E9};
  if (odd_A) return {T::E1, T::E2, T::E3, T::E4};
  return {T::E5, T::E6, T::E7, T::E8};
}

SubEquation sub_equation(SubEquationTag tag, const Nat& p, const Nat& A) {
  const auto tags = decompose(p, A);
  if (std::find(tags.begin(), tags.end(), tag) == tags.end())
    throw std::invalid_argument(std::string("sub-equation ") + std::string(to_string(tag)) +
                                " does not arise for p=" + p.get_str() + ", A=" + A.get_str());
  using T = SubEquationTag;
  using F = QuarticForm;
  const Nat p2 = p * p;
  const Nat half = A / 2;
  switch (tag) {
    case T::E1: return {tag, F::X2_DY4_1, 1, 2 * A * p2, 1};
    case T::E2: return {tag, F::AX2_BY4_1, p, 2 * A, 1};
    case T::E3: return {tag, F::AX2_BY4_2, 1, A * p2, 2};
    case T::E4: return {tag, F::AX2_BY4_2, p, A, 2};
    case T::E5: return {tag, F::AX2_BY4_1, p, 4 * half, 1};
    case T::E6: return {tag, F::X2_DY4_1, 1, 4 * half * p2, 1};
    case T::E7: return {tag, F::AX2_BY4_1, 2 * p, half, 1};
    case T::E8: return {tag, F::AX2_BY4_1, 2, half * p2, 1};
    case T::E9: return {tag, F::X2_DY4_1, 1, half, 1};
    case T::P2Odd: return {tag, F::X2_DY4_1, 1, 8 * A, 1};
  }
  throw std::logic_error("unreachable");
}

}  // namespace pellcount
