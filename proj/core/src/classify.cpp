#include "pellcount/classify.hpp"

#include <algorithm>
#include <initializer_list>

namespace pellcount {
namespace {

using Pair = std::pair<unsigned, unsigned>;

bool in(Pair needle, std::initializer_list<Pair> hay) {
  return std::find(hay.begin(), hay.end(), needle) != hay.end();
}

unsigned umod(const Nat& n, unsigned long m) {
  return static_cast<unsigned>(mpz_fdiv_ui(n.get_mpz_t(), m));
}

}  // namespace

ClassLabel label_of(const Nat& p, const Nat& A) {
  ClassLabel l;
  l.p_is_two = (p == 2);
  l.A_odd = mpz_odd_p(A.get_mpz_t()) != 0;
  l.A_mod = umod(A, l.A_odd ? 8 : 4);
  l.p_mod = umod(p, 8);
  l.legendre = l.p_is_two ? 0 : jacobi(-2 * A, p);
  l.exceptional = l.p_is_two && A == 32 * 1785;
  return l;
}

bool class_admits(SubEquationTag tag, const ClassLabel& l) {
  using T = SubEquationTag;
  const Pair ap{l.A_mod, l.p_mod};
  const bool p1mod4 = l.p_mod % 4 == 1;
  switch (tag) {
    case T::E1:
    case T::E6:
    case T::E9:
    case T::P2Odd:
      return true;
    case T::E2:
      return l.legendre == 1 &&
             in(ap, {{1, 1}, {3, 1}, {5, 1}, {7, 1}, {1, 3}, {5, 3}, {3, 7}, {7, 7}});
    case T::E3:
      return in(ap, {{7, 1}, {7, 7}});
    case T::E4:
      return l.legendre == 1 && in(ap, {{1, 3}, {3, 5}, {5, 7}, {7, 1}});
    case T::E5:
      return l.legendre == 1 && p1mod4;
    case T::E7:
      return l.A_mod == 2 && l.legendre == 1;
    case T::E8:
      return l.A_mod == 2;
  }
  return false;
}

unsigned per_equation_cap(SubEquationTag tag, const ClassLabel& l) {
  using T = SubEquationTag;
  if (!class_admits(tag, l)) return 0;
  switch (tag) {
    case T::E3:
      return 2;
    case T::E4:
      return l.p_mod % 4 == 1 ? 2 : 1;
    case T::E9:
      // A' even: at most one, unless A' = 16 * 1785.
      return (l.A_mod == 0 && !l.exceptional) ? 1 : 2;
    default:
      return 1;
  }
}

BoundReport proved_bound(const Nat& p, const Nat& A) {
  BoundReport r;
  r.label = label_of(p, A);
  for (SubEquationTag t : decompose(p, A)) {
    const unsigned cap = per_equation_cap(t, r.label);
    r.per_eq_caps.emplace_back(t, cap);
    r.proved += cap;
  }
  r.stated = stated_bound(p, A);
  r.conjectured = conjectured_bound(p, A);
  return r;
}

unsigned stated_bound(const Nat& p, const Nat& A) {
  const ClassLabel l = label_of(p, A);
  const Pair ap{l.A_mod, l.p_mod};
  if (l.A_odd) {
    if (l.p_is_two) return 1;
    if (l.legendre != 1) return in(ap, {{7, 1}, {7, 7}}) ? 3 : 1;
    if (in(ap, {{1, 5}, {1, 7}, {3, 3}, {5, 5}, {7, 3}, {7, 5}})) return 1;
    if (in(ap, {{1, 1}, {3, 1}, {3, 7}, {5, 1}, {5, 3}, {5, 7}})) return 2;
    if (in(ap, {{1, 3}, {3, 5}})) return 3;
    if (ap == Pair{7, 7}) return 4;
    return 6;  // (7, 1)
  }
  if (l.p_is_two) return (l.A_mod == 0 && A != 64 * 1785) ? 1 : 2;
  if (l.legendre != 1) return l.A_mod == 0 ? 1 : 2;
  const unsigned p4 = l.p_mod % 4;
  if (l.A_mod == 0) return p4 == 3 ? 1 : 2;
  return p4 == 3 ? 3 : 4;
}

std::optional<unsigned> conjectured_bound(const Nat& p, const Nat& A) {
  if (p == 2 || A <= 1 || mpz_even_p(A.get_mpz_t())) return std::nullopt;
  const Pair ap{umod(A, 8), umod(p, 8)};
  if (in(ap, {{1, 1}, {1, 5}, {1, 7}, {3, 1}, {3, 3}, {3, 7}, {5, 1}, {5, 5}, {5, 7}, {7, 3}, {7, 5}}))
    return 1;
  if (in(ap, {{1, 3}, {7, 1}})) return 2;
  if (in(ap, {{3, 5}, {7, 7}})) return 3;
  return std::nullopt;
}

}  // namespace pellcount
