#include "pellcount/pell.hpp"

#include <stdexcept>

namespace pellcount {
namespace {

void check_power_index(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("power index must be >= 1");
  if (k > kMaxPowerIndex) throw std::out_of_range("power index exceeds kMaxPowerIndex");
}

std::optional<Nat> exact_square_root_of_quotient(const Nat& num, const Nat& den) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
  Nat q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return as_perfect_square(q);
}

// Unit-square characterisation; see the comment above minimal_ab.
std::optional<MinimalAB> from_unit_square(const Nat& a, const Nat& b, unsigned N) {
  auto eps = fundamental_norm1(a * b);
  if (!eps) return std::nullopt;
  const Nat scale_a = (N == 1) ? Nat(2 * a) : a;
  const Nat scale_b = (N == 1) ? Nat(2 * b) : b;
  auto a1 = exact_square_root_of_quotient(eps->T1 + 1, scale_a);
  if (!a1) return std::nullopt;
  auto b1 = exact_square_root_of_quotient(eps->T1 - 1, scale_b);
  if (!b1) return std::nullopt;
  return MinimalAB{a, b, N, *a1, *b1, {}};
}

void fill_alpha_squared(MinimalAB& m) {
  // alpha^2 = (a a1^2 + b b1^2)/N + (2 a1 b1 / N) sqrt(ab); integral for N in {1, 2}.
  Nat t = m.a * m.a1 * m.a1 + m.b * m.b1 * m.b1;
  Nat u = 2 * m.a1 * m.b1;
  mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), m.N);
  mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), m.N);
  m.alpha_squared = {std::move(t), std::move(u)};
}

}  // namespace

QuadElement multiply(const QuadElement& lhs, const QuadElement& rhs, const Nat& D) {
  return {lhs.t * rhs.t + D * lhs.u * rhs.u, lhs.t * rhs.u + lhs.u * rhs.t};
}

QuadElement power(const QuadElement& base, std::uint64_t k, const Nat& D) {
  QuadElement result{1, 0};
  QuadElement sq = base;
  while (k != 0) {
    if (k & 1) result = multiply(result, sq, D);
    k >>= 1;
    if (k != 0) sq = multiply(sq, sq, D);
  }
  return result;
}

std::optional<PellFundamental> fundamental_norm1(const Nat& D) {
  if (D < 2) throw std::invalid_argument("fundamental_norm1: D must be >= 2");
  const Nat a0 = isqrt(D);
  if (a0 * a0 == D) return std::nullopt;

  // PQa expansion of sqrt(D). After computing Q_{i+1}, the convergent
  // h_i/k_i satisfies h_i^2 - D k_i^2 = (-1)^(i+1) Q_{i+1}.
  Nat P = 0, Q = 1, a = a0;
  Nat h_prev = 1, h = a0;
  Nat k_prev = 0, k = 1;
  Nat tmp;
  for (std::uint64_t i = 0;; ++i) {
    P = a * Q - P;
    Q = (D - P * P) / Q;
    a = (a0 + P) / Q;
    if (Q == 1) {
      if ((i + 1) % 2 == 0) return PellFundamental{D, h, k};
      // Norm -1 convergent at an odd period length: square it.
      QuadElement sq = multiply({h, k}, {h, k}, D);
      return PellFundamental{D, std::move(sq.t), std::move(sq.u)};
    }
    tmp = a * h + h_prev;
    h_prev = std::move(h);
    h = std::move(tmp);
    tmp = a * k + k_prev;
    k_prev = std::move(k);
    k = std::move(tmp);
  }
}

PellPower norm1_power(const PellFundamental& f, std::uint64_t k) {
  check_power_index(k);
  QuadElement e = power({f.T1, f.U1}, k, f.D);
  return {std::move(e.t), std::move(e.u)};
}

// For N = 1, a > 1 (and N = 2 with a, b odd) the minimal alpha satisfies
// alpha^2 = eps_{ab}: alpha^2 is a norm-1 unit, an even power would put
// alpha itself in Z[sqrt(ab)], and dividing by eps^((k-1)/2) reaches a
// smaller solution otherwise. Hence a a1^2 = (T+1)/(2/N) and
// b b1^2 = (T-1)/(2/N), and solvability is decided by two square tests.
std::optional<MinimalAB> minimal_ab(const Nat& a, const Nat& b, unsigned N) {
  if (a < 1 || b < 1) throw std::invalid_argument("minimal_ab: a and b must be >= 1");
  if (N != 1 && N != 2) throw std::invalid_argument("minimal_ab: N must be 1 or 2");

  // ab square: (rX - sY)(rX + sY) = N/g has no positive solution for N <= 2.
  if (as_perfect_square(a * b)) return std::nullopt;

  std::optional<MinimalAB> out;
  if (N == 1 && a == 1) {
    auto eps = fundamental_norm1(b);
    out = MinimalAB{a, b, N, eps->T1, eps->U1, {}};
  } else if (N == 1) {
    out = from_unit_square(a, b, 1);
  } else {
    const bool a_even = mpz_even_p(a.get_mpz_t());
    const bool b_even = mpz_even_p(b.get_mpz_t());
    if (!a_even && !b_even) {
      out = from_unit_square(a, b, 2);
    } else if (a_even && b_even) {
      if (auto r = minimal_ab(a / 2, b / 2, 1)) out = MinimalAB{a, b, N, r->a1, r->b1, {}};
    } else if (a_even) {
      // b Y^2 even forces Y = 2Y': (a/2) X^2 - 2b Y'^2 = 1.
      if (auto r = minimal_ab(a / 2, 2 * b, 1)) out = MinimalAB{a, b, N, r->a1, 2 * r->b1, {}};
    } else {
      // a X^2 even forces X = 2X': 2a X'^2 - (b/2) Y^2 = 1.
      if (auto r = minimal_ab(2 * a, b / 2, 1)) out = MinimalAB{a, b, N, 2 * r->a1, r->b1, {}};
    }
  }
  if (out) fill_alpha_squared(*out);
  return out;
}

ABPower ab_odd_power(const MinimalAB& m, std::uint64_t k) {
  check_power_index(k);
  if (k % 2 == 0) throw std::invalid_argument("ab_odd_power: k must be odd");
  const QuadElement e = power(m.alpha_squared, (k - 1) / 2, m.a * m.b);
  return {m.a1 * e.t + m.b * m.b1 * e.u, m.b1 * e.t + m.a * m.a1 * e.u};
}

}  // namespace pellcount
