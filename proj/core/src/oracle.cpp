#include "pellcount/oracle.hpp"

#include <optional>
#include <stdexcept>

namespace pellcount::oracle {
namespace {

std::optional<std::uint64_t> to_u64(const Nat& n) {
  if (n < 0 || !n.fits_ulong_p()) return std::nullopt;
  return n.get_ui();
}

// p x (A x^2 + 2) in 128 bits, or nullopt on overflow.
std::optional<u128> rhs128(std::uint64_t p, std::uint64_t A, std::uint64_t x) {
  u128 t;
  if (__builtin_mul_overflow(static_cast<u128>(x), static_cast<u128>(x), &t)) return std::nullopt;
  if (__builtin_mul_overflow(t, static_cast<u128>(A), &t)) return std::nullopt;
  if (__builtin_add_overflow(t, static_cast<u128>(2), &t)) return std::nullopt;
  if (__builtin_mul_overflow(t, static_cast<u128>(x), &t)) return std::nullopt;
  if (__builtin_mul_overflow(t, static_cast<u128>(p), &t)) return std::nullopt;
  return t;
}

}  // namespace

std::vector<Solution> brute_eqM(const Nat& p, const Nat& A, std::uint64_t x_max) {
  if (x_max < 1) throw std::invalid_argument("brute_eqM: x_max must be >= 1");
  std::vector<Solution> out;
  const auto p64 = to_u64(p);
  const auto A64 = to_u64(A);
  for (std::uint64_t x = 1; x <= x_max; ++x) {
    if (p64 && A64) {
      if (const auto r = rhs128(*p64, *A64, x)) {
        if (const auto y = as_perfect_square(*r))
          out.push_back({Nat(static_cast<unsigned long>(x)), Nat(static_cast<unsigned long>(*y)), std::nullopt});
        continue;
      }
    }
    const Nat X = static_cast<unsigned long>(x);
    if (const auto y = as_perfect_square(p * X * (A * X * X + 2))) out.push_back({X, *y, std::nullopt});
  }
  return out;
}

std::vector<std::pair<Nat, Nat>> brute_quartic(QuarticForm form, const Nat& a, const Nat& b,
                                               std::uint64_t y_max) {
  Nat coeff = 1;
  unsigned rhs = 1;
  switch (form) {
    case QuarticForm::X2_DY4_1: break;
    case QuarticForm::AX2_BY4_2: coeff = a; rhs = 2; break;
    case QuarticForm::AX2_BY4_1: coeff = a; break;
  }
  if (coeff < 1 || b < 1) throw std::invalid_argument("brute_quartic: coefficients must be positive");

  std::vector<std::pair<Nat, Nat>> out;
  for (std::uint64_t y = 1; y <= y_max; ++y) {
    const Nat Y = static_cast<unsigned long>(y);
    const Nat num = b * Y * Y * Y * Y + rhs;
    if (num % coeff != 0) continue;
    if (const auto X = as_perfect_square(num / coeff); X && *X >= 1) out.emplace_back(*X, Y);
  }
  return out;
}

}  // namespace pellcount::oracle
