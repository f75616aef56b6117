#pragma once

// Exact integer kernel shared by every other module. All quantities are
// unbounded GMP integers; nothing in here rounds.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pellcount {

using Nat = mpz_class;

/// Budget for squarefree_part. The trial bound must be at least 2.
struct FactorEffort {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_rounds = 64;
};

/// floor(sqrt(n)); throws std::domain_error for negative n.
Nat isqrt(const Nat& n);

/// r with r*r == n, or empty. Negative n is never a square.
std::optional<Nat> as_perfect_square(const Nat& n);

__extension__ using u128 = unsigned __int128;

/// Machine-word fast path used by the brute-force oracle.
std::optional<std::uint64_t> as_perfect_square(u128 n);

/// Largest e with q^e | m. Throws std::invalid_argument if q < 2 or m < 1.
std::uint64_t q_adic_valuation(const Nat& q, const Nat& m);

/// Jacobi symbol (a/n) for odd n >= 1; a may be negative.
/// Throws std::invalid_argument for even or non-positive n.
int jacobi(const Nat& a, const Nat& n);

/// Exclusive upper limit of the range where is_prime is proven correct
/// (deterministic Miller-Rabin on the first 13 prime bases).
const Nat& primality_bound();

/// Deterministic primality. Throws std::out_of_range for n >= primality_bound().
bool is_prime(const Nat& n);

/// Partial squarefree decomposition n = known * unresolved * v^2.
///
/// `known` is a product of distinct proven primes. `unresolved` is 1 when the
/// factorisation finished; otherwise it is a non-square cofactor whose prime
/// factors all exceed the trial bound and are coprime to `known`.
struct SquarefreeSplit {
  Nat known;
  Nat unresolved;
  std::vector<Nat> known_primes;  // the factors of `known`, ascending

  bool complete() const { return unresolved == 1; }
};

/// Throws std::invalid_argument for n < 1 or trial_bound < 2.
SquarefreeSplit squarefree_split(const Nat& n, const FactorEffort& effort);

/// The squarefree l with n = l*v^2, or empty when factoring did not finish
/// within `effort`. Callers must treat empty as unknown.
std::optional<Nat> squarefree_part(const Nat& n, const FactorEffort& effort = {});

/// Primes p <= limit, ascending, from a table built once per process.
/// Limits above kSmallPrimeTableLimit are clamped to it.
inline constexpr std::uint32_t kSmallPrimeTableLimit = 1u << 21;
std::span<const std::uint32_t> small_primes(std::uint32_t limit);

}  // namespace pellcount
