#include "pellcount/intmath.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace pellcount {
namespace {

template <unsigned M>
constexpr std::array<bool, M> square_residues() {
  std::array<bool, M> table{};
  for (unsigned i = 0; i < M; ++i) table[(i * i) % M] = true;
  return table;
}

constexpr auto kSq64 = square_residues<64>();
constexpr auto kSq63 = square_residues<63>();
constexpr auto kSq65 = square_residues<65>();
constexpr auto kSq11 = square_residues<11>();
constexpr unsigned long kFilterModulus = 64ul * 63ul * 65ul * 11ul;

bool passes_residue_filter(unsigned long r) {
  return kSq64[r % 64] && kSq63[r % 63] && kSq65[r % 65] && kSq11[r % 11];
}

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

constexpr std::array<unsigned long, 13> kMillerRabinBases = {2,  3,  5,  7,  11, 13, 17,
                                                             19, 23, 29, 31, 37, 41};

// n odd, n > base, n - 1 = d * 2^s.
bool strong_probable_prime(const Nat& n, const Nat& d, mp_bitcnt_t s, unsigned long base) {
  const Nat n_minus_1 = n - 1;
  Nat x;
  const Nat b = base;
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Miller-Rabin on the fixed base set, no range check.
bool passes_miller_rabin(const Nat& n) {
  if (n < 2) return false;
  for (unsigned long p : kMillerRabinBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  const Nat n_minus_1 = n - 1;
  const mp_bitcnt_t s = mpz_scan1(n_minus_1.get_mpz_t(), 0);
  Nat d;
  mpz_tdiv_q_2exp(d.get_mpz_t(), n_minus_1.get_mpz_t(), s);
  return std::all_of(kMillerRabinBases.begin(), kMillerRabinBases.end(),
                     [&](unsigned long b) { return strong_probable_prime(n, d, s, b); });
}

constexpr std::uint64_t kRhoIterationsPerRound = 1u << 14;

// Brent's variant of Pollard rho with batched gcds. Returns a proper factor.
std::optional<Nat> rho_factor(const Nat& n, std::uint64_t rounds) {
  if (mpz_even_p(n.get_mpz_t())) return Nat(2);
  const auto step = [&n](Nat& v, unsigned long c) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  constexpr std::uint64_t kBatch = 128;
  for (std::uint64_t round = 1; round <= rounds; ++round) {
    const unsigned long c = static_cast<unsigned long>(round);
    Nat y = 2, x, ys, q = 1, g = 1, diff;
    std::uint64_t r = 1;
    while (g == 1 && r <= kRhoIterationsPerRound) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y, c);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y, c);
          diff = x - y;
          q *= abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (g == n) {
      // Batch overshot; replay one step at a time.
      do {
        step(ys, c);
        diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

struct Certifier {
  Nat trial_square;  // every prime factor of the inputs exceeds sqrt of this
  std::uint64_t rho_rounds;

  // True when m (all of whose prime factors exceed the trial bound) is
  // provably prime.
  bool certainly_prime(const Nat& m) const {
    if (m < trial_square) return true;
    return m < primality_bound() && passes_miller_rabin(m);
  }

  bool certainly_composite(const Nat& m) const {
    return m >= trial_square && !passes_miller_rabin(m);
  }

  // A proven prime factor of m, or empty when the budget runs out.
  std::optional<Nat> prime_factor(const Nat& m, int depth = 0) const {
    if (certainly_prime(m)) return m;
    if (depth > 64) return std::nullopt;
    if (auto r = as_perfect_square(m)) return prime_factor(*r, depth + 1);
    if (!certainly_composite(m)) return std::nullopt;
    auto f = rho_factor(m, rho_rounds);
    if (!f) return std::nullopt;
    Nat other = m / *f;
    const Nat& smaller = *f < other ? *f : other;
    const Nat& larger = *f < other ? other : *f;
    if (auto q = prime_factor(smaller, depth + 1)) return q;
    return prime_factor(larger, depth + 1);
  }
};

}  // namespace

Nat isqrt(const Nat& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  Nat r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Nat> as_perfect_square(const Nat& n) {
  if (n < 0) return std::nullopt;
  if (!passes_residue_filter(mpz_fdiv_ui(n.get_mpz_t(), kFilterModulus))) return std::nullopt;
  Nat r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return r;
}

std::optional<std::uint64_t> as_perfect_square(u128 n) {
  if (!passes_residue_filter(static_cast<unsigned long>(n % kFilterModulus))) return std::nullopt;
  // Integer Newton iteration from an overestimate; converges monotonically.
  u128 x = n;
  if (x > 1) {
    const int bits = 128 - (static_cast<std::uint64_t>(n >> 64) != 0
                                ? __builtin_clzll(static_cast<std::uint64_t>(n >> 64))
                                : 64 + __builtin_clzll(static_cast<std::uint64_t>(n) | 1));
    x = static_cast<u128>(1) << ((bits + 1) / 2);
    for (;;) {
      const u128 y = (x + n / x) / 2;
      if (y >= x) break;
      x = y;
    }
  }
  if (x * x != n) return std::nullopt;
  return static_cast<std::uint64_t>(x);
}

std::uint64_t q_adic_valuation(const Nat& q, const Nat& m) {
  if (q < 2) throw std::invalid_argument("q_adic_valuation: q must be >= 2");
  if (m < 1) throw std::invalid_argument("q_adic_valuation: m must be >= 1");
  if (q == 2) return mpz_scan1(m.get_mpz_t(), 0);
  Nat rest = m;
  std::uint64_t e = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), q.get_mpz_t());
    ++e;
  }
  return e;
}

int jacobi(const Nat& a_in, const Nat& n_in) {
  if (n_in < 1 || mpz_even_p(n_in.get_mpz_t()))
    throw std::invalid_argument("jacobi: modulus must be odd and positive");
  Nat n = n_in;
  Nat a;
  mpz_fdiv_r(a.get_mpz_t(), a_in.get_mpz_t(), n.get_mpz_t());
  int result = 1;
  while (a != 0) {
    const mp_bitcnt_t twos = mpz_scan1(a.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), twos);
    const unsigned long n8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
    if ((twos & 1) && (n8 == 3 || n8 == 5)) result = -result;
    swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) result = -result;
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  }
  return n == 1 ? result : 0;
}

const Nat& primality_bound() {
  // Smallest strong pseudoprime to all of the bases 2..41.
  static const Nat bound("3317044064679887385961981");
  return bound;
}

bool is_prime(const Nat& n) {
  if (n >= primality_bound())
    throw std::out_of_range("is_prime: argument outside the proven Miller-Rabin range");
  return passes_miller_rabin(n);
}

std::span<const std::uint32_t> small_primes(std::uint32_t limit) {
  static const std::vector<std::uint32_t> table = sieve_primes(kSmallPrimeTableLimit);
  const auto end = std::upper_bound(table.begin(), table.end(), limit);
  return {table.data(), static_cast<std::size_t>(end - table.begin())};
}

SquarefreeSplit squarefree_split(const Nat& n, const FactorEffort& effort) {
  if (n < 1) throw std::invalid_argument("squarefree_split: n must be >= 1");
  if (effort.trial_bound < 2) throw std::invalid_argument("squarefree_split: trial_bound < 2");

  SquarefreeSplit out{1, 1, {}};
  Nat rest = n;

  const auto strip = [&](unsigned long q) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), q)) return;
    unsigned e = 0;
    do {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
      ++e;
    } while (mpz_divisible_ui_p(rest.get_mpz_t(), q));
    if (e & 1) {
      out.known *= q;
      out.known_primes.emplace_back(q);
    }
  };

  // Trial division; stops early once rest is 1 or provably prime.
  const std::uint64_t bound = effort.trial_bound;
  bool rest_is_prime = false;
  const auto check_done = [&](std::uint64_t q) {
    Nat qq = q;
    qq *= q;
    if (qq > rest) {
      rest_is_prime = rest > 1;
      return true;
    }
    return false;
  };
  bool finished = false;
  for (std::uint32_t q : small_primes(static_cast<std::uint32_t>(
           std::min<std::uint64_t>(bound, kSmallPrimeTableLimit)))) {
    if (check_done(q)) {
      finished = true;
      break;
    }
    strip(q);
  }
  if (!finished && bound > kSmallPrimeTableLimit) {
    for (std::uint64_t q = kSmallPrimeTableLimit + 1; q <= bound; q += 2) {
      if (check_done(q)) {
        finished = true;
        break;
      }
      strip(static_cast<unsigned long>(q));
    }
  }
  if (rest_is_prime) {
    out.known *= rest;
    out.known_primes.push_back(rest);
    return out;
  }
  if (rest == 1) return out;

  Certifier cert{Nat(bound) * Nat(bound), effort.rho_rounds};
  while (rest != 1) {
    if (cert.certainly_prime(rest)) {
      out.known *= rest;
      out.known_primes.push_back(rest);
      break;
    }
    if (as_perfect_square(rest)) break;
    auto q = cert.prime_factor(rest);
    if (!q) {
      out.unresolved = rest;
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), q->get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), q->get_mpz_t());
      ++e;
    }
    if (e & 1) {
      out.known *= *q;
      out.known_primes.push_back(*q);
    }
  }
  std::sort(out.known_primes.begin(), out.known_primes.end());
  return out;
}

std::optional<Nat> squarefree_part(const Nat& n, const FactorEffort& effort) {
  SquarefreeSplit split = squarefree_split(n, effort);
  if (!split.complete()) return std::nullopt;
  return split.known;
}

}  // namespace pellcount
