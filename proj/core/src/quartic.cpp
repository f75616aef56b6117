#include "pellcount/quartic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pellcount/pell.hpp"
#include "pellcount/square_sieve.hpp"

namespace pellcount {
namespace {

const Nat kExceptionalSmall = 1785;
const Nat kExceptionalLarge = 16 * 1785;

unsigned long mod4(const Nat& n) { return mpz_fdiv_ui(n.get_mpz_t(), 4); }

// Where the lone solution of X^2 - D Y^4 = 1 could sit, given the
// squarefree part l of U_1 (Y^2 = U_l with l in {1, 2} or l prime = 3 mod 4).
enum class EllVerdict { NotEligible, Prime3Mod4, Unknown };

struct EllAnalysis {
  EllVerdict verdict = EllVerdict::Unknown;
  Nat prime;
  std::string why;
};

EllAnalysis analyse_ell(const SquarefreeSplit& s) {
  if (s.complete()) {
    if (s.known_primes.size() == 1 && mod4(s.known) == 3)
      return {EllVerdict::Prime3Mod4, s.known, "l = " + s.known.get_str()};
    if (s.known_primes.empty()) return {EllVerdict::NotEligible, 0, "l = 1"};
    if (s.known == 2) return {EllVerdict::NotEligible, 0, "l = 2"};
    return {EllVerdict::NotEligible, 0, "l is not a prime = 3 mod 4"};
  }
  // unresolved > 1 is a non-square whose primes exceed the trial bound.
  if (!s.known_primes.empty())
    return {EllVerdict::NotEligible, 0, "l has both small and large prime factors"};
  if (mod4(s.unresolved) == 1) return {EllVerdict::NotEligible, 0, "l = 1 mod 4"};
  return {EllVerdict::Unknown, 0, "squarefree part of U_1 unresolved"};
}

sieve::LinearRecurrence pell_recurrence(const PellFundamental& f) {
  return {1, 0, f.T1, f.D * f.U1, f.U1, f.T1};
}

std::vector<std::uint32_t> large_prime_3mod4_classes() {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 3; c < sieve::kIndexModulus; c += 4) {
    if (std::gcd(c, sieve::kIndexModulus) == 1 || c == 3 || c == 7 || c == 11) out.push_back(c);
  }
  return out;
}

std::vector<std::uint32_t> all_classes() {
  std::vector<std::uint32_t> out(sieve::kIndexModulus);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

void sort_by_y(std::vector<QuarticSolution>& sols) {
  std::sort(sols.begin(), sols.end(),
            [](const QuarticSolution& l, const QuarticSolution& r) { return l.Y < r.Y; });
  sols.erase(std::unique(sols.begin(), sols.end(),
                         [](const QuarticSolution& l, const QuarticSolution& r) {
                           return l.X == r.X && l.Y == r.Y;
                         }),
             sols.end());
}

void require_identity(const QuarticOutcome& out, const Nat& a, const Nat& b, unsigned long rhs,
                      const char* what) {
  for (const auto& s : out.solutions) {
    const Nat y2 = s.Y * s.Y;
    if (a * s.X * s.X - b * y2 * y2 != rhs)
      throw std::logic_error(std::string(what) + ": emitted pair fails re-substitution");
  }
}

}  // namespace

void validate(const QuarticCaps& caps) {
  if (caps.odd_power_cap < 3 || caps.odd_power_cap % 2 == 0)
    throw std::invalid_argument("odd_power_cap must be odd and >= 3");
  if (caps.odd_power_cap > kMaxPowerIndex || caps.ell_cap > kMaxPowerIndex)
    throw std::invalid_argument("power caps must not exceed " + std::to_string(kMaxPowerIndex));
  if (caps.factor_effort.trial_bound < 2) throw std::invalid_argument("trial_bound must be >= 2");
}

bool is_exceptional_discriminant(const Nat& D) {
  return D == kExceptionalSmall || D == kExceptionalLarge;
}

QuarticOutcome solve_x2_Dy4_1(const Nat& D, const QuarticCaps& caps) {
  validate(caps);
  if (D < 2) throw std::invalid_argument("solve_x2_Dy4_1: D must be >= 2");
  QuarticOutcome out;
  const auto eps = fundamental_norm1(D);
  if (!eps) {
    out.note = "D is a perfect square";
    return out;
  }

  const auto try_index = [&](std::uint64_t k, const QuadElement& e) {
    if (auto y = as_perfect_square(e.u)) out.solutions.push_back({e.t, *y, k});
  };
  const QuadElement e1{eps->T1, eps->U1};
  const QuadElement e2 = multiply(e1, e1, D);
  try_index(1, e1);
  try_index(2, e2);
  if (is_exceptional_discriminant(D)) try_index(4, multiply(e2, e2, D));

  if (!out.solutions.empty()) {
    out.note = "solutions at U_1/U_2 (or U_4) settle the count";
  } else {
    FactorEffort cheap = caps.factor_effort;
    cheap.rho_rounds = 0;
    EllAnalysis ell = analyse_ell(squarefree_split(eps->U1, cheap));

    bool settled = false;
    if (ell.verdict == EllVerdict::Unknown && caps.use_sieve &&
        sieve::excludes_all(pell_recurrence(*eps), large_prime_3mod4_classes())) {
      out.note = "congruence sieve excludes U_l square for every prime l = 3 mod 4";
      settled = true;
    }
    if (!settled && ell.verdict == EllVerdict::Unknown)
      ell = analyse_ell(squarefree_split(eps->U1, caps.factor_effort));

    if (!settled) {
      switch (ell.verdict) {
        case EllVerdict::NotEligible:
          out.note = ell.why + "; no solution";
          break;
        case EllVerdict::Prime3Mod4:
          if (ell.prime <= caps.ell_cap) {
            const std::uint64_t q = ell.prime.get_ui();
            try_index(q, power(e1, q, D));
            out.note = ell.why + "; checked U_" + std::to_string(q);
          } else {
            const std::uint32_t cls = mpz_fdiv_ui(ell.prime.get_mpz_t(), sieve::kIndexModulus);
            const std::vector<std::uint32_t> one{cls};
            if (caps.use_sieve && sieve::excludes_all(pell_recurrence(*eps), one)) {
              out.note = ell.why + " exceeds ell_cap; congruence sieve excludes U_l square";
            } else {
              out.status = Completeness::PossiblyIncomplete;
              out.note = ell.why + " exceeds ell_cap";
            }
          }
          break;
        case EllVerdict::Unknown:
          out.status = Completeness::PossiblyIncomplete;
          out.note = ell.why;
          break;
      }
    }
  }

  sort_by_y(out.solutions);
  require_identity(out, 1, D, 1, "solve_x2_Dy4_1");

  if (out.solutions.size() > 2)
    out.findings.push_back("more than two solutions of X^2-DY^4=1 for D=" + D.get_str());
  if (mpz_even_p(D.get_mpz_t()) && D != kExceptionalLarge && out.solutions.size() > 1)
    out.findings.push_back("even D=" + D.get_str() + " with two solutions of X^2-DY^4=1");
  if (out.solutions.size() == 2 && out.solutions[0].index == 1 && out.solutions[1].index == 2) {
    // U_2 = 2 T_1 U_1 with both square forces 2 v(Y_2) = 1 + v(T_1) + 2 v(Y_1).
    const auto lhs = 2 * q_adic_valuation(2, out.solutions[1].Y);
    const auto rhs = 1 + q_adic_valuation(2, eps->T1) + 2 * q_adic_valuation(2, out.solutions[0].Y);
    if (lhs != rhs) out.findings.push_back("2-adic identity fails for D=" + D.get_str());
  }
  return out;
}

QuarticOutcome solve_ax2_by4_2(const Nat& a, const Nat& b) {
  if (a < 1 || b < 1 || mpz_even_p(a.get_mpz_t()) || mpz_even_p(b.get_mpz_t()))
    throw std::invalid_argument("solve_ax2_by4_2: a and b must be odd and positive");
  QuarticOutcome out;
  const auto m = minimal_ab(a, b, 2);
  if (!m) {
    out.note = "aX^2-bY^2=2 has no positive solution";
    return out;
  }
  const ABPower third = ab_odd_power(*m, 3);
  const auto y1 = as_perfect_square(m->b1);
  const auto y3 = as_perfect_square(third.bk);
  if (y1) out.solutions.push_back({m->a1, *y1, 1});
  if (y3) out.solutions.push_back({third.ak, *y3, 3});
  if (!y1 && y3) out.findings.push_back("b_3 square while b_1 is not, for (a,b)=(" + a.get_str() + "," + b.get_str() + ")");
  out.note = "b_1 and b_3 decide the solution set";
  sort_by_y(out.solutions);
  require_identity(out, a, b, 2, "solve_ax2_by4_2");
  return out;
}

QuarticOutcome solve_ax2_by4_1(const Nat& a, const Nat& b, const QuarticCaps& caps) {
  validate(caps);
  if (a < 2 || b < 1) throw std::invalid_argument("solve_ax2_by4_1: need a >= 2 and b >= 1");
  QuarticOutcome out;
  const auto m = minimal_ab(a, b, 1);
  if (!m) {
    out.note = "aX^2-bY^2=1 has no positive solution";
    return out;
  }
  for (std::uint64_t k = 1; k <= caps.odd_power_cap; k += 2) {
    const ABPower pk = ab_odd_power(*m, k);
    if (auto y = as_perfect_square(pk.bk)) out.solutions.push_back({pk.ak, *y, k});
  }
  if (!out.solutions.empty()) {
    out.note = "solution found among odd powers";
  } else if (caps.use_sieve &&
             sieve::excludes_all({m->a1, m->b1, m->alpha_squared.t, b * m->alpha_squared.u,
                                  a * m->alpha_squared.u, m->alpha_squared.t},
                                 all_classes())) {
    out.note = "congruence sieve excludes b_k square for every odd k";
  } else {
    out.status = Completeness::PossiblyIncomplete;
    out.note = "odd_power_cap reached";
  }
  if (out.solutions.size() > 1)
    out.findings.push_back("two solutions of aX^2-bY^4=1 for (a,b)=(" + a.get_str() + "," + b.get_str() + ")");
  sort_by_y(out.solutions);
  require_identity(out, a, b, 1, "solve_ax2_by4_1");
  return out;
}

}  // namespace pellcount
