#include "pellcount/reduction.hpp"

#include <algorithm>

namespace pellcount {
namespace {

unsigned long umod(const Nat& n, unsigned long m) { return mpz_fdiv_ui(n.get_mpz_t(), m); }

std::string tag_str(SubEquationTag t) { return std::string(to_string(t)); }

std::string point_str(const Nat& x, const Nat& y) {
  return "(" + x.get_str() + "," + y.get_str() + ")";
}

}  // namespace

void validate(const Instance& inst) {
  if (inst.p < 2) throw InvalidInstance("p must be a prime");
  if (inst.p >= primality_bound())
    throw InvalidInstance("p exceeds the proven primality range (" + primality_bound().get_str() + ")");
  if (!is_prime(inst.p)) throw InvalidInstance("p = " + inst.p.get_str() + " is not prime");
  const Nat min_A = inst.allow_small_A ? 1 : 2;
  if (inst.A < min_A)
    throw InvalidInstance(inst.allow_small_A ? "A must be >= 1"
                                             : "A must be >= 2 (use allow_small_A for A = 1)");
}

bool filter_admits(SubEquationTag tag, const Nat& p, const Nat& A) {
  (void)sub_equation(tag, p, A);  // rejects tags foreign to (p, A)
  if (!class_admits(tag, label_of(p, A))) return false;
  if (tag == SubEquationTag::E6 || tag == SubEquationTag::E9) {
    if (as_perfect_square(A / 2)) return false;
  }
  return true;
}

QuarticOutcome solve_sub(SubEquationTag tag, const Nat& p, const Nat& A, const QuarticCaps& caps) {
  const SubEquation eq = sub_equation(tag, p, A);
  switch (eq.form) {
    case QuarticForm::X2_DY4_1:
      if (eq.b < 2) {
        QuarticOutcome empty;
        empty.note = "D is a perfect square";
        return empty;
      }
      return solve_x2_Dy4_1(eq.b, caps);
    case QuarticForm::AX2_BY4_2:
      return solve_ax2_by4_2(eq.a, eq.b);
    case QuarticForm::AX2_BY4_1:
      return solve_ax2_by4_1(eq.a, eq.b, caps);
  }
  throw std::logic_error("unreachable");
}

Solution lift(SubEquationTag tag, const Nat& p, const Nat& A, const Nat& u, const Nat& v) {
  const SubEquation eq = sub_equation(tag, p, A);
  const Nat u2 = u * u;
  if (u < 1 || v < 1 || eq.a * v * v - eq.b * u2 * u2 != eq.rhs)
    throw std::invalid_argument("lift: (u, v) does not solve " + tag_str(tag));

  using T = SubEquationTag;
  Nat x, y;
  switch (tag) {
    case T::E1: case T::E6: x = 2 * p * u2; y = 2 * p * u * v; break;
    case T::E2: case T::E5: x = 2 * u2;     y = 2 * p * u * v; break;
    case T::E3:             x = p * u2;     y = p * u * v;     break;
    case T::E4:             x = u2;         y = p * u * v;     break;
    case T::E7:             x = u2;         y = 2 * p * u * v; break;
    case T::E8:             x = p * u2;     y = 2 * p * u * v; break;
    case T::E9:             x = u2;         y = 2 * u * v;     break;
    case T::P2Odd:          x = 4 * u2;     y = 4 * u * v;     break;
  }
  if (!satisfies_curve(p, A, x, y))
    throw std::logic_error("lift: " + tag_str(tag) + " produced " + point_str(x, y) +
                           " which is not on the curve");
  return {std::move(x), std::move(y), Certificate{tag, u, v}};
}

SolveOutcome solve_all(const Instance& inst, const QuarticCaps& caps, SolveMode mode) {
  validate(inst);
  validate(caps);
  const Nat& p = inst.p;
  const Nat& A = inst.A;

  SolveOutcome out;
  out.instance = inst;
  out.bound = proved_bound(p, A);

  std::vector<std::string> notes;
  for (SubEquationTag tag : decompose(p, A)) {
    SubOutcome sub;
    sub.tag = tag;
    sub.admitted = filter_admits(tag, p, A);
    if (!sub.admitted && mode == SolveMode::Fast) {
      out.subs.push_back(std::move(sub));
      continue;
    }
    sub.solved = true;
    sub.outcome = solve_sub(tag, p, A, caps);
    const QuarticOutcome& q = sub.outcome;

    if (!sub.admitted && !q.solutions.empty())
      out.findings.push_back(tag_str(tag) + " is filtered out but has solutions");
    const unsigned cap = per_equation_cap(tag, out.bound.label);
    if (q.solutions.size() > cap)
      out.findings.push_back(tag_str(tag) + " has " + std::to_string(q.solutions.size()) +
                             " solutions, cap is " + std::to_string(cap));
    for (const std::string& f : q.findings) out.findings.push_back(tag_str(tag) + ": " + f);

    // A filter rejection is itself a proof of emptiness.
    if (sub.admitted && !q.complete()) {
      out.complete = false;
      notes.push_back(tag_str(tag) + ": " + q.note);
    }

    for (const QuarticSolution& s : q.solutions) {
      Solution sol = lift(tag, p, A, s.Y, s.X);
      if (tag == SubEquationTag::E2 && mpz_odd_p(s.Y.get_mpz_t()) && umod(p - 2 * A, 8) != 1)
        out.findings.push_back("E2 solution with odd u but p - 2A != 1 mod 8");
      out.solutions.push_back(std::move(sol));
    }
    out.subs.push_back(std::move(sub));
  }

  std::sort(out.solutions.begin(), out.solutions.end(), [](const Solution& l, const Solution& r) {
    return l.x != r.x ? l.x < r.x : l.y < r.y;
  });
  out.solutions.erase(
      std::unique(out.solutions.begin(), out.solutions.end(),
                  [](const Solution& l, const Solution& r) { return l.x == r.x && l.y == r.y; }),
      out.solutions.end());

  for (const Solution& s : out.solutions) {
    Nat g;
    const Nat rhs = A * s.x * s.x + 2;
    mpz_gcd(g.get_mpz_t(), s.x.get_mpz_t(), rhs.get_mpz_t());
    if (g != 1 && g != 2)
      out.findings.push_back("gcd(x, Ax^2+2) = " + g.get_str() + " at " + point_str(s.x, s.y));
    if (p == 2 && mpz_odd_p(A.get_mpz_t()) && (umod(s.x, 4) != 0 || umod(s.y, 4) != 0))
      out.findings.push_back("p = 2, odd A, but 4 does not divide x and y at " + point_str(s.x, s.y));
  }
  if (out.solutions.size() > out.bound.proved)
    out.findings.push_back(std::to_string(out.solutions.size()) + " solutions exceed the proved bound " +
                           std::to_string(out.bound.proved));

  for (std::size_t i = 0; i < notes.size(); ++i) out.notes += (i ? "; " : "") + notes[i];
  return out;
}

}  // namespace pellcount
