#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "pellcount/oracle.hpp"
#include "pellcount/reduction.hpp"
#include "record.hpp"
#include "sweep.hpp"

namespace pellcount::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Nat parse_nat(const std::string& name, const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(name + " must be a non-negative decimal integer, got '" + s + "'");
  return Nat(s);
}

Instance parse_instance(const std::string& p, const std::string& A, bool allow_small_A) {
  Instance inst{parse_nat("--p", p), parse_nat("--A", A), allow_small_A};
  validate(inst);
  return inst;
}

QuarticCaps make_caps(std::uint64_t ell_cap, std::uint64_t odd_power_cap) {
  QuarticCaps caps;
  caps.ell_cap = ell_cap;
  caps.odd_power_cap = odd_power_cap;
  try {
    validate(caps);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return caps;
}

std::string legendre_str(const ClassLabel& l) {
  if (l.p_is_two) return "na";
  return l.legendre > 0 ? "+1" : std::to_string(l.legendre);
}

std::string opt_str(const std::optional<unsigned>& v) { return v ? std::to_string(*v) : "-"; }

void print_header(std::ostream& out, const Nat& p, const Nat& A, const BoundReport& b) {
  out << "y^2 = " << p.get_str() << " x (" << A.get_str() << " x^2 + 2)\n";
  out << "class: A mod " << (b.label.A_odd ? 8 : 4) << " = " << b.label.A_mod << ", p mod 8 = " << b.label.p_mod
      << ", (-2A/p) = " << legendre_str(b.label) << "\n";
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i)
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << r[i];
    out << "\n";
  }
}

template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvalidInstance& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

void check_ranges(std::uint32_t p_max, std::uint32_t A_max, unsigned jobs) {
  if (p_max < 2 || A_max < 2) throw UsageError("--p-max and --A-max must be >= 2");
  if (p_max >= kSmallPrimeTableLimit) throw UsageError("--p-max must be below " + std::to_string(kSmallPrimeTableLimit));
  if (jobs < 1) throw UsageError("--jobs must be >= 1");
}

}  // namespace

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = parse_instance(opt.p, opt.A, opt.allow_small_A);
    const QuarticCaps caps = make_caps(opt.ell_cap, opt.odd_power_cap);
    const SolveOutcome res = solve_all(inst, caps, SolveMode::Fast);

    if (opt.json) {
      out << to_json(make_record(res)).dump() << "\n";
    } else {
      print_header(out, inst.p, inst.A, res.bound);
      out << "proved bound " << res.bound.proved << ", conjectured " << opt_str(res.bound.conjectured) << "\n\n";
      std::vector<std::vector<std::string>> rows{{"x", "y", "sub", "u", "v"}};
      for (const Solution& s : res.solutions)
        rows.push_back({s.x.get_str(), s.y.get_str(), std::string(to_string(s.certificate->tag)),
                        s.certificate->u.get_str(), s.certificate->v.get_str()});
      print_table(out, rows);
      out << "\n" << res.solutions.size() << (res.solutions.size() == 1 ? " solution, " : " solutions, ")
          << (res.complete ? "complete" : "possibly incomplete") << "\n";
      if (!res.notes.empty()) out << "notes: " << res.notes << "\n";
    }
    for (const std::string& f : res.findings) err << "finding: " << f << "\n";
    if (!res.findings.empty()) return kFinding;
    return res.complete ? kClean : kIncomplete;
  });
}

int cmd_classify(const ClassifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = parse_instance(opt.p, opt.A, opt.allow_small_A);
    const BoundReport b = proved_bound(inst.p, inst.A);
    if (opt.json) {
      Json j = to_json(make_record(inst.p, inst.A, b));
      j.erase("complete");
      j.erase("notes");
      Json caps;
      for (const auto& [tag, cap] : b.per_eq_caps) caps[std::string(to_string(tag))] = cap;
      j["per_equation_caps"] = std::move(caps);
      j["stated_bound"] = b.stated;
      out << j.dump() << "\n";
      return kClean;
    }
    print_header(out, inst.p, inst.A, b);
    out << "sub-equation caps:";
    for (const auto& [tag, cap] : b.per_eq_caps) out << " " << to_string(tag) << " " << cap;
    out << "\nproved bound: " << b.proved << "\n";
    if (b.stated != b.proved) out << "stated bound: " << b.stated << "\n";
    out << "conjectured bound: " << opt_str(b.conjectured) << "\n";
    return kClean;
  });
}

namespace {

struct VerifyResult {
  OutputRecord record;
  std::vector<std::string> violations;
  bool complete = true;
  std::size_t solutions = 0;
};

VerifyResult verify_instance(const GridPoint& g, std::uint64_t x_max) {
  VerifyResult r;
  const Nat p = g.p, A = g.A;
  try {
    const SolveOutcome res = solve_all({p, A, false}, {}, SolveMode::Verify);
    r.record = make_record(res);
    r.complete = res.complete;
    r.solutions = res.solutions.size();
    r.violations = res.findings;

    std::set<std::pair<Nat, Nat>> solved, brute;
    for (const Solution& s : res.solutions)
      if (s.x <= x_max) solved.emplace(s.x, s.y);
    for (const Solution& s : oracle::brute_eqM(p, A, x_max)) brute.emplace(s.x, s.y);
    for (const auto& [x, y] : solved)
      if (!brute.contains({x, y}))
        r.violations.push_back("solver point (" + x.get_str() + "," + y.get_str() + ") missed by the oracle");
    for (const auto& [x, y] : brute)
      if (!solved.contains({x, y})) {
        const std::string what = "oracle point (" + x.get_str() + "," + y.get_str() + ") missed by the solver";
        if (res.complete) r.violations.push_back(what);
        else r.record.notes += (r.record.notes.empty() ? "" : "; ") + what;
      }
  } catch (const std::exception& e) {
    r.record = make_record(p, A, proved_bound(p, A));
    r.violations.push_back(std::string("error: ") + e.what());
  }
  return r;
}

}  // namespace

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_ranges(opt.p_max, opt.A_max, opt.jobs);
    if (opt.x_max < 1) throw UsageError("--x-max must be >= 1");
    std::ofstream file;
    if (!opt.out.empty()) {
      file.open(opt.out);
      if (!file) throw UsageError("cannot open " + opt.out);
    }

    const auto t0 = std::chrono::steady_clock::now();
    const auto grid = make_grid(opt.p_max, 2, opt.A_max, false);
    const auto results = run_grid(grid, opt.jobs, [&](const GridPoint& g) { return verify_instance(g, opt.x_max); });

    std::size_t solutions = 0, violating = 0, incomplete = 0;
    for (const VerifyResult& r : results) {
      solutions += r.solutions;
      if (!r.complete) {
        ++incomplete;
        out << "incomplete: p=" << r.record.p.get_str() << " A=" << r.record.A.get_str() << ": " << r.record.notes
            << "\n";
      }
      if (r.violations.empty()) continue;
      ++violating;
      for (const std::string& v : r.violations)
        out << "violation: p=" << r.record.p.get_str() << " A=" << r.record.A.get_str() << ": " << v << "\n";
      if (file) {
        Json j = to_json(r.record);
        j["violations"] = r.violations;
        file << j.dump() << "\n";
      }
    }
    out << "instances " << results.size() << ", solutions " << solutions << ", violations " << violating
        << ", incomplete " << incomplete << "\n";
    if (opt.verbose) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      err << "verify: " << grid.size() << " instances, x_max " << opt.x_max << ", " << opt.jobs << " jobs, "
          << std::fixed << std::setprecision(2) << dt.count() << " s\n";
    }
    if (violating) return kFinding;
    return incomplete ? kIncomplete : kClean;
  });
}

namespace {

struct SurveyResult {
  SolveOutcome outcome;
  std::string error;
};

}  // namespace

int cmd_survey(const SurveyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_ranges(opt.p_max, opt.A_max, opt.jobs);
    std::ofstream file;
    if (!opt.out.empty()) {
      file.open(opt.out);
      if (!file) throw UsageError("cannot open " + opt.out);
    }
    std::ostream& csv = opt.out.empty() ? out : file;

    const auto t0 = std::chrono::steady_clock::now();
    const auto grid = make_grid(opt.p_max, opt.odd_only ? 3 : 2, opt.A_max, opt.odd_only);
    const auto results = run_grid(grid, opt.jobs, [](const GridPoint& g) {
      SurveyResult r;
      try {
        r.outcome = solve_all({Nat(g.p), Nat(g.A), false}, {}, SolveMode::Fast);
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      return r;
    });

    struct ClassStats {
      std::size_t instances = 0;
      std::size_t max_count = 0;
      std::optional<unsigned> conjectured;
    };
    std::map<std::pair<unsigned, unsigned>, ClassStats> classes;
    bool finding = false, incomplete = false;

    csv << "A,p,A_mod8,p_mod8,legendre,count,proved_bound,conjectured_bound\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const GridPoint& g = grid[i];
      const SurveyResult& r = results[i];
      if (!r.error.empty()) {
        err << "error: p=" << g.p << " A=" << g.A << ": " << r.error << "\n";
        finding = true;
        continue;
      }
      const SolveOutcome& o = r.outcome;
      const std::size_t count = o.solutions.size();
      const auto& conj = o.bound.conjectured;
      csv << g.A << "," << g.p << "," << g.A % 8 << "," << g.p % 8 << ","
          << (o.bound.label.p_is_two ? "na" : std::to_string(o.bound.label.legendre)) << "," << count << ","
          << o.bound.proved << "," << (conj ? std::to_string(*conj) : "") << "\n";

      ClassStats& c = classes[{g.A % 8, g.p % 8}];
      ++c.instances;
      c.max_count = std::max(c.max_count, count);
      c.conjectured = conj;

      if (!o.complete) {
        incomplete = true;
        err << "incomplete: p=" << g.p << " A=" << g.A << ": " << o.notes << "\n";
      }
      for (const std::string& f : o.findings) {
        finding = true;
        err << "finding: p=" << g.p << " A=" << g.A << ": " << f << "\n";
      }
      if (conj && count > *conj) {
        finding = true;
        Json j;
        j["conjecture_counterexample"] = to_json(make_record(o));
        err << j.dump() << "\n";
      }
    }

    csv << "\nA_mod8,p_mod8,instances,max_count,conjectured_bound\n";
    for (const auto& [key, c] : classes)
      csv << key.first << "," << key.second << "," << c.instances << "," << c.max_count << ","
          << (c.conjectured ? std::to_string(*c.conjectured) : "") << "\n";

    if (opt.verbose) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      err << "survey: " << grid.size() << " instances, " << opt.jobs << " jobs, " << std::fixed
          << std::setprecision(2) << dt.count() << " s\n";
    }
    if (finding) return kFinding;
    return incomplete ? kIncomplete : kClean;
  });
}

}  // namespace pellcount::cli
