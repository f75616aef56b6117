#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace pellcount::cli;

  CLI::App app{"Positive integer solutions of y^2 = p x (A x^2 + 2)"};
  app.require_subcommand(1);
  const unsigned default_jobs = std::max(1u, std::thread::hardware_concurrency());

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "All positive solutions of one instance");
  s->add_option("--p", solve.p, "prime p")->required();
  s->add_option("--A", solve.A, "coefficient A >= 2")->required();
  s->add_flag("--allow-small-A", solve.allow_small_A, "accept A = 1");
  s->add_flag("--json", solve.json, "print one JSON record");
  s->add_option("--ell-cap", solve.ell_cap, "largest prime index examined for X^2 - DY^4 = 1")
      ->capture_default_str();
  s->add_option("--odd-power-cap", solve.odd_power_cap, "largest odd power examined for aX^2 - bY^4 = 1")
      ->capture_default_str();

  ClassifyOptions classify;
  auto* c = app.add_subcommand("classify", "Residue class and solution-count bounds");
  c->add_option("--p", classify.p, "prime p")->required();
  c->add_option("--A", classify.A, "coefficient A >= 2")->required();
  c->add_flag("--allow-small-A", classify.allow_small_A, "accept A = 1");
  c->add_flag("--json", classify.json, "print one JSON record");

  VerifyOptions verify;
  verify.jobs = default_jobs;
  auto* v = app.add_subcommand("verify", "Check bounds and oracle agreement over a (p, A) grid");
  v->add_option("--p-max", verify.p_max, "largest p")->required();
  v->add_option("--A-max", verify.A_max, "largest A")->required();
  v->add_option("--x-max", verify.x_max, "oracle search limit on x")->required();
  v->add_option("--jobs", verify.jobs, "worker threads")->capture_default_str();
  v->add_option("--out", verify.out, "write violating instances as JSON lines");
  v->add_flag("--verbose", verify.verbose, "timing on stderr");

  SurveyOptions survey;
  survey.jobs = default_jobs;
  auto* u = app.add_subcommand("survey", "Solution counts per instance and per residue class, as CSV");
  u->add_option("--p-max", survey.p_max, "largest p")->required();
  u->add_option("--A-max", survey.A_max, "largest A")->required();
  u->add_flag("--odd-only", survey.odd_only, "odd A and odd p only");
  u->add_option("--jobs", survey.jobs, "worker threads")->capture_default_str();
  u->add_option("--out", survey.out, "CSV path (default stdout)");
  u->add_flag("--verbose", survey.verbose, "timing on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kClean : kUsage;
  }

  if (*s) return cmd_solve(solve, std::cout, std::cerr);
  if (*c) return cmd_classify(classify, std::cout, std::cerr);
  if (*v) return cmd_verify(verify, std::cout, std::cerr);
  return cmd_survey(survey, std::cout, std::cerr);
}
