#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pellcount/quartic.hpp"

namespace pellcount::cli {

enum ExitCode : int {
  kClean = 0,
  kFinding = 1,
  kUsage = 2,
  kIncomplete = 3,
};

struct SolveOptions {
  std::string p;
  std::string A;
  bool allow_small_A = false;
  bool json = false;
  std::uint64_t ell_cap = QuarticCaps{}.ell_cap;
  std::uint64_t odd_power_cap = QuarticCaps{}.odd_power_cap;
};

struct ClassifyOptions {
  std::string p;
  std::string A;
  bool allow_small_A = false;
  bool json = false;
};

struct VerifyOptions {
  std::uint32_t p_max = 0;
  std::uint32_t A_max = 0;
  std::uint64_t x_max = 0;
  unsigned jobs = 1;
  std::string out;  // JSON lines of violating instances; empty = none
  bool verbose = false;
};

struct SurveyOptions {
  std::uint32_t p_max = 0;
  std::uint32_t A_max = 0;
  bool odd_only = false;
  unsigned jobs = 1;
  std::string out;  // CSV path; empty = stdout
  bool verbose = false;
};

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);
int cmd_classify(const ClassifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_survey(const SurveyOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace pellcount::cli
