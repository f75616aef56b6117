#pragma once

// JSON form of one solved or classified instance. Big integers travel as
// decimal strings; small bookkeeping numbers as JSON numbers.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pellcount/classify.hpp"
#include "pellcount/reduction.hpp"

namespace pellcount::cli {

using Json = nlohmann::ordered_json;

struct OutputRecord {
  Nat p;
  Nat A;
  unsigned A_mod = 0;
  unsigned p_mod = 0;
  std::optional<int> legendre;  // absent for p = 2
  unsigned proved_bound = 0;
  std::optional<unsigned> conjectured_bound;
  std::optional<std::vector<Solution>> solutions;  // absent for classify
  bool complete = true;
  std::string notes;
};

class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OutputRecord make_record(const SolveOutcome& outcome);
OutputRecord make_record(const Nat& p, const Nat& A, const BoundReport& bound);

Json to_json(const OutputRecord& rec);

/// Inverse of to_json. Every solution is re-checked against the curve;
/// throws RecordError on malformed input or a point that is not on it.
OutputRecord parse_record(const Json& j);

}  // namespace pellcount::cli
