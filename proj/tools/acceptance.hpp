#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hf::acceptance {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string key;
  std::string title;
  double budget_seconds = 0; // wall-clock limit, 0 for none
  std::function<Outcome()> check;
};

struct Result {
  int id = 0;
  std::string key;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

const std::vector<Criterion> &criteria();

/// Runs the criteria selected by `only` (ids or keys, empty for all), printing
/// one PASS/FAIL line per criterion.  Throws std::invalid_argument for an
/// unknown selector.
std::vector<Result> run(const std::vector<std::string> &only, std::ostream &out);

} // namespace hf::acceptance
