#pragma once

// Executable acceptance checks. Each criterion runs independent computations
// against each other (enumeration, Weyl dimension formula, Demazure
// characters, closed forms) and records one Check per comparison.

#include "io.hpp"

#include <string>
#include <vector>

namespace smtkit::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct Options {
  unsigned long long seed = 20240611;
  int max_rank = 4;  // lattice classification sweep
  EnumerationOptions caps;
};

struct CriterionResult {
  int id = 0;
  std::string key;    // subcommand name
  std::string title;
  std::vector<Check> checks;
  io::json details = io::json::object();
  double seconds = 0;
  double budget_seconds = 0;

  bool pass() const;
};

struct CriterionInfo {
  int id;
  std::string key;
  std::string title;
  double budget_seconds;
};
const std::vector<CriterionInfo>& criteria();

// id in 1..10.
CriterionResult run(int id, const Options& opts = {});
// Looks the criterion up by subcommand key; throws std::invalid_argument.
CriterionResult run(const std::string& key, const Options& opts = {});

// Wall time is included only on request; everything else is deterministic.
io::json to_json(const CriterionResult& r, bool timing = false);

}  // namespace smtkit::verify
