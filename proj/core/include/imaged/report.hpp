#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "imaged/search.hpp"

namespace imaged {

/// Toolkit version string embedded in every report.
const char* version();

/// One verification step of a pipeline.
struct Stage {
  std::string name;
  bool pass = false;
  std::vector<std::string> counterexample;  // words or short descriptions; empty on pass
  std::map<std::string, std::int64_t> counts;
  std::string detail;
  double elapsed_ms = 0;
};

/// Outcome of a verification run, serializable as the shared JSON document
/// {theorem, pass, stages[], nodesVisited?, maxDepth?, elapsedMs, version}.
struct Report {
  std::string theorem;
  std::vector<Stage> stages;
  bool pass = false;
  std::optional<SearchReport> search;
  double elapsed_ms = 0;

  /// First failing stage, if any.
  [[nodiscard]] const Stage* failed_stage() const;

  /// Timing fields are written only when `with_timing` is set, so two runs
  /// of the same manifest serialize identically without them.
  [[nodiscard]] std::string to_json(bool with_timing = true, int indent = 2) const;
};

std::string search_report_json(const SearchReport& r, int indent = 2);

}  // namespace imaged
