#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "disting/catalog.hpp"

namespace disting {

struct CriterionInfo {
  std::string id;
  std::string title;
  /// Hours-scale; only run with VerifyOptions::long_run.
  bool long_run = false;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  int jobs = 1;
  const CatalogCache* cache = nullptr;
  bool long_run = false;
  /// Progress lines go here when set (never to the report stream).
  std::ostream* progress = nullptr;
};

/// The acceptance suite in report order.
const std::vector<CriterionInfo>& criteria();

/// Runs "all" or one criterion selected by its full id or its "ACnn" prefix.
/// Long items are part of "all" only with options.long_run, and selecting one
/// explicitly without it throws std::invalid_argument, as does an unknown id.
std::vector<CriterionResult> run_criteria(const std::string& selector, const VerifyOptions& options);

/// "PASS AC01-cycles  <title> (<seconds>s): <detail>"
std::string format_result(const CriterionResult& r);

}  // namespace disting
