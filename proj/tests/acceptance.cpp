// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--long] [--jobs N] [id]
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "disting/parallel.hpp"
#include "disting/verify.hpp"

int main(int argc, char** argv) {
  disting::VerifyOptions options;
  options.jobs = disting::default_jobs();
  std::string selector = "all";
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--long")) {
      options.long_run = true;
    } else if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) {
      options.jobs = std::atoi(argv[++i]);
    } else {
      selector = argv[i];
    }
  }
  const auto cache = disting::CatalogCache::from_environment();
  options.cache = &cache;
  options.progress = &std::cerr;
  try {
    int failed = 0;
    for (const auto& r : disting::run_criteria(selector, options)) {
      std::cout << disting::format_result(r) << std::endl;
      failed += !r.passed;
    }
    std::cout << (failed ? "acceptance: " + std::to_string(failed) + " failing" : std::string("acceptance: all passed"))
              << std::endl;
    return failed ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << '\n';
    return 2;
  }
}
