#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lieco {

struct VerifyOptions {
  std::uint64_t seed = 42;
  int n = 1;
  int max_degree = 3;
  int samples = 100;
};

struct CheckResult {
  std::string suite;
  std::string name;
  int samples = 0;
  int failures = 0;
  // First failing input, printed with the canonical expression syntax.
  std::string counterexample;
  bool ok() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  long roundtrips = 0;  // values sent through format/parse
  bool ok() const;
};

const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". Throws std::invalid_argument for
// an unknown suite name or bad options.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts);

}  // namespace lieco
