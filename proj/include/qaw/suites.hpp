#ifndef QAW_SUITES_HPP
#define QAW_SUITES_HPP

// Named verification suites, one per acceptance criterion. Each suite draws
// its parameters from a seeded counter stream and reduces its checks to a
// handful of worst-case reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qaw/verify.hpp"

namespace qaw {

inline constexpr std::uint64_t kDefaultSuiteSeed = 20240611;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSuiteSeed;
  std::optional<double> q;                // pins the base for every draw
  std::uint64_t markov_samples = 1000000;
  int threads = 0;
};

struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<VerificationReport> reports;
  bool passed = false;
  double runtime_ms = 0.0;
};

/// Sorted suite names.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown name or a q the suite cannot use.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace qaw

#endif  // QAW_SUITES_HPP
