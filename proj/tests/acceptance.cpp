// Runs one verification suite per acceptance criterion and prints a
// PASS/FAIL line for each. Exit status is the number of failing criteria.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "qaw/suites.hpp"

namespace {

struct Criterion {
  int id;
  const char* suite;
  const char* title;
};

constexpr Criterion kCriteria[] = {
    {1, "normalization", "Askey-Wilson normalization, 20 draws, |int f - 1| <= 1e-8, <= 60 s"},
    {2, "orthogonality", "orthogonality and norms, n,m <= 6, off-diag 1e-8, diag 1e-6"},
    {3, "connection_round_trip", "connection round trips, n_max = 10, identity within 1e-10"},
    {4, "theorem_main", "pointwise w <-> p expansions, n <= 8, rel 1e-9"},
    {5, "identities", "finite p-g identities, n <= 8, 1e-11 x max term"},
    {6, "conversion", "conversion lemma, n,m <= 6, 1e-10"},
    {7, "kernels", "kernel expansions vs density ratios, 1e-8"},
    {8, "conditional_moments", "conditional moments vs closed forms, n <= 5, rel 1e-7"},
    {9, "classical_limits", "q = 0 and q = 1 closed forms, 1e-12"},
    {10, "ladder", "ladder cross-check, n <= 10, rel 1e-11"},
    {11, "markov", "Markov chain, 1e6 samples, 4 SE, CK 1e-8, <= 120 s"},
    {12, "base_inversion", "base inversion identities, n <= 12, rel 1e-12"},
};

}  // namespace

int main(int argc, char** argv) {
  qaw::SuiteOptions opts;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (const auto& c : kCriteria) {
    const auto r = qaw::run_suite(c.suite, opts);
    std::printf("%s  criterion %2d  %-22s %s  [%.0f ms]\n", r.passed ? "PASS" : "FAIL", c.id, c.suite,
                c.title, r.runtime_ms);
    if (!r.passed) {
      ++failed;
      std::fputs(qaw::format_reports(r.reports).c_str(), stdout);
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed (seed %llu)\n", static_cast<int>(std::size(kCriteria)) - failed,
              std::size(kCriteria), static_cast<unsigned long long>(opts.seed));
  return failed;
}
