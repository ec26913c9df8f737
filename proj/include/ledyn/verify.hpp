#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ledyn {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details; // deterministic measurement summary
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass)
        return false;
    return true;
  }
};

// exact-formula and desk-scale reproduction checks; each is self-contained
// and deterministic for a fixed seed
CheckResult check_hopf_curve_exactness();                 // trace/det along b_H
CheckResult check_curve_intersection();                   // b_H and b_a meet at (5sqrt5, 2sqrt5)
CheckResult check_first_focal_sign_change();              // single L1 root vs closed form
CheckResult check_second_focal_negative();                // L2 < 0 plus displacement sign
CheckResult check_two_nested_cycles();                    // the two-cycle phase portrait
CheckResult check_generic_hopf_cycles();                  // one cycle below H-, two above H+
CheckResult check_fold_curve();                           // semistable bisection at three a
CheckResult check_basin_grids();                          // full convergence on three grids
CheckResult check_escape_witnesses(std::uint64_t seed);   // unbounded orbits at random params
CheckResult check_dulac_random(std::uint64_t seed);       // certificate over random A samples
CheckResult check_quarter_plane_invariance(std::uint64_t seed);
CheckResult check_no_cycles_on_certificate_region(std::uint64_t seed);
CheckResult check_section_robustness();                   // horizontal vs vertical ray counts
CheckResult check_chart_pushforward(std::uint64_t seed);  // v^2 collinearity + blow-up factor
CheckResult check_circle_equilibria_data(std::uint64_t seed);

SuiteResult suite_theorem1(std::uint64_t seed);
SuiteResult suite_theorem2(std::uint64_t seed);
SuiteResult suite_hopf(std::uint64_t seed);
SuiteResult suite_cycles(std::uint64_t seed);
SuiteResult suite_dulac(std::uint64_t seed);
SuiteResult suite_infinity(std::uint64_t seed);

// which: all | theorem1 | theorem2 | hopf | cycles | dulac; "all" includes
// the infinity suite. Throws std::invalid_argument on anything else.
std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed);

} // namespace ledyn
