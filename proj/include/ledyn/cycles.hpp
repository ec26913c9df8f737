#pragma once

#include "ledyn/model.hpp"

#include <stdexcept>
#include <vector>

namespace ledyn {

// Poincare sections through the equilibrium: the horizontal ray
// {(x, y_P): x > x_P} or the vertical ray {(x_P, y): y > y_P}. Every cycle
// of the restricted system surrounds the unique equilibrium, so it crosses
// both rays; the section coordinate is x on the first ray, y on the second.
enum class Section { HorizontalRight, VerticalUp };

enum class ReturnStatus {
  Returned,  // first return to the section in the starting direction
  Converged, // orbit entered a small ball around the equilibrium first
  Escaped,   // orbit left the escape radius or blew up
  Budget     // time or step budget exhausted without a verdict
};

struct ReturnConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_time = 1000.0;
  long max_steps = 2000000;
  double escape_radius = 1e6;
  double conv_radius = 1e-8; // distance to the equilibrium treated as arrival
  int sub_samples = 8;       // dense-output samples per step in the crossing scan
};

struct ReturnResult {
  ReturnStatus status = ReturnStatus::Budget;
  double x1 = 0.0;           // section coordinate of the first return
  double time = 0.0;         // crossing time
  double div_integral = 0.0; // integral of div F along the arc (when requested)
};

enum class CycleStability { Stable, Unstable, SemistableSuspect };

struct CycleInfo {
  double section_x = 0.0; // fixed point of the return map
  double period = 0.0;
  double floquet = 0.0;     // nontrivial multiplier: return-map slope, central differences
  double floquet_div = 0.0; // cross-check: exp of the divergence integral over one period
  CycleStability stability = CycleStability::SemistableSuspect;
  std::vector<double> t; // sample times along one period
  std::vector<State> orbit;
};

// seed-sweep bookkeeping (gaps are logged here, never fatal)
struct SearchLog {
  int seeds = 0;
  int returned = 0;
  int converged = 0;
  int escaped = 0;
  int budget = 0;
  int brackets = 0;
  int dropped = 0; // brackets abandoned on a budget verdict
  int zooms = 0;   // local refinements around a near-tangent displacement maximum
};

class BracketFailureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// first return to the section through x0 (section coordinate), crossing in
// the same direction as the start; crossing time localized to 1e-12 relative
// by bisection on the dense output. with_div additionally accumulates the
// divergence integral along the arc.
ReturnResult return_map(const Params& p, double x0, Section sec = Section::HorizontalRight,
                        const ReturnConfig& cfg = ReturnConfig{}, bool with_div = false);

// displacement-root search on a seed grid, geometric in the offset from the
// equilibrium from 1e-3 to x_max; sign changes refined by bisection to 1e-10,
// roots deduplicated below 1e-6, classified by the return-map slope. Extra
// offsets (absolute, from the section base point) join the grid; the sweep
// shrinks x_max when more than half of the seeds escape.
std::vector<CycleInfo> find_cycles(const Params& p, double x_max, int n_seed = 160,
                                   Section sec = Section::HorizontalRight,
                                   const ReturnConfig& cfg = ReturnConfig{},
                                   SearchLog* log = nullptr,
                                   const std::vector<double>& extra_offsets = {});

// find_cycles with default bounds (offset 10*(1 + a/5) past the equilibrium,
// scaled by x_P for the vertical ray), expanded when the outermost structure
// touches the bound
int count_cycles(const Params& p, Section sec = Section::HorizontalRight);

// fold-of-cycles locator: bisection in b on "cycles exist above the Hopf
// curve", with seed windows focused near the previous two-cycle bracket;
// returns the bracket midpoint with width <= tol_b
double semistable_b(double a, double tol_b = 1e-4);

// return-map slope at the fixed point by central differences (step 1e-6
// relative to the section coordinate)
double floquet_multiplier(const Params& p, const CycleInfo& c,
                          Section sec = Section::HorizontalRight,
                          const ReturnConfig& cfg = ReturnConfig{});

// region_membership with the two-cycle test actually run on the stable side
RegionLabel resolve_region(const Params& p);

const char* return_status_name(ReturnStatus s);
const char* cycle_stability_name(CycleStability s);

} // namespace ledyn
