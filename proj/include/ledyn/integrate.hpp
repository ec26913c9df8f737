// Adaptive integration of the cubic field with orbit-fate classification:
// convergence to P_a, escape past a radius (finite-time blow-up included),
// cycle suspicion, or budget exhaustion. Also the numerical sides of the two
// global statements: positive invariance of Q1 / {x>0}, basin scans on A, and
// the unbounded-orbit witness search.
#pragma once

#include "ledyn/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ledyn {

enum class Fate { ConvergedToEquilibrium, Escaped, SuspectedCycle, BudgetExhausted };

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_time = 1e4;
  std::uint64_t max_steps = 10000000;
  double R_escape = 1e6;
  double tol_conv = 1e-8;
  bool store_samples = true; // sweeps switch this off to keep memory flat
};

struct Orbit {
  std::vector<double> t;   // strictly increasing
  std::vector<State> s;    // aligned with t
  Fate fate = Fate::BudgetExhausted;
  double t_end = 0;
  std::optional<double> escape_radius_hit;
  bool overflow = false;   // right side overflowed before the escape radius
};

const char* fate_name(Fate f);

// Convergence: the orbit must enter the set {V(s-P_a) <= lambda_min(P) tol^2}
// where P solves J^T P + P J = -I at P_a (so the Euclidean distance is at
// most tol_conv there), and V must then be non-increasing over ten checkpoints
// spanning one characteristic time 1/|Re lambda_max|. The Lyapunov norm is
// what actually decreases monotonically near a skewed stable focus; the
// Euclidean distance oscillates.
Orbit integrate(const Params& p, const State& s0, const IntegratorConfig& cfg = {});

struct InvarianceReport {
  int n_orbits = 0;
  std::vector<std::pair<State, State>> violations; // (initial, offending sample)
  double worst_x = 0;  // most negative x seen from half-plane starts
  double worst_q1 = 0; // most negative min(x,y) seen from Q1 starts
};

// integrates n_samples random starts in Q1 and n_samples in {x>0}; every
// sample of every orbit must stay in its region up to 1e-9 slack
InvarianceReport verify_invariance(const Params& p, int n_samples,
                                   std::uint64_t seed = 7,
                                   const IntegratorConfig& cfg = {});

struct GridRect {
  double x_lo, x_hi, y_lo, y_hi;
  int nx, ny;
};

struct BasinScanResult {
  int converged = 0;
  int escaped = 0;
  int other = 0;
  std::vector<State> failures; // initial conditions that did not converge
};

// grid must lie in {x > 0}; for (a,b) in A every orbit converges to P_a
BasinScanResult basin_scan(const Params& p, const GridRect& grid,
                           const IntegratorConfig& cfg = {});

inline std::vector<State> default_escape_candidates() {
  return {{-1, -10}, {-5, -50}, {-10, -1}, {-0.5, -100}};
}

// first candidate whose orbit escapes, with its orbit; nullopt when none does
std::optional<std::pair<State, Orbit>>
escape_search(const Params& p, const std::vector<State>& candidates,
              const IntegratorConfig& cfg = {});

} // namespace ledyn
