#include "ledyn/integrate.hpp"
#include "ledyn/parallel.hpp"
#include "ledyn/rk.hpp"
#include "ledyn/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace ledyn {

const char* fate_name(Fate f) {
  switch (f) {
  case Fate::ConvergedToEquilibrium: return "ConvergedToEquilibrium";
  case Fate::Escaped: return "Escaped";
  case Fate::SuspectedCycle: return "SuspectedCycle";
  case Fate::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

namespace {

struct LyapunovNorm {
  // J^T P + P J = -I; V(d) = d^T P d decreases along the linearized flow
  double p11, p12, p22, lam_min;
  bool ok = false;
};

LyapunovNorm lyapunov_norm(const Mat2& j) {
  LyapunovNorm L;
  double a = j.m[0][0], b = j.m[0][1], c = j.m[1][0], d = j.m[1][1];
  // rows: [2a 2c 0; 0 2b 2d; b a+d c] * (p11 p12 p22)^T = (-1 -1 0)^T
  double A[3][4] = {{2 * a, 2 * c, 0, -1}, {0, 2 * b, 2 * d, -1}, {b, a + d, c, 0}};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col]))
        piv = r;
    if (A[piv][col] == 0.0)
      return L;
    for (int k = 0; k < 4; ++k)
      std::swap(A[piv][k], A[col][k]);
    for (int r = 0; r < 3; ++r) {
      if (r == col)
        continue;
      double f = A[r][col] / A[col][col];
      for (int k = col; k < 4; ++k)
        A[r][k] -= f * A[col][k];
    }
  }
  L.p11 = A[0][3] / A[0][0];
  L.p12 = A[1][3] / A[1][1];
  L.p22 = A[2][3] / A[2][2];
  double mid = 0.5 * (L.p11 + L.p22);
  double rad = std::sqrt(0.25 * (L.p11 - L.p22) * (L.p11 - L.p22) + L.p12 * L.p12);
  L.lam_min = mid - rad;
  L.ok = L.lam_min > 0.0; // holds iff J is Hurwitz
  return L;
}

inline double vnorm(const LyapunovNorm& L, double dx, double dy) {
  return L.p11 * dx * dx + 2.0 * L.p12 * dx * dy + L.p22 * dy * dy;
}

} // namespace

Orbit integrate(const Params& p, const State& s0, const IntegratorConfig& cfg) {
  if (!(std::isfinite(s0.x) && std::isfinite(s0.y)))
    throw std::invalid_argument("integrate: initial state must be finite");
  Orbit o;
  const State eq = equilibrium(p);
  const Mat2 J = jacobian(p, eq);
  const double tr = J.trace(), det = J.det();
  const bool stable = tr < 0.0 && det > 0.0;
  LyapunovNorm L;
  double v_enter = 0.0, tau = 0.0;
  if (stable) {
    L = lyapunov_norm(J);
    if (L.ok) {
      v_enter = L.lam_min * cfg.tol_conv * cfg.tol_conv;
      double disc = tr * tr - 4.0 * det;
      double re_slow = disc < 0.0 ? tr / 2.0 : (tr + std::sqrt(disc)) / 2.0;
      tau = 1.0 / std::abs(re_slow);
    }
  }

  auto rhs = [&](double, const VecN<2>& y) -> VecN<2> {
    auto f = vector_field_t(p.a, p.b, y[0], y[1]);
    return {f.dx, f.dy};
  };
  Dopri5<2, decltype(rhs)> st(rhs, cfg.rel_tol, cfg.abs_tol, 0.0, {s0.x, s0.y});

  o.t.push_back(0.0);
  o.s.push_back(s0);

  bool dwelling = false;
  int cp_done = 0;
  double dwell_t0 = 0.0, v_prev = 0.0;
  std::uint64_t steps = 0;

  auto push = [&](double t, const VecN<2>& y) {
    if (cfg.store_samples && t > o.t.back()) {
      o.t.push_back(t);
      o.s.push_back({y[0], y[1]});
    }
  };
  auto finish = [&](Fate f, double t, const VecN<2>& y) {
    o.fate = f;
    o.t_end = t;
    if (t > o.t.back()) {
      o.t.push_back(t);
      o.s.push_back({y[0], y[1]});
    }
  };

  // fixed-point start (any stability): no dynamics to wait for
  {
    auto f0 = vector_field(p, s0);
    double dist0 = std::hypot(s0.x - eq.x, s0.y - eq.y);
    if (dist0 <= cfg.tol_conv && std::hypot(f0.x, f0.y) <= 1e-12 * (1.0 + std::hypot(s0.x, s0.y))) {
      o.fate = Fate::ConvergedToEquilibrium;
      o.t_end = 0.0;
      return o;
    }
  }

  for (;;) {
    double t_room = cfg.max_time - st.t();
    if (t_room <= 0.0)
      break;
    st.limit_step(t_room);
    if (dwelling) {
      double next_cp = dwell_t0 + (cp_done + 1) * tau / 10.0;
      st.limit_step(std::max(next_cp - st.t(), 1e-14 * tau));
    }
    if (!st.step()) {
      const auto& y = st.y();
      double r = std::hypot(y[0], y[1]);
      if (!std::isfinite(r) || r > cfg.R_escape / 2.0) {
        o.overflow = true;
        o.escape_radius_hit = std::isfinite(r) ? r : cfg.R_escape;
        finish(Fate::Escaped, st.t(), y);
      } else {
        finish(Fate::BudgetExhausted, st.t(), y);
      }
      return o;
    }
    ++steps;
    const auto& y = st.y();
    if (!(std::isfinite(y[0]) && std::isfinite(y[1]))) {
      o.overflow = true;
      o.escape_radius_hit = cfg.R_escape;
      finish(Fate::Escaped, st.t_prev(), st.y_prev());
      return o;
    }
    push(st.t(), y);
    double r = std::hypot(y[0], y[1]);
    if (r >= cfg.R_escape) {
      o.escape_radius_hit = r;
      finish(Fate::Escaped, st.t(), y);
      return o;
    }
    if (stable && L.ok) {
      double v = vnorm(L, y[0] - eq.x, y[1] - eq.y);
      if (!dwelling) {
        if (v <= v_enter) {
          dwelling = true;
          cp_done = 0;
          dwell_t0 = st.t();
          v_prev = v;
        }
      } else {
        double next_cp = dwell_t0 + (cp_done + 1) * tau / 10.0;
        if (st.t() >= next_cp - 1e-12 * tau) {
          if (v <= v_prev * (1.0 + 1e-9) + 1e-300) {
            v_prev = v;
            if (++cp_done == 10) {
              finish(Fate::ConvergedToEquilibrium, st.t(), y);
              return o;
            }
          } else {
            dwelling = false; // nonlinear wobble: resume the normal search
          }
        }
      }
    }
    if (steps >= cfg.max_steps) {
      finish(Fate::BudgetExhausted, st.t(), y);
      return o;
    }
  }

  // ran out the clock while staying bounded
  const auto& y = st.y();
  double dist = std::hypot(y[0] - eq.x, y[1] - eq.y);
  finish(dist > 10.0 * cfg.tol_conv ? Fate::SuspectedCycle : Fate::BudgetExhausted,
         st.t(), y);
  return o;
}

InvarianceReport verify_invariance(const Params& p, int n_samples,
                                   std::uint64_t seed, const IntegratorConfig& cfg) {
  if (n_samples < 1)
    throw std::invalid_argument("verify_invariance: n_samples must be >= 1");
  InvarianceReport rep;
  Rng rng(seed);
  std::vector<State> starts;
  std::vector<bool> quadrant;
  for (int i = 0; i < n_samples; ++i) { // Q1 starts
    starts.push_back({std::exp(rng.uniform(std::log(1e-2), std::log(1e2))),
                      std::exp(rng.uniform(std::log(1e-2), std::log(1e2)))});
    quadrant.push_back(true);
  }
  for (int i = 0; i < n_samples; ++i) { // half-plane starts
    starts.push_back({std::exp(rng.uniform(std::log(1e-2), std::log(1e2))),
                      rng.uniform(-100.0, 100.0)});
    quadrant.push_back(false);
  }
  const State eq = equilibrium(p);
  const Mat2 J = jacobian(p, eq);
  const bool stable = J.trace() < 0.0 && J.det() > 0.0;
  std::vector<std::optional<State>> viol(starts.size());
  std::vector<double> worst(starts.size(), 0.0);
  parallel_for(starts.size(), [&](std::size_t i) {
    auto rhs = [&](double, const VecN<2>& y) -> VecN<2> {
      auto f = vector_field_t(p.a, p.b, y[0], y[1]);
      return {f.dx, f.dy};
    };
    Dopri5<2, decltype(rhs)> st(rhs, cfg.rel_tol, cfg.abs_tol, 0.0,
                                {starts[i].x, starts[i].y});
    double w = 0.0;
    while (st.t() < cfg.max_time) {
      st.limit_step(cfg.max_time - st.t());
      if (!st.step())
        break;
      const auto& y = st.y();
      if (!(std::isfinite(y[0]) && std::isfinite(y[1])))
        break;
      double m = quadrant[i] ? std::min(y[0], y[1]) : y[0];
      if (m < w)
        w = m;
      if (m < -1e-9) {
        viol[i] = State{y[0], y[1]};
        break;
      }
      if (std::hypot(y[0], y[1]) > cfg.R_escape)
        break;
      if (stable && std::hypot(y[0] - eq.x, y[1] - eq.y) < cfg.tol_conv)
        break;
    }
    worst[i] = w;
  });
  rep.n_orbits = (int)starts.size();
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (viol[i])
      rep.violations.emplace_back(starts[i], *viol[i]);
    if (quadrant[i])
      rep.worst_q1 = std::min(rep.worst_q1, worst[i]);
    else
      rep.worst_x = std::min(rep.worst_x, worst[i]);
  }
  return rep;
}

BasinScanResult basin_scan(const Params& p, const GridRect& grid,
                           const IntegratorConfig& cfg) {
  if (!(grid.x_lo > 0.0) || grid.x_hi < grid.x_lo || grid.y_hi < grid.y_lo ||
      grid.nx < 1 || grid.ny < 1)
    throw std::invalid_argument("basin_scan: grid must lie in x > 0");
  const std::size_t n = (std::size_t)grid.nx * grid.ny;
  std::vector<Fate> fates(n);
  IntegratorConfig c = cfg;
  c.store_samples = false;
  parallel_for(n, [&](std::size_t k) {
    int i = (int)(k % grid.nx), j = (int)(k / grid.nx);
    double x = grid.nx == 1 ? grid.x_lo
                            : grid.x_lo + (grid.x_hi - grid.x_lo) * i / (grid.nx - 1);
    double y = grid.ny == 1 ? grid.y_lo
                            : grid.y_lo + (grid.y_hi - grid.y_lo) * j / (grid.ny - 1);
    fates[k] = integrate(p, {x, y}, c).fate;
  });
  BasinScanResult r;
  for (std::size_t k = 0; k < n; ++k) {
    switch (fates[k]) {
    case Fate::ConvergedToEquilibrium: ++r.converged; break;
    case Fate::Escaped: ++r.escaped; break;
    default: ++r.other; break;
    }
    if (fates[k] != Fate::ConvergedToEquilibrium) {
      int i = (int)(k % grid.nx), j = (int)(k / grid.nx);
      double x = grid.nx == 1 ? grid.x_lo
                              : grid.x_lo + (grid.x_hi - grid.x_lo) * i / (grid.nx - 1);
      double y = grid.ny == 1 ? grid.y_lo
                              : grid.y_lo + (grid.y_hi - grid.y_lo) * j / (grid.ny - 1);
      r.failures.push_back({x, y});
    }
  }
  return r;
}

std::optional<std::pair<State, Orbit>>
escape_search(const Params& p, const std::vector<State>& candidates,
              const IntegratorConfig& cfg) {
  if (candidates.empty())
    throw std::invalid_argument("escape_search: candidate list is empty");
  IntegratorConfig quiet = cfg;
  quiet.store_samples = false;
  for (const auto& c : candidates) {
    Orbit probe = integrate(p, c, quiet);
    if (probe.fate == Fate::Escaped)
      return std::make_pair(c, cfg.store_samples ? integrate(p, c, cfg) : std::move(probe));
  }
  return std::nullopt;
}

} // namespace ledyn
