#include "ledyn/cycles.hpp"

#include "ledyn/hopf.hpp"
#include "ledyn/parallel.hpp"
#include "ledyn/rk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace ledyn {

namespace {

struct Field2 {
  double a, b;
  VecN<2> operator()(double, const VecN<2>& s) const {
    double x = s[0], y = s[1];
    double opx2 = 1.0 + x * x;
    return {(a - x) * opx2 - 4.0 * x * y, b * x * (opx2 - y)};
  }
};

// third component accumulates the divergence integral along the orbit
struct Field3 {
  double a, b;
  VecN<3> operator()(double, const VecN<3>& s) const {
    double x = s[0], y = s[1];
    double opx2 = 1.0 + x * x;
    double div = -opx2 + 2.0 * x * (a - x) - 4.0 * y - b * x;
    return {(a - x) * opx2 - 4.0 * x * y, b * x * (opx2 - y), div};
  }
};

double section_base(Section sec, const State& P) {
  return sec == Section::HorizontalRight ? P.x : P.y;
}

// crossing function, oriented so every valid return crosses from < 0 to >= 0:
// the horizontal ray is crossed upward (y increasing), the vertical ray
// leftward (x decreasing)
template <std::size_t N> double oriented_g(Section sec, const State& P, const VecN<N>& s) {
  return sec == Section::HorizontalRight ? s[1] - P.y : P.x - s[0];
}

template <std::size_t N>
ReturnResult rmap_core(const State& P, double s0, Section sec, const ReturnConfig& cfg,
                       const double a, const double b, bool with_div,
                       std::vector<double>* ts, std::vector<State>* pts) {
  VecN<N> y0{};
  if (sec == Section::HorizontalRight) {
    y0[0] = s0;
    y0[1] = P.y;
  } else {
    y0[0] = P.x;
    y0[1] = s0;
  }
  auto make = [&] {
    if constexpr (N == 3)
      return Dopri5<3, Field3>(Field3{a, b}, cfg.rel_tol, cfg.abs_tol, 0.0, y0);
    else
      return Dopri5<2, Field2>(Field2{a, b}, cfg.rel_tol, cfg.abs_tol, 0.0, y0);
  };
  auto ode = make();
  if (ts) {
    ts->push_back(0.0);
    pts->push_back({y0[0], y0[1]});
  }
  (void)with_div;
  ReturnResult rr;
  double gprev = 0.0; // starts on the section
  long nsteps = 0;
  const int K = std::max(2, cfg.sub_samples);
  const double side_eps =
      1e-12 * (1.0 + std::abs(sec == Section::HorizontalRight ? P.x : P.y));
  while (true) {
    if (ode.t() >= cfg.max_time || ++nsteps > cfg.max_steps) {
      rr.status = ReturnStatus::Budget;
      return rr;
    }
    ode.limit_step(cfg.max_time - ode.t());
    if (!ode.step()) {
      const VecN<N>& y = ode.y();
      bool blown = !std::isfinite(y[0]) || !std::isfinite(y[1]) ||
                   std::hypot(y[0], y[1]) > 0.5 * cfg.escape_radius;
      rr.status = blown ? ReturnStatus::Escaped : ReturnStatus::Budget;
      return rr;
    }
    double h = ode.h_last();
    double th_prev = 0.0;
    for (int k = 1; k <= K; ++k) {
      double th = double(k) / K;
      VecN<N> yk = ode.dense(th);
      double gk = oriented_g<N>(sec, P, yk);
      if (gprev < 0.0 && gk >= 0.0) {
        double lo = th_prev, hi = th;
        while ((hi - lo) * h > 1e-12 * std::max(1.0, ode.t_prev() + hi * h)) {
          double mid = 0.5 * (lo + hi);
          if (oriented_g<N>(sec, P, ode.dense(mid)) >= 0.0)
            hi = mid;
          else
            lo = mid;
        }
        VecN<N> yc = ode.dense(hi);
        double side = sec == Section::HorizontalRight ? yc[0] - P.x : yc[1] - P.y;
        if (side > side_eps) {
          rr.status = ReturnStatus::Returned;
          rr.x1 = sec == Section::HorizontalRight ? yc[0] : yc[1];
          rr.time = ode.t_prev() + hi * h;
          if constexpr (N == 3) rr.div_integral = yc[2];
          if (ts) {
            ts->push_back(rr.time);
            pts->push_back({yc[0], yc[1]});
          }
          return rr;
        }
      }
      gprev = gk;
      th_prev = th;
    }
    const VecN<N>& y = ode.y();
    if (!std::isfinite(y[0]) || !std::isfinite(y[1]) ||
        std::hypot(y[0], y[1]) >= cfg.escape_radius) {
      rr.status = ReturnStatus::Escaped;
      return rr;
    }
    if (std::hypot(y[0] - P.x, y[1] - P.y) <= cfg.conv_radius) {
      rr.status = ReturnStatus::Converged;
      return rr;
    }
    if (ts) {
      ts->push_back(ode.t());
      pts->push_back({y[0], y[1]});
    }
  }
}

// displacement with sentinel signs: Converged counts as pulled inward,
// Escaped as pushed outward; Budget is a gap (NaN)
double displacement(const Params& p, const State& P, double s, Section sec,
                    const ReturnConfig& cfg, ReturnStatus& st) {
  ReturnResult r = rmap_core<2>(P, s, sec, cfg, p.a, p.b, false, nullptr, nullptr);
  st = r.status;
  switch (r.status) {
  case ReturnStatus::Returned: return r.x1 - s;
  case ReturnStatus::Converged: return -1.0;
  case ReturnStatus::Escaped: return 1.0;
  default: return std::numeric_limits<double>::quiet_NaN();
  }
}

double fd_multiplier(const Params& p, const State& P, double sx, Section sec,
                     const ReturnConfig& cfg, double fallback) {
  double eta = 1e-6 * std::max(1.0, std::abs(sx));
  ReturnResult rp = rmap_core<2>(P, sx + eta, sec, cfg, p.a, p.b, false, nullptr, nullptr);
  ReturnResult rm = rmap_core<2>(P, sx - eta, sec, cfg, p.a, p.b, false, nullptr, nullptr);
  if (rp.status != ReturnStatus::Returned || rm.status != ReturnStatus::Returned)
    return fallback;
  return (rp.x1 - rm.x1) / (2.0 * eta);
}

void decimate(std::vector<double>& ts, std::vector<State>& pts, std::size_t cap) {
  if (pts.size() <= cap)
    return;
  std::vector<double> t2;
  std::vector<State> p2;
  std::size_t stride = (pts.size() + cap - 1) / cap;
  for (std::size_t i = 0; i + 1 < pts.size(); i += stride) {
    t2.push_back(ts[i]);
    p2.push_back(pts[i]);
  }
  t2.push_back(ts.back());
  p2.push_back(pts.back());
  ts = std::move(t2);
  pts = std::move(p2);
}

} // namespace

ReturnResult return_map(const Params& p, double x0, Section sec, const ReturnConfig& cfg,
                        bool with_div) {
  State P = equilibrium(p);
  if (!(x0 > section_base(sec, P)))
    throw std::invalid_argument("return_map: section coordinate must exceed the equilibrium");
  if (with_div)
    return rmap_core<3>(P, x0, sec, cfg, p.a, p.b, true, nullptr, nullptr);
  return rmap_core<2>(P, x0, sec, cfg, p.a, p.b, false, nullptr, nullptr);
}

std::vector<CycleInfo> find_cycles(const Params& p, double x_max, int n_seed, Section sec,
                                   const ReturnConfig& cfg, SearchLog* log,
                                   const std::vector<double>& extra_offsets) {
  if (n_seed < 2)
    throw std::invalid_argument("find_cycles: n_seed must be at least 2");
  State P = equilibrium(p);
  const double base = section_base(sec, P);
  double H = x_max - base;
  if (!(H > 2e-3))
    throw std::invalid_argument("find_cycles: x_max must exceed the section base");

  SearchLog local;
  SearchLog& lg = log ? *log : local;
  lg = SearchLog{};

  std::vector<double> off, d;
  std::vector<ReturnStatus> st;
  auto sweep = [&](const std::vector<double>& seeds, std::vector<double>& dv,
                   std::vector<ReturnStatus>& sv) {
    dv.assign(seeds.size(), 0.0);
    sv.assign(seeds.size(), ReturnStatus::Budget);
    parallel_for(seeds.size(),
                 [&](std::size_t i) { dv[i] = displacement(p, P, base + seeds[i], sec, cfg, sv[i]); });
  };

  const double off_lo = 1e-3;
  for (int shrink = 0;; ++shrink) {
    off.clear();
    for (int i = 0; i < n_seed; ++i)
      off.push_back(off_lo * std::pow(H / off_lo, double(i) / (n_seed - 1)));
    for (double e : extra_offsets)
      if (e > 0.0 && e <= H)
        off.push_back(e);
    std::sort(off.begin(), off.end());
    off.erase(std::unique(off.begin(), off.end(),
                          [](double u, double v) {
                            return std::abs(v - u) < 1e-13 * std::max(1.0, std::abs(u));
                          }),
              off.end());
    sweep(off, d, st);
    long esc = std::count(st.begin(), st.end(), ReturnStatus::Escaped);
    if (2 * esc <= (long)off.size() || shrink >= 3)
      break;
    H *= 0.5; // most seeds leave: the interesting structure sits further in
  }

  // local refinement where the displacement has a one-signed hump between
  // grid points (a near-tangent pair of roots hides there near the fold)
  for (int round = 0; round < 2; ++round) {
    std::vector<std::pair<double, double>> wins;
    for (std::size_t i = 1; i + 1 < off.size(); ++i) {
      if (st[i - 1] != ReturnStatus::Returned || st[i] != ReturnStatus::Returned ||
          st[i + 1] != ReturnStatus::Returned)
        continue;
      bool hump_neg = d[i] < 0 && d[i - 1] < d[i] && d[i + 1] < d[i];
      bool hump_pos = d[i] > 0 && d[i - 1] > d[i] && d[i + 1] > d[i];
      if ((hump_neg || hump_pos) && d[i - 1] * d[i] > 0 && d[i] * d[i + 1] > 0)
        wins.emplace_back(off[i - 1], off[i + 1]);
    }
    if (wins.empty())
      break;
    std::vector<double> zoom_off;
    for (auto [wlo, whi] : wins)
      for (int k = 1; k < 64; ++k)
        zoom_off.push_back(wlo + (whi - wlo) * k / 64.0);
    lg.zooms += (int)wins.size();
    std::vector<double> zd;
    std::vector<ReturnStatus> zst;
    sweep(zoom_off, zd, zst);
    std::vector<std::tuple<double, double, ReturnStatus>> merged;
    merged.reserve(off.size() + zoom_off.size());
    for (std::size_t i = 0; i < off.size(); ++i)
      merged.emplace_back(off[i], d[i], st[i]);
    for (std::size_t i = 0; i < zoom_off.size(); ++i)
      merged.emplace_back(zoom_off[i], zd[i], zst[i]);
    std::sort(merged.begin(), merged.end(),
              [](const auto& u, const auto& v) { return std::get<0>(u) < std::get<0>(v); });
    off.clear();
    d.clear();
    st.clear();
    for (auto& [o, dv, sv] : merged) {
      if (!off.empty() && std::abs(o - off.back()) < 1e-13 * std::max(1.0, std::abs(o)))
        continue;
      off.push_back(o);
      d.push_back(dv);
      st.push_back(sv);
    }
  }

  lg.seeds = (int)off.size();
  for (ReturnStatus s : st) {
    if (s == ReturnStatus::Returned) ++lg.returned;
    else if (s == ReturnStatus::Converged) ++lg.converged;
    else if (s == ReturnStatus::Escaped) ++lg.escaped;
    else ++lg.budget;
  }

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < off.size(); ++i) {
    if (st[i] == ReturnStatus::Budget || st[i + 1] == ReturnStatus::Budget)
      continue;
    if (d[i] == 0.0) {
      roots.push_back(off[i]);
      continue;
    }
    if (!(d[i] * d[i + 1] < 0.0))
      continue;
    ++lg.brackets;
    double lo = off[i], hi = off[i + 1];
    bool neg_lo = d[i] < 0.0;
    bool ok = true;
    while (hi - lo > 1e-10) {
      double mid = 0.5 * (lo + hi);
      ReturnStatus ms;
      double dm = displacement(p, P, base + mid, sec, cfg, ms);
      if (std::isnan(dm)) {
        ok = false;
        ++lg.dropped;
        break;
      }
      if (dm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((dm < 0.0) == neg_lo)
        lo = mid;
      else
        hi = mid;
    }
    if (ok)
      roots.push_back(0.5 * (lo + hi));
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> uniq;
  for (double r : roots)
    if (uniq.empty() || r - uniq.back() >= 1e-6)
      uniq.push_back(r);

  std::vector<CycleInfo> out;
  for (double r : uniq) {
    CycleInfo c;
    c.section_x = base + r;
    std::vector<double> ts;
    std::vector<State> pts;
    ReturnResult rr = rmap_core<3>(P, c.section_x, sec, cfg, p.a, p.b, true, &ts, &pts);
    if (rr.status != ReturnStatus::Returned)
      continue;
    c.period = rr.time;
    c.floquet_div = std::exp(rr.div_integral);
    c.floquet = fd_multiplier(p, P, c.section_x, sec, cfg, c.floquet_div);
    const double tol = 1e-3;
    if (c.floquet < 1.0 - tol)
      c.stability = CycleStability::Stable;
    else if (c.floquet > 1.0 + tol)
      c.stability = CycleStability::Unstable;
    else
      c.stability = CycleStability::SemistableSuspect;
    decimate(ts, pts, 256);
    c.t = std::move(ts);
    c.orbit = std::move(pts);
    out.push_back(std::move(c));
  }
  return out;
}

int count_cycles(const Params& p, Section sec) {
  State P = equilibrium(p);
  const double base = section_base(sec, P);
  const double scale = sec == Section::HorizontalRight ? 1.0 : std::max(1.0, P.x);
  double H = 10.0 * (1.0 + p.a / 5.0) * scale;
  for (int round = 0;; ++round) {
    SearchLog lg;
    auto cs = find_cycles(p, base + H, 256, sec, ReturnConfig{}, &lg);
    bool touches = !cs.empty() && (cs.back().section_x - base) > 0.95 * H;
    // escaping outer seeds also hint at structure beyond the bound
    if ((!touches && lg.escaped == 0) || round >= 4)
      return (int)cs.size();
    H *= 2.0;
  }
}

double semistable_b(double a, double tol_b) {
  if (!(a > bautin_a()))
    throw std::invalid_argument("semistable_b: requires a past the sign change of the "
                                "first focal coefficient");
  if (!(tol_b > 0.0))
    throw std::invalid_argument("semistable_b: tol_b must be positive");
  const double bH = hopf_b(a);
  const double base = a / 5.0;
  const double H = 10.0 * (1.0 + a / 5.0);
  std::vector<double> focus;
  auto count_at = [&](double b) -> int {
    auto cs = find_cycles(Params(a, b), base + H, 256, Section::HorizontalRight,
                          ReturnConfig{}, nullptr, focus);
    if (cs.size() >= 2) {
      double rin = cs.front().section_x - base;
      double rout = cs.back().section_x - base;
      double wlo = 0.5 * rin, whi = std::min(1.5 * rout, H);
      focus.clear();
      for (int k = 0; k <= 200; ++k)
        focus.push_back(wlo + (whi - wlo) * k / 200.0);
    }
    return (int)cs.size();
  };

  double lo = std::numeric_limits<double>::quiet_NaN();
  for (double offp : {0.3, 0.1, 0.03, 0.01, 3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5}) {
    if (count_at(bH + offp) >= 1) {
      lo = bH + offp;
      break;
    }
  }
  if (std::isnan(lo))
    throw BracketFailureError("semistable_b: no cycle band found above the Hopf curve");

  double step = std::max(0.1, lo - bH);
  double hi = lo + step;
  while (count_at(hi) >= 1) {
    lo = hi;
    step *= 2.0;
    hi = lo + step;
    if (hi > bH + 1000.0)
      throw BracketFailureError("semistable_b: cycle band does not close above the Hopf curve");
  }

  while (hi - lo > tol_b) {
    double mid = 0.5 * (lo + hi);
    if (count_at(mid) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double floquet_multiplier(const Params& p, const CycleInfo& c, Section sec,
                          const ReturnConfig& cfg) {
  State P = equilibrium(p);
  return fd_multiplier(p, P, c.section_x, sec, cfg, c.floquet_div);
}

RegionLabel resolve_region(const Params& p) {
  RegionLabel l = region_membership(p);
  if (l.d_status_unresolved) {
    l.d_status_unresolved = false;
    if (count_cycles(p) >= 2)
      l.region = Region::InD;
  }
  return l;
}

const char* return_status_name(ReturnStatus s) {
  switch (s) {
  case ReturnStatus::Returned: return "Returned";
  case ReturnStatus::Converged: return "Converged";
  case ReturnStatus::Escaped: return "Escaped";
  case ReturnStatus::Budget: return "Budget";
  }
  return "?";
}

const char* cycle_stability_name(CycleStability s) {
  switch (s) {
  case CycleStability::Stable: return "Stable";
  case CycleStability::Unstable: return "Unstable";
  case CycleStability::SemistableSuspect: return "SemistableSuspect";
  }
  return "?";
}

} // namespace ledyn
