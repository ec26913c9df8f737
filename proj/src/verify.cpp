#include "ledyn/verify.hpp"

#include "ledyn/cycles.hpp"
#include "ledyn/hopf.hpp"
#include "ledyn/infinity.hpp"
#include "ledyn/integrate.hpp"
#include "ledyn/model.hpp"
#include "ledyn/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>

namespace ledyn {

namespace {

std::string fmt(const char* f, ...) {
  va_list ap;
  va_start(ap, f);
  va_list ap2;
  va_copy(ap2, ap);
  int n = std::vsnprintf(nullptr, 0, f, ap);
  va_end(ap);
  std::string out(n > 0 ? n : 0, '\0');
  if (n > 0)
    std::vsnprintf(out.data(), out.size() + 1, f, ap2);
  va_end(ap2);
  return out;
}

Rng salted(std::uint64_t seed, std::uint64_t salt) {
  return Rng(seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
}

// random point of the certificate region A: any b for a below the anchor,
// b above the basin curve otherwise
Params random_in_A(Rng& rng) {
  double a = 30.0 * (1.0 - rng.unit());
  double b;
  if (a <= kA1)
    b = 30.0 * (1.0 - rng.unit());
  else
    b = std::max(basin_b(a), 0.0) + 1e-6 + 30.0 * rng.unit();
  return Params(a, b);
}

} // namespace

CheckResult check_hopf_curve_exactness() {
  CheckResult c{"hopf-curve-trace-det", true, ""};
  double worst_tr = 0, worst_det = 0;
  for (int i = 1; i <= 200; ++i) {
    double a = kA2 + (50.0 - kA2) * i / 200.0;
    Params p(a, hopf_b(a));
    Mat2 J = jacobian(p, equilibrium(p));
    double det_ref = a * p.b * (a * a + 25.0) / 25.0;
    worst_tr = std::max(worst_tr, std::abs(J.trace()));
    worst_det = std::max(worst_det, std::abs(J.det() - det_ref) / det_ref);
  }
  c.pass = worst_tr < 1e-10 && worst_det < 1e-12;
  c.details = fmt("max |trace| = %.3e (tol 1e-10), max rel det err = %.3e (tol 1e-12)",
                  worst_tr, worst_det);
  return c;
}

CheckResult check_curve_intersection() {
  CheckResult c{"curve-intersection", true, ""};
  double aI = 5.0 * std::sqrt(5.0);
  double bI = 2.0 * std::sqrt(5.0);
  double eH = std::abs(hopf_b(aI) - bI);
  double eA = std::abs(basin_b(aI) - bI);
  c.pass = eH <= 1e-12 && eA <= 1e-12;
  c.details = fmt("|b_H(5sqrt5)-2sqrt5| = %.3e, |b_a(5sqrt5)-2sqrt5| = %.3e (tol 1e-12)",
                  eH, eA);
  return c;
}

CheckResult check_first_focal_sign_change() {
  CheckResult c{"first-focal-sign-change", true, ""};
  const int n = 231;
  std::vector<double> as(n), l1(n);
  for (int i = 0; i < n; ++i) {
    as[i] = 7.0 + (30.0 - 7.0) * i / (n - 1);
    l1[i] = hopf_data(as[i]).L1;
  }
  int changes = 0, at = -1;
  for (int i = 0; i + 1 < n; ++i)
    if (l1[i] * l1[i + 1] < 0) {
      ++changes;
      at = i;
    }
  double root = 0, rel = 1;
  if (changes == 1) {
    double lo = as[at], hi = as[at + 1];
    bool neg_lo = l1[at] < 0;
    while (hi - lo > 1e-10) {
      double mid = 0.5 * (lo + hi);
      if ((hopf_data(mid).L1 < 0) == neg_lo)
        lo = mid;
      else
        hi = mid;
    }
    root = 0.5 * (lo + hi);
    rel = std::abs(root - bautin_a()) / bautin_a();
  }
  int sign_ok = 0;
  for (int i = 0; i < 100; ++i) {
    double a = 7.0 + (30.0 - 7.0) * (i + 0.5) / 100.0;
    double L1 = hopf_data(a).L1;
    if ((L1 > 0) == (l1_sign_poly(a) > 0))
      ++sign_ok;
  }
  c.pass = changes == 1 && rel <= 1e-4 && sign_ok == 100;
  c.details = fmt("sign changes = %d, root = %.9f vs %.9f (rel %.3e, tol 1e-4), "
                  "sign matches %d/100",
                  changes, root, bautin_a(), rel, sign_ok);
  return c;
}

CheckResult check_second_focal_negative() {
  CheckResult c{"second-focal-negative", true, ""};
  double aB = bautin_a();
  double l2 = lyapunov_l2(aB);
  Params p(aB, hopf_b(aB));
  double xP = equilibrium(p).x;
  bool inward = true;
  double margin = std::numeric_limits<double>::infinity();
  for (double h : {0.1, 0.2, 0.4}) {
    ReturnResult r = return_map(p, xP + h);
    bool ok = r.status == ReturnStatus::Returned && r.x1 < xP + h;
    if (r.status == ReturnStatus::Returned)
      margin = std::min(margin, (xP + h) - r.x1);
    inward = inward && ok;
  }
  c.pass = l2 < 0 && inward;
  c.details = fmt("L2(a_B) = %.6g (< 0), small-amplitude displacement inward at the "
                  "degenerate point: %s (min inward margin %.3e)",
                  l2, inward ? "yes" : "no", margin);
  return c;
}

CheckResult check_two_nested_cycles() {
  CheckResult c{"two-nested-cycles", true, ""};
  Params p(24.712, 13.85);
  double base = equilibrium(p).x;
  double H = 10.0 * (1.0 + p.a / 5.0);
  auto cs = find_cycles(p, base + H, 256);
  bool two = cs.size() == 2;
  bool stab = false, xmatch = false;
  double worst_rel = 1;
  if (two) {
    stab = cs[0].floquet > 1.0 && cs[1].floquet < 1.0 &&
           cs[0].stability == CycleStability::Unstable &&
           cs[1].stability == CycleStability::Stable;
    worst_rel = 0;
    for (const auto& cy : cs)
      worst_rel = std::max(worst_rel, std::abs(cy.floquet - cy.floquet_div) /
                                          std::abs(cy.floquet_div));
    xmatch = worst_rel <= 1e-3;
  }
  c.pass = two && stab && xmatch;
  if (two)
    c.details = fmt("cycles = 2, inner mult = %.6f, outer mult = %.6f, "
                    "max rel fd-vs-divergence = %.3e (tol 1e-3)",
                    cs[0].floquet, cs[1].floquet, worst_rel);
  else
    c.details = fmt("cycles = %zu (want 2)", cs.size());
  return c;
}

CheckResult check_generic_hopf_cycles() {
  CheckResult c{"generic-hopf-cycles", true, ""};
  Params p1(10.0, 3.4);
  auto cs1 = find_cycles(p1, equilibrium(p1).x + 10.0 * (1.0 + 2.0), 256);
  bool one = cs1.size() == 1 && cs1[0].stability == CycleStability::Stable;

  // the two-cycle band above the a=20 Hopf point is only a few 1e-3 wide in
  // b (the fold leaves the curve tangentially), so the representative two-
  // cycle parameter is taken from the measured band rather than a fixed
  // offset; the literal count at the commonly quoted (20, 10.8) is reported
  // alongside (that point lies above the fold and has no cycles)
  double bS20 = semistable_b(20.0, 1e-3);
  Params p2(20.0, 0.5 * (hopf_b(20.0) + bS20));
  auto cs2 = find_cycles(p2, equilibrium(p2).x + 10.0 * (1.0 + 4.0), 256);
  bool two = cs2.size() == 2 && cs2[0].stability == CycleStability::Unstable &&
             cs2[1].stability == CycleStability::Stable;
  int n_quoted = count_cycles(Params(20.0, 10.8));

  double bH10 = hopf_b(10.0);
  double xP10 = 2.0;
  double amp[3] = {0, 0, 0};
  const double deltas[3] = {0.025, 0.05, 0.1};
  bool amps_ok = true;
  for (int i = 0; i < 3; ++i) {
    Params q(10.0, bH10 - deltas[i]);
    auto cq = find_cycles(q, xP10 + 30.0, 256);
    if (cq.size() != 1) {
      amps_ok = false;
      break;
    }
    amp[i] = cq[0].section_x - xP10;
  }
  bool scaling = amps_ok;
  if (amps_ok)
    for (int i = 0; i + 1 < 3; ++i) {
      double measured = amp[i + 1] / amp[i];
      double expected = std::sqrt(deltas[i + 1] / deltas[i]);
      if (!(measured / expected >= 0.5 && measured / expected <= 2.0))
        scaling = false;
    }
  c.pass = one && two && scaling;
  c.details = fmt("(10,3.4): %zu stable cycle(s); (20,%.4f) in the band: %zu cycles "
                  "(inner unstable %s); (20,10.8) above the fold: %d cycles; "
                  "amplitudes %.4f %.4f %.4f, sqrt-law %s",
                  cs1.size(), p2.b, cs2.size(), two ? "yes" : "no", n_quoted, amp[0],
                  amp[1], amp[2], scaling ? "within factor 2" : "violated");
  return c;
}

CheckResult check_fold_curve() {
  CheckResult c{"fold-curve-bracketing", true, ""};
  const double tol_b = 1e-3;
  const double as[3] = {24.712, 20.0, 19.0};
  double gap[3] = {0, 0, 0};
  bool ok = true;
  std::string parts;
  for (int i = 0; i < 3; ++i) {
    double a = as[i];
    double bH = hopf_b(a);
    double bS = 0;
    int below = -1, above = -1;
    bool row_ok = false;
    try {
      bS = semistable_b(a, tol_b);
      below = count_cycles(Params(a, bS - tol_b));
      above = count_cycles(Params(a, bS + tol_b));
      row_ok = bS > bH && below >= 2 && above == 0;
      if (a == 24.712)
        row_ok = row_ok && bS > 13.85;
    } catch (const BracketFailureError&) {
      row_ok = false;
    }
    gap[i] = bS - bH;
    ok = ok && row_ok;
    parts += fmt("%sa=%.3f: b_S=%.6f gap=%.6f count(-tol)=%d count(+tol)=%d",
                 i ? "; " : "", a, bS, gap[i], below, above);
  }
  bool monotone = gap[0] > gap[1] && gap[1] > gap[2];
  c.pass = ok && monotone;
  c.details = parts + fmt("; gap monotone toward the degenerate point: %s",
                          monotone ? "yes" : "no");
  return c;
}

CheckResult check_basin_grids() {
  CheckResult c{"basin-grids", true, ""};
  const double pts[3][2] = {{5, 1}, {27, 19}, {3, 0.5}};
  std::string parts;
  bool all = true;
  for (int i = 0; i < 3; ++i) {
    Params p(pts[i][0], pts[i][1]);
    IntegratorConfig cfg;
    cfg.store_samples = false;
    cfg.tol_conv = 1e-6;
    GridRect g{0.1, 10.0 * p.a, -50.0, 50.0, 10, 10};
    BasinScanResult r = basin_scan(p, g, cfg);
    bool ok = r.converged == 100;
    all = all && ok;
    parts += fmt("%s(%g,%g): %d/100", i ? "; " : "", p.a, p.b, r.converged);
  }
  c.pass = all;
  c.details = parts;
  return c;
}

CheckResult check_escape_witnesses(std::uint64_t seed) {
  CheckResult c{"escape-witnesses", true, ""};
  Rng rng = salted(seed, 9);
  int found = 0, stable_params = 0;
  IntegratorConfig cfg;
  cfg.store_samples = false;
  std::string listing;
  for (int i = 0; i < 50; ++i) {
    Params p(30.0 * (1.0 - rng.unit()), 30.0 * (1.0 - rng.unit()));
    if (classify_equilibrium(p).kind == EquilibriumKind::StableFocus ||
        classify_equilibrium(p).kind == EquilibriumKind::StableNode)
      ++stable_params;
    auto w = escape_search(p, default_escape_candidates(), cfg);
    if (w && w->second.fate == Fate::Escaped) {
      ++found;
      listing += fmt(" (%.3g,%.3g)<-(%g,%g)", p.a, p.b, w->first.x, w->first.y);
    } else {
      listing += fmt(" (%.3g,%.3g)<-NONE", p.a, p.b);
    }
  }
  c.pass = found == 50;
  c.details = fmt("witness found for %d/50 random parameter pairs "
                  "(%d with a stable equilibrium); per pair:%s",
                  found, stable_params, listing.c_str());
  return c;
}

CheckResult check_dulac_random(std::uint64_t seed) {
  CheckResult c{"dulac-certificate", true, ""};
  Rng rng = salted(seed, 10);
  int holds = 0;
  for (int i = 0; i < 1000; ++i) {
    Params p = random_in_A(rng);
    if (dulac_certificate(p).holds)
      ++holds;
  }
  double worst_crit = 0;
  for (int i = 0; i < 100; ++i) {
    double a = 30.0 * (1.0 - rng.unit());
    worst_crit = std::max(worst_crit,
                          std::abs(dulac_majorant(a, std::cbrt(a))));
  }
  c.pass = holds == 1000 && worst_crit <= 1e-12;
  c.details = fmt("certificate holds %d/1000 on random A samples, "
                  "max |g(a^(1/3))| = %.3e (tol 1e-12)",
                  holds, worst_crit);
  return c;
}

CheckResult check_quarter_plane_invariance(std::uint64_t seed) {
  CheckResult c{"quarter-plane-invariance", true, ""};
  Rng rng = salted(seed, 2);
  int violations = 0, orbits = 0;
  double worst_x = 0, worst_q1 = 0;
  for (int i = 0; i < 5; ++i) {
    Params p(30.0 * (1.0 - rng.unit()), 30.0 * (1.0 - rng.unit()));
    IntegratorConfig cfg;
    cfg.store_samples = false;
    cfg.max_time = 200.0;
    InvarianceReport r = verify_invariance(p, 20, seed + i, cfg);
    violations += (int)r.violations.size();
    orbits += r.n_orbits;
    worst_x = std::min(worst_x, r.worst_x);
    worst_q1 = std::min(worst_q1, r.worst_q1);
  }
  c.pass = violations == 0;
  c.details = fmt("%d orbits, %d violations, min x from half-plane starts = %.3e, "
                  "min coord from quadrant starts = %.3e",
                  orbits, violations, worst_x, worst_q1);
  return c;
}

CheckResult check_no_cycles_on_certificate_region(std::uint64_t seed) {
  CheckResult c{"no-cycles-on-certificate-region", true, ""};
  Rng rng = salted(seed, 3);
  int zero = 0;
  const int n = 20;
  for (int i = 0; i < n; ++i) {
    Params p = random_in_A(rng);
    if (count_cycles(p) == 0)
      ++zero;
  }
  c.pass = zero == n;
  c.details = fmt("cycle count zero for %d/%d random points of A", zero, n);
  return c;
}

CheckResult check_section_robustness() {
  CheckResult c{"section-robustness", true, ""};
  Params p(10.0, 3.4);
  int h = count_cycles(p, Section::HorizontalRight);
  int v = count_cycles(p, Section::VerticalUp);
  c.pass = h == 1 && v == 1;
  c.details = fmt("(10,3.4): horizontal ray count = %d, vertical ray count = %d", h, v);
  return c;
}

CheckResult check_chart_pushforward(std::uint64_t seed) {
  CheckResult c{"chart-pushforward", true, ""};
  Rng rng = salted(seed, 11);
  double worst = 0;
  Params p(30.0 * (1.0 - rng.unit()), 30.0 * (1.0 - rng.unit()));
  for (int chart = 0; chart < 4; ++chart) {
    for (int i = 0; i < 1000; ++i) {
      double u = rng.uniform(-2.0, 2.0);
      double v = rng.uniform(0.1, 1.0);
      if (chart == 1 || chart == 3)
        v = -v;
      double x, y;
      State local;
      if (chart <= 1) { // u = y/x, v = 1/x
        x = 1.0 / v;
        y = u / v;
        local = chart == 0 ? chart_u1_field(p, u, v) : chart_v1_field(p, u, v);
      } else { // u = x/y, v = 1/y
        x = u / v;
        y = 1.0 / v;
        local = chart == 2 ? chart_u2_field(p, u, v) : chart_v2_field(p, u, v);
      }
      State F = vector_field(p, {x, y});
      double du_raw, dv_raw;
      if (chart <= 1) {
        du_raw = v * (F.y - u * F.x);
        dv_raw = -v * v * F.x;
      } else {
        du_raw = v * (F.x - u * F.y);
        dv_raw = -v * v * F.y;
      }
      double scale = std::max({std::abs(local.x), std::abs(local.y), 1.0});
      worst = std::max(worst, std::abs(local.x - v * v * du_raw) / scale);
      worst = std::max(worst, std::abs(local.y - v * v * dv_raw) / scale);
    }
  }

  // analytic Jacobian at I1 = (-b, 0): triangular with unit diagonal
  auto eqs = infinite_equilibria(p);
  double eig_err = 1;
  for (const auto& e : eqs)
    if (e.label == 1) {
      eig_err = std::max(std::abs(e.jacobian.m[0][0] - 1.0),
                         std::abs(e.jacobian.m[1][1] - 1.0));
      eig_err = std::max(eig_err, std::abs(e.jacobian.m[1][0]));
      State f1 = chart_u1_field(p, e.u, e.v);
      eig_err = std::max({eig_err, std::abs(f1.x), std::abs(f1.y)});
    }

  // blow-up field against the pulled-back second chart field: the pullback
  // through (u,v) = (r cos t, r^2 sin t) carries the factor (1+sin^2 t)/r^2
  double worst_bu = 0;
  for (int i = 0; i < 1000; ++i) {
    double r = rng.uniform(0.05, 0.4);
    double th = rng.uniform(0.0, 2.0 * std::acos(-1.0));
    double cth = std::cos(th), sth = std::sin(th);
    State chart = chart_u2_field(p, r * cth, r * r * sth);
    // D(u,v)/D(r,th) = [[c, -r s],[2 r s, r^2 c]], det = r^2 (1 + s^2)
    double det = r * r * (1.0 + sth * sth);
    double dr_raw = (r * r * cth * chart.x + r * sth * chart.y) / det;
    double dth_raw = (-2.0 * r * sth * chart.x + cth * chart.y) / det;
    PlanarValue<double> bu = blowup_field(p, r, th);
    double fac = (1.0 + sth * sth) / (r * r);
    double scale = std::max({std::abs(dr_raw), std::abs(dth_raw), 1e-6});
    worst_bu = std::max(worst_bu, std::abs(bu.dr / fac - dr_raw) / scale);
    worst_bu = std::max(worst_bu, std::abs(bu.dth / fac - dth_raw) / scale);
  }

  c.pass = worst <= 1e-10 && eig_err <= 1e-10 && worst_bu <= 1e-8;
  c.details = fmt("max rel chart-vs-pushforward = %.3e (tol 1e-10), "
                  "first infinite point eigenvalue/field residual = %.3e (tol 1e-10), "
                  "max rel blow-up-vs-chart = %.3e (tol 1e-8)",
                  worst, eig_err, worst_bu);
  return c;
}

CheckResult check_circle_equilibria_data(std::uint64_t seed) {
  CheckResult c{"circle-equilibria", true, ""};
  Rng rng = salted(seed, 12);
  const double pi = std::acos(-1.0);
  const double s5 = std::sqrt(5.0);
  bool all_ok = true;
  double worst_polish = 0, worst_jfd = 0, worst_semi = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Params p(30.0 * (1.0 - rng.unit()), 30.0 * (1.0 - rng.unit()));
    auto ce = circle_equilibria(p);
    if (ce.size() != 6) {
      all_ok = false;
      continue;
    }
    for (const auto& e : ce) {
      // polish theta on the circle flow 2 c s (c^2 + 4 s) and compare
      double th = e.theta;
      for (int it = 0; it < 4; ++it) {
        auto h = [](double t) {
          double ct = std::cos(t), st = std::sin(t);
          return 2.0 * ct * st * (ct * ct + 4.0 * st);
        };
        double d = 1e-6;
        double hp = (h(th + d) - h(th - d)) / (2.0 * d);
        th -= h(th) / hp;
      }
      worst_polish = std::max(worst_polish, std::abs(th - e.theta));

      Mat2 Jfd;
      const double d = 1e-6;
      PlanarValue<double> fr1 = blowup_field(p, d, e.theta);
      PlanarValue<double> fr0 = blowup_field(p, -d, e.theta);
      PlanarValue<double> ft1 = blowup_field(p, 0.0, e.theta + d);
      PlanarValue<double> ft0 = blowup_field(p, 0.0, e.theta - d);
      Jfd.m[0][0] = (fr1.dr - fr0.dr) / (2 * d);
      Jfd.m[1][0] = (fr1.dth - fr0.dth) / (2 * d);
      Jfd.m[0][1] = (ft1.dr - ft0.dr) / (2 * d);
      Jfd.m[1][1] = (ft1.dth - ft0.dth) / (2 * d);
      for (int r = 0; r < 2; ++r)
        for (int cc = 0; cc < 2; ++cc)
          worst_jfd = std::max(worst_jfd,
                               std::abs(Jfd.m[r][cc] - e.jacobian.m[r][cc]) /
                                   std::max(1.0, std::abs(e.jacobian.m[r][cc])));

      auto near = [&](double t) { return std::abs(e.theta - t) < 1e-9; };
      const Mat2& J = e.jacobian;
      if (near(0.0) || near(pi)) {
        if (std::abs(J.m[0][0] + 1) > 1e-9 || std::abs(J.m[1][1] - 2) > 1e-9 ||
            e.classification != CircleClass::HyperbolicSaddle)
          all_ok = false;
      } else if (near(pi / 2) || near(3 * pi / 2)) {
        double want = near(pi / 2) ? -8.0 : 8.0;
        if (std::abs(J.m[0][0]) > 1e-9 || std::abs(J.m[1][1] - want) > 1e-9)
          all_ok = false;
        if (!e.semi_hyp || e.semi_hyp->m != 5 ||
            std::abs(e.semi_hyp->lambda - want) > 1e-6)
          all_ok = false;
        else {
          double am_want = (near(pi / 2) ? 1.0 : -1.0) * p.a * p.b / 4.0;
          worst_semi = std::max(worst_semi, std::abs(e.semi_hyp->a_m - am_want) /
                                                std::abs(am_want));
          if (e.classification != CircleClass::TopologicalSaddle)
            all_ok = false;
        }
      } else {
        // sin theta = 2 - sqrt(5): the saddle-node pair
        double j21_want = (152.0 - 68.0 * s5) * (2.0 * p.a + 5.0 * p.b);
        double j22_want = 320.0 - 144.0 * s5;
        if (std::abs(J.m[1][0] - j21_want) > 1e-6 * std::max(1.0, std::abs(j21_want)) ||
            std::abs(J.m[1][1] - j22_want) > 1e-9)
          all_ok = false;
        // the two branch coefficients are mirror images: one negative, one
        // positive (which is which depends on the kernel-vector orientation)
        bool lower = e.theta < 3 * pi / 2; // pi + theta0 vs 2 pi - theta0
        if (!e.semi_hyp || e.semi_hyp->m != 2 ||
            (lower ? e.semi_hyp->a_m >= 0 : e.semi_hyp->a_m <= 0) ||
            e.classification != CircleClass::SaddleNode)
          all_ok = false;
      }
    }
  }
  c.pass = all_ok && worst_polish <= 1e-12 && worst_jfd <= 1e-6 && worst_semi <= 1e-6;
  c.details = fmt("max polish shift = %.3e (tol 1e-12), max rel Jacobian-vs-fd = %.3e "
                  "(tol 1e-6), max rel branch coefficient err = %.3e (tol 1e-6), "
                  "matrix/classification pattern %s",
                  worst_polish, worst_jfd, worst_semi, all_ok ? "ok" : "violated");
  return c;
}

SuiteResult suite_theorem1(std::uint64_t seed) {
  return {"theorem1", {check_escape_witnesses(seed)}};
}

SuiteResult suite_theorem2(std::uint64_t seed) {
  return {"theorem2", {check_basin_grids(), check_quarter_plane_invariance(seed)}};
}

SuiteResult suite_hopf(std::uint64_t) {
  return {"hopf",
          {check_hopf_curve_exactness(), check_curve_intersection(),
           check_first_focal_sign_change(), check_second_focal_negative()}};
}

SuiteResult suite_cycles(std::uint64_t seed) {
  return {"cycles",
          {check_two_nested_cycles(), check_generic_hopf_cycles(), check_fold_curve(),
           check_no_cycles_on_certificate_region(seed), check_section_robustness()}};
}

SuiteResult suite_dulac(std::uint64_t seed) {
  return {"dulac", {check_dulac_random(seed)}};
}

SuiteResult suite_infinity(std::uint64_t seed) {
  return {"infinity",
          {check_chart_pushforward(seed), check_circle_equilibria_data(seed)}};
}

std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed) {
  if (which == "all")
    return {suite_theorem1(seed), suite_theorem2(seed), suite_hopf(seed),
            suite_cycles(seed),   suite_dulac(seed),    suite_infinity(seed)};
  if (which == "theorem1")
    return {suite_theorem1(seed)};
  if (which == "theorem2")
    return {suite_theorem2(seed)};
  if (which == "hopf")
    return {suite_hopf(seed)};
  if (which == "cycles")
    return {suite_cycles(seed)};
  if (which == "dulac")
    return {suite_dulac(seed)};
  throw std::invalid_argument("unknown suite: " + which);
}

} // namespace ledyn
