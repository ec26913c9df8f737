// Command-line front end: orbit simulation, phase portraits, parameter-plane
// maps, behavior at infinity, Hopf-curve scans, cycle detection, the Dulac
// certificate, and the verification suites. All outputs are plain files
// (CSV/JSON/SVG) and byte-deterministic for a fixed invocation.
#include "CLI11.hpp"
#include "json.hpp"

#include "ledyn/cycles.hpp"
#include "ledyn/hopf.hpp"
#include "ledyn/infinity.hpp"
#include "ledyn/integrate.hpp"
#include "ledyn/model.hpp"
#include "ledyn/parallel.hpp"
#include "ledyn/svg.hpp"
#include "ledyn/verify.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ledyn;

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file(const fs::path& p, const std::string& content) {
  fs::create_directories(p.parent_path().empty() ? "." : p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << content;
}

json mat_json(const Mat2& m) {
  return json::array({json::array({m.m[0][0], m.m[0][1]}),
                      json::array({m.m[1][0], m.m[1][1]})});
}

std::string orbit_csv(const std::vector<double>& t, const std::vector<State>& s) {
  std::string out = "t,x,y\n";
  for (std::size_t i = 0; i < t.size(); ++i)
    out += g17(t[i]) + "," + g17(s[i].x) + "," + g17(s[i].y) + "\n";
  return out;
}

json cycles_json(const std::vector<CycleInfo>& cs) {
  json arr = json::array();
  for (const auto& c : cs)
    arr.push_back({{"section_x", c.section_x},
                   {"period", c.period},
                   {"floquet", c.floquet},
                   {"floquet_div", c.floquet_div},
                   {"stability", cycle_stability_name(c.stability)}});
  return arr;
}

int cmd_simulate(double a, double b, double x0, double y0, const IntegratorConfig& cfg,
                 const fs::path& dir) {
  Params p(a, b);
  Orbit o = integrate(p, {x0, y0}, cfg);
  write_file(dir / "orbit.csv", orbit_csv(o.t, o.s));
  json j{{"schema", 1},
         {"fate", fate_name(o.fate)},
         {"t_end", o.t_end},
         {"final_state",
          {{"x", o.s.empty() ? x0 : o.s.back().x}, {"y", o.s.empty() ? y0 : o.s.back().y}}},
         {"overflow", o.overflow}};
  if (o.escape_radius_hit)
    j["escape_radius_hit"] = *o.escape_radius_hit;
  write_file(dir / "fate.json", j.dump(2) + "\n");
  std::printf("fate: %s at t = %.6g\n", fate_name(o.fate), o.t_end);
  return 0;
}

int cmd_portrait(double a, double b, std::vector<double> window, int n_orbits,
                 const fs::path& dir) {
  Params p(a, b);
  State P = equilibrium(p);
  double H = 10.0 * (1.0 + a / 5.0);
  auto cs = find_cycles(p, P.x + H, 256);

  double x1 = std::max({2.5 * P.x, 5.0});
  double y1 = std::max({2.5 * P.y, 5.0});
  for (const auto& c : cs)
    for (const auto& s : c.orbit) {
      x1 = std::max(x1, 1.15 * s.x);
      y1 = std::max(y1, 1.15 * s.y);
    }
  double x0 = 0, y0 = 0;
  if (window.size() == 4) {
    x0 = window[0];
    x1 = window[1];
    y0 = window[2];
    y1 = window[3];
    if (!(x1 > x0 && y1 > y0))
      throw std::invalid_argument("portrait: window must be x0 x1 y0 y1 with x0<x1, y0<y1");
  }

  SvgCanvas svg(720, 720, x0, x1, y0, y1);
  IntegratorConfig cfg;
  cfg.max_time = 60.0;
  for (int k = 1; k <= n_orbits; ++k) {
    double xs = P.x + (x1 - P.x) * k / (n_orbits + 1.0);
    Orbit o = integrate(p, {xs, P.y}, cfg);
    svg.polyline(o.s, "#9aa5b1", 0.8);
  }
  for (const auto& c : cs) {
    bool unstable = c.stability == CycleStability::Unstable;
    std::vector<State> closed = c.orbit;
    if (!closed.empty())
      closed.push_back(closed.front());
    svg.polyline(closed, unstable ? "#d62728" : "#1f77b4", 1.6, unstable);
  }
  EquilibriumReport rep = classify_equilibrium(p);
  bool stable = rep.kind == EquilibriumKind::StableFocus ||
                rep.kind == EquilibriumKind::StableNode;
  svg.circle(P.x, P.y, 4.0, stable ? "#2ca02c" : "#d62728", "#000");
  char label[160];
  std::snprintf(label, sizeof(label), "a=%.6g b=%.6g, %zu cycle(s)", a, b, cs.size());
  svg.text(x0 + 0.03 * (x1 - x0), y1 - 0.04 * (y1 - y0), label, 14);
  write_file(dir / "portrait.svg", svg.str());
  std::printf("portrait: %zu cycle(s) drawn\n", cs.size());
  return 0;
}

const char* region_fill(Region r) {
  switch (r) {
  case Region::InA: return "#bfe3bf";
  case Region::InB_NotA: return "#e3dcf7";
  case Region::OnHminus: return "#5b5b5b";
  case Region::OnHplus: return "#5b5b5b";
  case Region::AtBautin: return "#111111";
  case Region::InD: return "#f2c94c";
  case Region::UnstableOutsideD: return "#f5cdb8";
  case Region::OnSapprox: return "#8d8d8d";
  }
  return "#ffffff";
}

int cmd_regions(std::vector<double> a_range, std::vector<double> b_range, int resolution,
                bool with_cycles, const fs::path& dir) {
  double a0 = a_range[0], a1 = a_range[1], b0 = b_range[0], b1 = b_range[1];
  if (!(a0 > 0 && b0 > 0 && a1 > a0 && b1 > b0))
    throw std::invalid_argument("regions: ranges must be positive and increasing");
  const int n = resolution;
  std::vector<int> code(n * n, 0);

  auto a_at = [&](int i) { return a0 + (a1 - a0) * (i + 0.5) / n; };
  auto b_at = [&](int j) { return b0 + (b1 - b0) * (j + 0.5) / n; };

  // fold curve by column where requested: pixels between the Hopf curve and
  // the bisected fold get the two-cycle label, pixels at the bracket get the
  // approximate-fold label
  std::vector<double> fold(n, std::numeric_limits<double>::quiet_NaN());
  if (with_cycles) {
    double aB = bautin_a();
    double tol = std::max(1e-3, (b1 - b0) / n / 4.0);
    for (int i = 0; i < n; ++i) {
      double a = a_at(i);
      if (a <= aB + 0.05)
        continue;
      try {
        fold[i] = semistable_b(a, tol);
      } catch (const BracketFailureError&) {
      }
    }
  }

  parallel_for((std::size_t)n * n, [&](std::size_t idx) {
    int i = (int)(idx % n), j = (int)(idx / n);
    RegionLabel l = region_membership(Params(a_at(i), b_at(j)));
    Region r = l.region;
    if (l.d_status_unresolved && !std::isnan(fold[i])) {
      double pixel_b = (b1 - b0) / n;
      if (std::abs(b_at(j) - fold[i]) <= pixel_b)
        r = Region::OnSapprox;
      else if (b_at(j) < fold[i])
        r = Region::InD;
    }
    code[idx] = (int)r;
  });

  json legend = json::object();
  for (int r = 0; r <= (int)Region::OnSapprox; ++r)
    legend[std::to_string(r)] = region_name((Region)r);
  json rows = json::array();
  for (int j = 0; j < n; ++j) {
    json row = json::array();
    for (int i = 0; i < n; ++i)
      row.push_back(code[(std::size_t)j * n + i]);
    rows.push_back(std::move(row));
  }
  auto curve_json = [&](double from, double (*f)(double)) {
    json arr = json::array();
    for (int i = 0; i <= 200; ++i) {
      double a = from + (a1 - from) * i / 200.0;
      if (a < a0)
        continue;
      arr.push_back(json::array({a, f(a)}));
    }
    return arr;
  };
  json j{{"schema", 1},
         {"a_range", json::array({a0, a1})},
         {"b_range", json::array({b0, b1})},
         {"resolution", n},
         {"with_cycles", with_cycles},
         {"legend", legend},
         {"codes", rows},
         {"hopf_curve", curve_json(kA2, hopf_b)},
         {"basin_curve", curve_json(kA1, basin_b)},
         {"intersection", json::array({5.0 * std::sqrt(5.0), 2.0 * std::sqrt(5.0)})},
         {"axis_anchors", json::array({kA1, kA2})},
         {"bautin", json::array({bautin_a(), hopf_b(bautin_a())})}};
  if (with_cycles) {
    json fs_ = json::array();
    for (int i = 0; i < n; ++i)
      if (!std::isnan(fold[i]))
        fs_.push_back(json::array({a_at(i), fold[i]}));
    j["fold_samples"] = fs_;
  }
  write_file(dir / "regions.json", j.dump(2) + "\n");

  SvgCanvas svg(760, 640, a0, a1, b0, b1);
  double pw = (a1 - a0) / n, ph = (b1 - b0) / n;
  for (int jj = 0; jj < n; ++jj) {
    int i = 0;
    while (i < n) {
      int k = i;
      while (k < n && code[(std::size_t)jj * n + k] == code[(std::size_t)jj * n + i])
        ++k;
      svg.rect_world(a0 + i * pw, a0 + k * pw, b0 + jj * ph, b0 + (jj + 1) * ph,
                     region_fill((Region)code[(std::size_t)jj * n + i]));
      i = k;
    }
  }
  auto draw_curve = [&](double from, double (*f)(double), const char* color) {
    std::vector<State> pts;
    for (int i = 0; i <= 400; ++i) {
      double a = from + (a1 - from) * i / 400.0;
      double b = f(a);
      if (a >= a0 && b >= b0 && b <= b1)
        pts.push_back({a, b});
    }
    svg.polyline(pts, color, 1.8);
  };
  draw_curve(kA2, hopf_b, "#c0392b");
  draw_curve(kA1, basin_b, "#2155cd");
  if (with_cycles) {
    std::vector<State> spts;
    for (int i = 0; i < n; ++i)
      if (!std::isnan(fold[i]) && fold[i] >= b0 && fold[i] <= b1)
        spts.push_back({a_at(i), fold[i]});
    svg.polyline(spts, "#6b3fa0", 1.8);
  }
  svg.circle(5.0 * std::sqrt(5.0), 2.0 * std::sqrt(5.0), 4.0, "#000");
  svg.circle(bautin_a(), hopf_b(bautin_a()), 4.0, "#6b3fa0", "#000");
  svg.text(5.0 * std::sqrt(5.0) + 0.01 * (a1 - a0), 2.0 * std::sqrt(5.0), "I", 13);
  if (kA1 > a0 && kA1 < a1)
    svg.text(kA1, b0 + 0.02 * (b1 - b0), "a1", 12);
  if (kA2 > a0 && kA2 < a1)
    svg.text(kA2, b0 + 0.06 * (b1 - b0), "a2", 12);
  write_file(dir / "regions.svg", svg.str());
  std::printf("regions: %dx%d map written\n", n, n);
  return 0;
}

int cmd_infinity(double a, double b, const fs::path& dir) {
  Params p(a, b);
  json eqs = json::array();
  for (const auto& e : infinite_equilibria(p)) {
    json je{{"label", e.label},
            {"chart", chart_name(e.chart)},
            {"u", e.u},
            {"v", e.v},
            {"kind", e.kind == InfinityKind::UnstableNode ? "UnstableNode"
                                                          : "DegenerateBlowupRequired"},
            {"jacobian", mat_json(e.jacobian)},
            {"note", e.note}};
    if (e.sectors)
      je["sectors"] = {{"hyperbolic", e.sectors->hyperbolic},
                       {"parabolic", e.sectors->parabolic}};
    eqs.push_back(std::move(je));
  }
  json circ = json::array();
  for (const auto& e : circle_equilibria(p)) {
    json je{{"theta", e.theta},
            {"jacobian", mat_json(e.jacobian)},
            {"classification", circle_class_name(e.classification)},
            {"note", e.note}};
    if (e.semi_hyp)
      je["semi_hyp"] = {{"lambda", e.semi_hyp->lambda},
                        {"m", e.semi_hyp->m},
                        {"a_m", e.semi_hyp->a_m}};
    circ.push_back(std::move(je));
  }
  json j{{"schema", 1}, {"a", a},       {"b", b},
         {"theta0", theta0()}, {"infinite_equilibria", eqs}, {"circle_equilibria", circ}};
  write_file(dir / "infinity.json", j.dump(2) + "\n");

  SvgCanvas svg(640, 640, -1.1, 1.1, -1.1, 1.1);
  svg.circle(0, 0, 640 / 2.2, "none", "#000");
  IntegratorConfig cfg;
  cfg.max_time = 30.0;
  for (double r : {0.5, 2.0, 8.0}) {
    for (int k = 0; k < 4; ++k) {
      double th = 0.4 + k * 1.5707963267948966;
      Orbit o = integrate(p, {r * std::cos(th), r * std::sin(th)}, cfg);
      std::vector<State> proj;
      proj.reserve(o.s.size());
      for (const auto& s : o.s)
        proj.push_back(disk_projection(s));
      svg.polyline(proj, "#9aa5b1", 0.8);
    }
  }
  double phi1 = std::atan2(-b, 1.0);
  const double dirs[4][2] = {{std::cos(phi1), std::sin(phi1)},
                             {-std::cos(phi1), -std::sin(phi1)},
                             {0, 1},
                             {0, -1}};
  for (int k = 0; k < 4; ++k) {
    svg.circle(dirs[k][0], dirs[k][1], 4.0, k < 2 ? "#d62728" : "#6b3fa0", "#000");
    char lab[8];
    std::snprintf(lab, sizeof(lab), "I%d", k + 1);
    svg.text(0.92 * dirs[k][0], 0.92 * dirs[k][1], lab, 13);
  }
  svg.circle(disk_projection(equilibrium(p)).x, disk_projection(equilibrium(p)).y, 3.0,
             "#2ca02c", "#000");
  write_file(dir / "disk.svg", svg.str());
  std::printf("infinity: 4 infinite and %zu circle equilibria reported\n",
              circle_equilibria(p).size());
  return 0;
}

int cmd_hopf(double a_lo, double a_hi, int n, const fs::path& dir) {
  auto rows = hopf_scan(a_lo, a_hi, n);
  std::string csv = "a,b,omega,L1,arc\n";
  for (const auto& r : rows)
    csv += g17(r.a) + "," + g17(r.b) + "," + g17(r.omega) + "," + g17(r.L1) + "," +
           hopf_arc_name(r.arc) + "\n";
  write_file(dir / "hopf_scan.csv", csv);
  std::printf("hopf: %d rows, degenerate point at a = %.9f\n", n, bautin_a());
  return 0;
}

int cmd_cycles(double a, double b, double x_max, int n_seed, const fs::path& dir) {
  Params p(a, b);
  State P = equilibrium(p);
  if (x_max <= 0)
    x_max = P.x + 10.0 * (1.0 + a / 5.0);
  SearchLog lg;
  auto cs = find_cycles(p, x_max, n_seed, Section::HorizontalRight, ReturnConfig{}, &lg);
  json j{{"schema", 1},
         {"a", a},
         {"b", b},
         {"count", cs.size()},
         {"cycles", cycles_json(cs)},
         {"seed_sweep",
          {{"seeds", lg.seeds},
           {"returned", lg.returned},
           {"converged", lg.converged},
           {"escaped", lg.escaped},
           {"budget_gaps", lg.budget},
           {"brackets", lg.brackets},
           {"dropped", lg.dropped},
           {"zooms", lg.zooms}}}};
  write_file(dir / "cycles.json", j.dump(2) + "\n");
  for (std::size_t k = 0; k < cs.size(); ++k)
    write_file(dir / ("cycle_" + std::to_string(k) + ".csv"),
               orbit_csv(cs[k].t, cs[k].orbit));
  std::printf("cycles: %zu found\n", cs.size());
  return 0;
}

int cmd_dulac(double a, double b, const fs::path& dir) {
  Params p(a, b);
  DulacCertificate c = dulac_certificate(p);
  json j{{"schema", 1},
         {"a", a},
         {"b", b},
         {"holds", c.holds},
         {"worst_x", c.worst_x},
         {"worst_value", c.worst_value},
         {"majorant_at_crit", c.majorant_at_crit},
         {"in_A", region_membership(p).region == Region::InA}};
  write_file(dir / "dulac.json", j.dump(2) + "\n");
  std::printf("dulac: certificate %s (worst value %.6g at x = %.6g)\n",
              c.holds ? "holds" : "fails", c.worst_value, c.worst_x);
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const fs::path& dir) {
  auto suites = run_suites(suite, seed);
  bool all_pass = true;
  json js = json::array();
  for (const auto& s : suites) {
    json checks = json::array();
    for (const auto& c : s.checks) {
      std::printf("[%s] %-36s %s  %s\n", s.suite.c_str(), c.name.c_str(),
                  c.pass ? "PASS" : "FAIL", c.details.c_str());
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
      all_pass = all_pass && c.pass;
    }
    js.push_back({{"suite", s.suite}, {"pass", s.pass()}, {"checks", checks}});
  }
  json j{{"schema", 1}, {"suite", suite}, {"seed", seed}, {"pass", all_pass},
         {"suites", js}};
  write_file(dir / "verify.json", j.dump(2) + "\n");
  std::printf("verify: %s\n", all_pass ? "all checks passed" : "FAILURES present");
  return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis toolkit for the planar cubic reaction model"};
  app.require_subcommand(1);
  unsigned workers = 0;
  app.add_option("--workers", workers, "worker threads (0 = hardware)");
  std::string out_dir = ".";
  app.add_option("-o,--out", out_dir, "output directory");

  double a = 5, b = 1, x0 = 0.5, y0 = 1;
  IntegratorConfig icfg;
  auto* sim = app.add_subcommand("simulate", "integrate one orbit and classify its fate");
  sim->add_option("-a", a)->required();
  sim->add_option("-b", b)->required();
  sim->add_option("--x0", x0)->required();
  sim->add_option("--y0", y0)->required();
  sim->add_option("--t-max", icfg.max_time);
  sim->add_option("--rel-tol", icfg.rel_tol);
  sim->add_option("--abs-tol", icfg.abs_tol);
  sim->add_option("--r-escape", icfg.R_escape);
  sim->add_option("--tol-conv", icfg.tol_conv);

  std::vector<double> window;
  int n_orbits = 6;
  auto* por = app.add_subcommand("portrait", "phase portrait with detected cycles");
  por->add_option("-a", a)->required();
  por->add_option("-b", b)->required();
  por->add_option("--window", window)->expected(4);
  por->add_option("--n-orbits", n_orbits);

  std::vector<double> a_range{0.5, 30.0}, b_range{0.5, 20.0};
  int resolution = 160;
  bool with_cycles = false;
  auto* reg = app.add_subcommand("regions", "parameter-plane membership map");
  reg->add_option("--a-range", a_range)->expected(2);
  reg->add_option("--b-range", b_range)->expected(2);
  reg->add_option("--resolution", resolution);
  reg->add_flag("--with-cycles", with_cycles, "bisect the fold curve per column");

  auto* inf = app.add_subcommand("infinity", "equilibria at infinity and the blow-up data");
  inf->add_option("-a", a)->required();
  inf->add_option("-b", b)->required();

  double a_lo = 6.5, a_hi = 30.0;
  int n_scan = 100;
  auto* hop = app.add_subcommand("hopf", "scan of the trace-zero curve");
  hop->add_option("--a-lo", a_lo);
  hop->add_option("--a-hi", a_hi);
  hop->add_option("-n,--n", n_scan);

  double x_max = 0;
  int n_seed = 256;
  auto* cyc = app.add_subcommand("cycles", "limit-cycle search on the section ray");
  cyc->add_option("-a", a)->required();
  cyc->add_option("-b", b)->required();
  cyc->add_option("--x-max", x_max);
  cyc->add_option("--n-seed", n_seed);

  auto* dul = app.add_subcommand("dulac", "negative-divergence certificate for 1/x weight");
  dul->add_option("-a", a)->required();
  dul->add_option("-b", b)->required();

  std::string suite = "all";
  std::uint64_t seed = 7;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "theorem1", "theorem2", "hopf", "cycles", "dulac"}));
  ver->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  set_default_workers(workers);
  fs::path dir(out_dir);
  try {
    if (*sim)
      return cmd_simulate(a, b, x0, y0, icfg, dir);
    if (*por)
      return cmd_portrait(a, b, window, n_orbits, dir);
    if (*reg)
      return cmd_regions(a_range, b_range, resolution, with_cycles, dir);
    if (*inf)
      return cmd_infinity(a, b, dir);
    if (*hop)
      return cmd_hopf(a_lo, a_hi, n_scan, dir);
    if (*cyc)
      return cmd_cycles(a, b, x_max, n_seed, dir);
    if (*dul)
      return cmd_dulac(a, b, dir);
    if (*ver)
      return cmd_verify(suite, seed, dir);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
