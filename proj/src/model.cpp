#include "ledyn/model.hpp"
#include "ledyn/hopf.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ledyn {

Params::Params(double a_, double b_) : a(a_), b(b_) {
  if (!(std::isfinite(a) && std::isfinite(b)) || a <= 0.0 || b <= 0.0)
    throw std::invalid_argument("Params: a and b must be positive finite");
}

State vector_field(const Params& p, const State& s) {
  auto f = vector_field_t(p.a, p.b, s.x, s.y);
  return {f.dx, f.dy};
}

State original_vector_field(const Params& p, const State& s) {
  double w = 1.0 + s.x * s.x; // never 0 on the reals
  return {p.a - s.x - 4.0 * s.x * s.y / w, p.b * s.x * (1.0 - s.y / w)};
}

State equilibrium(const Params& p) {
  return {p.a / 5.0, 1.0 + p.a * p.a / 25.0};
}

Mat2 jacobian(const Params& p, const State& s) {
  Mat2 j;
  j.m[0][0] = -(1.0 + s.x * s.x) + 2.0 * s.x * (p.a - s.x) - 4.0 * s.y;
  j.m[0][1] = -4.0 * s.x;
  j.m[1][0] = p.b * (1.0 + 3.0 * s.x * s.x - s.y);
  j.m[1][1] = -p.b * s.x;
  return j;
}

EquilibriumReport classify_equilibrium(const Params& p, double tol_trace) {
  EquilibriumReport r;
  r.location = equilibrium(p);
  r.jacobian = jacobian(p, r.location);
  r.trace = r.jacobian.trace();
  r.determinant = r.jacobian.det();
  double disc = r.trace * r.trace - 4.0 * r.determinant;
  if (disc >= 0.0) {
    double sq = std::sqrt(disc);
    r.eig1 = {(r.trace + sq) / 2.0, 0.0};
    r.eig2 = {(r.trace - sq) / 2.0, 0.0};
  } else {
    double w = std::sqrt(-disc) / 2.0;
    r.eig1 = {r.trace / 2.0, w};
    r.eig2 = {r.trace / 2.0, -w};
  }
  if (r.trace == 0.0 && r.determinant > 0.0) {
    r.kind = EquilibriumKind::CenterLinear;
  } else if (std::abs(r.trace) < tol_trace && r.determinant > 0.0) {
    r.kind = EquilibriumKind::Degenerate;
  } else if (r.determinant <= 0.0) {
    r.kind = EquilibriumKind::Degenerate; // det = ab(a^2+25)/25 > 0 for valid Params
  } else if (r.trace < 0.0) {
    r.kind = disc < 0.0 ? EquilibriumKind::StableFocus : EquilibriumKind::StableNode;
  } else {
    r.kind = disc < 0.0 ? EquilibriumKind::UnstableFocus : EquilibriumKind::UnstableNode;
  }
  return r;
}

double hopf_b(double a) { return (3.0 * a * a - 125.0) / (5.0 * a); }

double basin_b(double a) { return a - 3.0 * std::cbrt(a); }

RegionLabel region_membership(const Params& p, double tol_curve) {
  RegionLabel l;
  l.b_H_at_a = hopf_b(p.a);
  l.b_a_at_a = basin_b(p.a);
  l.small_a_branch = p.a <= kA1;
  l.above_basin_curve = p.b > l.b_a_at_a;
  l.d_status_unresolved = false;
  if (l.small_a_branch || l.above_basin_curve) {
    l.region = Region::InA;
    return l;
  }
  // not in A, so a > 3*sqrt(3) and b <= b_a(a) here
  if (std::abs(p.b - l.b_H_at_a) <= tol_curve * std::max(1.0, std::abs(l.b_H_at_a))) {
    double ab = bautin_a();
    if (std::abs(p.a - ab) <= tol_curve * std::max(1.0, ab))
      l.region = Region::AtBautin;
    else
      l.region = p.a < ab ? Region::OnHminus : Region::OnHplus;
    return l;
  }
  if (p.b > l.b_H_at_a) {
    // stable side outside A; the two-cycle region D lives here for a > a_B,
    // between H+ and the fold curve S, and needs a cycle count to decide
    l.region = Region::InB_NotA;
    l.d_status_unresolved = p.a > bautin_a();
  } else {
    l.region = Region::UnstableOutsideD;
  }
  return l;
}

const char* region_name(Region r) {
  switch (r) {
  case Region::InA: return "InA";
  case Region::InB_NotA: return "InB_NotA";
  case Region::OnHminus: return "OnHminus";
  case Region::OnHplus: return "OnHplus";
  case Region::AtBautin: return "AtBautin";
  case Region::InD: return "InD";
  case Region::UnstableOutsideD: return "UnstableOutsideD";
  case Region::OnSapprox: return "OnSapprox";
  }
  return "?";
}

double dulac_divergence(const Params& p, double x) {
  if (!(x > 0.0))
    throw std::domain_error("dulac_divergence: x must be positive");
  return p.a - p.b - 2.0 * x - p.a / (x * x);
}

double dulac_majorant(double a, double x) {
  return -2.0 * x * x * x + 3.0 * std::cbrt(a) * x * x - a;
}

DulacCertificate dulac_certificate(const Params& p, double x_max, int n_grid) {
  if (n_grid < 2)
    n_grid = 2;
  double hi = std::max(x_max, std::max(p.a, 1.0));
  double lo = 1e-8; // f -> -inf as x -> 0+, so the left edge is safe
  DulacCertificate c;
  c.worst_x = lo;
  c.worst_value = dulac_divergence(p, lo);
  double r = std::log(hi / lo) / (n_grid - 1);
  for (int i = 1; i < n_grid; ++i) {
    double x = lo * std::exp(r * i);
    double f = dulac_divergence(p, x);
    if (f > c.worst_value) {
      c.worst_value = f;
      c.worst_x = x;
    }
  }
  // interior maximum of f is exactly x* = a^{1/3}; evaluating it directly
  // makes `holds` exact instead of grid-resolution fuzzy
  double xs = std::cbrt(p.a);
  if (xs <= hi) {
    double f = dulac_divergence(p, xs);
    if (f > c.worst_value) {
      c.worst_value = f;
      c.worst_x = xs;
    }
  }
  c.holds = c.worst_value < 0.0;
  c.majorant_at_crit = dulac_majorant(p.a, xs);
  return c;
}

} // namespace ledyn
