#include "ledyn/infinity.hpp"

#include <algorithm>
#include <cmath>

namespace ledyn {

State chart_u1_field(const Params& p, double u, double v) {
  double a = p.a, b = p.b;
  double du = b + u - (a + b - 4.0 * u) * u * v + (b + u) * v * v - a * u * v * v * v;
  double dv = v * (1.0 + 4.0 * u * v + v * v - a * (v + v * v * v));
  return {du, dv};
}

State chart_u2_field(const Params& p, double u, double v) {
  double a = p.a, b = p.b;
  double u2 = u * u, v2 = v * v;
  double du = -b * u2 * u2 - b * u2 * v2 + a * u2 * v + a * v2 * v + b * u2 * v -
              u2 * u - u * v2 - 4.0 * u * v;
  double dv = -b * u2 * u * v - b * u * v2 * v + b * u * v2;
  return {du, dv};
}

State chart_v1_field(const Params& p, double u, double v) {
  return chart_u1_field(p, u, v); // odd-degree field: parity factor is +1
}

State chart_v2_field(const Params& p, double u, double v) {
  return chart_u2_field(p, u, v);
}

std::vector<InfiniteEquilibrium> infinite_equilibria(const Params& p) {
  std::vector<InfiniteEquilibrium> out(4);
  Mat2 node;
  node.m[0][0] = 1.0;
  node.m[0][1] = p.b * (p.a + 5.0 * p.b);
  node.m[1][0] = 0.0;
  node.m[1][1] = 1.0;

  out[0] = {ChartId::U1, -p.b, 0.0, 1, InfinityKind::UnstableNode, node,
            std::nullopt, "eigenvalues (1,1)"};
  out[1] = {ChartId::V1, -p.b, 0.0, 2, InfinityKind::UnstableNode, node,
            std::nullopt, "antipode of I1, eigenvalues (1,1)"};
  Mat2 zero;
  out[2] = {ChartId::U2, 0.0, 0.0, 3, InfinityKind::DegenerateBlowupRequired,
            zero, SectorStructure{4, 1}, "linear part vanishes; blow-up required"};
  out[3] = {ChartId::V2, 0.0, 0.0, 4, InfinityKind::DegenerateBlowupRequired,
            zero, SectorStructure{4, 1},
            "antipode of I3; its parabolic sector meets the open disk"};
  return out;
}

PlanarValue<double> blowup_field(const Params& p, double r, double theta) {
  return blowup_field_t(p.a, p.b, r, theta);
}

Mat2 blowup_circle_jacobian(const Params& p, double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  double c2 = std::cos(2.0 * theta), s2 = std::sin(2.0 * theta);
  Mat2 j;
  // dr/dt carries an overall factor r, so the r=0 row is (d(dr)/dr, 0)
  j.m[0][0] = -c * c * (c * c + 4.0 * s);
  j.m[0][1] = 0.0;
  j.m[1][0] = p.b * c * c * c * c * s - (2.0 * p.a + p.b) * c * c * s * s;
  j.m[1][1] = 2.0 * c2 * (c * c + 4.0 * s) + s2 * c * (4.0 - 2.0 * s);
  return j;
}

SemiHypData semi_hyperbolic_reduce(const JetField& field, double x0, double y0,
                                   int max_m) {
  if (max_m < 1)
    throw std::invalid_argument("semi_hyperbolic_reduce: max_m must be >= 1");
  const int ord = max_m + 2;
  Jet X = Jet::var(ord, 0, x0), Y = Jet::var(ord, 1, y0);
  auto [F1, F2] = field(X, Y);

  double L[2][2] = {{F1.coeff(1, 0), F1.coeff(0, 1)},
                    {F2.coeff(1, 0), F2.coeff(0, 1)}};
  double sc = std::max({1.0, std::abs(L[0][0]), std::abs(L[0][1]),
                        std::abs(L[1][0]), std::abs(L[1][1])});
  if (std::abs(F1.constant()) > 1e-8 * sc || std::abs(F2.constant()) > 1e-8 * sc)
    throw std::invalid_argument("semi_hyperbolic_reduce: point is not an equilibrium");

  double tr = L[0][0] + L[1][1];
  double det = L[0][0] * L[1][1] - L[0][1] * L[1][0];
  double disc = std::max(tr * tr - 4.0 * det, 0.0); // semi-hyperbolic: {0, lambda}
  double sq = std::sqrt(disc);
  double mu1 = (tr + sq) / 2.0, mu2 = (tr - sq) / 2.0;
  double lambda = std::abs(mu1) >= std::abs(mu2) ? mu1 : mu2;
  double mu0 = std::abs(mu1) >= std::abs(mu2) ? mu2 : mu1;
  if (std::abs(lambda) < 1e-8 * sc)
    throw FullyDegenerateError("semi_hyperbolic_reduce: both eigenvalues vanish");
  if (std::abs(mu0) > 1e-6 * std::max(sc, std::abs(lambda)))
    throw std::invalid_argument("semi_hyperbolic_reduce: no zero eigenvalue");

  // kernel direction of L (center) and the lambda eigenvector
  double w0x = L[0][1], w0y = -L[0][0];
  if (std::max(std::abs(w0x), std::abs(w0y)) < 1e-12 * sc) {
    w0x = L[1][1];
    w0y = -L[1][0];
  }
  double wlx = L[0][1], wly = lambda - L[0][0];
  if (std::max(std::abs(wlx), std::abs(wly)) < 1e-12 * std::max(sc, std::abs(lambda))) {
    wlx = lambda - L[1][1];
    wly = L[1][0];
  }
  auto norm1 = [](double& x, double& y) {
    double m = std::max(std::abs(x), std::abs(y));
    x /= m;
    y /= m;
  };
  norm1(w0x, w0y);
  norm1(wlx, wly);
  double dt = w0x * wly - wlx * w0y;
  if (std::abs(dt) < 1e-10)
    throw std::invalid_argument("semi_hyperbolic_reduce: eigenbasis is singular");

  // field in the eigenbasis: G = T^{-1} F(base + T (xi, eta))
  Jet XI = Jet::var(ord, 0), ETA = Jet::var(ord, 1);
  Jet U = XI * w0x + ETA * wlx + x0;
  Jet V = XI * w0y + ETA * wly + y0;
  auto [A1, A2] = field(U, V);
  Jet G1 = (A1 * wly - A2 * wlx) * (1.0 / dt);
  Jet G2 = (A2 * w0x - A1 * w0y) * (1.0 / dt);

  // the center branch eta = f(xi) solves the zero-isocline of the hyperbolic
  // variable; each pass gains at least one series order
  Jet f(ord, 0.0);
  Jet XIu = Jet::var(ord, 0);
  for (int it = 0; it < ord + 2; ++it) {
    Jet g = compose(G2, XIu, f);
    f -= g * (1.0 / lambda);
  }
  Jet R = compose(G1, XIu, f);

  double field_scale = 1.0;
  for (int i = 0; i <= ord; ++i)
    for (int j = 0; i + j <= ord; ++j)
      field_scale = std::max({field_scale, std::abs(G1.coeff(i, j)),
                              std::abs(G2.coeff(i, j))});
  double tol = 1e-8 * field_scale;
  for (int m = 1; m <= max_m; ++m)
    if (std::abs(R.coeff(m, 0)) > tol)
      return {lambda, m, R.coeff(m, 0)};
  throw SeriesOrderError(
      "semi_hyperbolic_reduce: no nonzero center-branch coefficient through requested order");
}

double theta0() { return std::asin(std::sqrt(5.0) - 2.0); }

std::vector<CircleEquilibrium> circle_equilibria(const Params& p) {
  const double pi = std::acos(-1.0);
  const double th0 = theta0();
  const double angles[6] = {0.0,      pi / 2.0,       pi,
                            pi + th0, 3.0 * pi / 2.0, 2.0 * pi - th0};
  JetField bf = [&p](const Jet& r, const Jet& th) {
    auto v = blowup_field_t(p.a, p.b, r, th);
    return std::make_pair(v.dr, v.dth);
  };
  std::vector<CircleEquilibrium> out;
  for (double th : angles) {
    CircleEquilibrium ce;
    ce.theta = th;
    ce.jacobian = blowup_circle_jacobian(p, th);
    double j11 = ce.jacobian.m[0][0];
    if (std::abs(j11) > 1e-9) {
      // radial eigenvalue j11, angular j22; opposite signs here
      ce.classification = CircleClass::HyperbolicSaddle;
      ce.note = "attracting in r, repelling in theta";
    } else {
      SemiHypData d = semi_hyperbolic_reduce(bf, 0.0, th);
      ce.semi_hyp = d;
      if (d.m % 2 == 0) {
        ce.classification = CircleClass::SaddleNode;
        ce.note = "raw angular eigenvalue 320-144*sqrt(5) < 0; the source text "
                  "quotes 144*sqrt(5)-320 > 0 after its local linear change of "
                  "variables; raw value reported";
      } else if (d.a_m * d.lambda < 0.0) {
        ce.classification = CircleClass::TopologicalSaddle;
        ce.note = "";
      } else {
        throw std::logic_error("circle_equilibria: unexpected center-branch data");
      }
    }
    out.push_back(std::move(ce));
  }
  return out;
}

State disk_projection(const State& s) {
  double r = std::hypot(s.x, s.y);
  return {s.x / (1.0 + r), s.y / (1.0 + r)};
}

const char* chart_name(ChartId c) {
  switch (c) {
  case ChartId::U1: return "U1";
  case ChartId::V1: return "V1";
  case ChartId::U2: return "U2";
  case ChartId::V2: return "V2";
  }
  return "?";
}

const char* circle_class_name(CircleClass c) {
  switch (c) {
  case CircleClass::HyperbolicSaddle: return "HyperbolicSaddle";
  case CircleClass::TopologicalSaddle: return "TopologicalSaddle";
  case CircleClass::SaddleNode: return "SaddleNode";
  }
  return "?";
}

} // namespace ledyn
