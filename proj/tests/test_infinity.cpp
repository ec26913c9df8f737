#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ledyn/infinity.hpp"
#include "ledyn/model.hpp"
#include "ledyn/rng.hpp"

#include <cmath>

using namespace ledyn;
using doctest::Approx;

namespace {
const double kPi = std::acos(-1.0);

// raw pushforward of the plane field into chart coordinates; the chart field
// equals v^2 times this
State u1_raw(const Params& p, double u, double v) {
  State s{1.0 / v, u / v};
  State F = vector_field(p, s);
  return {v * (F.y - u * F.x), -v * v * F.x};
}
State u2_raw(const Params& p, double u, double v) {
  State s{u / v, 1.0 / v};
  State F = vector_field(p, s);
  return {v * (F.x - u * F.y), -v * v * F.y};
}
} // namespace

TEST_CASE("chart fields are the v^2-rescaled pushforwards") {
  Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    Params p(rng.uniform(0.5, 20.0), rng.uniform(0.5, 15.0));
    double u = rng.uniform(-2.0, 2.0);
    double v = rng.uniform(0.05, 1.0);

    State loc = chart_u1_field(p, u, v);
    State raw = u1_raw(p, u, v);
    CHECK(loc.x == Approx(v * v * raw.x).epsilon(1e-10).scale(1.0));
    CHECK(loc.y == Approx(v * v * raw.y).epsilon(1e-10).scale(1.0));

    State loc2 = chart_u2_field(p, u, v);
    State raw2 = u2_raw(p, u, v);
    CHECK(loc2.x == Approx(v * v * raw2.x).epsilon(1e-10).scale(1.0));
    CHECK(loc2.y == Approx(v * v * raw2.y).epsilon(1e-10).scale(1.0));

    // opposite-chart copies agree identically (odd-degree field)
    State lv1 = chart_v1_field(p, u, -v);
    State lu1 = chart_u1_field(p, u, -v);
    CHECK(lv1.x == lu1.x);
    CHECK(lv1.y == lu1.y);
  }
}

TEST_CASE("boundary equilibria of the charts") {
  Params p(5.0, 1.0);
  auto eqs = infinite_equilibria(p);
  REQUIRE(eqs.size() == 4);

  CHECK(eqs[0].chart == ChartId::U1);
  CHECK(eqs[0].u == Approx(-p.b).epsilon(1e-15));
  CHECK(eqs[0].v == 0.0);
  CHECK(eqs[0].kind == InfinityKind::UnstableNode);
  CHECK(eqs[0].jacobian.m[0][0] == Approx(1.0).epsilon(1e-14));
  CHECK(eqs[0].jacobian.m[1][1] == Approx(1.0).epsilon(1e-14));
  CHECK(eqs[0].jacobian.m[1][0] == 0.0);
  CHECK(eqs[0].jacobian.m[0][1] == Approx(p.b * (p.a + 5.0 * p.b)).epsilon(1e-13));

  // the chart field actually vanishes at (-b, 0)
  State f = chart_u1_field(p, -p.b, 0.0);
  CHECK(std::abs(f.x) <= 1e-13);
  CHECK(std::abs(f.y) <= 1e-13);

  CHECK(eqs[1].chart == ChartId::V1);
  CHECK(eqs[1].label == 2);
  CHECK(eqs[2].chart == ChartId::U2);
  CHECK(eqs[2].kind == InfinityKind::DegenerateBlowupRequired);
  REQUIRE(eqs[2].sectors.has_value());
  CHECK(eqs[2].sectors->hyperbolic == 4);
  CHECK(eqs[2].sectors->parabolic == 1);
  CHECK(eqs[3].chart == ChartId::V2);
  REQUIRE(eqs[3].sectors.has_value());
  CHECK(eqs[3].sectors->parabolic == 1);

  // a zero of the U2 field sits at the origin with vanishing linear part
  State g = chart_u2_field(p, 0.0, 0.0);
  CHECK(g.x == 0.0);
  CHECK(g.y == 0.0);
}

TEST_CASE("directional blow-up field matches the chart pullback") {
  Rng rng(22);
  for (int k = 0; k < 200; ++k) {
    Params p(rng.uniform(0.5, 20.0), rng.uniform(0.5, 15.0));
    double r = rng.uniform(0.05, 0.4);
    double th = rng.uniform(0.0, 2.0 * kPi);
    double c = std::cos(th), s = std::sin(th);

    // (u,v) = (r cos th, r^2 sin th); push the U2 chart field through
    State ch = chart_u2_field(p, r * c, r * r * s);
    double det = r * r * (1.0 + s * s);
    double dr_raw = (r * r * c * ch.x + r * s * ch.y) / det;
    double dth_raw = (-2.0 * r * s * ch.x + c * ch.y) / det;

    auto bu = blowup_field(p, r, th);
    double fac = (1.0 + s * s) / (r * r);
    double sc = std::max({std::abs(dr_raw), std::abs(dth_raw), 1e-6});
    CHECK(std::abs(bu.dr / fac - dr_raw) <= 1e-8 * sc);
    CHECK(std::abs(bu.dth / fac - dth_raw) <= 1e-8 * sc);
  }
}

TEST_CASE("circle equilibria of the blow-up with frozen constants") {
  const double th0 = theta0();
  CHECK(th0 == Approx(std::asin(std::sqrt(5.0) - 2.0)).epsilon(1e-15));

  Params p(1.0, 1.0); // 2a + 5b = 7
  auto ce = circle_equilibria(p);
  REQUIRE(ce.size() == 6);

  CHECK(ce[0].theta == 0.0);
  CHECK(ce[1].theta == Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(ce[2].theta == Approx(kPi).epsilon(1e-15));
  CHECK(ce[3].theta == Approx(kPi + th0).epsilon(1e-15));
  CHECK(ce[4].theta == Approx(1.5 * kPi).epsilon(1e-15));
  CHECK(ce[5].theta == Approx(2.0 * kPi - th0).epsilon(1e-15));

  // poles of the circle: hyperbolic, diag(-1, 2)
  for (int i : {0, 2}) {
    CHECK(ce[i].classification == CircleClass::HyperbolicSaddle);
    CHECK(ce[i].jacobian.m[0][0] == Approx(-1.0).epsilon(1e-13));
    CHECK(ce[i].jacobian.m[1][1] == Approx(2.0).epsilon(1e-13));
  }

  // vertical directions: semi-hyperbolic with quintic center branch
  CHECK(ce[1].classification == CircleClass::TopologicalSaddle);
  REQUIRE(ce[1].semi_hyp.has_value());
  CHECK(ce[1].semi_hyp->lambda == Approx(-8.0).epsilon(1e-10));
  CHECK(ce[1].semi_hyp->m == 5);
  CHECK(ce[1].semi_hyp->a_m == Approx(p.a * p.b / 4.0).epsilon(1e-6));

  CHECK(ce[4].classification == CircleClass::TopologicalSaddle);
  REQUIRE(ce[4].semi_hyp.has_value());
  CHECK(ce[4].semi_hyp->lambda == Approx(8.0).epsilon(1e-10));
  CHECK(ce[4].semi_hyp->m == 5);
  CHECK(ce[4].semi_hyp->a_m == Approx(-p.a * p.b / 4.0).epsilon(1e-6));

  // the pair at sin(theta) = 2 - sqrt(5): saddle-nodes, quadratic branch
  const double j22 = 320.0 - 144.0 * std::sqrt(5.0);
  const double j21 = (152.0 - 68.0 * std::sqrt(5.0)) * (2.0 * p.a + 5.0 * p.b);
  for (int i : {3, 5}) {
    CHECK(ce[i].classification == CircleClass::SaddleNode);
    CHECK(ce[i].jacobian.m[1][1] == Approx(j22).epsilon(1e-12));
    CHECK(ce[i].jacobian.m[1][0] == Approx(j21).epsilon(1e-12));
    CHECK(std::abs(ce[i].jacobian.m[0][0]) <= 1e-12);
    REQUIRE(ce[i].semi_hyp.has_value());
    CHECK(ce[i].semi_hyp->m == 2);
  }
  // true closed-form value; a commonly quoted rounding (-0.368364) is off in
  // the fifth decimal
  CHECK(j21 == Approx(-0.36835728989984773).epsilon(1e-12));
  // mirror pair: branch coefficients of equal size and opposite sign, the
  // negative one on the theta < 3pi/2 side under this kernel orientation
  CHECK(ce[3].semi_hyp->a_m < 0.0);
  CHECK(ce[5].semi_hyp->a_m > 0.0);
  CHECK(ce[3].semi_hyp->a_m == Approx(-ce[5].semi_hyp->a_m).epsilon(1e-9));
  CHECK(std::abs(ce[3].semi_hyp->a_m) == Approx(0.6054491869).epsilon(1e-8));

  // blow-up field vanishes at each circle equilibrium
  for (const auto& e : ce) {
    auto v = blowup_field(p, 0.0, e.theta);
    CHECK(std::abs(v.dr) <= 1e-12);
    CHECK(std::abs(v.dth) <= 1e-12);
  }
}

TEST_CASE("semi-hyperbolic reduction rejects bad input") {
  JetField f = [](const Jet& x, const Jet& y) {
    return std::make_pair(x * 2.0 + y * y, y * (-1.0) + x * x);
  };
  // (0,0) has eigenvalues {2,-1}: no zero eigenvalue to reduce along
  CHECK_THROWS_AS(semi_hyperbolic_reduce(f, 0.0, 0.0), std::invalid_argument);

  JetField g = [](const Jet& x, const Jet& y) {
    return std::make_pair(x + 1.0, y); // not an equilibrium at the origin
  };
  CHECK_THROWS_AS(semi_hyperbolic_reduce(g, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("disk projection compactifies the plane") {
  State origin = disk_projection({0.0, 0.0});
  CHECK(origin.x == 0.0);
  CHECK(origin.y == 0.0);
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    State s{rng.uniform(-1e6, 1e6), rng.uniform(-1e6, 1e6)};
    State d = disk_projection(s);
    CHECK(std::hypot(d.x, d.y) < 1.0);
    // direction is preserved
    CHECK(d.x * s.y == Approx(d.y * s.x).epsilon(1e-9).scale(std::abs(s.x) + std::abs(s.y)));
  }
  State far = disk_projection({1e9, 0.0});
  CHECK(far.x == Approx(1.0).epsilon(1e-8));
}
