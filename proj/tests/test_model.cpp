#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ledyn/model.hpp"
#include "ledyn/rng.hpp"

#include <cmath>

using namespace ledyn;
using doctest::Approx;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Params(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Params(-2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Params(5.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Params(5.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(Params(std::nan(""), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Params(5.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_NOTHROW(Params(1e-6, 1e-6));
}

TEST_CASE("equilibrium location and field zero") {
  Params p(5.0, 1.0);
  State P = equilibrium(p);
  CHECK(P.x == Approx(1.0).epsilon(1e-15));
  CHECK(P.y == Approx(2.0).epsilon(1e-15));

  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    Params q(rng.uniform(0.1, 40.0), rng.uniform(0.1, 30.0));
    State Pq = equilibrium(q);
    CHECK(Pq.x == Approx(q.a / 5.0).epsilon(1e-14));
    CHECK(Pq.y == Approx(1.0 + q.a * q.a / 25.0).epsilon(1e-14));
    State F = vector_field(q, Pq);
    double sc = 1.0 + q.a * q.a + q.a * q.b;
    CHECK(std::abs(F.x) <= 1e-12 * sc);
    CHECK(std::abs(F.y) <= 1e-12 * sc);
  }
}

TEST_CASE("field values at a hand-computed point") {
  Params p(5.0, 1.0);
  State F = vector_field(p, {2.0, 3.0});
  // (5-2)(1+4) - 4*2*3 = -9,  1*2*(1+4-3) = 4
  CHECK(F.x == Approx(-9.0).epsilon(1e-15));
  CHECK(F.y == Approx(4.0).epsilon(1e-15));
}

TEST_CASE("polynomial field is (1+x^2) times the rational form") {
  Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    Params p(rng.uniform(0.1, 30.0), rng.uniform(0.1, 20.0));
    State s{rng.uniform(0.01, 20.0), rng.uniform(-30.0, 30.0)};
    State F = vector_field(p, s);
    State G = original_vector_field(p, s);
    double w = 1.0 + s.x * s.x;
    CHECK(F.x == Approx(w * G.x).epsilon(1e-12));
    CHECK(F.y == Approx(w * G.y).epsilon(1e-12));
  }
}

TEST_CASE("jacobian matches finite differences and closed-form trace/det") {
  Rng rng(13);
  for (int k = 0; k < 40; ++k) {
    Params p(rng.uniform(0.5, 30.0), rng.uniform(0.5, 20.0));
    State s{rng.uniform(0.1, 10.0), rng.uniform(-5.0, 15.0)};
    Mat2 J = jacobian(p, s);
    const double d = 1e-6;
    State fxp = vector_field(p, {s.x + d, s.y}), fxm = vector_field(p, {s.x - d, s.y});
    State fyp = vector_field(p, {s.x, s.y + d}), fym = vector_field(p, {s.x, s.y - d});
    double fd[2][2] = {{(fxp.x - fxm.x) / (2 * d), (fyp.x - fym.x) / (2 * d)},
                       {(fxp.y - fxm.y) / (2 * d), (fyp.y - fym.y) / (2 * d)}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(J.m[i][j] == Approx(fd[i][j]).epsilon(1e-6).scale(std::max(
                               1.0, std::abs(J.m[i][j]))));

    Mat2 JP = jacobian(p, equilibrium(p));
    double tr = 3.0 * p.a * p.a / 25.0 - 5.0 - p.a * p.b / 5.0;
    double det = p.a * p.b * (p.a * p.a + 25.0) / 25.0;
    CHECK(JP.trace() == Approx(tr).epsilon(1e-12));
    CHECK(JP.det() == Approx(det).epsilon(1e-12));
  }
}

TEST_CASE("equilibrium classification at sample parameters") {
  // (5,1): trace -3, det 10, complex pair
  EquilibriumReport r = classify_equilibrium(Params(5.0, 1.0));
  CHECK(r.kind == EquilibriumKind::StableFocus);
  CHECK(r.trace == Approx(-3.0).epsilon(1e-13));
  CHECK(r.determinant == Approx(10.0).epsilon(1e-13));
  CHECK(r.eig1.real() == Approx(-1.5).epsilon(1e-12));
  CHECK(r.eig1.imag() != 0.0);

  // below the trace-zero curve the point is repelling
  CHECK(classify_equilibrium(Params(10.0, 3.4)).kind == EquilibriumKind::UnstableFocus);
  // exactly on it the classifier refuses a stability call; here the trace is
  // exactly 0.0 in floating point, so the linear-center kind is reported
  CHECK(classify_equilibrium(Params(10.0, 3.5)).kind == EquilibriumKind::CenterLinear);
  // far above: strongly damped, real spectrum (disc = trace^2 - 4 det > 0)
  CHECK(classify_equilibrium(Params(10.0, 60.0)).kind == EquilibriumKind::StableNode);
}

TEST_CASE("curve anchors and known values") {
  CHECK(hopf_b(10.0) == Approx(3.5).epsilon(1e-15));
  CHECK(hopf_b(19.0) == Approx(958.0 / 95.0).epsilon(1e-15));
  CHECK(hopf_b(20.0) == Approx(10.75).epsilon(1e-15));
  CHECK(basin_b(27.0) == Approx(18.0).epsilon(1e-14));
  CHECK(std::abs(hopf_b(kA2)) <= 1e-13);
  CHECK(std::abs(basin_b(kA1)) <= 1e-13);

  // both curves pass through (5*sqrt(5), 2*sqrt(5))
  double aI = 5.0 * std::sqrt(5.0), bI = 2.0 * std::sqrt(5.0);
  CHECK(hopf_b(aI) == Approx(bI).epsilon(1e-14));
  CHECK(basin_b(aI) == Approx(bI).epsilon(1e-14));

  // the trace-zero curve is where the linearization trace vanishes
  Rng rng(14);
  for (int k = 0; k < 30; ++k) {
    double a = rng.uniform(kA2 + 0.01, 50.0);
    Params p(a, hopf_b(a));
    CHECK(std::abs(jacobian(p, equilibrium(p)).trace()) <= 1e-11 * (1.0 + a * a));
  }
}

TEST_CASE("region membership at sample parameters") {
  CHECK(region_membership(Params(5.0, 1.0)).region == Region::InA);
  CHECK(region_membership(Params(5.0, 1.0)).small_a_branch);
  CHECK(region_membership(Params(3.0, 0.5)).region == Region::InA);
  CHECK(region_membership(Params(27.0, 19.0)).region == Region::InA);
  CHECK(region_membership(Params(27.0, 19.0)).above_basin_curve);
  CHECK_FALSE(region_membership(Params(27.0, 19.0)).small_a_branch);

  CHECK(region_membership(Params(10.0, 3.5)).region == Region::OnHminus);
  CHECK(region_membership(Params(20.0, 10.75)).region == Region::OnHplus);
  CHECK(region_membership(Params(10.0, 3.4)).region == Region::UnstableOutsideD);

  RegionLabel l = region_membership(Params(24.712, 13.85));
  CHECK(l.region == Region::InB_NotA);
  CHECK(l.d_status_unresolved);
  CHECK(l.b_H_at_a == Approx(hopf_b(24.712)).epsilon(1e-15));

  // a=27, b between the curves: stable but below the basin certificate
  RegionLabel m = region_membership(Params(27.0, 17.0));
  CHECK(m.region == Region::InB_NotA);
  CHECK(m.d_status_unresolved);

  CHECK(std::string(region_name(Region::InA)) == "InA");
  CHECK(std::string(region_name(Region::OnSapprox)) == "OnSapprox");
}

TEST_CASE("weighted divergence and its majorant") {
  Params p(5.0, 1.0);
  // a - b - 2x - a/x^2 at x=1: 5-1-2-5 = -3
  CHECK(dulac_divergence(p, 1.0) == Approx(-3.0).epsilon(1e-14));

  // majorant peaks at x = a^{1/3} with value exactly 0
  Rng rng(15);
  for (int k = 0; k < 100; ++k) {
    double a = rng.uniform(0.1, 40.0);
    CHECK(std::abs(dulac_majorant(a, std::cbrt(a))) <= 1e-12 * (1.0 + a));
  }

  // pointwise: x^2 * f(x) <= g(x) whenever b >= b_a(a)
  for (int k = 0; k < 300; ++k) {
    double a = rng.uniform(0.2, 35.0);
    double b = std::max(basin_b(a), 0.0) + rng.uniform(1e-3, 10.0);
    double x = rng.uniform(1e-2, 50.0);
    double f = dulac_divergence(Params(a, b), x);
    CHECK(x * x * f <= dulac_majorant(a, x) + 1e-9 * (1.0 + x * x * std::abs(f)));
  }
}

TEST_CASE("divergence certificate on and off the certified set") {
  for (auto [a, b] : {std::pair{5.0, 1.0}, {27.0, 19.0}, {3.0, 0.5}}) {
    DulacCertificate c = dulac_certificate(Params(a, b));
    CHECK(c.holds);
    CHECK(c.worst_value < 0.0);
    CHECK(c.worst_x > 0.0);
    CHECK(std::abs(c.majorant_at_crit) <= 1e-12 * (1.0 + a));
  }
  // far below the basin curve the weighted divergence goes positive
  DulacCertificate bad = dulac_certificate(Params(20.0, 0.1));
  CHECK_FALSE(bad.holds);
  CHECK(bad.worst_value > 0.0);
}
