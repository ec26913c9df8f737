#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ledyn/hopf.hpp"
#include "ledyn/model.hpp"
#include "ledyn/rng.hpp"

#include <cmath>

using namespace ledyn;
using doctest::Approx;

TEST_CASE("eigenfrequency on the trace-zero curve") {
  HopfData d = hopf_data(10.0);
  CHECK(d.b == Approx(3.5).epsilon(1e-15));
  CHECK(d.omega == Approx(std::sqrt(175.0)).epsilon(1e-13));

  // omega must be the imaginary part of the linearization spectrum
  Rng rng(31);
  for (int k = 0; k < 25; ++k) {
    double a = rng.uniform(kA2 + 0.05, 45.0);
    HopfData h = hopf_data(a);
    Params p(a, h.b);
    EquilibriumReport r = classify_equilibrium(p);
    // trace vanishes here up to rounding; no stable/unstable call either way
    CHECK((r.kind == EquilibriumKind::Degenerate || r.kind == EquilibriumKind::CenterLinear));
    CHECK(std::abs(r.eig1.imag()) == Approx(h.omega).epsilon(1e-10));
    CHECK(h.omega ==
          Approx(std::sqrt(a * h.b * (a * a + 25.0)) / 5.0).epsilon(1e-13));
  }
}

TEST_CASE("first coefficient changes sign exactly once, at the quartic root") {
  CHECK(bautin_a() == Approx(18.495075230943925).epsilon(1e-15));
  CHECK(std::abs(l1_sign_poly(bautin_a())) <= 1e-6 * bautin_a() * bautin_a() *
                                                  bautin_a() * bautin_a());

  CHECK(hopf_data(10.0).L1 < 0.0);
  CHECK(hopf_data(10.0).arc == HopfArc::Hminus);
  CHECK(hopf_data(20.0).L1 > 0.0);
  CHECK(hopf_data(20.0).arc == HopfArc::Hplus);
  CHECK(hopf_data(bautin_a()).arc == HopfArc::Bautin);
  CHECK(std::abs(hopf_data(bautin_a()).L1) <= 1e-8);

  // sign agreement with the quartic on a sweep
  Rng rng(32);
  for (int k = 0; k < 60; ++k) {
    double a = rng.uniform(7.0, 30.0);
    if (std::abs(a - bautin_a()) < 1e-3)
      continue;
    HopfData h = hopf_data(a);
    CHECK(h.L1 * l1_sign_poly(a) > 0.0);
  }
}

TEST_CASE("focal-value engine agrees with the normal-form formula") {
  for (double a : {8.0, 12.0, 16.0, 22.0, 27.0}) {
    FocalValues fv = focal_values(a);
    HopfData h = hopf_data(a);
    // eta4 equals 2 L1 identically for this family
    CHECK(fv.eta4 == Approx(2.0 * h.L1).epsilon(1e-9));
  }
}

TEST_CASE("second coefficient is negative where the first vanishes") {
  double l2 = lyapunov_l2(bautin_a());
  CHECK(l2 < 0.0);
  // frozen band for the normalization used here
  CHECK(l2 > -1815.0);
  CHECK(l2 < -1812.0);
}

TEST_CASE("scan output is an inclusive uniform grid on the curve") {
  auto rows = hopf_scan(8.0, 28.0, 41);
  REQUIRE(rows.size() == 41);
  CHECK(rows.front().a == Approx(8.0).epsilon(1e-15));
  CHECK(rows.back().a == Approx(28.0).epsilon(1e-15));
  int flips = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].b == Approx(hopf_b(rows[i].a)).epsilon(1e-14));
    if (i && rows[i].L1 * rows[i - 1].L1 < 0.0)
      ++flips;
  }
  CHECK(flips == 1); // the single degenerate point lies inside [8, 28]

  CHECK(std::string(hopf_arc_name(HopfArc::Hminus)) == "Hminus");
  CHECK(std::string(hopf_arc_name(HopfArc::Hplus)) == "Hplus");
  CHECK(std::string(hopf_arc_name(HopfArc::Bautin)) == "Bautin");
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(hopf_data(5.0), NotOnHopfCurveError);  // curve needs a > 5 sqrt(5/3)
  CHECK_THROWS_AS(hopf_data(kA2), NotOnHopfCurveError);  // b would be 0
  CHECK_THROWS_AS(hopf_scan(1.0, 20.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(hopf_scan(8.0, 7.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(hopf_scan(8.0, 28.0, 1), std::invalid_argument);
}
