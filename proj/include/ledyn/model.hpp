// Closed-form layer for the planar cubic reaction model
//   x' = (a-x)(1+x^2) - 4xy,  y' = bx(1+x^2-y),  a,b > 0
// and its rational original form x' = a-x-4xy/(1+x^2), y' = bx(1-y/(1+x^2)).
// Holds the unique equilibrium P_a=(a/5, 1+a^2/25), its linearization, the
// parameter-plane curves b_H (trace zero) and b_a (basin certificate), the
// A/B membership predicates, and the 1/x Dulac certificate.
#pragma once

#include <cmath>
#include <complex>

namespace ledyn {

struct Params {
  double a;
  double b;
  Params(double a_, double b_); // rejects a <= 0, b <= 0 or non-finite
};

struct State {
  double x = 0.0;
  double y = 0.0;
};

struct Mat2 {
  double m[2][2] = {{0, 0}, {0, 0}};
  double trace() const { return m[0][0] + m[1][1]; }
  double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

// axis anchors of the two parameter-plane curves: b_a(kA1)=0, b_H(kA2)=0
inline const double kA1 = 3.0 * std::sqrt(3.0);
inline const double kA2 = 5.0 * std::sqrt(5.0 / 3.0);

// field templated on the scalar type so truncated-jet arguments reuse the
// exact same expressions
template <class T> struct FieldValue {
  T dx, dy;
};
template <class T, class S>
FieldValue<T> vector_field_t(double a, double b, const T& x, const S& y) {
  T one_px2 = x * x + 1.0;
  return {(a - x) * one_px2 - 4.0 * (x * y), b * (x * (one_px2 - y))};
}

State vector_field(const Params& p, const State& s);
State original_vector_field(const Params& p, const State& s);
State equilibrium(const Params& p);
Mat2 jacobian(const Params& p, const State& s);

enum class EquilibriumKind {
  StableNode,
  StableFocus,
  CenterLinear,
  UnstableFocus,
  UnstableNode,
  Degenerate
};

struct EquilibriumReport {
  State location;
  Mat2 jacobian;
  double trace;
  double determinant;
  std::complex<double> eig1, eig2;
  EquilibriumKind kind;
};

// kind from the (trace, det, discriminant) sign pattern at P_a; |trace| below
// tol_trace with det > 0 reports Degenerate (Hopf candidate), never a silent
// stable/unstable call
EquilibriumReport classify_equilibrium(const Params& p, double tol_trace = 1e-9);

double hopf_b(double a);  // (3a^2 - 125)/(5a)
double basin_b(double a); // a - 3 a^{1/3}, real cube root

enum class Region {
  InA,
  InB_NotA,
  OnHminus,
  OnHplus,
  AtBautin,
  InD,
  UnstableOutsideD,
  OnSapprox
};

struct RegionLabel {
  Region region;
  double b_H_at_a;
  double b_a_at_a;
  bool small_a_branch;      // a <= 3*sqrt(3): every b > 0 is in A
  bool above_basin_curve;   // b > b_a(a)
  bool d_status_unresolved; // stable non-A side with a > a_B; needs cycle count
};

// tol_curve is relative in b for H-proximity and relative in a for the Bautin
// band. D membership needs a cycle count: the stable side outside A with
// a > a_B is returned as InB_NotA with d_status_unresolved set (resolved by
// the cycle module).
RegionLabel region_membership(const Params& p, double tol_curve = 1e-9);

const char* region_name(Region r);

double dulac_divergence(const Params& p, double x); // a-b-2x-a/x^2, needs x>0
double dulac_majorant(double a, double x);          // g(x) = -2x^3+3a^{1/3}x^2-a

struct DulacCertificate {
  bool holds;              // max f over (0, x_max] is negative, tail analytic
  double worst_x;
  double worst_value;
  double majorant_at_crit; // g(a^{1/3}), identically 0
};

// grid is logarithmic and always contains the interior critical point
// x* = a^{1/3}; for x >= max(a,1) the tail bound f(x) <= a-b-2x <= -x-b < 0
// closes the argument, so x_max is clamped up to max(a,1). x_max = 0 picks
// the clamp value.
DulacCertificate dulac_certificate(const Params& p, double x_max = 0.0,
                                   int n_grid = 10000);

} // namespace ledyn
