// Hopf analysis along the curve b = b_H(a), a > 5*sqrt(5/3): eigenfrequency,
// first and second Lyapunov coefficients, the Bautin point where L1 changes
// sign, and the split of the curve into the arcs H- (supercritical side) and
// H+ (subcritical side).
//
// Lyapunov coefficients are normalization-dependent up to positive factors;
// only signs and the L1 zero are contract-bearing. L1 is computed by the
// classical third-order normal-form formula in a real eigenbasis; L1 and L2
// are additionally available from a complex Poincare-Lyapunov focal-value
// series (independent engine, used as a cross-check).
#pragma once

#include <stdexcept>
#include <vector>

namespace ledyn {

enum class HopfArc { Hminus, Hplus, Bautin };

struct HopfData {
  double a = 0;
  double b = 0;     // = hopf_b(a)
  double omega = 0; // sqrt(ab(a^2+25))/5, imaginary part of the eigenvalue pair
  double L1 = 0;
  HopfArc arc = HopfArc::Hminus;
};

struct NotOnHopfCurveError : std::domain_error {
  using std::domain_error::domain_error;
};

double l1_sign_poly(double a); // 2a^4 - 675a^2 - 3125, sign agrees with L1
double bautin_a();             // (5/2) sqrt(27 + sqrt(769)), positive root of the sign poly

HopfData hopf_data(double a); // throws NotOnHopfCurveError for a <= 5*sqrt(5/3)

// eta4: focal value whose sign equals sign(L1); eta6: next focal value,
// proportional to L2 at the Bautin point. Independent of the L1 formula path.
struct FocalValues {
  double eta4;
  double eta6;
};
FocalValues focal_values(double a);

// second Lyapunov coefficient (eta6 of the focal series); meaningful where
// |L1| is small, strictly negative at a = bautin_a()
double lyapunov_l2(double a);

std::vector<HopfData> hopf_scan(double a_lo, double a_hi, int n);

const char* hopf_arc_name(HopfArc a);

} // namespace ledyn
