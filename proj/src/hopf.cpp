#include "ledyn/hopf.hpp"
#include "ledyn/jet.hpp"
#include "ledyn/model.hpp"

#include <array>
#include <cmath>
#include <complex>

namespace ledyn {

double l1_sign_poly(double a) {
  return 2.0 * a * a * a * a - 675.0 * a * a - 3125.0;
}

double bautin_a() { return 2.5 * std::sqrt(27.0 + std::sqrt(769.0)); }

namespace {

// field at P_a in a real eigenbasis where the linear part is the rotation
// [[0,-omega],[omega,0]]; exact cubic Taylor data via jets
struct XFormed {
  Jet g1, g2;
  double om;
};

XFormed transformed_field(double a, double b) {
  Params p(a, b);
  State P = equilibrium(p);
  Mat2 J = jacobian(p, P);
  double om = std::sqrt(J.det());
  // columns: Re q and -Im q for the eigenvector q = (J01, i om - J00)
  double T00 = J.m[0][1], T01 = 0.0, T10 = -J.m[0][0], T11 = -om;
  double dT = T00 * T11 - T01 * T10;
  double Ti00 = T11 / dT, Ti01 = -T01 / dT, Ti10 = -T10 / dT, Ti11 = T00 / dT;
  const int ord = 3; // the field is exactly cubic
  Jet XI = Jet::var(ord, 0), ETA = Jet::var(ord, 1);
  Jet X = XI * T00 + ETA * T01 + P.x;
  Jet Y = XI * T10 + ETA * T11 + P.y;
  auto F = vector_field_t(a, b, X, Y);
  return {F.dx * Ti00 + F.dy * Ti01, F.dx * Ti10 + F.dy * Ti11, om};
}

// third-order normal-form coefficient ("16 L1" formula) from exact partials
double gh_l1(double a, double b) {
  XFormed xf = transformed_field(a, b);
  auto d = [](const Jet& p, int i, int j) {
    static const double fact[4] = {1, 1, 2, 6};
    return p.coeff(i, j) * fact[i] * fact[j];
  };
  double fxxx = d(xf.g1, 3, 0), fxyy = d(xf.g1, 1, 2);
  double gxxy = d(xf.g2, 2, 1), gyyy = d(xf.g2, 0, 3);
  double fxy = d(xf.g1, 1, 1), fxx = d(xf.g1, 2, 0), fyy = d(xf.g1, 0, 2);
  double gxy = d(xf.g2, 1, 1), gxx = d(xf.g2, 2, 0), gyy = d(xf.g2, 0, 2);
  return (fxxx + fxyy + gxxy + gyyy +
          (fxy * (fxx + fyy) - gxy * (gxx + gyy) - fxx * gxx + fyy * gyy) / xf.om) /
         16.0;
}

constexpr int kDeg = 7; // complex monomial degrees 0..6 are enough for eta6
using CPoly = std::array<std::array<std::complex<double>, kDeg>, kDeg>;

CPoly cpoly_mul(const CPoly& p, const CPoly& q) {
  CPoly r{};
  for (int i = 0; i < kDeg; ++i)
    for (int j = 0; i + j < kDeg; ++j) {
      if (p[i][j] == std::complex<double>(0))
        continue;
      for (int k = 0; i + k < kDeg; ++k)
        for (int l = 0; i + j + k + l < kDeg; ++l)
          if (q[k][l] != std::complex<double>(0))
            r[i + k][j + l] += p[i][j] * q[k][l];
    }
  return r;
}

} // namespace

// Poincare-Lyapunov focal values: seek Phi = w wbar + ... with
// dPhi/dt = eta4 (w wbar)^2 + eta6 (w wbar)^3 + ...; nonresonant monomials of
// Phi are solved degree by degree against the rotation i om (p - q).
FocalValues focal_values(double a) {
  XFormed xf = transformed_field(a, hopf_b(a));
  const std::complex<double> I(0, 1);

  // u = (w + wbar)/2, v = (w - wbar)/(2i) as complex (w, wbar) polynomials
  CPoly U{}, V{};
  U[1][0] = 0.5;
  U[0][1] = 0.5;
  V[1][0] = std::complex<double>(0, -0.5);
  V[0][1] = std::complex<double>(0, 0.5);

  // complex field nonlinearity: N = G1 + i G2 re-expressed in (w, wbar)
  CPoly C{};
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) {
      if (i + j < 2)
        continue;
      std::complex<double> cf(xf.g1.coeff(i, j), xf.g2.coeff(i, j));
      if (cf == std::complex<double>(0))
        continue;
      CPoly t{};
      t[0][0] = cf;
      for (int k = 0; k < i; ++k)
        t = cpoly_mul(t, U);
      for (int k = 0; k < j; ++k)
        t = cpoly_mul(t, V);
      for (int p = 0; p < kDeg; ++p)
        for (int q = 0; p + q < kDeg; ++q)
          C[p][q] += t[p][q];
    }

  CPoly phi{};
  phi[1][1] = 1.0;
  double eta4 = 0, eta6 = 0;
  for (int deg = 3; deg <= 6; ++deg) {
    CPoly known{};
    for (int m = 0; m < kDeg; ++m)
      for (int n = 0; m + n < kDeg; ++n) {
        if (phi[m][n] == std::complex<double>(0))
          continue;
        for (int p = 0; p <= 3; ++p)
          for (int q = 0; p + q <= 3; ++q) {
            if (p + q < 2 || C[p][q] == std::complex<double>(0))
              continue;
            if (m >= 1 && m - 1 + p + n + q == deg)
              known[m - 1 + p][n + q] += double(m) * phi[m][n] * C[p][q];
            if (n >= 1 && m + q + n - 1 + p == deg)
              known[m + q][n - 1 + p] += double(n) * phi[m][n] * std::conj(C[p][q]);
          }
      }
    for (int p = 0; p <= deg; ++p) {
      int q = deg - p;
      if (q < 0 || q >= kDeg || p >= kDeg)
        continue;
      if (p == q) {
        if (2 * p == 4)
          eta4 = known[p][q].real();
        if (2 * p == 6)
          eta6 = known[p][q].real();
      } else {
        phi[p][q] -= known[p][q] / (I * xf.om * double(p - q));
      }
    }
  }
  return {eta4, eta6};
}

double lyapunov_l2(double a) { return focal_values(a).eta6; }

HopfData hopf_data(double a) {
  if (!(a > kA2))
    throw NotOnHopfCurveError("hopf_data: requires a > 5*sqrt(5/3)");
  HopfData h;
  h.a = a;
  h.b = hopf_b(a);
  h.omega = std::sqrt(a * h.b * (a * a + 25.0)) / 5.0;
  h.L1 = gh_l1(a, h.b);
  double aB = bautin_a();
  if (std::abs(a - aB) <= 1e-9 * std::max(1.0, aB))
    h.arc = HopfArc::Bautin;
  else
    h.arc = a < aB ? HopfArc::Hminus : HopfArc::Hplus;
  return h;
}

std::vector<HopfData> hopf_scan(double a_lo, double a_hi, int n) {
  if (!(a_lo > kA2) || a_hi < a_lo || n < 2)
    throw std::invalid_argument("hopf_scan: need a_lo > 5*sqrt(5/3), a_hi >= a_lo, n >= 2");
  std::vector<HopfData> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.push_back(hopf_data(a_lo + (a_hi - a_lo) * i / (n - 1)));
  return out;
}

const char* hopf_arc_name(HopfArc a) {
  switch (a) {
  case HopfArc::Hminus: return "Hminus";
  case HopfArc::Hplus: return "Hplus";
  case HopfArc::Bautin: return "Bautin";
  }
  return "?";
}

} // namespace ledyn
