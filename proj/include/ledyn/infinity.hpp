// Behavior at infinity: the four compactification charts of the cubic field,
// the four infinite equilibria, the quasi-homogeneous blow-up
// (u,v) = (r cos t, r^2 sin t) of the degenerate point at the origin of the
// y-direction chart, and classification of the six equilibria on the blown-up
// circle. Chart conventions: U1 u=y/x v=1/x on x>0, U2 u=x/y v=1/y on y>0;
// each local field equals v^2 times the pushforward of the plane field, and
// the antipodal charts V1/V2 carry the same expressions (degree-3 field, the
// compactification parity factor is +1).
#pragma once

#include "ledyn/jet.hpp"
#include "ledyn/model.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ledyn {

enum class ChartId { U1, V1, U2, V2 };

State chart_u1_field(const Params& p, double u, double v);
State chart_u2_field(const Params& p, double u, double v);
State chart_v1_field(const Params& p, double u, double v); // same expressions as U1
State chart_v2_field(const Params& p, double u, double v); // same expressions as U2

enum class InfinityKind { UnstableNode, DegenerateBlowupRequired };

struct SectorStructure {
  int hyperbolic = 0;
  int parabolic = 0;
};

struct InfiniteEquilibrium {
  ChartId chart;
  double u = 0, v = 0; // v is exactly 0 on the infinity circle
  int label = 0;       // 1..4
  InfinityKind kind;
  Mat2 jacobian;                           // of the owning chart's field
  std::optional<SectorStructure> sectors;  // for the degenerate points
  std::string note;
};

// I1 = (-b, 0) in U1 and its antipode I2 in V1 (unstable nodes, both chart
// eigenvalues 1); I3 = (0,0) in U2 and its antipode I4 in V2 (degenerate,
// blow-up gives 4 hyperbolic + 1 parabolic sector; the parabolic sector of I4
// meets the open disk)
std::vector<InfiniteEquilibrium> infinite_equilibria(const Params& p);

// blow-up field after removing the common factor (1+sin^2 t)/r^2; templated
// so jets evaluate the same expressions
template <class T> struct PlanarValue {
  T dr, dth;
};
template <class T>
PlanarValue<T> blowup_field_t(double a, double b, const T& r, const T& th) {
  using std::cos;
  using std::sin; // jet overloads found by argument lookup
  T c = cos(th), s = sin(th);
  T c2 = cos(2.0 * th), s2 = sin(2.0 * th);
  T c3 = cos(3.0 * th), s3 = sin(3.0 * th);
  T r2 = r * r, r3 = r2 * r, r4 = r3 * r;
  T dr = r * (c * c * -0.75 + c * (c3 * -0.25 - 2.0 * s2)) +
         r2 * (c * (s * (a / 4.0 + b) + s3 * (a / 4.0) - b / 2.0 - c2 * (b / 2.0))) +
         r3 * (c * c * -0.25 + c * c3 * 0.25) +
         r4 * (c * (c2 * (b / 2.0) + s * (3.0 * a / 4.0) - s3 * (a / 4.0) - b / 2.0));
  T dth = 2.0 * (c * (s * (c * c + 4.0 * s))) +
          r * (c * c * (c * c * (s * b)) - (2.0 * a + b) * (c * (c * (s * s)))) +
          r2 * (s * s * s2) + r3 * (c * (c * (s * (s * (s * b)))) - 2.0 * a * (s * s * (s * s)));
  return {dr, dth};
}

PlanarValue<double> blowup_field(const Params& p, double r, double theta);

// linearization of the blow-up field on the circle r = 0 (closed form)
Mat2 blowup_circle_jacobian(const Params& p, double theta);

enum class CircleClass { HyperbolicSaddle, TopologicalSaddle, SaddleNode };

struct SemiHypData {
  double lambda; // nonzero eigenvalue
  int m;         // leading power of the field on the center branch
  double a_m;    // leading coefficient
};

struct CircleEquilibrium {
  double theta;
  Mat2 jacobian;
  CircleClass classification;
  std::optional<SemiHypData> semi_hyp;
  std::string note;
};

struct FullyDegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SeriesOrderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// field given as a jet evaluator so the reduction can read exact Taylor data
using JetField = std::function<std::pair<Jet, Jet>(const Jet&, const Jet&)>;

// classification data of a semi-hyperbolic point: nonzero eigenvalue lambda,
// center branch solved from the zero-isocline of the hyperbolic variable,
// leading term a_m xi^m of the first component on that branch. Throws
// FullyDegenerateError if both eigenvalues vanish, SeriesOrderError if no
// nonzero coefficient appears through order max_m.
SemiHypData semi_hyperbolic_reduce(const JetField& field, double x0, double y0,
                                   int max_m = 6);

// the six circle equilibria t* in [0, 2pi): zeros of
// 2 cos t sin t (cos^2 t + 4 sin t)
std::vector<CircleEquilibrium> circle_equilibria(const Params& p);

double theta0(); // arcsin(sqrt(5) - 2)

State disk_projection(const State& s); // (x,y)/(1+|(x,y)|), open unit disk

const char* chart_name(ChartId c);
const char* circle_class_name(CircleClass c);

} // namespace ledyn
