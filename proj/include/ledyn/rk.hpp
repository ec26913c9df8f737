// Embedded Dormand-Prince 5(4) stepper with PI step-size control and the
// standard order-4 continuous extension. FSAL: the last stage of an accepted
// step is the first stage of the next. Event localization happens on the
// dense polynomial of the last accepted step.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>

namespace ledyn {

template <std::size_t N> using VecN = std::array<double, N>;

template <std::size_t N, class F> class Dopri5 {
public:
  Dopri5(F f, double rel_tol, double abs_tol, double t0, const VecN<N>& y0)
      : f_(f), rtol_(rel_tol), atol_(abs_tol), t_(t0), y_(y0) {
    k_[0] = f_(t_, y_);
    h_ = initial_step();
  }

  double t() const { return t_; }
  double t_prev() const { return tp_; }
  const VecN<N>& y() const { return y_; }
  const VecN<N>& y_prev() const { return yp_; }
  double h_last() const { return t_ - tp_; }
  std::uint64_t rejected() const { return nrej_; }

  // caps the next attempted step (events, checkpoints)
  void limit_step(double hmax) { h_ = std::min(h_, hmax); }

  // one accepted step; false when the step size underflows or the state
  // stops being finite (caller decides what that means)
  bool step() {
    for (int attempt = 0; attempt < 400; ++attempt) {
      if (!(h_ > std::abs(t_) * 1e-15 + 1e-300))
        return false;
      double err = try_step();
      if (!std::isfinite(err)) {
        h_ *= 0.1;
        ++nrej_;
        continue;
      }
      if (err <= 1.0) {
        double fac = 0.9 * std::pow(err > 1e-10 ? err : 1e-10, -0.17) *
                     std::pow(errold_, 0.04);
        fac = std::clamp(fac, 0.2, 5.0);
        errold_ = std::max(err, 1e-4);
        kstart_ = k_[0];
        tp_ = t_;
        yp_ = y_;
        t_ = t_ + h_;
        y_ = y1_;
        build_dense();
        k_[0] = k_[6]; // FSAL
        h_ *= fac;
        return true;
      }
      double fac = std::clamp(0.9 * std::pow(err, -0.2), 0.1, 1.0);
      h_ *= fac;
      ++nrej_;
    }
    return false;
  }

  // dense state inside the last accepted step, theta in [0,1]
  VecN<N> dense(double theta) const {
    VecN<N> out;
    double th1 = 1.0 - theta;
    for (std::size_t i = 0; i < N; ++i)
      out[i] = r1_[i] + theta * (r2_[i] + th1 * (r3_[i] + theta * (r4_[i] + th1 * r5_[i])));
    return out;
  }

private:
  F f_;
  double rtol_, atol_;
  double t_, tp_ = 0;
  VecN<N> y_{}, yp_{}, y1_{};
  VecN<N> k_[7];
  VecN<N> kstart_{}; // stage f(tp_, yp_) of the accepted step
  VecN<N> r1_{}, r2_{}, r3_{}, r4_{}, r5_{};
  double h_ = 0, errold_ = 1e-4;
  std::uint64_t nrej_ = 0;

  double initial_step() const {
    double dn = 0, yn = 0;
    for (std::size_t i = 0; i < N; ++i) {
      double sc = atol_ + rtol_ * std::abs(y_[i]);
      dn += (k_[0][i] / sc) * (k_[0][i] / sc);
      yn += (y_[i] / sc) * (y_[i] / sc);
    }
    double h = std::sqrt(yn / (dn + 1e-30)) * 0.01;
    return std::clamp(h, 1e-10, 1.0);
  }

  double try_step() {
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113,
                            a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                            a76 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                            e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;
    double h = h_;
    VecN<N> t;
    for (std::size_t i = 0; i < N; ++i) t[i] = y_[i] + h * a21 * k_[0][i];
    k_[1] = f_(t_ + h / 5.0, t);
    for (std::size_t i = 0; i < N; ++i)
      t[i] = y_[i] + h * (a31 * k_[0][i] + a32 * k_[1][i]);
    k_[2] = f_(t_ + 3.0 * h / 10.0, t);
    for (std::size_t i = 0; i < N; ++i)
      t[i] = y_[i] + h * (a41 * k_[0][i] + a42 * k_[1][i] + a43 * k_[2][i]);
    k_[3] = f_(t_ + 4.0 * h / 5.0, t);
    for (std::size_t i = 0; i < N; ++i)
      t[i] = y_[i] + h * (a51 * k_[0][i] + a52 * k_[1][i] + a53 * k_[2][i] + a54 * k_[3][i]);
    k_[4] = f_(t_ + 8.0 * h / 9.0, t);
    for (std::size_t i = 0; i < N; ++i)
      t[i] = y_[i] + h * (a61 * k_[0][i] + a62 * k_[1][i] + a63 * k_[2][i] +
                          a64 * k_[3][i] + a65 * k_[4][i]);
    k_[5] = f_(t_ + h, t);
    for (std::size_t i = 0; i < N; ++i)
      y1_[i] = y_[i] + h * (a71 * k_[0][i] + a73 * k_[2][i] + a74 * k_[3][i] +
                            a75 * k_[4][i] + a76 * k_[5][i]);
    k_[6] = f_(t_ + h, y1_);
    double err = 0;
    for (std::size_t i = 0; i < N; ++i) {
      double e = h * (e1 * k_[0][i] + e3 * k_[2][i] + e4 * k_[3][i] +
                      e5 * k_[4][i] + e6 * k_[5][i] + e7 * k_[6][i]);
      double sc = atol_ + rtol_ * std::max(std::abs(y_[i]), std::abs(y1_[i]));
      err += (e / sc) * (e / sc);
    }
    return std::sqrt(err / N);
  }

  void build_dense() {
    static constexpr double d1 = -12715105075.0 / 11282082432.0,
                            d3 = 87487479700.0 / 32700410799.0,
                            d4 = -10690763975.0 / 1880347072.0,
                            d5 = 701980252875.0 / 199316789632.0,
                            d6 = -1453857185.0 / 822651844.0,
                            d7 = 69997945.0 / 29380423.0;
    double h = t_ - tp_;
    for (std::size_t i = 0; i < N; ++i) {
      r1_[i] = yp_[i];
      r2_[i] = y_[i] - yp_[i];
      r3_[i] = h * kstart_[i] - r2_[i];
      r4_[i] = r2_[i] - h * k_[6][i] - r3_[i];
      r5_[i] = h * (d1 * kstart_[i] + d3 * k_[2][i] + d4 * k_[3][i] +
                    d5 * k_[4][i] + d6 * k_[5][i] + d7 * k_[6][i]);
    }
  }
};

} // namespace ledyn
