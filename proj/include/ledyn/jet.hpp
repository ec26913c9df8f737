// Truncated bivariate Taylor arithmetic ("jets"): dense coefficients of
// xi^i eta^j with total degree i+j <= order. Coefficients of the product of
// two jets are exact through the truncation order, so evaluating a polynomial
// or trigonometric field on jets seeded at a point yields exact Taylor
// coefficients of the field there. Used for blow-up Jacobians, center-branch
// power series, and normal-form inputs.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ledyn {

class Jet {
public:
  explicit Jet(int order, double value = 0.0) : n_(order), c_((order + 1) * (order + 1), 0.0) {
    if (order < 1)
      throw std::invalid_argument("Jet: order must be >= 1");
    c_[0] = value;
  }

  // which = 0 seeds base + xi, which = 1 seeds base + eta
  static Jet var(int order, int which, double base = 0.0) {
    Jet j(order, base);
    if (which == 0)
      j.set(1, 0, 1.0);
    else
      j.set(0, 1, 1.0);
    return j;
  }

  int order() const { return n_; }
  double coeff(int i, int j) const {
    return (i < 0 || j < 0 || i + j > n_) ? 0.0 : c_[i * (n_ + 1) + j];
  }
  void set(int i, int j, double v) {
    if (i < 0 || j < 0 || i + j > n_)
      throw std::out_of_range("Jet::set: degree beyond truncation order");
    c_[i * (n_ + 1) + j] = v;
  }
  double constant() const { return c_[0]; }

  Jet operator-() const {
    Jet r(*this);
    for (double& v : r.c_)
      v = -v;
    return r;
  }
  Jet& operator+=(const Jet& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k)
      c_[k] += o.c_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k)
      c_[k] -= o.c_[k];
    return *this;
  }
  Jet& operator+=(double s) {
    c_[0] += s;
    return *this;
  }
  Jet& operator-=(double s) {
    c_[0] -= s;
    return *this;
  }
  Jet& operator*=(double s) {
    for (double& v : c_)
      v *= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator+(double s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, double s) { return a -= s; }
  friend Jet operator-(double s, const Jet& a) { return -a + s; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    a.check(b);
    int n = a.n_;
    Jet r(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) {
        double ca = a.coeff(i, j);
        if (ca == 0.0)
          continue;
        for (int k = 0; i + j + k <= n; ++k)
          for (int l = 0; i + j + k + l <= n; ++l) {
            double cb = b.coeff(k, l);
            if (cb != 0.0)
              r.c_[(i + k) * (n + 1) + (j + l)] += ca * cb;
          }
      }
    return r;
  }

  // f applied through its Taylor expansion at the constant term:
  // result = sum_k d[k] * (jet - const)^k, d[k] = f^(k)(const)/k!
  Jet analytic(const std::vector<double>& d) const {
    Jet w = *this;
    w.c_[0] = 0.0;
    Jet pw(n_, 1.0);
    Jet r(n_, d.empty() ? 0.0 : d[0]);
    for (int k = 1; k <= n_ && k < (int)d.size(); ++k) {
      pw = pw * w;
      Jet t = pw;
      t *= d[k];
      r += t;
    }
    return r;
  }

private:
  int n_;
  std::vector<double> c_;
  void check(const Jet& o) const {
    if (o.n_ != n_)
      throw std::invalid_argument("Jet: mixed truncation orders");
  }
  friend Jet compose(const Jet&, const Jet&, const Jet&);
};

inline Jet sin(const Jet& j) {
  int n = j.order();
  double c0 = j.constant();
  std::vector<double> d(n + 1);
  double fact = 1.0;
  double cyc[4] = {std::sin(c0), std::cos(c0), -std::sin(c0), -std::cos(c0)};
  for (int k = 0; k <= n; ++k) {
    if (k > 0)
      fact *= k;
    d[k] = cyc[k % 4] / fact;
  }
  return j.analytic(d);
}

inline Jet cos(const Jet& j) {
  int n = j.order();
  double c0 = j.constant();
  std::vector<double> d(n + 1);
  double fact = 1.0;
  double cyc[4] = {std::cos(c0), -std::sin(c0), -std::cos(c0), std::sin(c0)};
  for (int k = 0; k <= n; ++k) {
    if (k > 0)
      fact *= k;
    d[k] = cyc[k % 4] / fact;
  }
  return j.analytic(d);
}

// p evaluated at jets (u, v) of the same truncation order; exact through the
// truncation order because degrees only add under multiplication
inline Jet compose(const Jet& p, const Jet& u, const Jet& v) {
  int n = p.order();
  if (u.order() != n || v.order() != n)
    throw std::invalid_argument("compose: mixed truncation orders");
  std::vector<Jet> up, vp;
  up.reserve(n + 1);
  vp.reserve(n + 1);
  up.emplace_back(n, 1.0);
  vp.emplace_back(n, 1.0);
  for (int k = 1; k <= n; ++k) {
    up.push_back(up.back() * u);
    vp.push_back(vp.back() * v);
  }
  Jet r(n, 0.0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      double c = p.coeff(i, j);
      if (c != 0.0) {
        Jet t = up[i] * vp[j];
        t *= c;
        r += t;
      }
    }
  return r;
}

} // namespace ledyn
