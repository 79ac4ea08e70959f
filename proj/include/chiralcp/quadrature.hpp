#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace chiralcp {

enum class StretchKind { Rational, Exponential };

// Controls for the semi-infinite quadratures. The stretch maps t in (0,1)
// onto (0,inf): rational x = s*t/(1-t), exponential x = -s*ln(1-t).
struct QuadratureSpec {
  StretchKind mapping = StretchKind::Rational;
  double scale = 1e15;       // rad/s or 1/m depending on axis
  std::size_t base_nodes = 64;
  double rel_tol = 1e-8;
  std::size_t max_doublings = 8;
};

struct IntegralResult {
  double value;
  double est_error;
  std::size_t nodes_used;
};

class QuadratureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Gauss-Legendre nodes/weights on (-1,1) by Newton iteration on P_n.
inline void gauss_legendre(std::size_t n, std::vector<double>& x,
                           std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * static_cast<double>(j) + 1.0) * z * p1 -
              static_cast<double>(j) * p2) /
             (static_cast<double>(j) + 1.0);
      }
      pp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15)
        break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

// Gauss-Legendre sum of h over (0,1) with n nodes.
template <class F>
double unit_interval_sum(const F& h, std::size_t n) {
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 0.5 * (x[i] + 1.0);
    const double v = h(t);
    if (!std::isfinite(v))
      throw QuadratureError("non-finite integrand sample");
    sum += 0.5 * w[i] * v;
  }
  return sum;
}

template <class F>
IntegralResult converge(const F& h, const QuadratureSpec& spec) {
  if (spec.base_nodes < 8)
    throw std::invalid_argument("base_nodes must be at least 8");
  if (!(spec.rel_tol > 0.0))
    throw std::invalid_argument("rel_tol must be positive");
  std::size_t n = spec.base_nodes;
  double prev = unit_interval_sum(h, n);
  for (std::size_t d = 0; d < spec.max_doublings; ++d) {
    n *= 2;
    const double cur = unit_interval_sum(h, n);
    const double diff = std::abs(cur - prev);
    if (diff <= spec.rel_tol * std::abs(cur))
      return IntegralResult{cur, diff, n};
    prev = cur;
  }
  throw QuadratureError("quadrature failed to converge");
}

} // namespace detail

// Integral of f over (0, inf). f must be finite and decay fast enough for
// the stretched integrand to be integrable.
template <class F>
IntegralResult integrate_semiinfinite(const F& f, const QuadratureSpec& spec) {
  if (!(spec.scale > 0.0))
    throw std::invalid_argument("stretch scale must be positive");
  if (spec.mapping == StretchKind::Rational) {
    const double s = spec.scale;
    return detail::converge(
        [&](double t) {
          const double u = 1.0 - t;
          return f(s * t / u) * s / (u * u);
        },
        spec);
  }
  const double s = spec.scale;
  return detail::converge(
      [&](double t) {
        const double u = 1.0 - t;
        return f(-s * std::log(u)) * s / u;
      },
      spec);
}

// Integral of g(k)*exp(-2*k*z) over (lower, inf). The substitution
// k = lower + u/(2z) pulls the damping scale out,
//   I = exp(-2*lower*z)/(2z) * int_0^inf g(k(u)) exp(-u) du,
// and the dimensionless u axis is integrated with a rational stretch whose
// scale matches the exp(-u) weight.
template <class F>
IntegralResult integrate_kz_tail(const F& g, double lower, double z,
                                 const QuadratureSpec& spec) {
  if (!(z > 0.0))
    throw std::invalid_argument("z must be positive");
  if (lower < 0.0)
    throw std::invalid_argument("lower limit must be non-negative");
  const double pref = std::exp(-2.0 * lower * z) / (2.0 * z);
  const double s = 2.0; // stretch scale on the u axis
  IntegralResult r = detail::converge(
      [&](double t) {
        const double w = 1.0 - t;
        const double u = s * t / w;
        return g(lower + u / (2.0 * z)) * std::exp(-u) * s / (w * w);
      },
      spec);
  r.value *= pref;
  r.est_error *= pref;
  return r;
}

} // namespace chiralcp
