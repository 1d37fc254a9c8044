#include "thspec/jacobi.hpp"
#include "thspec/error.hpp"
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace thspec {

namespace {

constexpr double rescale_above = 1e150;
constexpr double rescale_below = 1e-150;

void check_degree(int n) {
  if (n < 0)
    fail(ErrorCode::InvalidArgument,
         fmt::format("Jacobi degree must be >= 0 (got {})", n));
}

LogMagnitude from_value(double v, double log_scale) {
  if (v == 0.0)
    return {-std::numeric_limits<double>::infinity(), 0};
  return {std::log(std::abs(v)) + log_scale, v > 0.0 ? 1 : -1};
}

} // namespace

double LogMagnitude::value() const noexcept {
  return sign == 0 ? 0.0 : sign * std::exp(log_abs);
}

double jacobi_hypergeometric_sum(int n, double a, double b, double x) {
  check_degree(n);
  // Expand about the nearer endpoint, P(a,b)(x) = (-1)^n P(b,a)(-x), so the
  // alternating terms stay small; accumulate in extended precision.
  if (x < 0.0)
    return (n % 2 ? -1.0 : 1.0) * jacobi_hypergeometric_sum(n, b, a, -x);
  using Wide = long double;
  const Wide z = 0.5L * (1.0L - x);
  // term_j = (-n)_j (n+a+b+1)_j / ((a+1)_j j!) z^j
  Wide term = 1.0L;
  Wide sum = 1.0L;
  for (int j = 0; j < n; ++j) {
    term *= Wide(j - n) * (Wide(n) + a + b + 1.0L + j) /
            ((Wide(a) + 1.0L + j) * (j + 1.0L)) * z;
    sum += term;
  }
  Wide prefactor = 1.0L;
  for (int j = 0; j < n; ++j)
    prefactor *= (Wide(a) + 1.0L + j) / (j + 1.0L);
  return static_cast<double>(prefactor * sum);
}

LogMagnitude jacobi_log(int n, double a, double b, double x) {
  check_degree(n);
  if (n == 0)
    return {0.0, 1};
  double log_scale = 0.0;
  double p_prev = 1.0;
  double p_cur = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
  const double ab = a + b;
  for (int k = 1; k < n; ++k) {
    const double two_k_ab = 2.0 * k + ab;
    const double den = 2.0 * (k + 1.0) * (k + ab + 1.0) * two_k_ab;
    if (std::abs(den) < 1e-12 * (1.0 + std::abs(two_k_ab) * (k + 1.0)))
      return from_value(jacobi_hypergeometric_sum(n, a, b, x), 0.0);
    const double c1 = (two_k_ab + 1.0) *
                      ((two_k_ab + 2.0) * two_k_ab * x + a * a - b * b);
    const double c2 = 2.0 * (k + a) * (k + b) * (two_k_ab + 2.0);
    const double p_next = (c1 * p_cur - c2 * p_prev) / den;
    p_prev = p_cur;
    p_cur = p_next;
    const double mag = std::abs(p_cur);
    if (mag > rescale_above || (mag != 0.0 && mag < rescale_below)) {
      const double shift = std::log(mag);
      const double f = std::exp(-shift);
      p_prev *= f;
      p_cur *= f;
      log_scale += shift;
    }
  }
  return from_value(p_cur, log_scale);
}

double jacobi_eval(int n, double a, double b, double x) {
  return jacobi_log(n, a, b, x).value();
}

LogMagnitude jacobi_derivative_log(int n, double a, double b, double x) {
  check_degree(n);
  if (n == 0)
    return {-std::numeric_limits<double>::infinity(), 0};
  const double factor = 0.5 * (n + a + b + 1.0);
  auto p = jacobi_log(n - 1, a + 1.0, b + 1.0, x);
  if (factor == 0.0 || p.sign == 0)
    return {-std::numeric_limits<double>::infinity(), 0};
  p.log_abs += std::log(std::abs(factor));
  p.sign *= factor > 0.0 ? 1 : -1;
  return p;
}

double jacobi_derivative(int n, double a, double b, double x) {
  return jacobi_derivative_log(n, a, b, x).value();
}

} // namespace thspec
