#pragma once

namespace thspec {

// Value held as sign * exp(log_abs); survives indices in the thousands.
struct LogMagnitude {
  double log_abs = 0.0;
  int sign = 1;

  double value() const noexcept;
};

// P_n^(a,b)(x) by upward three-term recurrence in n.
LogMagnitude jacobi_log(int n, double a, double b, double x);
double jacobi_eval(int n, double a, double b, double x);

// d/dx P_n^(a,b)(x) = (n + a + b + 1)/2 P_{n-1}^(a+1,b+1)(x).
LogMagnitude jacobi_derivative_log(int n, double a, double b, double x);
double jacobi_derivative(int n, double a, double b, double x);

// Terminating hypergeometric form,
// P_n^(a,b)(x) = (a+1)_n/n! 2F1(-n, n+a+b+1; a+1; (1-x)/2).
double jacobi_hypergeometric_sum(int n, double a, double b, double x);

} // namespace thspec
