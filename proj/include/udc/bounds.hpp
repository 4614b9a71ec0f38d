#pragma once

// Closed-form upper bounds on the expected codeword length. All logs base 2.
// Each function throws DomainError when an argument of ell_delta or of a
// logarithm is not positive.

namespace udc::bounds {

/// ell_delta(t) = t + 2 log t, t > 0.
double ell_delta(double t);

/// Uniform on A: n ell(h + log m + 8) + ell(log(h + 2 max{log m, 0} + 9) + 2),
/// h the erosion entropy and m = E||X||_inf.
double thm1(int n, double h, double mean_norm);

/// Uniform on an orthogonally convex A, r = E||X - xhat||_inf:
/// n ell((n-1) log r + log(||xhat|| + r) - log V + 4n + 8)
///   + ell(log((n-1) log r + 2 max{r, 0} - log V + 4n + 9) + 2).
/// The second term keeps max{r, 0} as published (not max{log r, 0}).
double cor1(int n, double r, double xhat_norm, double volume);

/// General pdf: n ell(E_Z[h] + log m + 8) + ell(log(E_Z[h] + 2 max{log m, 0} + 10) + 2).
double thm2(int n, double expected_h, double mean_norm);

/// Orthogonally concave pdf, with `entropy_term` = h(Z) or log sup f:
/// n ell((n-1) log r + log(||xhat|| + r) + H + 4n + 8)
///   + ell(log((n-1) log r + 2 max{log r, 0} + H + 4n + 10) + 2).
double cor2(int n, double r, double xhat_norm, double entropy_term);

/// Bounded scheme, orthogonally concave pdf on [0,1]^n, H = h(Z) or log sup f:
/// n (H + log n + log e + 2) + 2 log(H + log n + log e + 3) + 1.
double thm3(int n, double entropy_term);

/// Shifted exponential with shift a >= 0: log(a+1) + 2 log(log(a+1) + 12) + 23.
double app2(double a);

}  // namespace udc::bounds
