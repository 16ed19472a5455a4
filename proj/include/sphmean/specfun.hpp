#pragma once

#include <stdexcept>
#include <vector>

namespace sphmean::specfun {

/// Gamma function for positive real arguments (Lanczos approximation,
/// accurate to ~14 significant digits on (0, 170)).
/// Throws std::domain_error for x <= 0.
double gamma_fn(double x);

/// Bessel function of the first kind J_nu(x), nu >= 0, x >= 0.
/// Power series (long double accumulation) for small x, backward
/// recurrence with Neumann-series normalization for large x.
/// Absolute error <= 1e-12 for x <= 100 and moderate orders.
double bessel_j(double nu, double x);

/// d/dx J_nu(x).
double bessel_j_prime(double nu, double x);

/// Normalized Bessel function j_nu(x) = x^-nu J_nu(x).
/// Smooth even function of x; j_nu(0) = 1 / (2^nu Gamma(nu+1)).
double normalized_j(double nu, double x);

/// d/dx j_nu(x) = -x^-nu J_{nu+1}(x).
double normalized_j_prime(double nu, double x);

/// Bessel function of the second kind, order zero.  Internal helper for
/// singular-branch diagnostics; x > 0.
double bessel_y0(double x);

/// The first `count` positive zeros of J_nu, strictly increasing.
struct ZeroTable {
    double nu = 0.0;
    std::vector<double> zeros;
};

/// Zeros located by interlacing brackets (walked up in half steps of the
/// order from J_{1/2}, whose zeros are q*pi) and refined by safeguarded
/// Newton iteration.  Each zero accurate to ~1e-13 absolute.
ZeroTable bessel_zeros(double nu, int count);

}  // namespace sphmean::specfun
