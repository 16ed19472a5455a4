#pragma once

#include <span>
#include <vector>

namespace sphmean::quad {

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1]; nodes by Newton iteration on P_n.
/// Results are cached per n.
const Rule1D& gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [a, b].
Rule1D gauss_legendre(int n, double a, double b);

struct UniformIntegral {
    double value = 0.0;
    bool trapezoid_fallback = false;  // set when the sample count is even
};

/// Composite Simpson on a uniform grid with spacing dt (odd sample count);
/// falls back to the composite trapezoid rule for even counts and flags it.
UniformIntegral integrate_uniform(std::span<const double> values, double dt);

}  // namespace sphmean::quad
