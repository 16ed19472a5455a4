#include "sphmean/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sphmean::quad {

namespace {

Rule1D compute_gauss_legendre(int n) {
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = 3.14159265358979323846;
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const Rule1D& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    static std::map<int, Rule1D> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

Rule1D gauss_legendre(int n, double a, double b) {
    const Rule1D& base = gauss_legendre(n);
    Rule1D out = base;
    const double mid = 0.5 * (a + b), halfw = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        out.nodes[i] = mid + halfw * base.nodes[i];
        out.weights[i] = halfw * base.weights[i];
    }
    return out;
}

UniformIntegral integrate_uniform(std::span<const double> values, double dt) {
    const size_t n = values.size();
    if (n < 2) throw std::invalid_argument("integrate_uniform: need at least 2 samples");
    UniformIntegral out;
    if (n % 2 == 1) {
        double s4 = 0.0, s2 = 0.0;
        for (size_t i = 1; i + 1 < n; i += 2) s4 += values[i];
        for (size_t i = 2; i + 1 < n; i += 2) s2 += values[i];
        out.value = dt / 3.0 * (values[0] + values[n - 1] + 4.0 * s4 + 2.0 * s2);
    } else {
        double s = 0.5 * (values[0] + values[n - 1]);
        for (size_t i = 1; i + 1 < n; ++i) s += values[i];
        out.value = dt * s;
        out.trapezoid_fallback = true;
    }
    return out;
}

}  // namespace sphmean::quad
