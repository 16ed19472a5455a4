#include "sphmean/specfun.hpp"

#include <cmath>
#include <limits>

namespace sphmean::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos approximation, g = 7, 9 coefficients.
const double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Ascending power series for J_nu, long double accumulation.
// Safe for x <= ~16 (worst-case cancellation stays within extended precision).
double bessel_j_series(double nu, double x) {
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const long double half = 0.5L * static_cast<long double>(x);
    const long double q = half * half;
    long double term =
        std::exp(static_cast<long double>(nu) * std::log(half) -
                 std::lgamma(static_cast<long double>(nu) + 1.0L));
    long double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<long double>(k) * (static_cast<long double>(nu) + k));
        sum += term;
        if (std::abs(term) < 1e-25L * (std::abs(sum) + 1e-30L)) break;
    }
    return static_cast<double>(sum);
}

// Backward (Miller) recurrence normalized with the Neumann series
//   sum_k (mu + 2k) Gamma(mu + k) / k!  J_{mu+2k}(x) = (x/2)^mu ,
// where mu = frac(nu).  Stable for every order once x is past the
// power-series window.
double bessel_j_miller(double nu, double x) {
    const int offset = static_cast<int>(std::floor(nu));
    const double mu = nu - offset;
    const double top = std::max(x, nu);
    const int m = offset + static_cast<int>(15.0 * std::cbrt(top) + top - nu) + 40;

    std::vector<long double> f(static_cast<size_t>(m) + 2, 0.0L);
    f[m + 1] = 0.0L;
    f[m] = 1e-30L;
    for (int j = m; j >= 1; --j) {
        f[j - 1] = (2.0L * (mu + j) / x) * f[j] - f[j + 1];
        if (std::abs(f[j - 1]) > 1e250L) {
            for (int i = j - 1; i <= m + 1; ++i) f[i] *= 1e-250L;
        }
    }

    // Neumann normalization: w_0 = Gamma(mu+1); w_k = (mu+2k) Gamma(mu+k)/k!.
    long double sum = std::exp(std::lgamma(static_cast<long double>(mu) + 1.0L)) * f[0];
    long double p = std::exp(std::lgamma(static_cast<long double>(mu) + 1.0L));  // = Gamma(mu+1)/1!
    for (int k = 1; 2 * k <= m; ++k) {
        if (k > 1) p *= (mu + (k - 1.0L)) / k;
        sum += (mu + 2.0L * k) * p * f[2 * k];
    }
    const long double scale =
        std::pow(0.5L * static_cast<long double>(x), static_cast<long double>(mu));
    return static_cast<double>(f[offset] * scale / sum);
}

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
    if (x < 0.5) {
        // reflection keeps the Lanczos sum in its sweet spot
        return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double bessel_j(double nu, double x) {
    if (nu < 0.0) throw std::domain_error("bessel_j: order must be >= 0");
    if (x < 0.0) throw std::domain_error("bessel_j: argument must be >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x <= 16.0) return bessel_j_series(nu, x);
    return bessel_j_miller(nu, x);
}

double bessel_j_prime(double nu, double x) {
    if (x == 0.0) {
        if (nu == 1.0) return 0.5;
        return nu < 1.0 ? std::numeric_limits<double>::quiet_NaN() : 0.0;
    }
    if (nu >= 1.0) return 0.5 * (bessel_j(nu - 1.0, x) - bessel_j(nu + 1.0, x));
    return (nu / x) * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

double normalized_j(double nu, double x) {
    x = std::abs(x);  // even function
    if (x < 0.5) {
        const long double q = 0.25L * static_cast<long double>(x) * x;
        long double term = std::exp(-static_cast<long double>(nu) * 0.6931471805599453094L -
                                    std::lgamma(static_cast<long double>(nu) + 1.0L));
        long double sum = term;
        for (int k = 1; k < 40; ++k) {
            term *= -q / (static_cast<long double>(k) * (static_cast<long double>(nu) + k));
            sum += term;
            if (std::abs(term) < 1e-25L * std::abs(sum)) break;
        }
        return static_cast<double>(sum);
    }
    return bessel_j(nu, x) * std::pow(x, -nu);
}

double normalized_j_prime(double nu, double x) {
    return -x * normalized_j(nu + 1.0, x);
}

double bessel_y0(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_y0: argument must be positive");
    constexpr double kEuler = 0.57721566490153286061;
    if (x <= 9.0) {
        // Y_0 = (2/pi) [ (log(x/2) + gamma) J_0(x) + sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2 ],
        // q = x^2/4, H_k the harmonic numbers.
        const long double q = 0.25L * static_cast<long double>(x) * x;
        long double s = 0.0L, tk = 1.0L, H = 0.0L;
        for (int k = 1; k < 80; ++k) {
            tk *= q / (static_cast<long double>(k) * k);
            H += 1.0L / k;
            s += (k % 2 == 1 ? 1.0L : -1.0L) * H * tk;
            if (tk < 1e-24L * (std::abs(s) + 1.0L)) break;
        }
        const double j0 = bessel_j(0.0, x);
        return (2.0 / kPi) * ((std::log(0.5 * x) + kEuler) * j0 + static_cast<double>(s));
    }
    // Hankel asymptotic expansion, Y_0 = sqrt(2/pi x) (P sin chi + Q cos chi);
    // truncation error ~1e-9 at x = 9, shrinking fast -- fine for diagnostics.
    const double chi = x - 0.25 * kPi;
    const double eight_x = 8.0 * x;
    double P = 1.0, Q = 0.0, a = 1.0;
    for (int k = 1; k <= 9; ++k) {
        const double f = 2.0 * k - 1.0;
        a *= (f * f) / (k * eight_x);
        switch (k % 4) {
            case 1: Q -= a; break;
            case 2: P -= a; break;
            case 3: Q += a; break;
            case 0: P += a; break;
        }
    }
    return std::sqrt(2.0 / (kPi * x)) * (std::sin(chi) * P + std::cos(chi) * Q);
}

ZeroTable bessel_zeros(double nu, int count) {
    if (count < 1) throw std::invalid_argument("bessel_zeros: count must be >= 1");
    if (nu < 0.0) throw std::domain_error("bessel_zeros: order must be >= 0");

    // Safeguarded Newton inside a sign-change bracket.
    auto refine = [](double order, double lo, double hi) {
        double flo = bessel_j(order, lo);
        double x = 0.5 * (lo + hi);
        for (int it = 0; it < 100; ++it) {
            const double fx = bessel_j(order, x);
            if (fx == 0.0) break;
            if ((fx > 0.0) == (flo > 0.0)) lo = x; else hi = x;
            const double dfx = bessel_j_prime(order, x);
            double next = x - fx / dfx;
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            if (std::abs(next - x) < 1e-15 * x + 1e-15) { x = next; break; }
            x = next;
        }
        return x;
    };

    // Order path: J_{1/2} has exact zeros q*pi; interlacing gives brackets
    // for each half step (up or one fractional step down).
    std::vector<double> path;
    if (nu >= 0.5) {
        double o = 0.5;
        while (o < nu - 1e-12) { path.push_back(o); o += 0.5; }
        path.push_back(nu);
        if (std::abs(path.front() - 0.5) > 1e-12) path.insert(path.begin(), 0.5);
    } else {
        path = {0.5, nu};
    }

    const int steps = static_cast<int>(path.size()) - 1;
    std::vector<double> cur(static_cast<size_t>(count) + steps);
    for (size_t q = 0; q < cur.size(); ++q) cur[q] = (q + 1) * kPi;

    for (int s = 1; s <= steps; ++s) {
        const double order = path[s];
        const bool up = order > path[s - 1];
        const int need = count + (steps - s);
        std::vector<double> next(need);
        for (int q = 0; q < need; ++q) {
            double lo, hi;
            if (up) {               // zeros move right: bracket (z_q, z_{q+1})
                lo = cur[q];
                hi = cur[q + 1];
            } else {                // zeros move left: bracket (z_{q-1}, z_q)
                lo = q == 0 ? 0.5 : cur[q - 1];
                hi = cur[q];
            }
            next[q] = refine(order, lo + 1e-14, hi - 1e-14);
        }
        cur = std::move(next);
    }

    ZeroTable table;
    table.nu = nu;
    table.zeros.assign(cur.begin(), cur.begin() + count);
    return table;
}

}  // namespace sphmean::specfun
