// specfun.hpp — Laguerre polynomials, Bessel J0, gamma function and the
// stable kernel helpers used by the radial quadratures.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "sbqc/common.hpp"

namespace sbqc {

// ---------------------------------------------------------------------------
// Laguerre polynomials L_n(x), three-term recurrence
//   (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}
// The binomial sum overflows catastrophically for the mode numbers
// n = floor(1/eps) that show up here, the recurrence does not.
// ---------------------------------------------------------------------------

struct ScaledValue {
    double log_abs; // log(|v|), -inf for v == 0
    int sign;       // -1, 0, +1
    double value() const { return sign * std::exp(log_abs); }
};

namespace detail {

// Recurrence with on-the-fly rescaling; returns log-magnitude and sign of the
// final element. `a` selects the generalized family L^(a)_n (a=0 ordinary).
inline ScaledValue laguerre_scaled_impl(long long n, double x, int a) {
    if (n == 0) return {0.0, 1};
    double prev = 1.0;              // L_0
    double cur = 1.0 + a - x;       // L_1^(a)
    double log_scale = 0.0;
    const double big = 1e150, inv_big = 1e-150, log_big = std::log(1e150);
    for (long long k = 1; k < n; ++k) {
        double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
        double m = std::max(std::abs(prev), std::abs(cur));
        if (m > big) {
            prev *= inv_big;
            cur *= inv_big;
            log_scale += log_big;
        } else if (m != 0.0 && m < inv_big) {
            prev *= big;
            cur *= big;
            log_scale -= log_big;
        }
    }
    if (cur == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    return {std::log(std::abs(cur)) + log_scale, cur > 0 ? 1 : -1};
}

} // namespace detail

inline ScaledValue laguerre_scaled(long long n, double x) {
    if (n < 0 || !std::isfinite(x))
        throw domain_error("laguerre: need n >= 0 and finite x");
    return detail::laguerre_scaled_impl(n, x, 0);
}

// d/dx L_n(x) = -L_{n-1}^(1)(x)
inline ScaledValue laguerre_deriv_scaled(long long n, double x) {
    if (n < 0 || !std::isfinite(x))
        throw domain_error("laguerre: need n >= 0 and finite x");
    if (n == 0) return {-std::numeric_limits<double>::infinity(), 0};
    ScaledValue v = detail::laguerre_scaled_impl(n - 1, x, 1);
    return {v.log_abs, -v.sign};
}

inline double laguerre(long long n, double x) {
    return laguerre_scaled(n, x).value();
}

// ---------------------------------------------------------------------------
// Bessel J0
// ---------------------------------------------------------------------------

inline double bessel_j0(double x) {
    if (!(x >= 0))
        throw domain_error("bessel_j0: need x >= 0 (callers pass |z|)");
    if (x <= 12.0) {
        // Power series in extended precision; largest term at x=12 is ~4e3,
        // so plain double accumulation would leave ~1e-12 of cancellation.
        long double xl = x;
        long double q = xl * xl / 4.0L;
        long double term = 1.0L, sum = 1.0L;
        for (int k = 1; k < 60; ++k) {
            term *= -q / (static_cast<long double>(k) * k);
            sum += term;
            if (std::abs(static_cast<double>(term)) < 1e-19) break;
        }
        return static_cast<double>(sum);
    }
    // Hankel asymptotic expansion, truncated at the smallest term.
    // A_m = prod_{j<=m} (2j-1)^2 / (m! (8x)^m);  P = 1 - A2 + A4 - ...,
    // Q = -A1 + A3 - ...;  J0 = sqrt(2/(pi x)) (cos(chi) P - sin(chi) Q).
    double A = 1.0, P = 0.0, Q = 0.0;
    int sgnP = 1, sgnQ = -1;
    double prev = std::numeric_limits<double>::infinity();
    for (int m = 0; m < 40; ++m) {
        if (A > prev) break; // asymptotic series started diverging
        if (m % 2 == 0) {
            P += sgnP * A;
            sgnP = -sgnP;
        } else {
            Q += sgnQ * A;
            sgnQ = -sgnQ;
        }
        prev = A;
        A *= (2.0 * m + 1.0) * (2.0 * m + 1.0) / (8.0 * (m + 1.0) * x);
    }
    double chi = x - 0.25 * pi;
    return std::sqrt(2.0 / (pi * x)) * (std::cos(chi) * P - std::sin(chi) * Q);
}

// (1/2pi) \int exp(i Re(z e^{i theta})) dtheta on n uniform nodes.  The
// trapezoid rule is spectrally accurate for periodic integrands; this is the
// independent oracle for bessel_j0(|z|) and the closed form behind the
// uniform-phase mixtures.
inline double bessel_j0_by_angle_average(cplx z, int n_nodes) {
    if (n_nodes < 2) throw domain_error("bessel_j0_by_angle_average: need n_nodes >= 2");
    double acc = 0.0;
    for (int j = 0; j < n_nodes; ++j) {
        double th = -pi + 2.0 * pi * j / n_nodes;
        cplx rot = z * cplx(std::cos(th), std::sin(th));
        acc += std::cos(rot.real()); // imaginary parts cancel over the circle
    }
    return acc / n_nodes;
}

// ---------------------------------------------------------------------------
// Gamma function, Lanczos (g=7, 9 terms)
// ---------------------------------------------------------------------------

inline double gamma_fn(double x) {
    if (!(x > 0)) throw domain_error("gamma_fn: need x > 0");
    static const double g = 7.0;
    static const double c[9] = {
        0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
        771.32342877765313,    -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        // reflection keeps the rational part well conditioned near 0
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    }
    double z = x - 1.0;
    double a = c[0];
    for (int i = 1; i < 9; ++i) a += c[i] / (z + i);
    double t = z + g + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

inline double log_gamma_fn(double x) {
    if (!(x > 0)) throw domain_error("log_gamma_fn: need x > 0");
    return std::lgamma(x);
}

// ---------------------------------------------------------------------------
// Removable-singularity kernels (stable at small argument)
// ---------------------------------------------------------------------------

// sin(x)/x
inline double sinc(double x) {
    double ax = std::abs(x);
    if (ax < 1e-4) {
        double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}

// (1 - cos x)/x^2 = 2 sin^2(x/2)/x^2
inline double versinc(double x) {
    double ax = std::abs(x);
    if (ax < 1e-4) {
        double x2 = x * x;
        return 0.5 - x2 / 24.0 * (1.0 - x2 / 30.0);
    }
    double s = std::sin(0.5 * x);
    return 2.0 * s * s / (x * x);
}

// x*coth(x), the thermal occupation correction; -> 1 as x -> 0.
inline double xcoth(double x) {
    double ax = std::abs(x);
    if (ax < 1e-4) {
        double x2 = x * x;
        return 1.0 + x2 / 3.0 - x2 * x2 / 45.0;
    }
    if (ax > 20.0) return ax; // coth saturates to sign(x)
    return x / std::tanh(x);
}

} // namespace sbqc
