// form_factor.hpp — radial coupling functions g(w) and the spectral density.
//
// The analytic family
//     g(w) = wc^{-(a+3)/2} Gamma(a+3)^{-1/2} e^{-w/(2 wc)} w^{a/2},   a > -3
// is unit-normalized in L^2(R_+, w^2 dw); a sets the infrared exponent
// (J(w) ~ w^{2+a}) and wc the ultraviolet cutoff.  Tabulated form factors are
// interpolated piecewise-cubically and extended by zero outside their grid.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include "sbqc/common.hpp"
#include "sbqc/specfun.hpp"

namespace sbqc {

namespace detail {

// natural cubic spline with complex values
class ComplexSpline {
public:
    ComplexSpline() = default;
    ComplexSpline(std::vector<double> x, std::vector<cplx> y)
        : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        if (n < 2 || y_.size() != n)
            throw usage_error("tabulated form factor: need >= 2 knots and matching values");
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (!(x_[i + 1] > x_[i]) || !(x_[i] > 0))
                throw usage_error("tabulated form factor: grid must be strictly increasing and positive");
        m_.assign(n, cplx(0));
        if (n == 2) return;
        std::vector<double> diag(n, 0.0), sub(n, 0.0);
        std::vector<cplx> rhs(n, cplx(0));
        for (std::size_t i = 1; i + 1 < n; ++i) {
            double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
            sub[i] = h0;
            diag[i] = 2.0 * (h0 + h1);
            rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
        }
        // Thomas solve on the interior (natural ends: m_0 = m_{n-1} = 0)
        for (std::size_t i = 2; i + 1 < n; ++i) {
            double w = sub[i] / diag[i - 1];
            diag[i] -= w * (x_[i] - x_[i - 1]);
            rhs[i] -= w * rhs[i - 1];
        }
        for (std::size_t i = n - 2; i >= 1; --i) {
            cplx up = (i + 2 < n) ? m_[i + 1] * (x_[i + 1] - x_[i]) : cplx(0);
            m_[i] = (rhs[i] - up) / diag[i];
            if (i == 1) break;
        }
    }

    cplx operator()(double w) const {
        if (w <= x_.front() || w >= x_.back()) {
            if (w == x_.front()) return y_.front();
            if (w == x_.back()) return y_.back();
            return cplx(0); // zero-extended
        }
        auto it = std::upper_bound(x_.begin(), x_.end(), w);
        std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
        double h = x_[i + 1] - x_[i];
        double A = (x_[i + 1] - w) / h, B = (w - x_[i]) / h;
        return A * y_[i] + B * y_[i + 1] +
               ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * (h * h / 6.0);
    }

    const std::vector<double>& knots() const { return x_; }

private:
    std::vector<double> x_;
    std::vector<cplx> y_;
    std::vector<cplx> m_; // second derivatives
};

} // namespace detail

struct PaperRadial {
    double alpha;
    double omega_c;
};

struct Tabulated {
    std::vector<double> omega;
    std::vector<cplx> value;
    // infrared exponent of the associated spectral density, if the user knows it
    double p_hint = std::numeric_limits<double>::quiet_NaN();
};

class FormFactor {
public:
    FormFactor(PaperRadial r) : radial_(r), is_radial_(true) {
        if (!(r.alpha > -3.0))
            throw usage_error("form factor: alpha must exceed -3 (got " +
                              std::to_string(r.alpha) + ")");
        if (!(r.omega_c > 0.0)) throw usage_error("form factor: omega_c must be positive");
        norm_ = std::pow(r.omega_c, -0.5 * (r.alpha + 3.0)) / std::sqrt(gamma_fn(r.alpha + 3.0));
    }
    FormFactor(Tabulated tab)
        : spline_(std::make_shared<detail::ComplexSpline>(tab.omega, tab.value)),
          p_hint_(tab.p_hint),
          is_radial_(false) {}

    bool is_radial() const { return is_radial_; }
    bool is_real() const { return is_radial_; }
    const PaperRadial& radial() const { return radial_; }

    // g(w) = w^{ir_power} * smooth(w)
    double ir_power() const { return is_radial_ ? 0.5 * radial_.alpha : 0.0; }

    double smooth_real(double w) const {
        return is_radial_ ? norm_ * std::exp(-0.5 * w / radial_.omega_c)
                          : (*spline_)(w).real();
    }
    cplx smooth(double w) const {
        return is_radial_ ? cplx(smooth_real(w)) : (*spline_)(w);
    }
    cplx value(double w) const {
        if (w < 0) throw domain_error("form factor evaluated at negative frequency");
        if (is_radial_ && w == 0.0)
            return radial_.alpha == 0 ? cplx(norm_) : (radial_.alpha > 0 ? cplx(0) : cplx(std::numeric_limits<double>::infinity()));
        return smooth(w) * std::pow(w, ir_power());
    }

    // exponential decay rate of smooth(); 0 for compactly supported tables
    double decay_rate() const { return is_radial_ ? 0.5 / radial_.omega_c : 0.0; }
    double support_hi() const {
        return is_radial_ ? std::numeric_limits<double>::infinity() : spline_->knots().back();
    }
    std::vector<double> knots() const {
        return is_radial_ ? std::vector<double>{} : spline_->knots();
    }

    // infrared exponent p of J(w) ~ w^p
    double infrared_p() const {
        if (is_radial_) return 2.0 + radial_.alpha;
        if (std::isnan(p_hint_))
            throw usage_error("tabulated form factor: infrared exponent p must be supplied explicitly");
        return p_hint_;
    }

private:
    PaperRadial radial_{0.0, 1.0};
    double norm_ = 0.0;
    std::shared_ptr<detail::ComplexSpline> spline_;
    double p_hint_ = std::numeric_limits<double>::quiet_NaN();
    bool is_radial_ = true;
};

// J(w) = (pi/2) w^2 |g(w)|^2 under the radial normalization convention; then
// ||g_t||^2 = (4/pi) \int J(w) (1-cos wt)/w^2 dw holds as an identity.
struct SpectralDensity {
    FormFactor g;
    double operator()(double w) const {
        cplx v = g.value(w);
        return 0.5 * pi * w * w * std::norm(v);
    }
    double infrared_p() const { return g.infrared_p(); }
};

} // namespace sbqc
