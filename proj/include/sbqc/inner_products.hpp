// inner_products.hpp — the quadratic forms and overlaps entering the
// decoherence formulas, all in the radial convention
//
//     <f, g> = \int_0^inf w^2 conj(f(w)) g(w) dw,
//
// with g_t(w) = (1 - e^{iwt}) g(w) / (iw).  Writing the kernels through
// 2 sin^2(wt/2) and sinc keeps every integrand cancellation-free:
//
//     ||g_t||^2            = 2 \int |g|^2 (1 - cos wt) dw
//     d/dt ||g_t||^2       = 2 \int w |g|^2 sin(wt) dw
//     <f, g_t>             = -\int w conj(f) g [ sin(wt) + i(1 - cos wt) ] dw
//     <e^{-itw} f, g>      =  \int w^2 conj(f) g e^{iwt} dw
//     <g_t, K_eps g_t>     = 2 \int K_eps(w) |g|^2 (1 - cos wt) dw,
//       K_eps(w) = eps coth(beta' eps w / 2)  (-> 2/(beta' w) as eps -> 0).
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "sbqc/common.hpp"
#include "sbqc/form_factor.hpp"
#include "sbqc/quadrature.hpp"

namespace sbqc {

class InnerProductEngine {
public:
    explicit InnerProductEngine(quad::Options opts = {}) : opts_(opts) {}
    const quad::Options& options() const { return opts_; }
    quad::Options& options() { return opts_; }

    // ||g||^2 (= 1 for the analytic normalized family)
    double norm_sq(const FormFactor& g) const {
        auto s = [g](double w) { return std::norm(g.smooth(w)); };
        return quad::radial_integral<double>(2.0 + 2.0 * g.ir_power(), s, quad::Kernel::One, 0.0,
                                             cutoff(g, g), opts_, breaks(g, g), "norm_sq")
            .value;
    }

    // ||g_t||^2; exactly 0 at t = 0
    double gt_norm_sq(const FormFactor& g, double t) const {
        require_nonneg_t(t, "gt_norm_sq");
        if (t == 0.0) return 0.0;
        auto s = [g](double w) { return std::norm(g.smooth(w)); };
        return 2.0 * quad::radial_integral<double>(2.0 * g.ir_power(), s, quad::Kernel::Versin, t,
                                                   cutoff(g, g), opts_, breaks(g, g), "gt_norm_sq")
                         .value;
    }

    // d/dt ||g_t||^2 = 2 \int w |g|^2 sin(wt) dw
    double gt_norm_sq_dt(const FormFactor& g, double t) const {
        require_nonneg_t(t, "gt_norm_sq_dt");
        if (t == 0.0) return 0.0;
        auto s = [g](double w) { return std::norm(g.smooth(w)); };
        return 2.0 * quad::radial_integral<double>(1.0 + 2.0 * g.ir_power(), s, quad::Kernel::Sin,
                                                   t, cutoff(g, g), opts_, breaks(g, g),
                                                   "gt_norm_sq_dt")
                         .value;
    }

    // <e^{-itw} f, g> = \int w^2 conj(f) g e^{iwt} dw;  t may be negative
    cplx overlap_free(const FormFactor& f, const FormFactor& g, double t) const {
        auto s = [f, g](double w) { return std::conj(f.smooth(w)) * g.smooth(w); };
        return quad::radial_integral<cplx>(2.0 + f.ir_power() + g.ir_power(), s, quad::Kernel::Cis,
                                           t, cutoff(f, g), opts_, breaks(f, g), "overlap_free")
            .value;
    }

    // <f, g_t>; finite for every valid form-factor pair at finite t
    cplx overlap_gt(const FormFactor& f, const FormFactor& g, double t) const {
        require_nonneg_t(t, "overlap_gt");
        if (t == 0.0) return cplx(0);
        const double a = 1.0 + f.ir_power() + g.ir_power();
        if (f.is_real() && g.is_real()) {
            auto s = [f, g](double w) { return f.smooth_real(w) * g.smooth_real(w); };
            double re = -quad::radial_integral<double>(a, s, quad::Kernel::Sin, t, cutoff(f, g),
                                                       opts_, breaks(f, g), "overlap_gt")
                             .value;
            double im = -quad::radial_integral<double>(a, s, quad::Kernel::Versin, t, cutoff(f, g),
                                                       opts_, breaks(f, g), "overlap_gt")
                             .value;
            return {re, im};
        }
        auto s = [f, g](double w) { return std::conj(f.smooth(w)) * g.smooth(w); };
        cplx sin_part = quad::radial_integral<cplx>(a, s, quad::Kernel::Sin, t, cutoff(f, g),
                                                    opts_, breaks(f, g), "overlap_gt")
                            .value;
        cplx vers_part = quad::radial_integral<cplx>(a, s, quad::Kernel::Versin, t, cutoff(f, g),
                                                     opts_, breaks(f, g), "overlap_gt")
                             .value;
        return -sin_part - cplx(0, 1) * vers_part;
    }

    // lim_{t->inf} <f, g_t> = -i <f, w^{-1} g>; requires the infrared condition
    cplx overlap_omega_inv(const FormFactor& f, const FormFactor& g) const {
        const double a = 1.0 + f.ir_power() + g.ir_power();
        if (a <= -1.0)
            throw domain_error("overlap_omega_inv: infrared divergent, integrand exponent " +
                               std::to_string(a) + " <= -1 near w = 0");
        auto s = [f, g](double w) { return std::conj(f.smooth(w)) * g.smooth(w); };
        return quad::radial_integral<cplx>(a, s, quad::Kernel::One, 0.0, cutoff(f, g), opts_,
                                           breaks(f, g), "overlap_omega_inv")
            .value;
    }

    // <g_t, K_eps g_t> with the continuous-in-eps kernel
    // K_eps = eps coth(beta' eps w/2) for eps > 0 and 2/(beta' w) at eps = 0.
    double thermal_quadratic_form(const FormFactor& g, double t, double beta_prime,
                                  double eps) const {
        thermal_preconditions(g, t, beta_prime, eps);
        if (t == 0.0) return 0.0;
        const double a = 2.0 * g.ir_power() - 1.0;
        auto s = [g, beta_prime, eps](double w) {
            return std::norm(g.smooth(w)) * xcoth(0.5 * beta_prime * eps * w);
        };
        return (4.0 / beta_prime) *
               quad::radial_integral<double>(a, s, quad::Kernel::Versin, t, cutoff(g, g), opts_,
                                             breaks(g, g), "thermal_quadratic_form")
                   .value;
    }

    // d/dt <g_t, K_eps g_t> = 2 \int K_eps |g|^2 w sin(wt) dw
    double thermal_quadratic_form_dt(const FormFactor& g, double t, double beta_prime,
                                     double eps) const {
        thermal_preconditions(g, t, beta_prime, eps);
        if (t == 0.0) return 0.0;
        const double a = 2.0 * g.ir_power();
        auto s = [g, beta_prime, eps](double w) {
            return std::norm(g.smooth(w)) * xcoth(0.5 * beta_prime * eps * w);
        };
        return (4.0 / beta_prime) *
               quad::radial_integral<double>(a, s, quad::Kernel::Sin, t, cutoff(g, g), opts_,
                                             breaks(g, g), "thermal_quadratic_form_dt")
                   .value;
    }

    // Gamma_inf = (4/pi) \int J(w)/w^2 dw = 2 \int |g|^2 dw; exists for p > 1
    double gamma_inf(const FormFactor& g) const {
        const double a = 2.0 * g.ir_power();
        if (a <= -1.0)
            throw domain_error("gamma_inf: requires p > 1 (integrand exponent " +
                               std::to_string(a) + " <= -1 near w = 0)");
        auto s = [g](double w) { return std::norm(g.smooth(w)); };
        return 2.0 * quad::radial_integral<double>(a, s, quad::Kernel::One, 0.0, cutoff(g, g),
                                                   opts_, breaks(g, g), "gamma_inf")
                         .value;
    }

    // upper integration limit for a pair of form factors
    static double cutoff(const FormFactor& f, const FormFactor& g) {
        double support = std::min(f.support_hi(), g.support_hi());
        double rate = f.decay_rate() + g.decay_rate();
        if (rate <= 0.0) return support; // both tabulated
        // solve  a ln(w) - rate w = ln(tail)  crudely; generous is cheap
        double a = std::max(0.0, 4.0 + f.ir_power() + g.ir_power());
        double hi = (46.0 + a) / rate;
        for (int i = 0; i < 40; ++i) hi = (46.0 + a * std::log(hi + 2.0)) / rate;
        hi = 1.25 * std::max(hi, (2.0 * a + 20.0) / rate);
        return std::min(hi, support);
    }

private:
    static void require_nonneg_t(double t, const char* what) {
        if (!(t >= 0.0)) throw domain_error(std::string(what) + ": need t >= 0");
    }
    static void thermal_preconditions(const FormFactor& g, double t, double beta_prime,
                                      double eps) {
        if (!(beta_prime > 0.0)) throw domain_error("thermal: beta' must be positive");
        if (!(eps >= 0.0)) throw domain_error("thermal: eps must be nonnegative");
        double p = g.infrared_p();
        if (!(p > 0.0))
            throw domain_error("thermal state undefined for p <= 0 (got p = " +
                               std::to_string(p) + ")");
        if (!(t >= 0.0)) throw domain_error("thermal_quadratic_form: need t >= 0");
    }
    static std::vector<double> breaks(const FormFactor& f, const FormFactor& g) {
        std::vector<double> b = f.knots();
        auto kg = g.knots();
        b.insert(b.end(), kg.begin(), kg.end());
        return b;
    }

    quad::Options opts_;
};

} // namespace sbqc
