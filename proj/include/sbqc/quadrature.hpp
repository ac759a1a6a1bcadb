// quadrature.hpp — adaptive Gauss-Kronrod integration over (0, inf) for the
// radial integrals of the reservoir model:
//
//   I = \int_0^hi  w^a s(w) K(w t) dw,   K in {1, cos, sin, 1-cos, e^{i.}}
//
// Three mechanisms keep this accurate across the whole parameter range:
//  * integrable endpoint singularities w^a, a in (-1,0), are removed by the
//    substitution w = u^{1/(1+a_eff)} after folding the kernel zero into the
//    power (sin ~ w, 1-cos ~ w^2),
//  * oscillatory panels are pre-split at half periods pi/t,
//  * for very large t a Filon rule (quadratic fit times exact moments of
//    e^{iwt}) replaces the half-period panels, whose count would explode.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <type_traits>
#include <vector>

#include "sbqc/common.hpp"
#include "sbqc/specfun.hpp"

namespace sbqc::quad {

struct Options {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdiv = 10000;
    double filon_t = 1e3;     // switch to Filon beyond this |t|
    int max_osc_panels = 40000;
    bool throw_on_failure = true;
};

template <class T>
struct Result {
    T value{};
    double error = 0.0;
    int panels = 0;
    bool converged = true;
};

enum class Kernel { One, Cos, Sin, Versin, Cis };

namespace detail {

inline double abs_of(double v) { return std::abs(v); }
inline double abs_of(const cplx& v) { return std::abs(v); }

// Gauss-Kronrod 15(7) nodes and weights (QUADPACK values).
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T, class F>
void gk15(const F& f, double lo, double hi, T& value, double& err) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    T fc = f(c);
    T resk = fc * wgk[7];
    T resg = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        double x = h * xgk[j];
        T fsum = f(c - x) + f(c + x);
        resk += fsum * wgk[j];
        if (j % 2 == 1) resg += fsum * wg[j / 2];
    }
    value = resk * h;
    err = abs_of((resk - resg) * h);
}

struct PanelKey {
    double err;
    std::size_t idx;
    bool operator<(const PanelKey& o) const { return err < o.err; }
};

// Adaptive refinement over an initial panel list.  `panel_rule` computes
// {value, err} on a subinterval.
template <class T, class Rule>
Result<T> adapt(const Rule& panel_rule, std::vector<double> breaks, const Options& opts,
                const char* what) {
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    struct Panel {
        double lo, hi, err;
        T value;
    };
    std::vector<Panel> panels;
    panels.reserve(breaks.size());
    std::priority_queue<PanelKey> heap;
    T total{};
    double total_err = 0.0;
    auto push = [&](double lo, double hi) {
        Panel p;
        p.lo = lo;
        p.hi = hi;
        panel_rule(lo, hi, p.value, p.err);
        total += p.value;
        total_err += p.err;
        panels.push_back(p);
        heap.push({p.err, panels.size() - 1});
    };
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) push(breaks[i], breaks[i + 1]);
    int splits = 0;
    while (total_err > std::max(opts.abs_tol, opts.rel_tol * abs_of(total)) &&
           splits < opts.max_subdiv && !heap.empty()) {
        PanelKey top = heap.top();
        heap.pop();
        Panel& p = panels[top.idx];
        if (p.err != top.err) continue; // stale heap entry
        double lo = p.lo, hi = p.hi, mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) continue; // cannot split further
        total += -p.value;
        total_err -= p.err;
        p.err = -1.0; // mark stale
        push(lo, mid);
        push(mid, hi);
        ++splits;
    }
    Result<T> r;
    r.value = total;
    r.error = total_err;
    r.panels = static_cast<int>(panels.size());
    r.converged = total_err <= std::max(opts.abs_tol, opts.rel_tol * abs_of(total)) ||
                  total_err <= opts.abs_tol;
    if (!r.converged && opts.throw_on_failure)
        throw integration_error(std::string("quadrature did not converge in ") + what +
                                    ": error estimate " + std::to_string(total_err) + " after " +
                                    std::to_string(r.panels) + " panels",
                                abs_of(total), total_err);
    return r;
}

// Centered moments \int_{-h}^{h} xi^k e^{i t xi} dxi, k = 0,1,2.
inline void centered_moments(double h, double t, cplx& m0, cplx& m1, cplx& m2) {
    double th = t * h;
    double s = std::sin(th), c = std::cos(th);
    m0 = cplx(2.0 * s / t, 0.0);
    m1 = cplx(0.0, 2.0 * (s - th * c) / (t * t));
    m2 = cplx(2.0 * h * h * s / t + 4.0 * h * c / (t * t) - 4.0 * s / (t * t * t), 0.0);
}

// Filon: quadratic through (x0, xm, x1) times exact e^{iwt} moments.
template <class T, class F>
cplx filon_quadratic(const F& f, double lo, double hi, double t) {
    double h = 0.5 * (hi - lo);
    double xc = 0.5 * (lo + hi);
    T f0 = f(lo), fm = f(xc), f1 = f(hi);
    // p(xi) = c0 + c1 xi + c2 xi^2 on xi = w - xc in [-h, h]
    T c0 = fm;
    T c1 = (f1 - f0) * (0.5 / h);
    T c2 = (f1 + f0 - fm * 2.0) * (0.5 / (h * h));
    cplx m0, m1, m2;
    centered_moments(h, t, m0, m1, m2);
    cplx rot = std::exp(cplx(0.0, t * xc));
    return rot * (c0 * m0 + c1 * m1 + c2 * m2);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Generic adaptive integral of f over [lo, hi] with user breakpoints.
// ---------------------------------------------------------------------------
template <class T = double, class F>
Result<T> integrate(const F& f, double lo, double hi, const Options& opts = {},
                    std::vector<double> extra_breaks = {}, const char* what = "integrate") {
    if (hi <= lo) return {};
    std::vector<double> breaks{lo, hi};
    for (double b : extra_breaks)
        if (b > lo && b < hi) breaks.push_back(b);
    auto rule = [&](double a, double b, T& v, double& e) { detail::gk15<T>(f, a, b, v, e); };
    return detail::adapt<T>(rule, std::move(breaks), opts, what);
}

namespace detail {

inline int kernel_zero_order(Kernel k) {
    switch (k) {
        case Kernel::Sin: return 1;
        case Kernel::Versin: return 2;
        default: return 0;
    }
}

// Pointwise stable integrand w^a s(w) K(wt), written so that no 0/0 or
// cancellation appears at small w.
template <class T, class S>
auto make_direct_integrand(double a, const S& s, Kernel kern, double t) {
    return [=](double w) -> T {
        double x = w * t;
        double p = std::pow(w, a);
        switch (kern) {
            case Kernel::One: return T(p * 1.0) * s(w);
            case Kernel::Cos: return T(p * std::cos(x)) * s(w);
            case Kernel::Sin: return T(p * std::sin(x)) * s(w);
            case Kernel::Versin: {
                double sh = std::sin(0.5 * x);
                return T(p * 2.0 * sh * sh) * s(w);
            }
            case Kernel::Cis:
                if constexpr (std::is_same_v<T, cplx>)
                    return T(std::exp(cplx(0.0, x))) * (s(w) * p);
                else
                    return T(p * std::cos(x)) * s(w);
        }
        return T{};
    };
}

// Integrand after folding the kernel zero into the power: w^{a_eff} g(w),
// g(w) = s(w) * Khat(wt) with Khat smooth and O(1) at w -> 0.
template <class T, class S>
auto make_folded_smooth(const S& s, Kernel kern, double t) {
    return [=](double w) -> T {
        switch (kern) {
            case Kernel::One: return T(1.0) * s(w);
            case Kernel::Cos: return T(std::cos(w * t)) * s(w);
            case Kernel::Sin: return T(t * sinc(w * t)) * s(w);
            case Kernel::Versin: return T(t * t * versinc(w * t)) * s(w);
            case Kernel::Cis:
                if constexpr (std::is_same_v<T, cplx>)
                    return T(std::exp(cplx(0.0, w * t))) * s(w);
                else
                    return T(std::cos(w * t)) * s(w);
        }
        return T{};
    };
}

inline std::vector<double> geometric_breaks(double lo, double hi, double ratio = 4.0) {
    std::vector<double> b{lo, hi};
    if (lo <= 0.0) lo = hi * 1e-14;
    for (double x = hi / ratio; x > lo; x /= ratio) b.push_back(x);
    return b;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Radial oscillatory integral \int_0^hi w^a s(w) K(wt) dw.
//
// `a` may be any real > -1 after the kernel zero is folded in
// (a + 1 for Sin, a + 2 for Versin must exceed -1); integrable endpoint
// singularities are removed by substitution.
// ---------------------------------------------------------------------------
template <class T = double, class S>
Result<T> radial_integral(double a, const S& s, Kernel kern, double t, double hi,
                          const Options& opts = {}, std::vector<double> extra_breaks = {},
                          const char* what = "radial_integral") {
    Result<T> out{};
    if (hi <= 0.0) return out;
    const double at = std::abs(t);
    if (at == 0.0) {
        if (kern == Kernel::Sin || kern == Kernel::Versin) return out; // kernel vanishes
        kern = Kernel::One; // cos/cis reduce to 1
    }
    const int z = detail::kernel_zero_order(kern);
    const double a_eff = a + z;
    if (a_eff <= -1.0)
        throw domain_error(std::string(what) +
                           ": integrand not integrable at w=0 (effective exponent " +
                           std::to_string(a_eff) + " <= -1)");

    const bool need_subst = a < -1e-12;
    double w_split = 0.0;
    if (need_subst) {
        w_split = std::min(1.0, 0.25 * hi);
        if (at > 0.0) w_split = std::min(w_split, std::max(400.0 * pi / at, hi * 1e-9));
    }

    Options sub = opts;
    sub.throw_on_failure = false;
    // tolerance split between the two regions
    sub.abs_tol = 0.5 * opts.abs_tol;
    sub.rel_tol = 0.5 * opts.rel_tol;

    Result<T> ir{};
    if (need_subst && w_split > 0.0) {
        const double beta = 1.0 + a_eff;
        auto folded = detail::make_folded_smooth<T>(s, kern, t);
        auto fir = [&](double u) -> T {
            double w = std::pow(u, 1.0 / beta);
            return folded(w) * (1.0 / beta);
        };
        double u_max = std::pow(w_split, beta);
        std::vector<double> ubr{0.0, u_max};
        if (at > 0.0) {
            // chirped half-period breaks: w_k = k pi / t  ->  u = w^beta
            int kmax = static_cast<int>(std::floor(w_split * at / pi));
            kmax = std::min(kmax, 600);
            for (int k = 1; k <= kmax; ++k) ubr.push_back(std::pow(k * pi / at, beta));
        }
        for (int k = 1; k <= 30; ++k) ubr.push_back(u_max / std::pow(2.0, k));
        ir = integrate<T>(fir, 0.0, u_max, sub, ubr, what);
    }

    // direct region [w_split, hi]
    double lo = need_subst ? w_split : 0.0;
    Result<T> direct{};
    if (hi > lo) {
        const double span = hi - lo;
        const bool oscillatory = at * span > 16.0;
        const double n_half_periods = at * span / pi;
        if (!oscillatory) {
            auto f = detail::make_direct_integrand<T>(a, s, kern, t);
            auto br = detail::geometric_breaks(lo, hi);
            for (double b : extra_breaks)
                if (b > lo && b < hi) br.push_back(b);
            direct = integrate<T>(f, lo, hi, sub, br, what);
        } else if (at <= opts.filon_t && n_half_periods <= opts.max_osc_panels) {
            auto f = detail::make_direct_integrand<T>(a, s, kern, t);
            std::vector<double> br = detail::geometric_breaks(lo, hi);
            double step = pi / at;
            double start = std::ceil(lo / step) * step;
            for (double x = start; x < hi; x += step) br.push_back(x);
            for (double b : extra_breaks)
                if (b > lo && b < hi) br.push_back(b);
            direct = integrate<T>(f, lo, hi, sub, br, what);
        } else {
            // Filon route. Versin splits into One - Cos, valid since lo > 0
            // (or a >= 0, in which case both pieces are integrable anyway).
            auto F = [&](double w) -> T { return s(w) * std::pow(w, a); };
            auto br = detail::geometric_breaks(lo, hi, 2.0);
            for (double b : extra_breaks)
                if (b > lo && b < hi) br.push_back(b);
            auto filon_rule = [&](double x0, double x1, cplx& v, double& e) {
                cplx whole = detail::filon_quadratic<T>(F, x0, x1, t);
                double xm = 0.5 * (x0 + x1);
                cplx halves = detail::filon_quadratic<T>(F, x0, xm, t) +
                              detail::filon_quadratic<T>(F, xm, x1, t);
                v = halves;
                e = std::abs(whole - halves);
            };
            std::sort(br.begin(), br.end());
            Result<cplx> osc = detail::adapt<cplx>(filon_rule, br, sub, what);
            Result<T> base{};
            if (kern == Kernel::Versin || kern == Kernel::One) {
                auto fone = detail::make_direct_integrand<T>(a, s, Kernel::One, 0.0);
                base = integrate<T>(fone, lo, hi, sub, detail::geometric_breaks(lo, hi), what);
            }
            direct.error = osc.error + base.error;
            direct.panels = osc.panels + base.panels;
            direct.converged = osc.converged && base.converged;
            if constexpr (std::is_same_v<T, cplx>) {
                direct.value = (kern == Kernel::Cis) ? osc.value : T{};
                if (kern != Kernel::Cis) direct.converged = false; // unsupported mix
            } else {
                switch (kern) {
                    case Kernel::Cos: direct.value = osc.value.real(); break;
                    case Kernel::Sin: direct.value = osc.value.imag(); break;
                    case Kernel::Versin: direct.value = base.value - osc.value.real(); break;
                    case Kernel::One: direct.value = base.value; break;
                    default: break;
                }
            }
        }
    }

    out.value = ir.value + direct.value;
    out.error = ir.error + direct.error;
    out.panels = ir.panels + direct.panels;
    out.converged = ir.converged && direct.converged;
    if (!out.converged && opts.throw_on_failure)
        throw integration_error(std::string("quadrature did not converge in ") + what +
                                    ": error estimate " + std::to_string(out.error),
                                detail::abs_of(out.value), out.error);
    return out;
}

} // namespace sbqc::quad
