// decoherence.hpp — characteristic functionals chi_eps and the decoherence
// function D_eps(t) = chi_eps(lambda g_t) for the four reservoir families.
//
// Closed forms (f0 the reservoir wave function, N = ||g_t||^2, q = <f0, g_t>,
// n = floor(1/eps)):
//   coherent (Dirac):    exp(-eps lam^2 N / 4) exp(i sqrt2 lam Re q)
//   coherent (circle):   exp(-eps lam^2 N / 4) J0(sqrt2 |lam| |q|)
//   BE condensate:       exp(-eps lam^2 N / 4) L_n(eps lam^2 |q|^2 / 2)
//   thermal:             exp(-lam^2 Q_eps / 4),
//     Q_eps = <g_t, eps coth(beta' eps w/2) g_t>  ->  <g_t, 2/(beta' w) g_t>.
// The eps = 0 rows are the quasi-classical limits; BE condensate and the
// uniform circle mixture share the same classical limit.
#pragma once

#include <cmath>
#include <vector>

#include "sbqc/common.hpp"
#include "sbqc/form_factor.hpp"
#include "sbqc/inner_products.hpp"
#include "sbqc/specfun.hpp"

namespace sbqc {

enum class ReservoirKind { CoherentDirac, CoherentCircleMixture, BECFock, Thermal };

inline const char* to_string(ReservoirKind k) {
    switch (k) {
        case ReservoirKind::CoherentDirac: return "coherent-dirac";
        case ReservoirKind::CoherentCircleMixture: return "circle-mixture";
        case ReservoirKind::BECFock: return "bec";
        case ReservoirKind::Thermal: return "thermal";
    }
    return "?";
}

struct ReservoirSpec {
    ReservoirKind kind = ReservoirKind::CoherentDirac;
    FormFactor f0{PaperRadial{0.0, 1.0}}; // reservoir wave function (non-thermal kinds)
    double beta_prime = 1.0;              // thermal only
    double epsilon = 0.0;                 // classicality, 0 = classical limit
    double lambda = 1.0;                  // coupling constant

    long long bec_n() const {
        if (epsilon <= 0.0) throw domain_error("bec_n: defined for eps > 0 only");
        if (epsilon < 1e-7)
            throw domain_error("bec_n: n = floor(1/eps) exceeds 1e7; use eps = 0 "
                               "(the classical limit) instead");
        return static_cast<long long>(std::floor(1.0 / epsilon));
    }
};

inline void validate_reservoir_spec(const ReservoirSpec& spec, const InnerProductEngine& eng,
                                    double norm_tol = 1e-6) {
    if (!(spec.epsilon >= 0.0 && spec.epsilon <= 1.0))
        throw usage_error("eps must lie in [0, 1] (got " + std::to_string(spec.epsilon) + ")");
    if (!std::isfinite(spec.lambda)) throw usage_error("lambda must be finite");
    if (spec.kind == ReservoirKind::Thermal) {
        if (!(spec.beta_prime > 0.0)) throw usage_error("beta' must be positive");
    } else if (spec.kind == ReservoirKind::BECFock) {
        double n2 = eng.norm_sq(spec.f0);
        if (std::abs(n2 - 1.0) > norm_tol)
            throw usage_error("BEC wave function f0 must be unit-normalized (||f0||^2 = " +
                              std::to_string(n2) + ")");
    }
}

// D_eps(t).  Magnitudes are assembled in log space so that large ||g_t||^2 or
// large Laguerre indices cannot overflow on the way to a representable value.
inline cplx decoherence_fn(const ReservoirSpec& spec, const FormFactor& g, double t,
                           const InnerProductEngine& eng) {
    if (!(t >= 0.0)) throw domain_error("decoherence_fn: need t >= 0");
    if (t == 0.0) return cplx(1.0); // g_0 = 0, chi(0) = 1
    const double lam = spec.lambda;
    const double eps = spec.epsilon;

    switch (spec.kind) {
        case ReservoirKind::Thermal: {
            double q = eng.thermal_quadratic_form(g, t, spec.beta_prime, eps);
            return cplx(std::exp(-0.25 * lam * lam * q));
        }
        case ReservoirKind::CoherentDirac: {
            cplx q = eng.overlap_gt(spec.f0, g, t);
            double phase = std::sqrt(2.0) * lam * q.real();
            double log_mag = eps > 0.0 ? -0.25 * eps * lam * lam * eng.gt_norm_sq(g, t) : 0.0;
            return std::exp(log_mag) * cplx(std::cos(phase), std::sin(phase));
        }
        case ReservoirKind::CoherentCircleMixture: {
            double q = std::abs(eng.overlap_gt(spec.f0, g, t));
            double j = bessel_j0(std::sqrt(2.0) * std::abs(lam) * q);
            double log_mag = eps > 0.0 ? -0.25 * eps * lam * lam * eng.gt_norm_sq(g, t) : 0.0;
            return cplx(j * std::exp(log_mag));
        }
        case ReservoirKind::BECFock: {
            double q = std::abs(eng.overlap_gt(spec.f0, g, t));
            if (eps == 0.0) // classical limit = uniform circle mixture
                return cplx(bessel_j0(std::sqrt(2.0) * std::abs(lam) * q));
            long long n = spec.bec_n();
            double u = 0.5 * eps * lam * lam * q * q;
            ScaledValue L = laguerre_scaled(n, u);
            double log_mag = -0.25 * eps * lam * lam * eng.gt_norm_sq(g, t) + L.log_abs;
            return cplx(L.sign * std::exp(log_mag));
        }
    }
    return cplx(0);
}

// D_eps(t) / D_0(t) for the thermal family, evaluated as the exponential of
// the difference of the two quadratic forms (no division, no underflow).
inline double decoherence_ratio_quantum_classical(const ReservoirSpec& spec, const FormFactor& g,
                                                  double t, const InnerProductEngine& eng) {
    if (spec.kind != ReservoirKind::Thermal)
        throw usage_error("decoherence_ratio_quantum_classical: thermal reservoir only");
    if (t == 0.0) return 1.0;
    double qe = eng.thermal_quadratic_form(g, t, spec.beta_prime, spec.epsilon);
    double q0 = eng.thermal_quadratic_form(g, t, spec.beta_prime, 0.0);
    double expo = -0.25 * spec.lambda * spec.lambda * (qe - q0);
    if (expo > 700.0)
        throw integration_error("decoherence ratio overflow: |D_0| below representable range",
                                expo, 0.0);
    return std::exp(expo);
}

struct DecoherenceTrace {
    std::vector<double> times;
    std::vector<cplx> D;
    std::vector<double> absD2;
    std::vector<double> dAbsD2dt; // empty unless requested
    bool has_derivative = false;
};

} // namespace sbqc
