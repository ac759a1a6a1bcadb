// mat2.hpp — dense 2x2 complex matrices and the small amount of linear
// algebra the spin dynamics needs (adjoints, norms, Hermitian functions,
// polar re-unitarization).
#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "sbqc/common.hpp"

namespace sbqc {

struct Mat2 {
    // row-major: a[0]=m11, a[1]=m12, a[2]=m21, a[3]=m22
    std::array<cplx, 4> a{};

    static Mat2 zero() { return {}; }
    static Mat2 identity() { return {{cplx(1), cplx(0), cplx(0), cplx(1)}}; }
    static Mat2 diag(cplx d1, cplx d2) { return {{d1, cplx(0), cplx(0), d2}}; }

    cplx& operator()(int r, int c) { return a[2 * r + c]; }
    const cplx& operator()(int r, int c) const { return a[2 * r + c]; }

    Mat2 operator+(const Mat2& o) const {
        return {{a[0] + o.a[0], a[1] + o.a[1], a[2] + o.a[2], a[3] + o.a[3]}};
    }
    Mat2 operator-(const Mat2& o) const {
        return {{a[0] - o.a[0], a[1] - o.a[1], a[2] - o.a[2], a[3] - o.a[3]}};
    }
    Mat2 operator*(const Mat2& o) const {
        return {{a[0] * o.a[0] + a[1] * o.a[2], a[0] * o.a[1] + a[1] * o.a[3],
                 a[2] * o.a[0] + a[3] * o.a[2], a[2] * o.a[1] + a[3] * o.a[3]}};
    }
    Mat2 operator*(cplx s) const { return {{a[0] * s, a[1] * s, a[2] * s, a[3] * s}}; }
    Mat2 operator*(double s) const { return *this * cplx(s); }
    Mat2& operator+=(const Mat2& o) {
        for (int i = 0; i < 4; ++i) a[i] += o.a[i];
        return *this;
    }

    Mat2 adjoint() const {
        return {{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}};
    }
    cplx trace() const { return a[0] + a[3]; }
    cplx det() const { return a[0] * a[3] - a[1] * a[2]; }

    double fro_norm() const {
        double s = 0;
        for (const auto& z : a) s += std::norm(z);
        return std::sqrt(s);
    }
    double max_abs() const {
        double m = 0;
        for (const auto& z : a) m = std::max(m, std::abs(z));
        return m;
    }
};

inline Mat2 operator*(cplx s, const Mat2& m) { return m * s; }
inline Mat2 operator*(double s, const Mat2& m) { return m * cplx(s); }

inline Mat2 pauli_x() { return {{cplx(0), cplx(1), cplx(1), cplx(0)}}; }
inline Mat2 pauli_y() { return {{cplx(0), cplx(0, -1), cplx(0, 1), cplx(0)}}; }
inline Mat2 pauli_z() { return {{cplx(1), cplx(0), cplx(0), cplx(-1)}}; }

inline Mat2 hermitian_part(const Mat2& m) { return (m + m.adjoint()) * 0.5; }

// Eigenvalues of a Hermitian 2x2 matrix, ascending.
inline std::array<double, 2> hermitian_eigenvalues(const Mat2& h) {
    double tr = h.trace().real();
    double c0 = 0.5 * tr;
    double vx = h(0, 1).real();
    double vy = -h(0, 1).imag();
    double vz = 0.5 * (h(0, 0).real() - h(1, 1).real());
    double r = std::sqrt(vx * vx + vy * vy + vz * vz);
    return {c0 - r, c0 + r};
}

// Singular values, ascending.
inline std::array<double, 2> singular_values(const Mat2& m) {
    Mat2 mm = m.adjoint() * m;
    auto ev = hermitian_eigenvalues(mm);
    return {std::sqrt(std::max(0.0, ev[0])), std::sqrt(std::max(0.0, ev[1]))};
}

inline double op_norm(const Mat2& m) { return singular_values(m)[1]; }
inline double trace_norm(const Mat2& m) {
    auto s = singular_values(m);
    return s[0] + s[1];
}

// exp(-i t H) for Hermitian H, via H = c0*I + v.sigma.
inline Mat2 expi_hermitian(const Mat2& h, double t) {
    double c0 = 0.5 * h.trace().real();
    cplx hx = h(0, 1); // = vx - i vy
    double vz = 0.5 * (h(0, 0).real() - h(1, 1).real());
    double r = std::sqrt(std::norm(hx) + vz * vz);
    cplx phase = std::exp(cplx(0, -t * c0));
    if (r == 0.0) return Mat2::identity() * phase;
    double c = std::cos(r * t), s = std::sin(r * t);
    cplx f = cplx(0, -s / r);
    // exp(-it(v.sigma)) = cos(rt) I - i sin(rt) (v.sigma)/r
    Mat2 out{{c + f * vz, f * hx, f * std::conj(hx), c - f * vz}};
    return out * phase;
}

// Nearest unitary (polar factor) of a nonsingular matrix: U = M (M*M)^{-1/2}.
inline Mat2 polar_unitary(const Mat2& m) {
    Mat2 p = m.adjoint() * m; // Hermitian positive definite for nonsingular m
    double c0 = 0.5 * p.trace().real();
    cplx px = p(0, 1);
    double vz = 0.5 * (p(0, 0).real() - p(1, 1).real());
    double r = std::sqrt(std::norm(px) + vz * vz);
    double mu1 = c0 + r, mu2 = c0 - r;
    double f1 = 1.0 / std::sqrt(mu1);
    double f2 = mu2 > 0 ? 1.0 / std::sqrt(mu2) : f1;
    // f(P) = avg*I + diff*(P - c0 I)/r
    double avg = 0.5 * (f1 + f2);
    double dif = r > 1e-300 ? 0.5 * (f1 - f2) / r : 0.0;
    Mat2 inv_sqrt{{avg + dif * vz, dif * px, dif * std::conj(px), avg - dif * vz}};
    return m * inv_sqrt;
}

} // namespace sbqc
