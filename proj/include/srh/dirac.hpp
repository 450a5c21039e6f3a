#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "srh/dispersion.hpp"
#include "srh/spectral.hpp"

namespace srh {

// 4x4 complex matrix, row-major.
using Mat4 = std::array<cplx, 16>;

inline Mat4 mat4_zero() { Mat4 m{}; return m; }

inline Mat4 mat4_identity() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i * 4 + i] = 1.0;
    return m;
}

inline Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 c{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const cplx aik = a[i * 4 + k];
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < 4; ++j) c[i * 4 + j] += aik * b[k * 4 + j];
        }
    return c;
}

inline Mat4 mat4_add(const Mat4& a, const Mat4& b, cplx wa = 1.0, cplx wb = 1.0) {
    Mat4 c{};
    for (int i = 0; i < 16; ++i) c[i] = wa * a[i] + wb * b[i];
    return c;
}

inline double mat4_max_abs(const Mat4& a) {
    double m = 0.0;
    for (const auto& z : a) m = std::max(m, std::abs(z));
    return m;
}

// Standard (Dirac) representation: beta = diag(1,1,-1,-1),
// alpha_i = offdiag(sigma_i, sigma_i).
inline const std::array<Mat4, 3>& dirac_alpha() {
    static const std::array<Mat4, 3> alpha = [] {
        std::array<Mat4, 3> a{mat4_zero(), mat4_zero(), mat4_zero()};
        const cplx I(0.0, 1.0);
        // sigma_x
        a[0][0 * 4 + 3] = 1.0; a[0][1 * 4 + 2] = 1.0;
        a[0][2 * 4 + 1] = 1.0; a[0][3 * 4 + 0] = 1.0;
        // sigma_y
        a[1][0 * 4 + 3] = -I;  a[1][1 * 4 + 2] = I;
        a[1][2 * 4 + 1] = -I;  a[1][3 * 4 + 0] = I;
        // sigma_z
        a[2][0 * 4 + 2] = 1.0; a[2][1 * 4 + 3] = -1.0;
        a[2][2 * 4 + 0] = 1.0; a[2][3 * 4 + 1] = -1.0;
        return a;
    }();
    return alpha;
}

inline const Mat4& dirac_beta() {
    static const Mat4 beta = [] {
        Mat4 b{};
        b[0 * 4 + 0] = 1.0;
        b[1 * 4 + 1] = 1.0;
        b[2 * 4 + 2] = -1.0;
        b[3 * 4 + 3] = -1.0;
        return b;
    }();
    return beta;
}

// max deviation from the Clifford relations; checked once at startup by users
// of the Dirac machinery.
inline double dirac_algebra_residual() {
    const auto& alpha = dirac_alpha();
    const auto& beta = dirac_beta();
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Mat4 anti = mat4_add(mat4_mul(alpha[i], alpha[j]), mat4_mul(alpha[j], alpha[i]));
            Mat4 want = mat4_zero();
            if (i == j) want = mat4_add(mat4_identity(), mat4_zero(), 2.0, 0.0);
            worst = std::max(worst, mat4_max_abs(mat4_add(anti, want, 1.0, -1.0)));
        }
    for (int i = 0; i < 3; ++i) {
        Mat4 anti = mat4_add(mat4_mul(alpha[i], beta), mat4_mul(beta, alpha[i]));
        worst = std::max(worst, mat4_max_abs(anti));
    }
    worst = std::max(worst,
                     mat4_max_abs(mat4_add(mat4_mul(beta, beta), mat4_identity(), 1.0, -1.0)));
    return worst;
}

// xi.alpha + m beta
inline Mat4 dirac_hamiltonian_symbol(const std::array<double, 3>& xi, double m) {
    const auto& alpha = dirac_alpha();
    Mat4 h = mat4_add(dirac_beta(), mat4_zero(), m, 0.0);
    for (int i = 0; i < 3; ++i) h = mat4_add(h, alpha[i], 1.0, xi[i]);
    return h;
}

// <xi>_m = sqrt(m^2 + |xi|^2). Here m is the physical spinor mass; the
// matching scalar dispersion parameter (which sits in frequency^2 units) is
// m^2, so that (xi.alpha + m beta)^2 = <xi>_m^2 I closes the algebra.
inline double dirac_bracket(const std::array<double, 3>& xi, double m) {
    return std::sqrt(m * m + xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
}

// Pi_pm(xi) = 1/2 [ I +- (xi.alpha + m beta)/<xi>_m ]
inline Mat4 dirac_projector(const std::array<double, 3>& xi, double m, int sign) {
    if (sign != +1 && sign != -1)
        throw std::invalid_argument("dirac_projector: sign must be +1 or -1");
    const double w = dirac_bracket(xi, m);
    return mat4_add(mat4_identity(), dirac_hamiltonian_symbol(xi, m), 0.5, 0.5 * sign / w);
}

// Four-component spinor field with mass.
struct DiracData {
    std::array<Field, 4> comp;
    double m = 1.0;

    const Grid3D& grid() const { return comp[0].grid; }

    static DiracData zeros(const Grid3D& g, double m) {
        DiracData d;
        d.m = m;
        for (auto& c : d.comp) c = Field::zeros(g, Rep::physical);
        return d;
    }

    double l2_sq() const {
        double s = 0.0;
        for (const auto& c : comp) { const double n = l2_norm(c); s += n * n; }
        return s;
    }
};

// psi_pm = Pi_pm(D) psi, applied mode by mode in spectral space.
inline std::pair<DiracData, DiracData> dirac_split(const DiracData& psi) {
    const Grid3D& g = psi.grid();
    std::array<Field, 4> spec;
    const bool physical = (psi.comp[0].rep == Rep::physical);
    for (int c = 0; c < 4; ++c) spec[c] = to_spectral(psi.comp[c]);

    DiracData plus = DiracData::zeros(g, psi.m), minus = DiracData::zeros(g, psi.m);
    for (int c = 0; c < 4; ++c) {
        plus.comp[c] = Field(g, Rep::spectral);
        minus.comp[c] = Field(g, Rep::spectral);
    }

    std::size_t p = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c, ++p) {
                const std::array<double, 3> xi{g.freq[a], g.freq[b], g.freq[c]};
                const Mat4 pp = dirac_projector(xi, psi.m, +1);
                std::array<cplx, 4> in;
                for (int r = 0; r < 4; ++r) in[r] = spec[r].v[p];
                for (int r = 0; r < 4; ++r) {
                    cplx acc(0.0, 0.0);
                    for (int s = 0; s < 4; ++s) acc += pp[r * 4 + s] * in[s];
                    plus.comp[r].v[p] = acc;
                    minus.comp[r].v[p] = in[r] - acc;  // Pi_+ + Pi_- = I
                }
            }

    if (physical)
        for (int c = 0; c < 4; ++c) {
            plus.comp[c] = to_physical(plus.comp[c]);
            minus.comp[c] = to_physical(minus.comp[c]);
        }
    return {plus, minus};
}

}  // namespace srh
