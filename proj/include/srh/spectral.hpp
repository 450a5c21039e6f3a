#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "srh/fft.hpp"
#include "srh/field.hpp"
#include "srh/grid.hpp"

namespace srh {

// Fourier multiplier m(xi); `radial` declares that the rule only depends on
// |xi|, which some callers exploit for commutation identities.
struct MultiplierSpec {
    std::function<cplx(const std::array<double, 3>&)> rule;
    bool radial = false;

    static MultiplierSpec radial_of(std::function<cplx(double)> f) {
        MultiplierSpec m;
        m.rule = [f = std::move(f)](const std::array<double, 3>& xi) {
            return f(std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]));
        };
        m.radial = true;
        return m;
    }
};

// result^(xi) = m(xi) * f^(xi); representation of the input is preserved.
inline Field apply_multiplier(const Field& f, const MultiplierSpec& m) {
    const Grid3D& g = f.grid;
    Field fs = to_spectral(f);
    std::size_t p = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c, ++p) {
                const std::array<double, 3> xi{g.freq[a], g.freq[b], g.freq[c]};
                const cplx mv = m.rule(xi);
                if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag())) {
                    std::ostringstream os;
                    os << "apply_multiplier: symbol non-finite at xi = (" << xi[0] << ", "
                       << xi[1] << ", " << xi[2] << ")";
                    throw std::domain_error(os.str());
                }
                fs.v[p] *= mv;
            }
    return f.rep == Rep::physical ? to_physical(fs) : fs;
}

// Two-thirds rule: zero every mode with any |k_i| > n/3.
inline Field dealias(const Field& f) {
    const Grid3D& g = f.grid;
    const bool was_physical = (f.rep == Rep::physical);
    Field fs = to_spectral(f);
    const int kc = g.n / 3;
    std::size_t p = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c, ++p) {
                if (std::abs(g.kindex[a]) > kc || std::abs(g.kindex[b]) > kc ||
                    std::abs(g.kindex[c]) > kc)
                    fs.v[p] = cplx(0.0, 0.0);
            }
    return was_physical ? to_physical(fs) : fs;
}

// (f*g)^ = f^ . g^ under the dx^3-weighted transform, so the physical result
// approximates the continuum convolution integral.
inline Field convolve(const Field& f, const Field& g) {
    require_same_grid(f, g, "convolve");
    Field fs = to_spectral(f);
    Field gs = to_spectral(g);
    for (std::size_t p = 0; p < fs.size(); ++p) fs.v[p] *= gs.v[p];
    return to_physical(fs);
}

// --- norms and inner products ---------------------------------------------------
// All physical-space integrals carry the dx^3 measure weight; spectral sums
// carry L^-3, so Parseval holds exactly between the two.

inline double l2_norm(const Field& f) {
    double s = 0.0;
    for (const auto& z : f.v) s += std::norm(z);
    const Grid3D& g = f.grid;
    const double w = (f.rep == Rep::physical) ? g.dx * g.dx * g.dx : 1.0 / (g.L * g.L * g.L);
    return std::sqrt(s * w);
}

inline double lp_norm(const Field& f, double p) {
    const Field fp = to_physical(f);
    const Grid3D& g = f.grid;
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& z : fp.v) m = std::max(m, std::abs(z));
        return m;
    }
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    double s = 0.0;
    for (const auto& z : fp.v) s += std::pow(std::abs(z), p);
    return std::pow(s * g.dx * g.dx * g.dx, 1.0 / p);
}

inline cplx inner(const Field& f, const Field& g) {
    require_same_grid(f, g, "inner");
    if (f.rep != g.rep)
        throw std::invalid_argument("inner: representation mismatch");
    cplx s(0.0, 0.0);
    for (std::size_t p = 0; p < f.size(); ++p) s += std::conj(f.v[p]) * g.v[p];
    const Grid3D& gr = f.grid;
    const double w =
        (f.rep == Rep::physical) ? gr.dx * gr.dx * gr.dx : 1.0 / (gr.L * gr.L * gr.L);
    return s * w;
}

inline double max_abs(const Field& f) {
    double m = 0.0;
    for (const auto& z : f.v) m = std::max(m, std::abs(z));
    return m;
}

inline Field scaled(const Field& f, cplx c) {
    Field r = f;
    for (auto& z : r.v) z *= c;
    return r;
}

inline Field added(const Field& f, const Field& g, double wf = 1.0, double wg = 1.0) {
    require_same_grid(f, g, "added");
    if (f.rep != g.rep) throw std::invalid_argument("added: representation mismatch");
    Field r = f;
    for (std::size_t p = 0; p < r.size(); ++p) r.v[p] = wf * f.v[p] + wg * g.v[p];
    return r;
}

// max |f| over the outermost coordinate layer in any axis, relative to max |f|.
inline double boundary_shell_fraction(const Field& fphys) {
    const Field& f = fphys;
    if (f.rep != Rep::physical)
        throw std::invalid_argument("boundary_shell_fraction: physical field expected");
    const int n = f.grid.n;
    double edge = 0.0, all = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const double a = std::abs(f.at(i, j, k));
                all = std::max(all, a);
                if (i == 0 || j == 0 || k == 0 || i == n - 1 || j == n - 1 || k == n - 1)
                    edge = std::max(edge, a);
            }
    return all > 0.0 ? edge / all : 0.0;
}

}  // namespace srh
