#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srh/littlewood_paley.hpp"
#include "srh/spectral.hpp"
#include "srh/util.hpp"

namespace srh {

// Radial interaction potential described through its Fourier symbol. The
// (gamma1, gamma2) pair declares the low/high frequency decay orders of the
// symbol; growth_check verifies the declaration numerically.
struct PotentialSpec {
    enum class Kind { yukawa, coulomb, custom };

    Kind kind = Kind::yukawa;
    double mu0 = 1.0;                          // Yukawa screening mass
    double gamma1 = 0.0;
    double gamma2 = 2.0;
    std::function<double(double)> custom;      // radial symbol |xi| -> V^(|xi|)

    static PotentialSpec yukawa(double mu0) {
        if (!(mu0 > 0.0)) throw std::invalid_argument("yukawa: mu0 must be positive");
        PotentialSpec s;
        s.kind = Kind::yukawa;
        s.mu0 = mu0;
        s.gamma1 = 0.0;
        s.gamma2 = 2.0;
        return s;
    }

    static PotentialSpec coulomb() {
        PotentialSpec s;
        s.kind = Kind::coulomb;
        s.gamma1 = 2.0;
        s.gamma2 = 2.0;
        return s;
    }

    static PotentialSpec custom_symbol(std::function<double(double)> f, double g1, double g2) {
        PotentialSpec s;
        s.kind = Kind::custom;
        s.custom = std::move(f);
        s.gamma1 = g1;
        s.gamma2 = g2;
        return s;
    }

    void validate() const {
        if (!(gamma1 >= 0.0 && gamma1 < 3.0 && gamma2 >= 0.0 && gamma2 < 3.0))
            throw std::invalid_argument("potential: require 0 <= gamma1,gamma2 < 3");
        if (kind == Kind::custom && !custom)
            throw std::invalid_argument("potential: custom symbol rule missing");
    }

    // stricter range needed by the small-data scattering setup
    bool theorem_mode_ok() const { return gamma1 < 1.0 && gamma2 > 1.5 && gamma2 < 3.0; }

    std::string name() const {
        switch (kind) {
            case Kind::yukawa: return "yukawa";
            case Kind::coulomb: return "coulomb";
            case Kind::custom: return "custom";
        }
        return "?";
    }
};

// Closed-form symbols: Yukawa 4 pi / (mu0^2 + |xi|^2), Coulomb 4 pi / |xi|^2
// with the zero mode set to 0 (a constant background shift, global phase only).
inline double potential_symbol(const PotentialSpec& spec, double xi_norm) {
    switch (spec.kind) {
        case PotentialSpec::Kind::yukawa:
            return 4.0 * M_PI / (spec.mu0 * spec.mu0 + xi_norm * xi_norm);
        case PotentialSpec::Kind::coulomb:
            return xi_norm == 0.0 ? 0.0 : 4.0 * M_PI / (xi_norm * xi_norm);
        case PotentialSpec::Kind::custom: {
            const double v = spec.custom(xi_norm);
            if (xi_norm > 0.0 && !std::isfinite(v))
                throw std::domain_error("potential symbol non-finite at |xi| = " +
                                        std::to_string(xi_norm));
            return std::isfinite(v) ? v : 0.0;
        }
    }
    return 0.0;
}

inline MultiplierSpec potential_multiplier(const PotentialSpec& spec) {
    return MultiplierSpec::radial_of(
        [spec](double r) { return cplx(potential_symbol(spec, r), 0.0); });
}

// --- growth verification -----------------------------------------------------------

struct GrowthReport {
    int k = 0;
    double slope_low = 0.0;       // fitted d log|d^k V^| / d log|xi|, |xi| small
    double slope_high = 0.0;      // same, |xi| large
    double max_ratio_low = 0.0;   // sup |d^k V^| * |xi|^(gamma1+k) over [1/64, 1]
    double max_ratio_high = 0.0;  // sup |d^k V^| * |xi|^(gamma2+k) over (1, 64]
    bool finite = false;
};

namespace detail {

// k-th derivative of the radial symbol by central differences on a local
// uniform stencil with relative step.
inline double radial_derivative(const PotentialSpec& spec, double t, int k) {
    if (k == 0) return potential_symbol(spec, t);
    const double h = 0.02 * t;
    auto g = [&](int j) { return potential_symbol(spec, t + j * h); };
    switch (k) {
        case 1: return (g(1) - g(-1)) / (2 * h);
        case 2: return (g(1) - 2 * g(0) + g(-1)) / (h * h);
        case 3: return (g(2) - 2 * g(1) + 2 * g(-1) - g(-2)) / (2 * h * h * h);
        case 4: return (g(2) - 4 * g(1) + 6 * g(0) - 4 * g(-1) + g(-2)) / (h * h * h * h);
        default: throw std::invalid_argument("radial_derivative: k must be in 0..4");
    }
}

}  // namespace detail

// Checks |d^k V^(xi)| <~ |xi|^(-gamma-k) in both regimes. Gradients are
// sampled log-uniformly over [1/64, 1] and (1, 64]; the slope fit uses the
// outer half of each regime where the declared power law is clean, while the
// sup ratios cover the full ranges.
inline GrowthReport growth_check(const PotentialSpec& spec, int k, int samples_per_regime = 49) {
    if (k < 0 || k > 4) throw std::invalid_argument("growth_check: k must be in 0..4");
    spec.validate();

    auto sample = [&](double lo, double hi, std::vector<double>& ts) {
        for (int i = 0; i < samples_per_regime; ++i) {
            const double u = static_cast<double>(i) / (samples_per_regime - 1);
            ts.push_back(lo * std::pow(hi / lo, u));
        }
    };
    std::vector<double> tlow, thigh;
    sample(1.0 / 64.0, 1.0, tlow);
    sample(1.0, 64.0, thigh);

    GrowthReport rep;
    rep.k = k;
    rep.finite = true;

    auto scan = [&](const std::vector<double>& ts, double gamma, double fit_lo, double fit_hi,
                    double& slope_out, double& ratio_out) {
        std::vector<double> lx, ly;
        double ratio = 0.0;
        for (double t : ts) {
            const double d = std::abs(detail::radial_derivative(spec, t, k));
            if (!std::isfinite(d)) { rep.finite = false; continue; }
            ratio = std::max(ratio, d * std::pow(t, gamma + k));
            if (d > 0.0 && t >= fit_lo && t <= fit_hi) {
                lx.push_back(std::log(t));
                ly.push_back(std::log(d));
            }
        }
        if (lx.size() < 4) throw std::invalid_argument("growth_check: insufficient lattice range");
        slope_out = fit_line(lx, ly).slope;
        ratio_out = ratio;
    };

    scan(tlow, spec.gamma1, 1.0 / 64.0, 1.0 / 8.0, rep.slope_low, rep.max_ratio_low);
    scan(thigh, spec.gamma2, 8.0, 64.0, rep.slope_high, rep.max_ratio_high);
    return rep;
}

// --- dyadic pieces and their L^p scaling --------------------------------------------

// V_M = Finv(chi_M . V^), returned in physical representation.
inline Field dyadic_piece(const PotentialSpec& spec, double M, const Grid3D& g) {
    require_dyadic(M, "dyadic_piece");
    const DyadicBand band = DyadicBand::dot(M);
    if (band.support_lo() > g.xi_max_radial())
        throw std::invalid_argument("dyadic_piece: band above the resolved lattice");
    Field piece(g, Rep::spectral);
    std::size_t p = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c, ++p) {
                const double xa = g.freq[a], xb = g.freq[b], xc = g.freq[c];
                const double r = std::sqrt(xa * xa + xb * xb + xc * xc);
                piece.v[p] = cplx(band.symbol(r) * potential_symbol(spec, r), 0.0);
            }
    return to_physical(piece);
}

// Plain band kernel Finv(chi_M) (the potential-free companion object).
inline Field band_kernel(double M, const Grid3D& g) {
    require_dyadic(M, "band_kernel");
    Field piece(g, Rep::spectral);
    const DyadicBand band = DyadicBand::dot(M);
    std::size_t p = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c, ++p) {
                const double xa = g.freq[a], xb = g.freq[b], xc = g.freq[c];
                const double r = std::sqrt(xa * xa + xb * xb + xc * xc);
                piece.v[p] = cplx(band.symbol(r), 0.0);
            }
    return to_physical(piece);
}

struct ScalingFit {
    std::vector<double> bands;
    std::vector<double> norms;
    LineFit fit;
    int n = 0;
    double box_scale = 0.0;
};

// Least-squares slope of log ||V_M||_Lp (or log ||Finv chi_M||_Lp when
// kernel_only) against log M over the given dyadic bands.
//
// Each band is evaluated on its own grid with L = box_scale / M, which keeps
// the band at a fixed fraction of Nyquist (no aliasing pollution at high M)
// and the kernel at a fixed fraction of the box (no wrap-around at low M).
// The kernel-only norms are then exactly self-similar across M, so the only
// M-dependence left in a potential fit is the symbol's own scaling.
inline ScalingFit piece_scaling_fit(const PotentialSpec& spec, double p,
                                    const std::vector<double>& Ms, int n = 96,
                                    double box_scale = 32.0, bool kernel_only = false) {
    if (!(p > 1.0) || std::isinf(p))
        throw std::invalid_argument("piece_scaling_fit: require 1 < p < inf");
    if (Ms.size() < 4)
        throw std::invalid_argument("piece_scaling_fit: need at least 4 dyadic bands");
    if (2.0 * box_scale >= M_PI * n / 4.0)
        throw std::invalid_argument(
            "piece_scaling_fit: box_scale too large for n, bands would touch Nyquist/4");
    ScalingFit out;
    out.n = n;
    out.box_scale = box_scale;
    std::vector<double> lx, ly;
    for (double M : Ms) {
        require_dyadic(M, "piece_scaling_fit");
        const Grid3D g = Grid3D::make(n, box_scale / M);
        const Field piece = kernel_only ? band_kernel(M, g) : dyadic_piece(spec, M, g);
        const double nrm = lp_norm(piece, p);
        out.bands.push_back(M);
        out.norms.push_back(nrm);
        lx.push_back(std::log(M));
        ly.push_back(std::log(nrm));
    }
    out.fit = fit_line(lx, ly);
    return out;
}

}  // namespace srh
