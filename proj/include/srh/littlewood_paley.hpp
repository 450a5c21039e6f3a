#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "srh/spectral.hpp"
#include "srh/util.hpp"

namespace srh {

// --- smooth radial bump ---------------------------------------------------------
// rho is even, C^4, 1 on [-1,1], 0 outside (-2,2), monotone between. The
// transition is the 9th-order polynomial smoothstep (first four derivatives
// vanish at both ends), whose band kernels decay like |x|^-6; exp(-1/t)
// transitions were tried first and left several percent of a band kernel's
// L^1 mass beyond |x| = 16/M.

inline double cutoff_rho(double s) {
    const double t = std::abs(s);
    if (t <= 1.0) return 1.0;
    if (t >= 2.0) return 0.0;
    const double u = t - 1.0;
    const double u5 = u * u * u * u * u;
    const double step = u5 * (126.0 + u * (-420.0 + u * (540.0 + u * (-315.0 + u * 70.0))));
    return 1.0 - step;
}

inline bool is_dyadic(double m) {
    if (!(m > 0.0) || !std::isfinite(m)) return false;
    const double l = std::log2(m);
    return std::abs(l - std::round(l)) < 1e-9;
}

inline void require_dyadic(double m, const char* what) {
    if (!is_dyadic(m))
        throw std::invalid_argument(std::string(what) + ": scale " + std::to_string(m) +
                                    " is not dyadic");
}

// chi_M(s) = rho(s/M) - rho(2s/M); support {M/2 < |s| < 2M}.
inline double cutoff_chi(double M, double s) {
    require_dyadic(M, "cutoff_chi");
    return cutoff_rho(s / M) - cutoff_rho(2.0 * s / M);
}

// beta_{N0}(s) = sum_{M <= N0} chi_M(s) telescoped to rho(s/N0) (the removable
// gap at s = 0 is filled); beta_N = chi_N for N > N0.
inline double cutoff_beta(double N, double N0, double s) {
    require_dyadic(N, "cutoff_beta");
    require_dyadic(N0, "cutoff_beta");
    if (N < N0)
        throw std::invalid_argument("cutoff_beta: N = " + std::to_string(N) +
                                    " below the low-frequency lump N0 = " + std::to_string(N0));
    if (N == N0) return cutoff_rho(s / N0);
    return cutoff_chi(N, s);
}

// widened variants: chi~_M(s) = chi_M(s/2) + chi_M(s) + chi_M(2s) == 1 on
// supp chi_M; the widened lump is rho(s/(2 N0)).
inline double cutoff_chi_wide(double M, double s) {
    return cutoff_chi(M, s / 2.0) + cutoff_chi(M, s) + cutoff_chi(M, 2.0 * s);
}

inline double cutoff_beta_wide(double N, double N0, double s) {
    if (N == N0) return cutoff_rho(s / (2.0 * N0));
    return cutoff_chi_wide(N, s);
}

// --- dyadic bands -----------------------------------------------------------------

enum class BandKind { homogeneous, inhomogeneous, low_lump };

struct DyadicBand {
    BandKind kind = BandKind::homogeneous;
    double scale = 1.0;   // M for homogeneous, N for inhomogeneous, N0 for the lump
    double n0 = 8.0;      // only meaningful for inhomogeneous/low_lump
    bool widened = false;

    // homogeneous piece  (symbol chi_M)
    static DyadicBand dot(double M) {
        require_dyadic(M, "DyadicBand::dot");
        return DyadicBand{BandKind::homogeneous, M, 0.0, false};
    }

    // inhomogeneous piece (symbol beta_N; collapses to the lump when N == N0)
    static DyadicBand at(double N, double N0) {
        require_dyadic(N, "DyadicBand::at");
        require_dyadic(N0, "DyadicBand::at");
        if (N < N0)
            throw std::invalid_argument("DyadicBand::at: N below N0");
        if (N == N0) return DyadicBand{BandKind::low_lump, N0, N0, false};
        return DyadicBand{BandKind::inhomogeneous, N, N0, false};
    }

    DyadicBand wide() const {
        DyadicBand b = *this;
        b.widened = true;
        return b;
    }

    double symbol(double s) const {
        switch (kind) {
            case BandKind::homogeneous:
                return widened ? cutoff_chi_wide(scale, s) : cutoff_chi(scale, s);
            case BandKind::inhomogeneous:
                return widened ? cutoff_chi_wide(scale, s) : cutoff_chi(scale, s);
            case BandKind::low_lump:
                return widened ? cutoff_rho(s / (2.0 * scale)) : cutoff_rho(s / scale);
        }
        return 0.0;
    }

    // closed support interval in |s|
    double support_lo() const {
        if (kind == BandKind::low_lump) return 0.0;
        return scale / (widened ? 4.0 : 2.0);
    }
    double support_hi() const {
        if (kind == BandKind::low_lump) return (widened ? 4.0 : 2.0) * scale;
        return (widened ? 4.0 : 2.0) * scale;
    }

    std::string label() const {
        switch (kind) {
            case BandKind::homogeneous: return (widened ? "dotP~" : "dotP") + std::to_string(scale);
            case BandKind::inhomogeneous: return (widened ? "P~" : "P") + std::to_string(scale);
            case BandKind::low_lump: return (widened ? "P~lump" : "Plump") + std::to_string(scale);
        }
        return "?";
    }
};

// F(P f) = symbol(|xi|) F(f). A band whose support misses every lattice
// radius warns and returns the zero field.
inline Field project(const Field& f, const DyadicBand& band) {
    const Grid3D& g = f.grid;
    if (band.support_lo() > g.xi_max_radial()) {
        warn("project: band " + band.label() + " lies entirely above the lattice (|xi|max = " +
             std::to_string(g.xi_max_radial()) + "); returning zero field");
        return Field::zeros(g, f.rep);
    }
    Field fs = to_spectral(f);
    std::size_t p = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c, ++p) {
                const double xa = g.freq[a], xb = g.freq[b], xc = g.freq[c];
                const double r = std::sqrt(xa * xa + xb * xb + xc * xc);
                fs.v[p] *= band.symbol(r);
            }
    return f.rep == Rep::physical ? to_physical(fs) : fs;
}

// inhomogeneous bands N0, 2 N0, ..., up to scale_max
inline std::vector<DyadicBand> inhomogeneous_bands(double N0, double scale_max) {
    std::vector<DyadicBand> out;
    for (double N = N0; N <= scale_max; N *= 2.0) out.push_back(DyadicBand::at(N, N0));
    return out;
}

// max_{lattice, |xi| <= xi_cap} | sum_N beta_N(|xi|) - 1 |
inline double lp_partition_residual(const Grid3D& g, double N0, double xi_cap) {
    const auto bands = inhomogeneous_bands(N0, 4.0 * g.xi_max_radial());
    double worst = 0.0;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c) {
                const double xa = g.freq[a], xb = g.freq[b], xc = g.freq[c];
                const double r = std::sqrt(xa * xa + xb * xb + xc * xc);
                if (r > xi_cap) continue;
                double s = 0.0;
                for (const auto& band : bands) s += band.symbol(r);
                worst = std::max(worst, std::abs(s - 1.0));
            }
    return worst;
}

}  // namespace srh
