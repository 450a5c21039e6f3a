#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "srh/spectral.hpp"

namespace srh {

// omega(xi) = sqrt(m + |xi|^2), the half-Klein-Gordon dispersion relation.
struct DispersionRelation {
    double m = 1.0;

    explicit DispersionRelation(double mass) : m(mass) {
        if (!(m > 0.0)) throw std::invalid_argument("DispersionRelation: mass must be positive");
    }

    double omega(double xi_norm) const { return std::sqrt(m + xi_norm * xi_norm); }

    double omega_max(const Grid3D& g) const { return omega(g.xi_max_radial()); }

    // group speed |xi| / omega(xi), always < 1
    double group_speed(double xi_norm) const { return xi_norm / omega(xi_norm); }
};

// Precomputed omega table on a grid, for hot loops.
struct OmegaTable {
    std::vector<double> w;

    OmegaTable(const Grid3D& g, double m) {
        w.resize(g.size());
        const DispersionRelation disp(m);
        std::size_t p = 0;
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                for (int c = 0; c < g.n; ++c, ++p) {
                    const double xa = g.freq[a], xb = g.freq[b], xc = g.freq[c];
                    w[p] = disp.omega(std::sqrt(xa * xa + xb * xb + xc * xc));
                }
    }

    // multiply a spectral array by e^{-i t omega}
    void phase_into(std::vector<cplx>& spec, double t) const {
        for (std::size_t p = 0; p < spec.size(); ++p) {
            const double ph = -t * w[p];
            spec[p] *= cplx(std::cos(ph), std::sin(ph));
        }
    }
};

// u(t) = e^{-i t Lambda_m} phi, evaluated spectrally; preserves the input
// representation.
inline Field free_evolve(const Field& phi, double t, double m) {
    Field fs = to_spectral(phi);
    const OmegaTable tab(phi.grid, m);
    tab.phase_into(fs.v, t);
    return phi.rep == Rep::physical ? to_physical(fs) : fs;
}

}  // namespace srh
