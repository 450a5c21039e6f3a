#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace srh {

// Periodic box [-L/2, L/2)^3 sampled on n points per axis.
//
// Physical storage is in natural order: axis index i <-> x_i = (i - n/2)*dx.
// Spectral storage is in FFT order:     axis index a <-> k(a) = a for a < n/2,
// a - n otherwise, with frequency xi = (2*pi/L)*k.
struct Grid3D {
    int n = 0;
    double L = 0.0;
    double dx = 0.0;
    double dxi = 0.0;                // frequency lattice spacing 2*pi/L

    std::vector<double> coord;       // centered coordinates, natural order
    std::vector<int> kindex;         // signed integer frequency per spectral index
    std::vector<double> freq;        // xi values per spectral index

    static Grid3D make(int n, double L) {
        if (n < 8 || n % 2 != 0)
            throw std::invalid_argument("Grid3D: n must be even and >= 8, got " + std::to_string(n));
        if (!(L > 0.0))
            throw std::invalid_argument("Grid3D: box length L must be positive");
        Grid3D g;
        g.n = n;
        g.L = L;
        g.dx = L / n;
        g.dxi = 2.0 * M_PI / L;
        g.coord.resize(n);
        g.kindex.resize(n);
        g.freq.resize(n);
        for (int i = 0; i < n; ++i) g.coord[i] = (i - n / 2) * g.dx;
        for (int a = 0; a < n; ++a) {
            int k = (a < n / 2) ? a : a - n;
            g.kindex[a] = k;
            g.freq[a] = g.dxi * k;
        }
        return g;
    }

    std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }

    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n + j) * n + k;
    }

    // largest multiplier argument on one axis (attained at k = -n/2)
    double xi_nyquist() const { return M_PI * n / L; }
    // largest |xi| over the whole lattice (box corner)
    double xi_max_radial() const { return xi_nyquist() * std::sqrt(3.0); }

    bool operator==(const Grid3D& o) const { return n == o.n && L == o.L; }
    bool operator!=(const Grid3D& o) const { return !(*this == o); }
};

}  // namespace srh
