#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "srh/field.hpp"
#include "srh/grid.hpp"

namespace srh {

// Radial binning of the lattice ball |x| < L/2 into shells of width dx.
// Shell j holds the points with j*dx <= |x| < (j+1)*dx and carries the
// quadrature weight 4 pi rho_j^2 drho, rho_j = (j+1/2) dx, so that summing
// shell averages against the weights reproduces ball integrals.
struct ShellDecomposition {
    double drho = 0.0;
    std::vector<double> radius;                    // rho_j
    std::vector<double> weight;                    // 4 pi rho_j^2 drho
    std::vector<std::vector<std::size_t>> members; // lattice indices per shell

    std::size_t shells() const { return radius.size(); }

    double covered_points() const {
        std::size_t c = 0;
        for (const auto& m : members) c += m.size();
        return static_cast<double>(c);
    }

    static ShellDecomposition build(const Grid3D& g) {
        ShellDecomposition sd;
        sd.drho = g.dx;
        const int J = g.n / 2;
        sd.radius.resize(J);
        sd.weight.resize(J);
        sd.members.resize(J);
        for (int j = 0; j < J; ++j) {
            sd.radius[j] = (j + 0.5) * sd.drho;
            sd.weight[j] = 4.0 * M_PI * sd.radius[j] * sd.radius[j] * sd.drho;
        }
        const double half = g.L / 2.0;
        std::size_t p = 0;
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                for (int k = 0; k < g.n; ++k, ++p) {
                    const double x = g.coord[i], y = g.coord[j], z = g.coord[k];
                    const double r = std::sqrt(x * x + y * y + z * z);
                    if (r >= half) continue;
                    const int bin = static_cast<int>(r / sd.drho);
                    if (bin < J) sd.members[bin].push_back(p);
                }
        return sd;
    }
};

// Exact-radius equivalence classes: points grouped by the integer squared
// index radius. Used for radial-symmetry checks, which need true orbits
// rather than width-dx shells. Physical arrays are centered at index n/2,
// spectral arrays at index 0 (FFT order); both index maps produce the same
// integer classes.
struct OrbitDecomposition {
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<double> radius;

    static OrbitDecomposition build_with(const Grid3D& g, bool spectral) {
        OrbitDecomposition od;
        std::unordered_map<std::int64_t, std::size_t> slot;
        const double unit = spectral ? g.dxi : g.dx;
        std::size_t p = 0;
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                for (int k = 0; k < g.n; ++k, ++p) {
                    const std::int64_t a = spectral ? g.kindex[i] : i - g.n / 2;
                    const std::int64_t b = spectral ? g.kindex[j] : j - g.n / 2;
                    const std::int64_t c = spectral ? g.kindex[k] : k - g.n / 2;
                    const std::int64_t r2 = a * a + b * b + c * c;
                    auto it = slot.find(r2);
                    if (it == slot.end()) {
                        it = slot.emplace(r2, od.orbits.size()).first;
                        od.orbits.emplace_back();
                        od.radius.push_back(std::sqrt(static_cast<double>(r2)) * unit);
                    }
                    od.orbits[it->second].push_back(p);
                }
        return od;
    }
};

struct PhysicalOrbits : OrbitDecomposition {
    static PhysicalOrbits build(const Grid3D& g) {
        return PhysicalOrbits{OrbitDecomposition::build_with(g, false)};
    }
};

struct SpectralOrbits : OrbitDecomposition {
    static SpectralOrbits build(const Grid3D& g) {
        return SpectralOrbits{OrbitDecomposition::build_with(g, true)};
    }
};

namespace detail {

template <typename T>
const T& cached_per_grid(const Grid3D& g) {
    static std::mutex mu;
    static std::map<std::pair<int, double>, std::unique_ptr<T>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(g.n, g.L);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<T>(T::build(g))).first;
    return *it->second;
}

}  // namespace detail

inline const ShellDecomposition& shells_for(const Grid3D& g) {
    return detail::cached_per_grid<ShellDecomposition>(g);
}

inline const OrbitDecomposition& orbits_for(const Grid3D& g) {
    return detail::cached_per_grid<PhysicalOrbits>(g);
}

inline const OrbitDecomposition& spectral_orbits_for(const Grid3D& g) {
    return detail::cached_per_grid<SpectralOrbits>(g);
}

// max over exact-radius orbits of the spread |f - orbit mean|, relative to
// max |f|. Zero (to rounding) iff the stored array is a function of the orbit
// radius alone; uses the orbits matching the field's representation.
inline double radial_residual(const Field& f) {
    const auto& od =
        f.rep == Rep::physical ? orbits_for(f.grid) : spectral_orbits_for(f.grid);
    double scale = 0.0;
    for (const auto& z : f.v) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    for (const auto& orb : od.orbits) {
        cplx mean(0.0, 0.0);
        for (auto p : orb) mean += f.v[p];
        mean /= static_cast<double>(orb.size());
        for (auto p : orb) worst = std::max(worst, std::abs(f.v[p] - mean));
    }
    return worst / scale;
}

}  // namespace srh
