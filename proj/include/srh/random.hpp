#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "srh/littlewood_paley.hpp"
#include "srh/spectral.hpp"

namespace srh {

// Deterministic stream splitting: trial j of a probe draws from
// rng_for(master, j), so ensembles are reproducible and order-independent.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
    // splitmix64 finalizer over the pair
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {  // (0, 1]
        return (static_cast<double>(eng_() >> 11) + 1.0) * (1.0 / 9007199254740992.0);
    }

    // Box-Muller; avoids distribution objects so streams are stable across
    // standard libraries.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u = uniform(), v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double a = 2.0 * M_PI * v;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    cplx cgaussian() { return cplx(gaussian(), gaussian()) / std::sqrt(2.0); }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline Rng rng_for(std::uint64_t master, std::uint64_t stream) {
    return Rng(mix_seed(master, stream));
}

// White complex-Gaussian spectrum restricted to a dyadic band and normalized
// to unit L^2. Returns a zero field when the band misses the lattice.
inline Field random_band_field(const Grid3D& g, const DyadicBand& band, Rng& rng) {
    Field f(g, Rep::spectral);
    std::size_t p = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c, ++p) {
                const double xa = g.freq[a], xb = g.freq[b], xc = g.freq[c];
                const double w = band.symbol(std::sqrt(xa * xa + xb * xb + xc * xc));
                if (w > 0.0) f.v[p] = w * rng.cgaussian();
            }
    const double nrm = l2_norm(f);
    if (nrm > 0.0)
        for (auto& z : f.v) z /= nrm;
    return f;
}

// Smooth random field with Gaussian spectral envelope exp(-|xi|^2 / w^2),
// unit L^2. Decays fast in x only in expectation; intended for norm-level
// property tests.
inline Field random_smooth_field(const Grid3D& g, double envelope_width, Rng& rng) {
    Field f(g, Rep::spectral);
    std::size_t p = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c, ++p) {
                const double xa = g.freq[a], xb = g.freq[b], xc = g.freq[c];
                const double r2 = xa * xa + xb * xb + xc * xc;
                f.v[p] = std::exp(-r2 / (envelope_width * envelope_width)) * rng.cgaussian();
            }
    const double nrm = l2_norm(f);
    if (nrm > 0.0)
        for (auto& z : f.v) z /= nrm;
    return f;
}

}  // namespace srh
