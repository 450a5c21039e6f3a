#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "srh/angular.hpp"
#include "srh/dispersion.hpp"
#include "srh/littlewood_paley.hpp"
#include "srh/random.hpp"
#include "srh/util.hpp"

namespace srh {

// Shared probe configuration: free solutions sampled uniformly on [0, T_w],
// T_w = L/4 by default (inside the wrap-around budget), trapezoid in time.
struct ProbeConfig {
    int ensemble = 20;
    int time_samples = 256;
    double window = 0.0;        // 0 -> L/4
    std::uint64_t seed = 1;
    int jobs = 1;

    double resolved_window(const Grid3D& g) const {
        const double w = window > 0.0 ? window : g.L / 4.0;
        if (w > g.L / 2.0)
            throw std::invalid_argument(
                "probe window " + std::to_string(w) +
                " exceeds the boundary wrap budget L/2 = " + std::to_string(g.L / 2.0));
        return w;
    }
};

struct BandStat {
    double band = 0.0;
    double mean_ratio = 0.0;
    double max_ratio = 0.0;
    double cv = 0.0;            // coefficient of variation across the ensemble
};

struct SlopeReport {
    std::vector<BandStat> stats;
    LineFit fit;                // log mean ratio vs log abscissa
    double slope_bound = 0.0;   // pass iff fit.slope <= slope_bound
    bool pass = false;
    std::string family;
    double n0 = 0.0;
    double m = 0.0;
};

namespace detail {

template <typename RatioFn>
BandStat ensemble_stat(double band, int ensemble, std::uint64_t seed, int jobs,
                       const RatioFn& ratio_of_trial) {
    std::vector<double> ratios(ensemble, 0.0);
    parallel_for(ensemble, jobs, [&](int t) { ratios[t] = ratio_of_trial(t, seed); });
    BandStat st;
    st.band = band;
    int used = 0;
    for (double r : ratios) {
        if (r <= 0.0) continue;
        st.mean_ratio += r;
        st.max_ratio = std::max(st.max_ratio, r);
        ++used;
    }
    if (used == 0) return st;
    st.mean_ratio /= used;
    double var = 0.0;
    for (double r : ratios)
        if (r > 0.0) var += (r - st.mean_ratio) * (r - st.mean_ratio);
    st.cv = used > 1 ? std::sqrt(var / (used - 1)) / st.mean_ratio : 0.0;
    return st;
}

}  // namespace detail

// ||e^{-itL} dotP_M phi||_{L_t^q L_x^r} / ||dotP_M phi||_{L^2} across random
// unit data, fitted against log <M>. Pass iff slope <= 5/(3q) + 0.1.
inline SlopeReport besov_strichartz_probe(const Grid3D& g, double m,
                                          const std::vector<double>& Ms, double q, double r,
                                          const ProbeConfig& pc) {
    if (!(q >= 2.0 && r >= 2.0) || std::abs(2.0 / q + 3.0 / r - 1.5) > 1e-9)
        throw std::invalid_argument(
            "besov probe: (q,r) must satisfy 2/q + 3/r = 3/2 with q,r >= 2");
    const double Tw = pc.resolved_window(g);
    const OmegaTable omega(g, m);

    SlopeReport rep;
    rep.family = "besov";
    rep.m = m;
    rep.slope_bound = 5.0 / (3.0 * q) + 0.1;

    std::vector<double> lx, ly;
    for (double M : Ms) {
        const DyadicBand band = DyadicBand::dot(M);
        auto trial = [&](int t, std::uint64_t seed) -> double {
            Rng rng = rng_for(seed, static_cast<std::uint64_t>(std::llround(std::log2(M)) + 80) *
                                        10007ULL +
                                        t);
            const Field phi = random_band_field(g, band, rng);
            if (l2_norm(phi) == 0.0) return 0.0;
            // time integral of ||u(t)||_r^q by trapezoid
            double acc = 0.0;
            const int J = pc.time_samples;
            for (int j = 0; j < J; ++j) {
                const double tj = Tw * j / (J - 1);
                Field spec = phi;
                omega.phase_into(spec.v, tj);
                const double nr = lp_norm(to_physical(spec), r);
                const double wgt = (j == 0 || j == J - 1) ? 0.5 : 1.0;
                acc += wgt * std::pow(nr, q) * (Tw / (J - 1));
            }
            return std::pow(acc, 1.0 / q);  // phi has unit L^2 norm
        };
        rep.stats.push_back(detail::ensemble_stat(M, pc.ensemble, pc.seed, pc.jobs, trial));
        lx.push_back(std::log(std::sqrt(1.0 + M * M)));  // <M>
        ly.push_back(std::log(rep.stats.back().mean_ratio));
    }
    rep.fit = fit_line(lx, ly);
    rep.pass = rep.fit.slope <= rep.slope_bound;
    return rep;
}

// ||P_N u||_{L_t^2 L_rho^r L_theta^2} / ||phi||_{L^2} for free solutions with
// band-N data; slope against log N. Pass iff slope <= 1/r + 0.1 (r < 4) or
// 1 - 3/r + 0.1 (r > 4).
inline SlopeReport angular_strichartz_probe(const Grid3D& g, double m,
                                            const std::vector<double>& Ns, double r, double N0,
                                            const ProbeConfig& pc, bool radial_data = false) {
    if (!(r > 10.0 / 3.0 && r < 6.0))
        throw std::invalid_argument("angular probe: require 10/3 < r < 6");
    if (std::abs(r - 4.0) < 0.05)
        throw std::invalid_argument(
            "angular probe: r = 4 carries an unresolved epsilon loss; bracket it with r in "
            "{3.9, 4.1}");
    const double Tw = pc.resolved_window(g);
    const OmegaTable omega(g, m);

    SlopeReport rep;
    rep.family = radial_data ? "angular-radial" : "angular";
    rep.m = m;
    rep.n0 = N0;
    rep.slope_bound = (r < 4.0 ? 1.0 / r : 1.0 - 3.0 / r) + 0.1;

    std::vector<double> lx, ly;
    for (double N : Ns) {
        const DyadicBand band = DyadicBand::at(N, N0);
        auto trial = [&](int t, std::uint64_t seed) -> double {
            Rng rng = rng_for(seed, static_cast<std::uint64_t>(std::llround(std::log2(N)) + 80) *
                                        20011ULL +
                                        t);
            Field phi = random_band_field(g, band, rng);
            if (radial_data) {
                // radialize the spectrum on lattice orbits, then renormalize
                const auto& od = spectral_orbits_for(g);
                for (const auto& orb : od.orbits) {
                    cplx mean(0.0, 0.0);
                    for (auto p : orb) mean += phi.v[p];
                    mean /= static_cast<double>(orb.size());
                    for (auto p : orb) phi.v[p] = mean;
                }
                const double nrm = l2_norm(phi);
                if (nrm > 0.0)
                    for (auto& z : phi.v) z /= nrm;
            }
            if (l2_norm(phi) == 0.0) return 0.0;
            double acc = 0.0;
            const int J = pc.time_samples;
            for (int j = 0; j < J; ++j) {
                const double tj = Tw * j / (J - 1);
                Field spec = phi;
                omega.phase_into(spec.v, tj);
                const double nr = shell_mixed_norm(to_physical(spec), r, 2.0);
                const double wgt = (j == 0 || j == J - 1) ? 0.5 : 1.0;
                acc += wgt * nr * nr * (Tw / (J - 1));
            }
            return std::sqrt(acc);
        };
        rep.stats.push_back(detail::ensemble_stat(N, pc.ensemble, pc.seed, pc.jobs, trial));
        lx.push_back(std::log(N));
        ly.push_back(std::log(rep.stats.back().mean_ratio));
    }
    rep.fit = fit_line(lx, ly);
    rep.pass = rep.fit.slope <= rep.slope_bound;
    return rep;
}

struct LowBandReport {
    double n0 = 0.0;
    double mean_ratio = 0.0;
    double max_ratio = 0.0;
    double cv = 0.0;
    int trials = 0;
    bool empty = false;
};

// ||e^{-itL} P_{N0} phi||_{L_t^2 L_x^6} / ||P_{N0} phi||_{L^2}; finiteness and
// ensemble stability are the checks.
inline LowBandReport low_band_strichartz_check(const Grid3D& g, double m, double N0,
                                               const ProbeConfig& pc) {
    const double Tw = pc.resolved_window(g);
    const OmegaTable omega(g, m);
    const DyadicBand lump = DyadicBand::at(N0, N0);

    auto trial = [&](int t, std::uint64_t seed) -> double {
        Rng rng = rng_for(seed, 30013ULL + t);
        const Field phi = random_band_field(g, lump, rng);
        if (l2_norm(phi) == 0.0) return 0.0;
        double acc = 0.0;
        const int J = pc.time_samples;
        for (int j = 0; j < J; ++j) {
            const double tj = Tw * j / (J - 1);
            Field spec = phi;
            omega.phase_into(spec.v, tj);
            const double nr = lp_norm(to_physical(spec), 6.0);
            const double wgt = (j == 0 || j == J - 1) ? 0.5 : 1.0;
            acc += wgt * nr * nr * (Tw / (J - 1));
        }
        return std::sqrt(acc);
    };
    const BandStat st = detail::ensemble_stat(N0, pc.ensemble, pc.seed, pc.jobs, trial);
    LowBandReport rep;
    rep.n0 = N0;
    rep.mean_ratio = st.mean_ratio;
    rep.max_ratio = st.max_ratio;
    rep.cv = st.cv;
    rep.trials = pc.ensemble;
    rep.empty = (st.mean_ratio == 0.0);
    return rep;
}

}  // namespace srh
