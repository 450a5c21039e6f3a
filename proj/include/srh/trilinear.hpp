#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "srh/angular.hpp"
#include "srh/dispersion.hpp"
#include "srh/littlewood_paley.hpp"
#include "srh/potential.hpp"
#include "srh/random.hpp"
#include "srh/util.hpp"

namespace srh {

struct TrilinearTuple {
    double N1 = 8, N2 = 8, N3 = 8, N = 8;
};

struct TrilinearRow {
    TrilinearTuple tuple;
    std::string regime;        // "N3>~N" or "N3<<N"
    double constant = 0.0;     // C(N, N1, N2, N3)
    double max_ratio = 0.0;    // ensemble max of I / (C * data norms)
    double mean_ratio = 0.0;
};

struct TrilinearReport {
    std::vector<TrilinearRow> rows;
    double r = 0.0;
    double n0 = 0.0;
    bool pass = true;          // no growth trend across the sampled family
    double trend_slope = 0.0;  // slope of log max-ratio vs log N (equal-band rows)
};

// checks 1/4 < 1/r < min(s, gamma2/6, 3/10) and names the binding constraint
inline void validate_trilinear_exponent(double r, double s, const PotentialSpec& V) {
    const double ir = 1.0 / r;
    if (!(ir > 0.25))
        throw std::invalid_argument("trilinear probe: 1/r = " + std::to_string(ir) +
                                    " must exceed 1/4 (binding: the lower bound 1/4)");
    const double cap_s = s, cap_g = V.gamma2 / 6.0, cap_c = 0.3;
    double cap = cap_s;
    std::string name = "s = " + std::to_string(s);
    if (cap_g < cap) { cap = cap_g; name = "gamma2/6 = " + std::to_string(cap_g); }
    if (cap_c < cap) { cap = cap_c; name = "3/10"; }
    if (!(ir < cap))
        throw std::invalid_argument("trilinear probe: 1/r = " + std::to_string(ir) +
                                    " must be below min(s, gamma2/6, 3/10) (binding: " + name +
                                    ")");
}

inline double trilinear_constant(const TrilinearTuple& t, double r) {
    if (t.N3 * 4.0 >= t.N) return std::pow(t.N1, 1.0 / r) * std::pow(t.N2, 1.0 / r);
    return std::pow(std::min(t.N1, t.N2), 1.0 / r) * std::pow(t.N3, 1.0 / r);
}

// I = |Int Int V*(P_{N1}u1 P_{N2}u2) P_{N3}u3 P_N v dx dt| over a window of
// free solutions with random unit band data, divided by
// C(N,N1,N2,N3) * prod_i (||phi_i|| + ||grad_S phi_i||) * (||psi|| + ||grad_S psi||).
inline TrilinearReport trilinear_probe(const Grid3D& g, double m, const PotentialSpec& V,
                                       double r, double s, double N0,
                                       const std::vector<TrilinearTuple>& tuples, int ensemble,
                                       int time_samples, double window, std::uint64_t seed,
                                       int jobs = 1) {
    validate_trilinear_exponent(r, s, V);
    for (const auto& t : tuples)
        for (double N : {t.N1, t.N2, t.N3, t.N})
            if (N < N0)
                throw std::invalid_argument("trilinear probe: all bands must be >= N0");
    const double Tw = window > 0.0 ? window : g.L / 4.0;
    const OmegaTable omega(g, m);

    // dealias-masked potential symbol table
    std::vector<double> vsym(g.size(), 0.0);
    {
        const int kc = g.n / 3;
        std::size_t p = 0;
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                for (int c = 0; c < g.n; ++c, ++p) {
                    if (std::abs(g.kindex[a]) > kc || std::abs(g.kindex[b]) > kc ||
                        std::abs(g.kindex[c]) > kc)
                        continue;
                    const double xa = g.freq[a], xb = g.freq[b], xc = g.freq[c];
                    vsym[p] = potential_symbol(V, std::sqrt(xa * xa + xb * xb + xc * xc));
                }
    }

    TrilinearReport rep;
    rep.r = r;
    rep.n0 = N0;

    for (const auto& tup : tuples) {
        TrilinearRow row;
        row.tuple = tup;
        row.regime = (tup.N3 * 4.0 >= tup.N) ? "N3>~N" : "N3<<N";
        row.constant = trilinear_constant(tup, r);

        std::vector<double> ratios(ensemble, 0.0);
        parallel_for(ensemble, jobs, [&](int trial) {
            Rng rng = rng_for(seed, 40009ULL * (trial + 1) +
                                        static_cast<std::uint64_t>(tup.N1 + 2 * tup.N2 +
                                                                   4 * tup.N3 + 8 * tup.N));
            std::array<Field, 4> data{
                random_band_field(g, DyadicBand::at(tup.N1, N0), rng),
                random_band_field(g, DyadicBand::at(tup.N2, N0), rng),
                random_band_field(g, DyadicBand::at(tup.N3, N0), rng),
                random_band_field(g, DyadicBand::at(tup.N, N0), rng)};
            double denom = row.constant;
            for (const auto& d : data) {
                if (l2_norm(d) == 0.0) { denom = 0.0; break; }
                const auto grad = spherical_gradient(to_physical(d));
                double a2 = 0.0;
                for (const auto& c : grad) { const double nc = l2_norm(c); a2 += nc * nc; }
                denom *= l2_norm(d) + std::sqrt(a2);
            }
            if (denom == 0.0) { ratios[trial] = 0.0; return; }

            cplx integral(0.0, 0.0);
            for (int j = 0; j < time_samples; ++j) {
                const double tj = Tw * j / (time_samples - 1);
                std::array<Field, 4> ut;
                for (int i = 0; i < 4; ++i) {
                    Field spec = data[i];
                    omega.phase_into(spec.v, tj);
                    ut[i] = to_physical(spec);
                }
                Field prod(g, Rep::physical);
                for (std::size_t p = 0; p < prod.size(); ++p)
                    prod.v[p] = ut[0].v[p] * ut[1].v[p];
                Field prod_spec = to_spectral(prod);
                for (std::size_t p = 0; p < prod_spec.size(); ++p) prod_spec.v[p] *= vsym[p];
                const Field conv = to_physical(prod_spec);
                cplx space(0.0, 0.0);
                for (std::size_t p = 0; p < conv.size(); ++p)
                    space += conv.v[p] * ut[2].v[p] * ut[3].v[p];
                space *= g.dx * g.dx * g.dx;
                const double wgt = (j == 0 || j == time_samples - 1) ? 0.5 : 1.0;
                integral += wgt * space * (Tw / (time_samples - 1));
            }
            ratios[trial] = std::abs(integral) / denom;
        });

        int used = 0;
        for (double q : ratios) {
            if (q <= 0.0) continue;
            row.mean_ratio += q;
            row.max_ratio = std::max(row.max_ratio, q);
            ++used;
        }
        if (used > 0) row.mean_ratio /= used;
        rep.rows.push_back(row);
    }

    // growth trend over the equal-band sub-family (N1 = N2 = N3 = N)
    std::vector<double> lx, ly;
    for (const auto& row : rep.rows) {
        const auto& t = row.tuple;
        if (t.N1 == t.N2 && t.N2 == t.N3 && t.N3 == t.N && row.max_ratio > 0.0) {
            lx.push_back(std::log(t.N));
            ly.push_back(std::log(row.max_ratio));
        }
    }
    if (lx.size() >= 2) {
        rep.trend_slope = fit_line(lx, ly).slope;
        rep.pass = rep.trend_slope <= 0.1;
    }
    return rep;
}

// default tuple family: one equal-band ladder plus eight samples from each
// regime of the two-case constant
inline std::vector<TrilinearTuple> default_trilinear_tuples(double N0, double Nmax) {
    std::vector<TrilinearTuple> out;
    for (double N = N0; N <= Nmax; N *= 2.0) out.push_back({N, N, N, N});

    int added = 0;
    for (double N = 2.0 * N0; N <= Nmax && added < 8; N *= 2.0)
        for (auto [a, b, c] : {std::array<double, 3>{N, N, N / 2.0},
                               std::array<double, 3>{N / 2.0, N, N},
                               std::array<double, 3>{N, N / 2.0, N / 2.0},
                               std::array<double, 3>{N / 2.0, N / 2.0, N}}) {
            if (added >= 8) break;
            out.push_back({a, b, c, N});  // N3 >= N/4: first-case constant
            ++added;
        }

    added = 0;
    for (double N = 8.0 * N0; N <= Nmax && added < 8; N *= 2.0)
        for (auto [a, b] : {std::array<double, 2>{N, N},
                            std::array<double, 2>{N / 2.0, N},
                            std::array<double, 2>{N, N / 2.0},
                            std::array<double, 2>{N / 4.0, N},
                            std::array<double, 2>{N, N / 4.0},
                            std::array<double, 2>{N / 2.0, N / 2.0},
                            std::array<double, 2>{N / 4.0, N / 2.0},
                            std::array<double, 2>{N / 4.0, N / 4.0}}) {
            if (added >= 8) break;
            out.push_back({a, b, N0, N});  // N3 = N0 << N: second-case constant
            ++added;
        }
    return out;
}

}  // namespace srh
