#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "srh/evolution.hpp"

namespace srh {

struct PicardReport {
    std::vector<double> times;                 // J sample times on [0, T]
    std::vector<double> increments;            // sup_t ||u^{k+1} - u^k||_{H^{s,1}}
    std::vector<double> ratios;                // increments[k] / increments[k-1]
    bool contraction = false;                  // ratios dropped below 1/2 and stayed
    bool non_contraction_flag = false;         // ratio >= 1 twice in a row (or blow-up)
    int iterations = 0;
    std::vector<Field> final_samples;          // last iterate, physical rep
};

// H^{s,1} distance between two sampled iterates at one time
inline double hs1_distance(const Field& a, const Field& b, double s) {
    Field d = added(a, b, 1.0, -1.0);
    return hs1_norm(d, s);
}

// Picard iteration for u = e^{-it L} phi - i Int_0^t e^{-i(t-t') L} F(u)(t') dt'
// on J uniform time samples, Duhamel integral by cumulative trapezoid in the
// interaction picture.
inline PicardReport duhamel_picard(const Field& phi, double m, const PotentialSpec& V,
                                   double T, int max_iters, int J, double s) {
    if (J < 17) throw std::invalid_argument("duhamel_picard: need at least 17 time samples");
    if (!(T > 0.0)) throw std::invalid_argument("duhamel_picard: horizon must be positive");
    const Grid3D& g = phi.grid;
    if (T > g.L / 2.0)
        warn("duhamel_picard: horizon " + std::to_string(T) +
             " exceeds the wrap-around budget L/2 = " + std::to_string(g.L / 2.0));

    PicardReport rep;
    const double dt = T / (J - 1);
    for (int j = 0; j < J; ++j) rep.times.push_back(j * dt);

    const OmegaTable omega(g, m);
    const Field phi_spec = to_spectral(phi);

    // free iterate u^(0)
    std::vector<Field> cur(J, Field(g, Rep::spectral));
    for (int j = 0; j < J; ++j) {
        cur[j] = phi_spec;
        omega.phase_into(cur[j].v, rep.times[j]);
    }

    int consecutive_growth = 0;
    for (int iter = 1; iter <= max_iters; ++iter) {
        // G_j = e^{+i t_j L} F(u)(t_j) in spectral representation
        std::vector<Field> gj(J, Field(g, Rep::spectral));
        bool finite = true;
        for (int j = 0; j < J && finite; ++j) {
            const Field force = hartree_force(to_physical(cur[j]), V);
            Field fs = to_spectral(force);
            omega.phase_into(fs.v, -rep.times[j]);
            gj[j] = fs;
            finite = fs.finite();
        }

        std::vector<Field> next(J, Field(g, Rep::spectral));
        if (finite) {
            Field cum(g, Rep::spectral);
            for (int j = 0; j < J; ++j) {
                if (j > 0)
                    for (std::size_t p = 0; p < cum.size(); ++p)
                        cum.v[p] += 0.5 * dt * (gj[j - 1].v[p] + gj[j].v[p]);
                Field out = phi_spec;
                for (std::size_t p = 0; p < out.size(); ++p)
                    out.v[p] = (out.v[p] - cplx(0.0, 1.0) * cum.v[p]);
                omega.phase_into(out.v, rep.times[j]);
                next[j] = out;
                finite = finite && out.finite();
            }
        }

        if (!finite) {
            rep.non_contraction_flag = true;
            rep.iterations = iter;
            warn("duhamel_picard: iterate went non-finite; flagged as non-contractive");
            break;
        }

        double inc = 0.0;
        for (int j = 0; j < J; ++j) inc = std::max(inc, hs1_distance(next[j], cur[j], s));
        rep.increments.push_back(inc);
        if (rep.increments.size() >= 2) {
            const double prev = rep.increments[rep.increments.size() - 2];
            const double ratio = prev > 0.0 ? inc / prev
                                            : (inc > 0.0 ? std::numeric_limits<double>::infinity()
                                                         : 0.0);
            rep.ratios.push_back(ratio);
            consecutive_growth = (ratio >= 1.0) ? consecutive_growth + 1 : 0;
            if (consecutive_growth >= 2) rep.non_contraction_flag = true;
        }
        cur = std::move(next);
        rep.iterations = iter;

        // converged to rounding; further ratios would be noise
        if (inc <= 1e-14 * std::max(1.0, hs1_norm(to_physical(phi), s))) break;
        if (rep.non_contraction_flag) break;
    }

    // contraction verdict: every ratio from the third iteration on < 1/2
    if (!rep.non_contraction_flag && rep.increments.size() >= 3) {
        bool ok = true;
        for (std::size_t k = 2; k < rep.increments.size(); ++k) {
            if (rep.increments[k - 1] <= 0.0) break;
            if (rep.increments[k] / rep.increments[k - 1] >= 0.5) ok = false;
        }
        rep.contraction = ok;
    } else if (!rep.non_contraction_flag && !rep.ratios.empty()) {
        bool ok = true;
        for (double r : rep.ratios) ok = ok && r < 0.5;
        rep.contraction = ok;
    }

    rep.final_samples.reserve(J);
    for (int j = 0; j < J; ++j) {
        Field f = cur[j];
        rep.final_samples.push_back(to_physical(f));
    }
    return rep;
}

}  // namespace srh
