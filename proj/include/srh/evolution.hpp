#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srh/angular.hpp"
#include "srh/dispersion.hpp"
#include "srh/potential.hpp"
#include "srh/random.hpp"
#include "srh/spectral.hpp"

namespace srh {

// --- initial data -----------------------------------------------------------------

// profile zoo for experiments; `tilt` adds the non-radial factor (1 + tilt x1)
struct DataSpec {
    std::string profile = "gaussian";  // gaussian | tilted-gaussian | offset-gaussian | random-smooth
    double delta = 0.01;               // amplitude
    double width = 2.0;                // gaussian length scale
    double tilt = 0.5;
    double offset = 1.0;               // center shift for offset-gaussian
    double s = 0.3;                    // regularity parameter carried by experiments
    std::uint64_t seed = 1;
};

inline Field make_initial_data(const Grid3D& g, const DataSpec& d) {
    Field f(g, Rep::physical);
    const double w2 = 2.0 * d.width * d.width;
    if (d.profile == "random-smooth") {
        Rng rng = rng_for(d.seed, 0x8a11);
        f = to_physical(random_smooth_field(g, 2.0 / d.width, rng));
        for (auto& z : f.v) z *= d.delta;
        return f;
    }
    std::size_t p = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++p) {
                const double x = g.coord[i], y = g.coord[j], z = g.coord[k];
                double val = 0.0;
                if (d.profile == "gaussian") {
                    val = std::exp(-(x * x + y * y + z * z) / w2);
                } else if (d.profile == "tilted-gaussian") {
                    val = (1.0 + d.tilt * x) * std::exp(-(x * x + y * y + z * z) / w2);
                } else if (d.profile == "offset-gaussian") {
                    const double xo = x - d.offset;
                    val = std::exp(-(xo * xo + y * y + z * z) / w2);
                } else {
                    throw std::invalid_argument("make_initial_data: unknown profile " + d.profile);
                }
                f.v[p] = d.delta * val;
            }
    return f;
}

// --- Hartree force ------------------------------------------------------------------

// F(u) = [V * |u|^2] u, dealiased.
inline Field hartree_force(const Field& u, const PotentialSpec& V) {
    const Grid3D& g = u.grid;
    const Field up = to_physical(u);
    Field dens(g, Rep::physical);
    for (std::size_t p = 0; p < dens.size(); ++p) dens.v[p] = std::norm(up.v[p]);
    Field dens_spec = to_spectral(dens);
    const int kc = g.n / 3;
    std::size_t p = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c, ++p) {
                if (std::abs(g.kindex[a]) > kc || std::abs(g.kindex[b]) > kc ||
                    std::abs(g.kindex[c]) > kc) {
                    dens_spec.v[p] = 0.0;
                    continue;
                }
                const double xa = g.freq[a], xb = g.freq[b], xc = g.freq[c];
                dens_spec.v[p] *= potential_symbol(V, std::sqrt(xa * xa + xb * xb + xc * xc));
            }
    const Field w = to_physical(dens_spec);
    Field force(g, Rep::physical);
    // V^ real and even keeps w real; the imaginary part is rounding noise
    for (std::size_t q = 0; q < force.size(); ++q) force.v[q] = w.v[q].real() * up.v[q];
    return u.rep == Rep::physical ? dealias(force) : to_spectral(dealias(force));
}

// --- split-step integrator -----------------------------------------------------------

struct SimulationConfig {
    int n = 48;
    double L = 32.0;
    double mass = 1.0;
    PotentialSpec potential = PotentialSpec::yukawa(1.0);
    DataSpec data;
    double dt = 1e-3;
    double T = 10.0;
    int record_stride = 100;    // norms every this many steps
    int snapshot_stride = 0;    // field snapshots; 0 = only first/last
    std::uint64_t seed = 1;
    bool theorem_mode = true;   // enforce s > 1/4 and the potential class

    void validate() const {
        const Grid3D g = Grid3D::make(n, L);
        const DispersionRelation disp(mass);
        if (dt * disp.omega_max(g) > 0.5)
            throw std::invalid_argument(
                "SimulationConfig: dt * max omega = " +
                std::to_string(dt * disp.omega_max(g)) +
                " exceeds the 0.5 phase-resolution guard");
        if (!(data.delta > 0.0))
            throw std::invalid_argument("SimulationConfig: delta must be positive");
        potential.validate();
        if (theorem_mode) {
            if (!(data.s > 0.25))
                throw std::invalid_argument("SimulationConfig: theorem mode needs s > 1/4");
            if (!potential.theorem_mode_ok())
                throw std::invalid_argument(
                    "SimulationConfig: theorem mode needs gamma1 < 1 and 3/2 < gamma2 < 3");
        }
    }
};

struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<double> mass_l2sq;
    std::vector<double> energy;
    std::vector<double> hs;
    std::vector<double> hs1;

    std::vector<double> snapshot_times;
    std::vector<Field> snapshots;

    bool blew_up = false;
    double blowup_time = 0.0;
    bool wrap_warned = false;
    double wrap_time = 0.0;

    double m = 1.0;
    double s = 0.3;
};

// interaction energy 1/2 Int (V * |u|^2) |u|^2 plus the quadratic part
// <u, Lambda_m u>, both evaluated spectrally/physically as appropriate.
inline double hartree_energy(const Field& u, double m, const PotentialSpec& V) {
    const Grid3D& g = u.grid;
    const Field us = to_spectral(u);
    const OmegaTable tab(g, m);
    double kin = 0.0;
    for (std::size_t p = 0; p < us.size(); ++p) kin += tab.w[p] * std::norm(us.v[p]);
    kin /= g.L * g.L * g.L;

    const Field up = to_physical(u);
    Field dens(g, Rep::physical);
    for (std::size_t p = 0; p < dens.size(); ++p) dens.v[p] = std::norm(up.v[p]);
    Field dens_spec = to_spectral(dens);
    const int kc = g.n / 3;
    std::size_t p = 0;
    double inter = 0.0;
    Field w(g, Rep::spectral);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c, ++p) {
                if (std::abs(g.kindex[a]) > kc || std::abs(g.kindex[b]) > kc ||
                    std::abs(g.kindex[c]) > kc)
                    continue;
                const double xa = g.freq[a], xb = g.freq[b], xc = g.freq[c];
                w.v[p] = dens_spec.v[p] *
                         potential_symbol(V, std::sqrt(xa * xa + xb * xb + xc * xc));
            }
    const Field wp = to_physical(w);
    for (std::size_t q = 0; q < wp.size(); ++q) inter += wp.v[q].real() * dens.v[q].real();
    inter *= 0.5 * g.dx * g.dx * g.dx;
    return kin + inter;
}

namespace detail {

// in-place split-step machinery shared by strang_step and integrate
struct StrangWorkspace {
    Grid3D g;
    OmegaTable omega;
    std::vector<double> vsym;      // potential symbol with dealias mask folded in
    std::vector<cplx> half_phase;  // e^{-i dt/2 omega}

    StrangWorkspace(const Grid3D& grid, double m, const PotentialSpec& V, double dt)
        : g(grid), omega(grid, m) {
        vsym.resize(g.size());
        const int kc = g.n / 3;
        std::size_t p = 0;
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                for (int c = 0; c < g.n; ++c, ++p) {
                    if (std::abs(g.kindex[a]) > kc || std::abs(g.kindex[b]) > kc ||
                        std::abs(g.kindex[c]) > kc) {
                        vsym[p] = 0.0;
                        continue;
                    }
                    const double xa = g.freq[a], xb = g.freq[b], xc = g.freq[c];
                    vsym[p] = potential_symbol(V, std::sqrt(xa * xa + xb * xb + xc * xc));
                }
        half_phase.resize(g.size());
        for (std::size_t q = 0; q < half_phase.size(); ++q) {
            const double ph = -0.5 * dt * omega.w[q];
            half_phase[q] = cplx(std::cos(ph), std::sin(ph));
        }
    }

    void kinetic_half(Field& spec) const {
        for (std::size_t p = 0; p < spec.size(); ++p) spec.v[p] *= half_phase[p];
    }

    // exact nonlinear sub-flow: u <- e^{-i dt W} u with W = V * |u|^2;
    // |u|^2 is invariant under the phase multiplication, so no iteration is
    // needed. Returns max |u|^2 for blow-up monitoring.
    double nonlinear_full(Field& phys, double dt) const {
        Field dens(g, Rep::physical);
        double peak = 0.0;
        for (std::size_t p = 0; p < dens.size(); ++p) {
            const double d = std::norm(phys.v[p]);
            dens.v[p] = d;
            if (d > peak) peak = d;
            if (d != d) peak = std::numeric_limits<double>::infinity();  // NaN is sticky
        }
        Field dens_spec = to_spectral(dens);
        for (std::size_t p = 0; p < dens_spec.size(); ++p) dens_spec.v[p] *= vsym[p];
        const Field w = to_physical(dens_spec);
        for (std::size_t p = 0; p < phys.size(); ++p) {
            const double ph = -dt * w.v[p].real();
            phys.v[p] *= cplx(std::cos(ph), std::sin(ph));
        }
        return peak;
    }
};

}  // namespace detail

// One Strang step: kinetic half, exact nonlinear phase, kinetic half.
inline Field strang_step(const Field& u, double dt, double m, const PotentialSpec& V) {
    detail::StrangWorkspace ws(u.grid, m, V, dt);
    Field spec = to_spectral(u);
    ws.kinetic_half(spec);
    Field phys = to_physical(spec);
    ws.nonlinear_full(phys, dt);
    spec = to_spectral(phys);
    ws.kinetic_half(spec);
    Field out = u.rep == Rep::physical ? to_physical(spec) : spec;
    if (!out.finite())
        throw std::runtime_error("strang_step: non-finite values after step (blow-up)");
    return out;
}

// fraction of L^2 mass in the outermost coordinate layers
inline double boundary_mass_fraction(const Field& fphys) {
    const int n = fphys.grid.n;
    double edge = 0.0, all = 0.0;
    std::size_t p = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k, ++p) {
                const double m = std::norm(fphys.v[p]);
                all += m;
                if (i == 0 || j == 0 || k == 0 || i == n - 1 || j == n - 1 || k == n - 1)
                    edge += m;
            }
    return all > 0.0 ? edge / all : 0.0;
}

inline TrajectoryRecord integrate(const SimulationConfig& cfg) {
    cfg.validate();
    const Grid3D g = Grid3D::make(cfg.n, cfg.L);
    DataSpec data = cfg.data;
    data.seed = cfg.seed;
    Field u = make_initial_data(g, data);

    TrajectoryRecord rec;
    rec.m = cfg.mass;
    rec.s = cfg.data.s;

    detail::StrangWorkspace ws(g, cfg.mass, cfg.potential, cfg.dt);
    const long steps = std::lround(cfg.T / cfg.dt);
    const double mass0 = l2_norm(u);
    const double blowup_cap = 1e6 * std::max(mass0, 1e-300);

    auto record = [&](double t, const Field& uphys) {
        rec.times.push_back(t);
        const double m2 = l2_norm(uphys);
        rec.mass_l2sq.push_back(m2 * m2);
        rec.energy.push_back(hartree_energy(uphys, cfg.mass, cfg.potential));
        rec.hs.push_back(hs_norm(uphys, cfg.data.s));
        rec.hs1.push_back(hs1_norm(uphys, cfg.data.s));
        if (!rec.wrap_warned && boundary_mass_fraction(uphys) > 1e-6) {
            rec.wrap_warned = true;
            rec.wrap_time = t;
            warn("integrate: boundary mass fraction exceeded 1e-6 at t = " + std::to_string(t));
        }
    };
    auto snapshot = [&](double t, const Field& uphys) {
        rec.snapshot_times.push_back(t);
        rec.snapshots.push_back(uphys);
    };

    record(0.0, u);
    snapshot(0.0, u);

    Field spec = to_spectral(u);
    for (long step = 1; step <= steps; ++step) {
        ws.kinetic_half(spec);
        Field phys = to_physical(spec);
        const double peak = ws.nonlinear_full(phys, cfg.dt);
        if (!std::isfinite(peak) || peak > blowup_cap * blowup_cap) {
            rec.blew_up = true;
            rec.blowup_time = step * cfg.dt;
            warn("integrate: blow-up flagged at t = " + std::to_string(rec.blowup_time));
            return rec;
        }
        spec = to_spectral(phys);
        ws.kinetic_half(spec);

        const double t = step * cfg.dt;
        const bool want_record = (cfg.record_stride > 0 && step % cfg.record_stride == 0) ||
                                 step == steps;
        const bool want_snapshot =
            (cfg.snapshot_stride > 0 && step % cfg.snapshot_stride == 0) || step == steps;
        if (want_record || want_snapshot) {
            const Field uphys = to_physical(spec);
            if (want_record) record(t, uphys);
            if (want_snapshot) snapshot(t, uphys);
        }
    }
    return rec;
}

}  // namespace srh
