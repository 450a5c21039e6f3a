#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "srh/angular.hpp"
#include "srh/littlewood_paley.hpp"
#include "srh/potential.hpp"
#include "srh/random.hpp"

using namespace srh;

namespace {

Field gaussian(const Grid3D& g, double a, double amp = 1.0) {
    Field f(g, Rep::physical);
    std::size_t p = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++p) {
                const double x = g.coord[i], y = g.coord[j], z = g.coord[k];
                f.v[p] = amp * std::exp(-a * (x * x + y * y + z * z));
            }
    return f;
}

Field x1_gaussian(const Grid3D& g, double a) {
    Field f = gaussian(g, a);
    std::size_t p = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++p) f.v[p] *= g.coord[i];
    return f;
}

double max_component_abs(const std::array<Field, 3>& a) {
    double m = 0.0;
    for (const auto& c : a) m = std::max(m, max_abs(c));
    return m;
}

}  // namespace

TEST_CASE("spherical gradient annihilates radial fields") {
    const Grid3D g = Grid3D::make(48, 12.0);
    for (double a : {0.8, 1.0, 1.4}) {
        const auto gs = spherical_gradient(gaussian(g, a));
        REQUIRE(max_component_abs(gs) <= 1e-10);
    }
    // polynomial-in-r^2 envelope
    Field f = gaussian(g, 1.0);
    std::size_t p = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++p) {
                const double x = g.coord[i], y = g.coord[j], z = g.coord[k];
                const double r2 = x * x + y * y + z * z;
                f.v[p] *= (1.0 + 0.7 * r2 - 0.1 * r2 * r2);
            }
    REQUIRE(max_component_abs(spherical_gradient(f)) <= 1e-10);
}

TEST_CASE("spherical gradient matches the analytic formula on x1 g(|x|)") {
    const Grid3D g = Grid3D::make(48, 12.0);
    const double a = 1.0;
    const auto gs = spherical_gradient(x1_gaussian(g, a));
    // grad_S (x1 e^{-a r^2}) = (x cross e1) e^{-a r^2} = (0, x3, -x2) e^{-a r^2}
    double worst = 0.0;
    std::size_t p = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++p) {
                const double y = g.coord[j], z = g.coord[k];
                const double x = g.coord[i];
                const double e = std::exp(-a * (x * x + y * y + z * z));
                worst = std::max(worst, std::abs(gs[0].v[p]));
                worst = std::max(worst, std::abs(gs[1].v[p] - cplx(z * e, 0.0)));
                worst = std::max(worst, std::abs(gs[2].v[p] - cplx(-y * e, 0.0)));
            }
    REQUIRE(worst <= 1e-8);
}

TEST_CASE("spherical gradient is linear") {
    const Grid3D g = Grid3D::make(24, 8.0);
    Rng rng = rng_for(7, 0);
    echo_warnings(false);
    const Field a = to_physical(random_smooth_field(g, 3.0, rng));
    const Field b = to_physical(random_smooth_field(g, 3.0, rng));
    const Field combo = added(a, b, 1.25, -0.75);
    const auto ga = spherical_gradient(a);
    const auto gb = spherical_gradient(b);
    const auto gc = spherical_gradient(combo);
    echo_warnings(true);
    drain_warnings();
    double worst = 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t p = 0; p < combo.size(); ++p)
            worst = std::max(worst,
                             std::abs(gc[c].v[p] - (1.25 * ga[c].v[p] - 0.75 * gb[c].v[p])));
    REQUIRE(worst <= 1e-12 * g.L);
}

TEST_CASE("H^s norm basics") {
    const Grid3D g = Grid3D::make(16, 2.0 * M_PI);
    Rng rng = rng_for(7, 1);
    const Field f = to_physical(random_smooth_field(g, 4.0, rng));

    REQUIRE(std::abs(hs_norm(f, 0.0) - l2_norm(f)) <= 1e-12);

    Field wave(g, Rep::physical);
    std::size_t p = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++p) {
                const double ph = 2.0 * g.coord[i] + 1.0 * g.coord[j];
                wave.v[p] = cplx(std::cos(ph), std::sin(ph));
            }
    const double s = 0.7;
    const double want = std::pow(1.0 + 5.0, s / 2.0) * std::pow(g.L, 1.5);
    REQUIRE(std::abs(hs_norm(wave, s) - want) <= 1e-10 * want);

    double prev = hs_norm(f, 0.0);
    for (double sv : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const double cur = hs_norm(f, sv);
        REQUIRE(cur >= prev - 1e-12);
        prev = cur;
    }
    REQUIRE_THROWS_AS(hs_norm(f, 4.5), std::invalid_argument);
}

TEST_CASE("H^{s,1} norm: radial equality, angular growth, triangle inequality") {
    const Grid3D g = Grid3D::make(48, 12.0);
    const double s = 0.3;

    const Field radial = gaussian(g, 1.0);
    REQUIRE(std::abs(hs1_norm(radial, s) - hs_norm(radial, s)) <= 1e-9);

    const Field ang = x1_gaussian(g, 1.0);
    REQUIRE(hs1_norm(ang, s) > 1.1 * hs_norm(ang, s));

    Rng rng = rng_for(7, 2);
    echo_warnings(false);
    for (int trial = 0; trial < 3; ++trial) {
        const Field a = to_physical(random_smooth_field(g, 2.0, rng));
        const Field b = to_physical(random_smooth_field(g, 2.0, rng));
        const double lhs = hs1_norm(added(a, b), s);
        const double rhs = hs1_norm(a, s) + hs1_norm(b, s);
        REQUIRE(lhs <= rhs * (1.0 + 1e-10));
    }
    echo_warnings(true);
    drain_warnings();
}

TEST_CASE("mixed norm: radial reduction, constants, and L^r consistency") {
    const Grid3D g = Grid3D::make(48, 12.0);

    // radial field with r* = 2 equals the 1D radial-profile norm
    const double a = 0.25;
    const Field f = gaussian(g, a);
    const double mixed = shell_mixed_norm(f, 3.0, 2.0);
    const auto& sd = shells_for(g);
    double acc = 0.0;
    for (std::size_t j = 0; j < sd.shells(); ++j) {
        const double prof = std::exp(-a * sd.radius[j] * sd.radius[j]);
        acc += std::pow(prof, 3.0) * sd.weight[j];
    }
    const double oneD = std::pow(acc, 1.0 / 3.0);
    REQUIRE(std::abs(mixed - oneD) <= 0.02 * oneD);

    // constant field, q = inf, r* = r = 2 -> c sqrt(ball volume)
    Field c(g, Rep::physical);
    for (auto& z : c.v) z = 3.0;
    const double ball = 4.0 / 3.0 * M_PI * std::pow(g.L / 2.0, 3.0);
    const double got = mixed_norm({0.0}, {c}, std::numeric_limits<double>::infinity(), 2.0, 2.0);
    REQUIRE(std::abs(got - 3.0 * std::sqrt(ball)) <= 0.02 * 3.0 * std::sqrt(ball));

    // r* = r reduces to the L^r norm on decaying fields
    const Field h = gaussian(g, 0.5);
    const double lr = lp_norm(h, 4.0);
    REQUIRE(std::abs(shell_mixed_norm(h, 4.0, 4.0) - lr) <= 0.03 * lr);

    REQUIRE_THROWS_AS(mixed_norm({0.0}, {c}, 2.0, 2.0, 3.0), std::invalid_argument);
}

TEST_CASE("mixed norm over time: sup and trapezoid") {
    const Grid3D g = Grid3D::make(24, 8.0);
    const Field f = gaussian(g, 1.0);
    std::vector<double> times{0.0, 0.5, 1.0};
    std::vector<Field> samples{f, scaled(f, 2.0), scaled(f, 0.5)};
    const double base = shell_mixed_norm(f, 2.0, 2.0);

    const double sup =
        mixed_norm(times, samples, std::numeric_limits<double>::infinity(), 2.0, 2.0);
    REQUIRE(std::abs(sup - 2.0 * base) <= 1e-10 * base);

    const double l2t = mixed_norm(times, samples, 2.0, 2.0, 2.0);
    const double expect = std::sqrt(0.25 * (1.0 + 4.0) + 0.25 * (4.0 + 0.25)) * base;
    REQUIRE(std::abs(l2t - expect) <= 1e-10 * expect);
}

TEST_CASE("sup-in-time mixed norm tracks the L^2 norm") {
    // mass away from the origin, where shell quantization is benign
    const Grid3D g = Grid3D::make(48, 12.0);
    Field f(g, Rep::physical);
    std::size_t p = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++p) {
                const double x = g.coord[i] - 2.0, y = g.coord[j], z = g.coord[k];
                f.v[p] = std::exp(-(x * x + y * y + z * z));
            }
    const double got =
        mixed_norm({0.0}, {f}, std::numeric_limits<double>::infinity(), 2.0, 2.0);
    REQUIRE(std::abs(got - l2_norm(f)) <= 0.02 * l2_norm(f));
}

TEST_CASE("sphere Sobolev ratio: radial constancy and random-field stability") {
    const Grid3D g = Grid3D::make(48, 12.0);
    const Field wide = gaussian(g, 0.02);  // nearly shell-constant
    REQUIRE(std::abs(sphere_sobolev_ratio(wide, 4.0) - 1.0) <= 0.05);

    Rng rng = rng_for(7, 3);
    double worst = 0.0;
    echo_warnings(false);
    for (int trial = 0; trial < 20; ++trial) {
        const Field f = to_physical(random_smooth_field(g, 2.0, rng));
        worst = std::max(worst, sphere_sobolev_ratio(f, 4.0));
    }
    echo_warnings(true);
    drain_warnings();
    REQUIRE(worst < 10.0);

    REQUIRE_THROWS_AS(sphere_sobolev_ratio(wide, 2.0), std::invalid_argument);
}

TEST_CASE("concentrated angular bumps stay within the reported constant") {
    const Grid3D g = Grid3D::make(48, 12.0);
    Field f(g, Rep::physical);
    std::size_t p = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k, ++p) {
                const double x = g.coord[i], y = g.coord[j], z = g.coord[k];
                const double r = std::sqrt(x * x + y * y + z * z);
                if (r == 0.0) { f.v[p] = 1.0; continue; }
                const double cosang = x / r;  // bump towards +x1
                f.v[p] = std::exp(-r * r / 8.0) * std::exp(6.0 * (cosang - 1.0));
            }
    // gradient-free angular growth: max over shells of L^4 vs L^2 average
    auto angular_growth = [&](const Field& h) {
        const auto& sd = shells_for(g);
        double worst = 0.0;
        for (std::size_t j = 0; j < sd.shells(); ++j) {
            const auto& mem = sd.members[j];
            if (mem.size() < 50) continue;
            double m4 = 0.0, m2 = 0.0;
            for (auto q : mem) {
                const double av = std::abs(h.v[q]);
                m4 += av * av * av * av;
                m2 += av * av;
            }
            if (m2 > 0.0)
                worst = std::max(worst, std::pow(m4 / mem.size(), 0.25) /
                                            std::sqrt(m2 / mem.size()));
        }
        return worst;
    };
    const Field smooth = gaussian(g, 0.125);
    REQUIRE(angular_growth(f) > 1.5 * angular_growth(smooth));
    // the gradient term keeps the full Sobolev ratio bounded regardless
    REQUIRE(sphere_sobolev_ratio(f, 4.0) < 10.0);
}

TEST_CASE("radial convolution commutes with the spherical gradient") {
    const Grid3D g = Grid3D::make(64, 20.0);
    // spectrum-built screened-Coulomb kernel: exactly radial on the spectral
    // lattice, and analytic in xi so its x-tails die exponentially
    const auto spec = PotentialSpec::yukawa(3.0);
    Field kernel(g, Rep::spectral);
    std::size_t p = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c, ++p) {
                const double xa = g.freq[a], xb = g.freq[b], xc = g.freq[c];
                kernel.v[p] = potential_symbol(spec, std::sqrt(xa * xa + xb * xb + xc * xc));
            }

    const Field f = x1_gaussian(g, 0.8);
    REQUIRE(radial_convolution_commutator(kernel, f) <= 1e-8);

    // radial f: both sides vanish
    const auto lhs = spherical_gradient(convolve(kernel, gaussian(g, 0.8)));
    REQUIRE(max_component_abs(lhs) <= 1e-10);

    // deliberately non-radial kernel: precondition fires, and with the check
    // disabled the commutator is far from zero (negative control)
    Field bad = kernel;
    bad.v[g.idx(1, 2, 3)] += 0.5 * max_abs(kernel);
    REQUIRE_THROWS_AS(radial_convolution_commutator(bad, f), std::invalid_argument);
    REQUIRE(radial_convolution_commutator(bad, f, 10.0) > 1e-4);
}

TEST_CASE("extended Young inequality on mixed shell norms") {
    const Grid3D g = Grid3D::make(48, 12.0);
    Rng rng = rng_for(7, 4);

    Field psi = gaussian(g, 2.0);
    const double l1 = lp_norm(psi, 1.0);
    for (auto& z : psi.v) z /= l1;

    echo_warnings(false);
    for (int trial = 0; trial < 5; ++trial) {
        const Field f = to_physical(random_smooth_field(g, 2.0, rng));
        // p2 = 1, p = p1 = q = q1 = 2: plain Young with an L^1 kernel
        const auto yc = young_mixed_check(psi, f, 2.0, 1.0, 2.0, 2.0, 2.0);
        REQUIRE(yc.holds(0.05));
    }
    echo_warnings(true);
    drain_warnings();

    // sharp-kernel limit: narrow normalized bump acts like the identity
    Field delta = gaussian(g, 16.0);
    const double dl1 = lp_norm(delta, 1.0);
    for (auto& z : delta.v) z /= dl1;
    const Field f0 = gaussian(g, 0.5);
    const auto sharp = young_mixed_check(delta, f0, 2.0, 1.0, 2.0, 2.0, 2.0);
    REQUIRE(std::abs(sharp.lhs - shell_mixed_norm(f0, 2.0, 2.0)) <=
            0.10 * shell_mixed_norm(f0, 2.0, 2.0));

    // radial pair: both sides reduce to 1D radial sums over the shell grid;
    // a wide pair keeps the within-shell variation (the only discrepancy
    // source) small
    const Field fw = gaussian(g, 0.25);
    const auto rad = young_mixed_check(psi, fw, 2.0, 1.0, 2.0, 2.0, 2.0);
    // e^{-2 r^2} * e^{-r^2/4} = (pi/2.25)^{3/2} e^{-(2/9) r^2}... with
    // a*b/(a+b) = 2*0.25/2.25 = 2/9 and prefactor (pi/(a+b))^{3/2}
    const double cpre = std::pow(M_PI / 2.25, 1.5) / l1;
    const auto& sd = shells_for(g);
    auto oneD = [&](double aa, double amp) {
        double acc = 0.0;
        for (std::size_t j = 0; j < sd.shells(); ++j) {
            const double prof = amp * std::exp(-aa * sd.radius[j] * sd.radius[j]);
            acc += prof * prof * sd.weight[j];
        }
        return std::sqrt(acc);
    };
    REQUIRE(std::abs(rad.lhs - oneD(2.0 / 9.0, cpre)) <= 0.02 * rad.lhs);
    REQUIRE(std::abs(rad.rhs - oneD(0.25, 1.0)) <= 0.02 * rad.rhs);

    REQUIRE_THROWS_AS(young_mixed_check(psi, f0, 2.0, 1.0, 3.0, 2.0, 2.0),
                      std::invalid_argument);
    // 1/q1 + 1/p2 - 1 = 1/2 > 1/3 = 1/q violates the angular relation
    REQUIRE_THROWS_AS(young_mixed_check(psi, f0, 2.0, 1.0, 2.0, 2.0, 3.0),
                      std::invalid_argument);
}

TEST_CASE("spherical gradient vs band projection: wrap-tail-limited commutation") {
    // The discrete commutator [grad_S, P_N] is controlled by the band
    // kernel's wrap-around images, ~ L * |K|(L/2) ~ L^-5 for the C4 bump.
    // Analytic symbols (free flow, Yukawa) commute at 1e-10; compactly
    // supported band symbols cannot at desk-scale boxes, so the invariant is
    // pinned as the decay law plus an absolute ceiling.
    auto commutator_at = [&](int n, double L) {
        const Grid3D g = Grid3D::make(n, L);
        const Field f = added(gaussian(g, 1.0), x1_gaussian(g, 1.0), 1.0, 0.6);
        const auto band = DyadicBand::at(4.0, 2.0);
        const auto lhs = spherical_gradient(project(f, band));
        const auto rhs_pre = spherical_gradient(f);
        double worst = 0.0;
        for (int c = 0; c < 3; ++c)
            worst = std::max(worst,
                             l2_norm(added(lhs[c], project(rhs_pre[c], band), 1.0, -1.0)));
        return worst;
    };
    const double e12 = commutator_at(48, 12.0);
    const double e24 = commutator_at(64, 24.0);
    REQUIRE(e24 <= 1e-3);
    REQUIRE(e12 / e24 >= 20.0);  // ~2^5 from the L^-5 law, with slack
}

TEST_CASE("shell decomposition covers the ball") {
    const Grid3D g = Grid3D::make(48, 32.0);
    const auto& sd = shells_for(g);
    double vol = 0.0;
    for (double w : sd.weight) vol += w;
    const double ball = 4.0 / 3.0 * M_PI * std::pow(g.L / 2.0, 3.0);
    REQUIRE(std::abs(vol - ball) <= 0.02 * ball);

    std::size_t covered = 0;
    for (const auto& mem : sd.members) covered += mem.size();
    std::size_t expect = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k) {
                const double x = g.coord[i], y = g.coord[j], z = g.coord[k];
                if (std::sqrt(x * x + y * y + z * z) < g.L / 2.0) ++expect;
            }
    REQUIRE(covered == expect);
}
