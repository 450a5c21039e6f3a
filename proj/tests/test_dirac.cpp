#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "srh/angular.hpp"
#include "srh/dirac.hpp"
#include "srh/random.hpp"

using namespace srh;

TEST_CASE("Dirac matrices satisfy the Clifford relations") {
    REQUIRE(dirac_algebra_residual() == 0.0);
}

TEST_CASE("projectors: completeness, idempotence, and the splitting identity") {
    for (double m : {0.5, 1.0, 2.5}) {
        for (const auto& xi : std::vector<std::array<double, 3>>{
                 {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.3, -1.2, 2.0}, {5.0, 4.0, -3.0}}) {
            const Mat4 pp = dirac_projector(xi, m, +1);
            const Mat4 pm = dirac_projector(xi, m, -1);

            // Pi+ + Pi- = I exactly
            REQUIRE(mat4_max_abs(mat4_add(mat4_add(pp, pm), mat4_identity(), 1.0, -1.0)) == 0.0);

            // Pi^2 = Pi, via (xi.alpha + m beta)^2 = <xi>_m^2 I
            REQUIRE(mat4_max_abs(mat4_add(mat4_mul(pp, pp), pp, 1.0, -1.0)) <= 1e-12);
            REQUIRE(mat4_max_abs(mat4_add(mat4_mul(pm, pm), pm, 1.0, -1.0)) <= 1e-12);

            // orthogonality Pi+ Pi- = 0
            REQUIRE(mat4_max_abs(mat4_mul(pp, pm)) <= 1e-12);

            // <xi>_m (Pi+ - Pi-) = xi.alpha + m beta
            const double w = dirac_bracket(xi, m);
            const Mat4 diff = mat4_add(pp, pm, w, -w);
            const Mat4 want = dirac_hamiltonian_symbol(xi, m);
            REQUIRE(mat4_max_abs(mat4_add(diff, want, 1.0, -1.0)) <= 1e-12);
        }
    }
}

TEST_CASE("projectors approach the upper/lower split at large mass") {
    const std::array<double, 3> xi{0.7, -0.4, 1.1};
    const Mat4 pp = dirac_projector(xi, 1e6, +1);
    Mat4 upper = mat4_zero();
    upper[0 * 4 + 0] = 1.0;
    upper[1 * 4 + 1] = 1.0;
    REQUIRE(mat4_max_abs(mat4_add(pp, upper, 1.0, -1.0)) <= 1e-5);
}

TEST_CASE("spinor split: reconstruction, idempotence, Pythagoras") {
    const Grid3D g = Grid3D::make(12, 6.0);
    Rng rng = rng_for(13, 0);
    DiracData psi = DiracData::zeros(g, 1.3);
    for (auto& c : psi.comp) c = to_physical(random_smooth_field(g, 3.0, rng));

    const auto [plus, minus] = dirac_split(psi);

    double worst = 0.0;
    for (int c = 0; c < 4; ++c)
        for (std::size_t p = 0; p < psi.comp[c].size(); ++p)
            worst = std::max(worst, std::abs(plus.comp[c].v[p] + minus.comp[c].v[p] -
                                             psi.comp[c].v[p]));
    REQUIRE(worst <= 1e-12);

    const auto [pp2, pm2] = dirac_split(plus);
    worst = 0.0;
    for (int c = 0; c < 4; ++c)
        for (std::size_t p = 0; p < plus.comp[c].size(); ++p)
            worst = std::max(worst, std::abs(pp2.comp[c].v[p] - plus.comp[c].v[p]));
    REQUIRE(worst <= 1e-12);
    REQUIRE(std::sqrt(pm2.l2_sq()) <= 1e-12);

    // orthogonal projectors: ||psi+||^2 + ||psi-||^2 = ||psi||^2
    REQUIRE(std::abs(plus.l2_sq() + minus.l2_sq() - psi.l2_sq()) <= 1e-12 * psi.l2_sq());
}

TEST_CASE("split of the zero spinor is zero") {
    const Grid3D g = Grid3D::make(8, 4.0);
    const auto [plus, minus] = dirac_split(DiracData::zeros(g, 1.0));
    REQUIRE(plus.l2_sq() == 0.0);
    REQUIRE(minus.l2_sq() == 0.0);
}

TEST_CASE("projected Sobolev norms stay equivalent to the spinor norm") {
    const Grid3D g = Grid3D::make(12, 6.0);
    Rng rng = rng_for(13, 1);
    const double s = 0.5;
    for (int trial = 0; trial < 3; ++trial) {
        DiracData psi = DiracData::zeros(g, 1.0);
        for (auto& c : psi.comp) c = to_physical(random_smooth_field(g, 3.0, rng));
        const auto [plus, minus] = dirac_split(psi);
        auto hs_spinor = [&](const DiracData& d) {
            double acc = 0.0;
            for (const auto& c : d.comp) { const double h = hs_norm(c, s); acc += h * h; }
            return std::sqrt(acc);
        };
        const double total = hs_spinor(psi);
        const double sum = hs_spinor(plus) + hs_spinor(minus);
        REQUIRE(sum >= total * (1.0 - 1e-12));
        REQUIRE(sum <= 2.0 * total * (1.0 + 1e-12));
    }
}
