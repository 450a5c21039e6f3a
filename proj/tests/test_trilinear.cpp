#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>

#include "srh/trilinear.hpp"

using namespace srh;

TEST_CASE("exponent window names the binding constraint") {
    const auto yuk = PotentialSpec::yukawa(1.0);

    // 1/r below 1/4
    try {
        validate_trilinear_exponent(5.0, 0.3, yuk);
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        REQUIRE(std::string(e.what()).find("1/4") != std::string::npos);
    }

    // s binds
    try {
        validate_trilinear_exponent(3.6, 0.26, yuk);
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        REQUIRE(std::string(e.what()).find("s =") != std::string::npos);
    }

    // gamma2/6 binds
    const auto soft = PotentialSpec::custom_symbol(
        [](double r) { return 1.0 / (1.0 + std::pow(r, 1.5)); }, 0.0, 1.5);
    try {
        validate_trilinear_exponent(3.6, 0.3, soft);
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        REQUIRE(std::string(e.what()).find("gamma2/6") != std::string::npos);
    }

    // valid window
    REQUIRE_NOTHROW(validate_trilinear_exponent(3.6, 0.3, yuk));
}

TEST_CASE("regime constants follow the two-case rule") {
    const double r = 3.6;
    REQUIRE(trilinear_constant({8, 16, 8, 8}, r) ==
            std::pow(8.0, 1 / r) * std::pow(16.0, 1 / r));
    REQUIRE(trilinear_constant({32, 16, 2, 32}, r) ==
            std::pow(16.0, 1 / r) * std::pow(2.0, 1 / r));
}

TEST_CASE("equal-band family shows no growth trend") {
    const Grid3D g = Grid3D::make(32, M_PI / 2.0);  // dxi = 4, per-axis max 64
    const auto yuk = PotentialSpec::yukawa(1.0);
    std::vector<TrilinearTuple> tuples{{8, 8, 8, 8}, {16, 16, 16, 16}, {32, 32, 32, 32}};
    const auto rep = trilinear_probe(g, 1.0, yuk, 3.6, 0.3, 8.0, tuples, 4, 17, 0.0, 1234);
    REQUIRE(rep.rows.size() == 3);
    for (const auto& row : rep.rows) {
        REQUIRE(row.max_ratio > 0.0);
        REQUIRE(row.regime == "N3>~N");
    }
    REQUIRE(rep.pass);
    REQUIRE(rep.trend_slope <= 0.1);
}

TEST_CASE("low-output regime ratios are controlled by the second constant") {
    const Grid3D g = Grid3D::make(32, M_PI / 2.0);
    const auto yuk = PotentialSpec::yukawa(1.0);
    std::vector<TrilinearTuple> tuples{{16, 16, 8, 64}, {32, 32, 8, 64}};
    const auto rep = trilinear_probe(g, 1.0, yuk, 3.6, 0.3, 8.0, tuples, 3, 17, 0.0, 77);
    for (const auto& row : rep.rows) {
        REQUIRE(row.regime == "N3<<N");
        REQUIRE(row.max_ratio > 0.0);
        REQUIRE(std::isfinite(row.max_ratio));
    }
}

TEST_CASE("zero data short-circuits to a zero integral") {
    const Grid3D g = Grid3D::make(16, 8.0);  // |xi| max ~ 10.9
    const auto yuk = PotentialSpec::yukawa(1.0);
    // N = 64 band misses the lattice entirely -> zero datum in one slot
    echo_warnings(false);
    std::vector<TrilinearTuple> tuples{{8, 8, 64, 8}};
    const auto rep = trilinear_probe(g, 1.0, yuk, 3.6, 0.3, 8.0, tuples, 2, 17, 0.0, 5);
    echo_warnings(true);
    drain_warnings();
    REQUIRE(rep.rows.front().max_ratio == 0.0);
    REQUIRE(rep.rows.front().mean_ratio == 0.0);
}

TEST_CASE("bands below N0 are rejected") {
    const Grid3D g = Grid3D::make(16, M_PI / 2.0);
    std::vector<TrilinearTuple> tuples{{4, 8, 8, 8}};
    REQUIRE_THROWS_AS(
        trilinear_probe(g, 1.0, PotentialSpec::yukawa(1.0), 3.6, 0.3, 8.0, tuples, 2, 17, 0.0, 5),
        std::invalid_argument);
}

TEST_CASE("probe reports are deterministic in the seed") {
    const Grid3D g = Grid3D::make(16, M_PI / 4.0);
    const auto yuk = PotentialSpec::yukawa(1.0);
    std::vector<TrilinearTuple> tuples{{8, 8, 8, 8}, {16, 16, 16, 16}};
    const auto a = trilinear_probe(g, 1.0, yuk, 3.6, 0.3, 8.0, tuples, 3, 9, 0.0, 42);
    const auto b = trilinear_probe(g, 1.0, yuk, 3.6, 0.3, 8.0, tuples, 3, 9, 0.0, 42);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        REQUIRE(a.rows[i].max_ratio == b.rows[i].max_ratio);
        REQUIRE(a.rows[i].mean_ratio == b.rows[i].mean_ratio);
    }
}

TEST_CASE("default tuple family covers both regimes") {
    const auto tuples = default_trilinear_tuples(8.0, 64.0);
    int case1 = 0, case2 = 0;
    for (const auto& t : tuples) {
        for (double N : {t.N1, t.N2, t.N3, t.N}) REQUIRE(N >= 8.0);
        if (t.N3 * 4.0 >= t.N) ++case1; else ++case2;
    }
    REQUIRE(case1 >= 4);
    REQUIRE(case2 >= 4);
}
