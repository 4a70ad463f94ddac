#include <doctest.h>

#include <cmath>
#include <vector>

#include "powersum/monomial.hpp"
#include "support/oracles.hpp"

using namespace powersum;
using testsupport::random_in_disk;

namespace {

MonicPolynomial monic(std::vector<Complex> a) { return {std::move(a)}; }

double max_coeff_error(const MonicPolynomial& got, const MonicPolynomial& want) {
    REQUIRE(got.a.size() == want.a.size());
    double m = 0.0;
    for (std::size_t i = 0; i < got.a.size(); ++i) m = std::max(m, std::abs(got.a[i] - want.a[i]));
    return m;
}

}  // namespace

TEST_CASE("node targets: induced power sums") {
    // z^2 + 1: a = (1, 0), c = (0, 2), b = (-0, 2) = (0, 2).
    auto t = node_target(monic({{1, 0}, {0, 0}}));
    REQUIRE(t.n() == 2);
    CHECK(t.b[0] == Complex{0, 0});
    CHECK(t.b[1] == Complex{2, 0});

    // z^2 - 2z + 1: a = (1, -2), c = (-2, 2), b = (2, 2).
    auto u = node_target(monic({{1, 0}, {-2, 0}}));
    CHECK(u.b[0] == Complex{2, 0});
    CHECK(u.b[1] == Complex{2, 0});
}

TEST_CASE("decompose: hand polynomials") {
    for (int n = 1; n <= 6; ++n) {
        auto nodes = decompose(monic(ComplexList(static_cast<std::size_t>(n), Complex{0, 0})));
        REQUIRE(static_cast<int>(nodes.nodes.size()) == n);
        for (const Complex& z : nodes.nodes) CHECK(z == Complex{0, 0});
    }

    auto plus = decompose(monic({{1, 0}, {0, 0}}));
    REQUIRE(plus.nodes.size() == 2);
    CHECK(plus.nodes[0] == Complex{-1, 0});
    CHECK(plus.nodes[1] == Complex{1, 0});

    auto shifted = decompose(monic({{1, 0}, {-2, 0}}));
    REQUIRE(shifted.nodes.size() == 2);
    CHECK(shifted.nodes[0] == Complex{1, 0});
    CHECK(shifted.nodes[1] == Complex{1, 0});
}

TEST_CASE("reconstruct: hand node sets") {
    for (int n = 1; n <= 6; ++n) {
        auto f = reconstruct({ComplexList(static_cast<std::size_t>(n), Complex{0, 0})});
        REQUIRE(f.n() == n);
        for (const Complex& a : f.a) CHECK(a == Complex{0, 0});
    }

    auto plus = reconstruct({{{1, 0}, {-1, 0}}});
    REQUIRE(plus.n() == 2);
    CHECK(std::abs(plus.a[0] - Complex{1, 0}) <= 1e-15);
    CHECK(std::abs(plus.a[1]) <= 1e-15);

    // (1/3)((z-1)^3 + (z-2)^3 + (z-3)^3) = z^3 - 6z^2 + 14z - 12.
    auto cubic = reconstruct({{{1, 0}, {2, 0}, {3, 0}}});
    REQUIRE(cubic.n() == 3);
    CHECK(std::abs(cubic.a[0] - Complex{-12, 0}) <= 1e-12);
    CHECK(std::abs(cubic.a[1] - Complex{14, 0}) <= 1e-12);
    CHECK(std::abs(cubic.a[2] - Complex{-6, 0}) <= 1e-12);
}

TEST_CASE("round-trip: reconstruct after decompose, n <= 10") {
    SplitMix64 rng(4001);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 10);
        MonicPolynomial f;
        f.a.resize(static_cast<std::size_t>(n));
        double scale = 0.0;
        for (Complex& a : f.a) {
            a = random_in_disk(rng, 2.0);
            scale = std::max(scale, std::abs(a));
        }

        auto back = reconstruct(decompose(f));
        CHECK(max_coeff_error(back, f) <= 1e-8 * (1.0 + scale));
    }
}

TEST_CASE("reverse round-trip: decompose after reconstruct, n <= 10") {
    SplitMix64 rng(4002);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 10);
        ComplexList nodes(static_cast<std::size_t>(n));
        for (Complex& z : nodes) z = random_in_disk(rng, 1.0);

        auto recovered = decompose(reconstruct({nodes}));
        CHECK(match_multisets(nodes, recovered.nodes).max_distance <= 1e-6);
    }
}

TEST_CASE("decompose is deterministic") {
    MonicPolynomial f = monic({{0.25, -0.5}, {1.5, 0.75}, {-0.125, 2.0}});
    auto a = decompose(f);
    auto b = decompose(f);
    REQUIRE(a.nodes.size() == b.nodes.size());
    for (std::size_t i = 0; i < a.nodes.size(); ++i) CHECK(a.nodes[i] == b.nodes[i]);
}

TEST_CASE("translation covariance: shifting the variable shifts the nodes") {
    SplitMix64 rng(4003);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 6);
        ComplexList roots(static_cast<std::size_t>(n));
        for (Complex& z : roots) z = random_in_disk(rng, 1.0);
        const Complex w = random_in_disk(rng, 0.5);

        // f has the given roots; g(z) = f(z - w) has roots shifted by w, and
        // its representation nodes shift the same way.
        auto f = monic_from_general(expand_from_roots(roots));
        ComplexList shifted_roots = roots;
        for (Complex& z : shifted_roots) z += w;
        auto g = monic_from_general(expand_from_roots(shifted_roots));

        auto f_nodes = decompose(f);
        ComplexList expected = f_nodes.nodes;
        for (Complex& z : expected) z += w;

        auto g_nodes = decompose(g);
        CHECK(match_multisets(expected, g_nodes.nodes).max_distance <= 1e-8);
    }
}

TEST_CASE("node bound certificates: hand values") {
    auto pure = decompose_bound(monic({{0, 0}, {0, 0}, {0, 0}}));
    CHECK(pure.scale == 0.0);
    CHECK(pure.observed_max == 0.0);
    CHECK(pure.holds);

    auto plus = decompose_bound(monic({{1, 0}, {0, 0}}));
    CHECK(plus.scale == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(plus.constant * plus.scale == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(plus.observed_max == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(plus.holds);

    auto shifted = decompose_bound(monic({{1, 0}, {-2, 0}}));
    CHECK(shifted.scale == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(shifted.constant * shifted.scale == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(shifted.observed_max == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(shifted.holds);
}

TEST_CASE("bound holds on random polynomials, n <= 10") {
    SplitMix64 rng(4004);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 10);
        MonicPolynomial f;
        f.a.resize(static_cast<std::size_t>(n));
        for (Complex& a : f.a) a = random_in_disk(rng, 2.0);
        CHECK(decompose_bound(f).holds);
    }
}

TEST_CASE("monic normalization helper") {
    auto f = monic_from_general({{{4, 0}, {0, 0}, {2, 0}}});
    REQUIRE(f.n() == 2);
    CHECK(f.a[0] == Complex{2, 0});
    CHECK(f.a[1] == Complex{0, 0});

    CHECK_THROWS_AS(monic_from_general({{{1, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(decompose(monic({})), std::invalid_argument);
    CHECK_THROWS_AS(decompose(monic(ComplexList(25, Complex{1, 0}))), std::invalid_argument);
}
