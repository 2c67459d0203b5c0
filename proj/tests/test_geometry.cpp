#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "causalkit/geometry.hpp"

using namespace causalkit;

namespace {

// Independent reachability oracle: breadth-first search on the unit lattice
// where one time step moves space by at most one cell. A lattice point (n, j)
// is in the causal future of (0, 0) iff BFS reaches it.
bool bfs_reachable(int n, int j, int extent) {
    if (n < 0) return false;
    std::set<std::pair<int, int>> seen;
    std::queue<std::pair<int, int>> q;
    q.push({0, 0});
    seen.insert({0, 0});
    while (!q.empty()) {
        auto [cn, cj] = q.front();
        q.pop();
        if (cn == n && cj == j) return true;
        if (cn >= n || cn > extent) continue;
        for (int dj : {-1, 0, 1}) {
            auto next = std::make_pair(cn + 1, cj + dj);
            if (std::abs(next.second) <= extent && seen.insert(next).second) q.push(next);
        }
    }
    return false;
}

}  // namespace

TEST_CASE("causal order agrees with the lattice BFS oracle") {
    const auto st = Spacetime::minkowski(1);
    const int extent = 12;
    for (int n = -6; n <= 6; ++n) {
        for (int j = -8; j <= 8; ++j) {
            const bool lhs = causally_precedes(make_point(0, 0), make_point(n, j), st);
            CHECK(lhs == bfs_reachable(n, j, extent));
        }
    }
}

TEST_CASE("causal order is a partial order on random triples") {
    const auto st = Spacetime::minkowski(2);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    auto pt = [&] { return make_point(u(rng), u(rng), u(rng)); };
    int chained = 0;
    for (int i = 0; i < 10000; ++i) {
        const Point p = pt(), q = pt(), r = pt();
        CHECK(causally_precedes(p, p, st));  // reflexive
        if (causally_precedes(p, q, st) && causally_precedes(q, p, st)) {
            CHECK(p.t == doctest::Approx(q.t));  // antisymmetry on the diagonal
        }
        if (causally_precedes(p, q, st) && causally_precedes(q, r, st)) {
            ++chained;
            CHECK(causally_precedes(p, r, st));  // transitive
        }
    }
    CHECK(chained > 20);  // the property was actually exercised
}

TEST_CASE("chronological order implies causal order, never the converse on the cone") {
    const auto st = Spacetime::minkowski(1);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 2000; ++i) {
        const Point p = make_point(u(rng), u(rng));
        const Point q = make_point(u(rng), u(rng));
        if (chronologically_precedes(p, q, st)) CHECK(causally_precedes(p, q, st));
    }
    // Null-separated pair: causal but not chronological.
    CHECK(causally_precedes(make_point(0, 0), make_point(2, 2), st));
    CHECK_FALSE(chronologically_precedes(make_point(0, 0), make_point(2, 2), st));
}

TEST_CASE("future cone sub-spacetime membership and order errors") {
    const auto fc = Spacetime::future_cone(1);
    CHECK(fc.contains(make_point(2, 1)));
    CHECK_FALSE(fc.contains(make_point(1, 1)));   // boundary excluded
    CHECK_FALSE(fc.contains(make_point(-1, 0)));
    CHECK_THROWS_AS(causally_precedes(make_point(-1, 0), make_point(2, 0), fc),
                    std::domain_error);
}

TEST_CASE("J(K) membership decomposes over the cloud") {
    const auto st = Spacetime::minkowski(1);
    const auto k = make_cloud({make_point(0, -2), make_point(1, 3)}, st);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-8.0, 8.0);
    for (int i = 0; i < 2000; ++i) {
        const Point p = make_point(u(rng), u(rng));
        bool fut = false, past = false;
        for (const auto& kp : k.points) {
            fut = fut || causally_precedes(kp, p, st);
            past = past || causally_precedes(p, kp, st);
        }
        CHECK(in_causal_set(k, p, Direction::Future) == fut);
        CHECK(in_causal_set(k, p, Direction::Past) == past);
        CHECK(in_causal_set(k, p, Direction::Both) == (fut || past));
    }
}

TEST_CASE("time mirror swaps causal direction") {
    const auto st = Spacetime::minkowski(2);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 2000; ++i) {
        const Point p = make_point(u(rng), u(rng), u(rng));
        const Point q = make_point(u(rng), u(rng), u(rng));
        CHECK(causally_precedes(p, q, st) ==
              causally_precedes(time_mirror(q), time_mirror(p), st));
    }
}

TEST_CASE("domain of dependence of a flat ball is the open diamond") {
    // Oracle: (n, j) relative to the leaf lies in D(ball) iff the full
    // dependence interval [j - |n|, j + |n|] sits inside the open ball.
    DiamondRegion d{0.0, Spatial{1.0, 0.0}, 4.0, 1};
    for (int n = -6; n <= 6; ++n) {
        for (int j = -8; j <= 8; ++j) {
            const bool oracle = (std::abs(j - std::abs(n) - 1.0) < 4.0) &&
                                (std::abs(j + std::abs(n) - 1.0) < 4.0);
            CHECK(in_domain_of_dependence(d, make_point(n, j)) == oracle);
        }
    }
    CHECK_FALSE(in_domain_of_dependence(d, make_point(0, 5)));  // boundary is out
}

TEST_CASE("cloud construction rejects bad input") {
    const auto st = Spacetime::minkowski(1);
    CHECK_THROWS_AS(make_cloud({}, st), std::invalid_argument);
    CHECK_THROWS_AS(make_cloud({make_point(-1, 0)}, Spacetime::future_cone(1)),
                    std::invalid_argument);
}
