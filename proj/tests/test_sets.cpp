#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "causalkit/sets.hpp"

using namespace causalkit;

TEST_CASE("gaussian band: leaf slices match the analytic radius") {
    const auto a = gaussian_band(1);
    REQUIRE(a.slice_radius_bound);
    for (double t : {0.01, 0.1, 0.5, 1.0, 4.0 / 3.0}) {
        const auto r = a.slice_radius_bound(t);
        REQUIRE(r.has_value());
        const double analytic = std::sqrt(std::log(4.0 / (3.0 * t)));
        CHECK(*r == doctest::Approx(analytic).epsilon(1e-12));
        // the slice edge is a member, just beyond it is not
        CHECK(a.member(make_point(t, *r - 1e-9)));
        CHECK_FALSE(a.member(make_point(t, *r + 1e-6)));
    }
    CHECK_FALSE(a.slice_radius_bound(2.0).has_value());   // empty above 4/3
    CHECK_FALSE(a.slice_radius_bound(-1.0).has_value());  // empty below 0
}

TEST_CASE("gaussian band contains the gaussian surface with product identically 1") {
    const auto a = gaussian_band(1);
    const auto g = gaussian_surface(1);
    REQUIRE(a.member_logt);
    REQUIRE(g.log_f);
    for (double r : {0.0, 1.0, 10.0, 100.0, 1000.0}) {
        const Spatial x{r, 0.0};
        // e^{r^2} * e^{-r^2} == 1 exactly in log space
        CHECK(g.log_f(x) + r * r == 0.0);
        CHECK(a.member_logt(g.log_f(x), x));
    }
    // direct double membership holds while e^{-r^2} stays normal
    CHECK(a.member(g.at(Spatial{1.0, 0.0})));
    CHECK(a.member(g.at(Spatial{10.0, 0.0})));
}

TEST_CASE("samplers only produce members") {
    for (const auto& a : {gaussian_band(1), hyperbola_band(1), hyperbola_band(2),
                          boost_plane(0.5).set}) {
        REQUIRE(a.sample);
        const auto pts = a.sample(8.0, 300, 17);
        CHECK(pts.size() >= 100);
        for (const auto& p : pts) {
            CHECK(a.member(p));
            CHECK(a.ambient.contains(p));
        }
    }
}

TEST_CASE("hyperbola band sits inside the open future cone") {
    const auto a = hyperbola_band(1);
    // every member lies strictly inside I^+(0) even though the ambient chart
    // is full Minkowski (the refuting point (0,0) sits on the cone boundary)
    for (const auto& p : a.sample(30.0, 200, 9))
        CHECK(Spacetime::future_cone(1).contains(p));
    // lower envelope t_low(r) satisfies t_low^2 = r^2 + 1/(4(1+r^2)) > r^2
    REQUIRE(a.lower_envelope);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
        const double r = std::abs(u(rng));
        const double tlow = a.lower_envelope->f(Spatial{r, 0.0});
        CHECK(tlow * tlow == doctest::Approx(r * r + 0.25 / (1.0 + r * r)).epsilon(1e-12));
        CHECK(tlow > r);
    }
    // far members exist at the stated radii
    for (double r : {10.0, 100.0, 1000.0}) {
        const double t = std::sqrt(1.0 + r * r);
        CHECK(a.member(make_point(t, r)));
    }
    REQUIRE(a.containing_cloud);
    CHECK(a.containing_cloud->points.size() == 1);
    CHECK(a.containing_cloud->points[0].t == 0.0);
}

TEST_CASE("hyperbola slice bound follows the closed form") {
    const auto a = hyperbola_band(1);
    REQUIRE(a.slice_radius_bound);
    for (double s : {0.6, 1.0, 2.0, 10.0, 500.0}) {
        const auto r = a.slice_radius_bound(s);
        // member radius on leaf s: solve |s - sqrt(1+r^2)| <= 1/(2 sqrt(1+r^2));
        // largest root has 1 + r^2 = u^2 with u = (s + sqrt(s^2 + 2)) / 2.
        const double u = (s + std::sqrt(s * s + 2.0)) / 2.0;
        if (u * u >= 1.0) {
            REQUIRE(r.has_value());
            CHECK(*r == doctest::Approx(std::sqrt(u * u - 1.0)).epsilon(1e-9));
            if (*r > 1e-6) {
                CHECK(a.member(make_point(s, *r - 1e-9)));
                CHECK_FALSE(a.member(make_point(s, *r + 1e-5)));
            }
        }
    }
}

TEST_CASE("hyperbola foliation leaves are genuine spacelike graphs of the cone") {
    const auto fol = hyperbola_foliation(1);
    CHECK(fol.param_lo > 0.0);
    const auto leaf = fol.leaf(2.0);
    for (double r : {0.0, 1.0, 7.0}) {
        CHECK(leaf.f(Spatial{r, 0.0}) ==
              doctest::Approx(std::sqrt(4.0 + r * r)).epsilon(1e-13));
    }
    CHECK(leaf.lipschitz_bound <= 1.0);
}

TEST_CASE("boost plane and boost curve") {
    const auto bp = boost_plane(0.5, 1);
    CHECK(bp.surface.lipschitz_bound == doctest::Approx(0.5));
    CHECK(bp.set.member(make_point(500.0, 1000.0)));
    CHECK_FALSE(bp.set.member(make_point(500.0, 999.0)));

    CHECK_THROWS_AS(boost_plane(1.0, 1), std::invalid_argument);

    // boost curve lies on t^2 - |x|^2 = -1, is timelike, never in I^+(0)
    const auto st = Spacetime::minkowski(1);
    Point prev = boost_curve(Spatial{1.0, 0.0}, -3.0);
    for (double tau = -2.9; tau <= 3.0; tau += 0.1) {
        const Point p = boost_curve(Spatial{1.0, 0.0}, tau);
        CHECK(p.t * p.t - p.x[0] * p.x[0] == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(chronologically_precedes(prev, p, st));
        CHECK_FALSE(chronologically_precedes(make_point(0, 0), p, st));
        prev = p;
    }
    CHECK_THROWS_AS(boost_curve(Spatial{2.0, 0.0}, 0.0), std::invalid_argument);
}

TEST_CASE("causal_region and finite_set carry their certificates") {
    const auto k = make_cloud({make_point(0, -1), make_point(2, 3)},
                              Spacetime::minkowski(1));
    const auto jk = causal_region(k);
    REQUIRE(jk.containing_cloud);
    const auto pts = jk.sample(10.0, 200, 3);
    for (const auto& p : pts) CHECK(in_causal_set(k, p, Direction::Both));

    const auto fs = finite_set(k);
    CHECK(fs.member(make_point(0, -1)));
    CHECK_FALSE(fs.member(make_point(0, -1.0000001)));
    REQUIRE(fs.lower_envelope);
    REQUIRE(fs.upper_envelope);
    CHECK(fs.lower_envelope->cauchy_certifiable());
}

TEST_CASE("scaled gaussian guard enforces spacelikeness") {
    CHECK_NOTHROW(scaled_gaussian_surface(1.0, 0.5, 1));
    CHECK_THROWS_AS(scaled_gaussian_surface(2.0, 1.0, 1), std::invalid_argument);
}
