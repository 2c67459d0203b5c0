#include "causalkit/sets.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace causalkit {

namespace {

Spatial from_polar(double r, double ang, int dim) {
    if (dim == 1) return {ang < M_PI ? r : -r, 0.0};
    return {r * std::cos(ang), r * std::sin(ang)};
}

}  // namespace

AnalyticSet causal_region(const CompactCloud& k, Direction dir) {
    AnalyticSet a;
    a.label = dir == Direction::Both ? "J(K)" : (dir == Direction::Future ? "J+(K)" : "J-(K)");
    a.ambient = k.ambient;
    a.member = [k, dir](const Point& p) { return in_causal_set(k, p, dir); };
    a.containing_cloud = k;
    a.slice_radius_bound = [k, dir](double s) -> std::optional<double> {
        double best = -1.0;
        for (const auto& g : k.points) {
            const bool fwd = dir != Direction::Past && s >= g.t;
            const bool bwd = dir != Direction::Future && s <= g.t;
            if (fwd || bwd)
                best = std::max(best, spatial_norm(g.x, g.dim) + std::abs(s - g.t));
        }
        if (best < 0.0) return std::nullopt;
        return best;
    };
    a.sample = [k, dir](double radius, int count, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_int_distribution<std::size_t> pick(0, k.points.size() - 1);
        std::vector<Point> out;
        out.reserve(count);
        const int dim = k.ambient.dim;
        for (int i = 0; i < count; ++i) {
            const Point& g = k.points[pick(rng)];
            const double dt = radius * unit(rng);
            const double dx = dt * unit(rng);
            const double ang = 2.0 * M_PI * unit(rng);
            const Spatial off = from_polar(dx, ang, dim);
            double sign = 1.0;
            if (dir == Direction::Past) sign = -1.0;
            if (dir == Direction::Both && unit(rng) < 0.5) sign = -1.0;
            out.push_back(Point{g.t + sign * dt, {g.x[0] + off[0], g.x[1] + off[1]}, dim});
        }
        return out;
    };
    return a;
}

AnalyticSet finite_set(const CompactCloud& k) {
    AnalyticSet a;
    a.label = "finite_set";
    a.ambient = k.ambient;
    a.member = [k](const Point& p) {
        for (const auto& g : k.points)
            if (g.t == p.t && g.x == p.x && g.dim == p.dim) return true;
        return false;
    };
    a.sample = [k](double, int count, std::uint64_t) {
        std::vector<Point> out;
        out.reserve(count);
        for (int i = 0; i < count; ++i) out.push_back(k.points[i % k.points.size()]);
        return out;
    };
    a.containing_cloud = k;
    double tmin = k.points.front().t, tmax = tmin;
    for (const auto& g : k.points) {
        tmin = std::min(tmin, g.t);
        tmax = std::max(tmax, g.t);
    }
    a.lower_envelope = flat_leaf(tmin, k.ambient.dim);
    a.upper_envelope = flat_leaf(tmax, k.ambient.dim);
    a.slice_radius_bound = [k](double s) -> std::optional<double> {
        double best = -1.0;
        for (const auto& g : k.points)
            if (g.t == s) best = std::max(best, spatial_norm(g.x, g.dim));
        if (best < 0.0) return std::nullopt;
        return best;
    };
    return a;
}

AnalyticSet gaussian_band(int dim) {
    const double lo = std::log(2.0 / 3.0);
    const double hi = std::log(4.0 / 3.0);

    AnalyticSet a;
    a.label = "gaussian_band";
    a.ambient = Spacetime::minkowski(dim);
    a.member_logt = [lo, hi, dim](double log_t, const Spatial& x) {
        const double r = spatial_norm(x, dim);
        const double v = r * r + log_t;
        return lo <= v && v <= hi;
    };
    a.member = [a_logt = a.member_logt](const Point& p) {
        if (!(p.t > 0.0)) return false;
        return a_logt(std::log(p.t), p.x);
    };
    a.slice_radius_bound = [dim](double s) -> std::optional<double> {
        if (!(s > 0.0) || s > 4.0 / 3.0) return std::nullopt;
        return std::sqrt(std::max(0.0, std::log(4.0 / (3.0 * s))));
    };
    a.sample = [dim](double radius, int count, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        // e^{-r^2} underflows past r ~ 26.5; cap so samples stay members.
        const double rcap = std::min(radius, 25.0);
        std::uniform_real_distribution<double> rad(0.0, rcap);
        std::uniform_real_distribution<double> band(2.0 / 3.0, 4.0 / 3.0);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
        std::vector<Point> out;
        out.reserve(count);
        for (int i = 0; i < count; ++i) {
            const double r = rad(rng);
            const Spatial x = from_polar(r, angle(rng), dim);
            out.push_back(Point{band(rng) * std::exp(-r * r), x, dim});
        }
        return out;
    };
    // 0 < t <= 4/3 everywhere, so the band sits between two flat leaves:
    // timelike compact despite not being spacelike compact.
    a.lower_envelope = flat_leaf(0.0, dim);
    a.upper_envelope = flat_leaf(4.0 / 3.0, dim);
    return a;
}

SurfaceGraph gaussian_surface(int dim) {
    SurfaceGraph g;
    g.label = "gaussian_surface(c=1,a=1)";
    g.kind = SurfaceGraph::Kind::Spacelike;
    g.ambient = Spacetime::minkowski(dim);
    g.f = [dim](const Spatial& x) {
        const double r = spatial_norm(x, dim);
        return std::exp(-r * r);
    };
    g.log_f = [dim](const Spatial& x) {
        const double r = spatial_norm(x, dim);
        return -r * r;
    };
    // max |grad| of e^{-r^2} is sqrt(2) e^{-1/2}, attained at r = 1/sqrt(2)
    g.lipschitz_bound = std::sqrt(2.0) * std::exp(-0.5);
    return g;
}

SurfaceGraph scaled_gaussian_surface(double c, double a, int dim) {
    if (!(a > 0.0)) throw std::invalid_argument("scaled_gaussian_surface: a must be > 0");
    const double lip = std::abs(c) * std::sqrt(2.0 * a) * std::exp(-0.5);
    if (!(lip < 1.0))
        throw std::invalid_argument("scaled_gaussian_surface: graph would not be spacelike");
    SurfaceGraph g;
    g.label = "gaussian_surface(c=" + std::to_string(c) + ",a=" + std::to_string(a) + ")";
    g.kind = SurfaceGraph::Kind::Spacelike;
    g.ambient = Spacetime::minkowski(dim);
    g.f = [c, a, dim](const Spatial& x) {
        const double r = spatial_norm(x, dim);
        return c * std::exp(-a * r * r);
    };
    if (c > 0.0) {
        g.log_f = [c, a, dim](const Spatial& x) {
            const double r = spatial_norm(x, dim);
            return std::log(c) - a * r * r;
        };
    }
    g.lipschitz_bound = lip;
    return g;
}

AnalyticSet hyperbola_band(int dim) {
    AnalyticSet a;
    a.label = "hyperbola_band";
    // The set lives inside I^+(0); tagged with the full chart so that
    // J^\pm queries against outside points remain well-formed.
    a.ambient = Spacetime::minkowski(dim);
    a.member = [dim](const Point& p) {
        const double r = spatial_norm(p.x, dim);
        const double s = std::sqrt(1.0 + r * r);
        return std::abs(p.t - s) <= 1.0 / (2.0 * s);
    };
    a.slice_radius_bound = [](double s) -> std::optional<double> {
        if (s < 0.5) return std::nullopt;
        // lower envelope (2u^2-1)/(2u) = s with u = sqrt(1+r^2)
        const double u = (s + std::sqrt(s * s + 2.0)) / 2.0;
        if (u < 1.0) return std::nullopt;
        return std::sqrt(u * u - 1.0);
    };
    a.sample = [dim](double radius, int count, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> rad(0.0, radius);
        std::uniform_real_distribution<double> off(-1.0, 1.0);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
        std::vector<Point> out;
        out.reserve(count);
        for (int i = 0; i < count; ++i) {
            const double r = rad(rng);
            const double s = std::sqrt(1.0 + r * r);
            const Spatial x = from_polar(r, angle(rng), dim);
            out.push_back(Point{s + off(rng) / (2.0 * s), x, dim});
        }
        return out;
    };
    // The whole band sits in J^+(origin): its lower envelope exceeds |x|.
    a.containing_cloud = make_cloud({Point{0.0, {0.0, 0.0}, dim}}, a.ambient);

    SurfaceGraph low;
    low.label = "hyperbola_band_lower";
    low.kind = SurfaceGraph::Kind::Achronal;
    low.ambient = a.ambient;
    low.f = [dim](const Spatial& x) {
        const double s = std::sqrt(1.0 + std::pow(spatial_norm(x, dim), 2));
        return s - 1.0 / (2.0 * s);
    };
    low.lipschitz_bound = 1.0;  // slope tends to 1 at infinity; not Cauchy
    SurfaceGraph high = low;
    high.label = "hyperbola_band_upper";
    high.f = [dim](const Spatial& x) {
        const double s = std::sqrt(1.0 + std::pow(spatial_norm(x, dim), 2));
        return s + 1.0 / (2.0 * s);
    };
    a.lower_envelope = low;
    a.upper_envelope = high;
    return a;
}

Foliation hyperbola_foliation(int dim) {
    Foliation f;
    f.label = "hyperbola";
    f.leaf = [dim](double R) {
        if (!(R > 0.0)) throw std::invalid_argument("hyperbola_foliation: R must be > 0");
        SurfaceGraph g;
        g.label = "Sigma_R(R=" + std::to_string(R) + ")";
        g.kind = SurfaceGraph::Kind::Spacelike;
        g.ambient = Spacetime::future_cone(dim);
        g.f = [R, dim](const Spatial& x) {
            const double r = spatial_norm(x, dim);
            return std::sqrt(R * R + r * r);
        };
        g.lipschitz_bound = 1.0;  // sup of r/sqrt(R^2+r^2)
        return g;
    };
    f.param_lo = 1e-4;
    f.param_hi = 100.0;
    return f;
}

BoostPlane boost_plane(double v, int dim) {
    if (!(std::abs(v) < 1.0)) throw std::invalid_argument("boost_plane: need |v| < 1");

    SurfaceGraph g;
    g.label = "boost_plane(v=" + std::to_string(v) + ")";
    g.kind = SurfaceGraph::Kind::Spacelike;
    g.ambient = Spacetime::minkowski(dim);
    g.f = [v](const Spatial& x) { return v * x[0]; };
    g.lipschitz_bound = std::abs(v);

    AnalyticSet a;
    a.label = g.label;
    a.ambient = g.ambient;
    a.member = [v](const Point& p) { return p.t == v * p.x[0]; };
    a.sample = [v, dim](double radius, int count, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> coord(-radius, radius);
        std::vector<Point> out;
        out.reserve(count);
        for (int i = 0; i < count; ++i) {
            Spatial x{coord(rng), 0.0};
            if (dim == 2) x[1] = coord(rng);
            out.push_back(Point{v * x[0], x, dim});
        }
        return out;
    };
    if (v != 0.0) {
        a.slice_radius_bound = [v](double s) -> std::optional<double> {
            return std::abs(s / v);
        };
    }
    a.lower_envelope = g;
    a.upper_envelope = g;
    return BoostPlane{std::move(a), std::move(g)};
}

Point boost_curve(const Spatial& x_unit, double tau, int dim) {
    if (std::abs(spatial_norm(x_unit, dim) - 1.0) > 1e-12)
        throw std::invalid_argument("boost_curve: x_unit must have unit norm");
    const double ch = std::cosh(tau);
    return Point{std::sinh(tau), {ch * x_unit[0], dim == 2 ? ch * x_unit[1] : 0.0}, dim};
}

}  // namespace causalkit
