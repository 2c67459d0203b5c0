#include "causalkit/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace causalkit {

double spatial_norm(const Spatial& x, int dim) {
    if (dim == 1) return std::abs(x[0]);
    return std::hypot(x[0], x[1]);
}

Spatial spatial_sub(const Spatial& a, const Spatial& b) {
    return {a[0] - b[0], a[1] - b[1]};
}

Point make_point(double t, double x0) { return Point{t, {x0, 0.0}, 1}; }

Point make_point(double t, double x0, double x1) { return Point{t, {x0, x1}, 2}; }

double spatial_dist(const Point& p, const Point& q) {
    if (p.dim != q.dim) throw std::invalid_argument("spatial_dist: dimension mismatch");
    return spatial_norm(spatial_sub(p.x, q.x), p.dim);
}

Point time_mirror(const Point& p) { return Point{-p.t, p.x, p.dim}; }

bool Spacetime::contains(const Point& p) const {
    if (p.dim != dim) return false;
    if (!std::isfinite(p.t) || !std::isfinite(p.x[0]) || !std::isfinite(p.x[1])) return false;
    if (kind == Geometry::FullMinkowski) return true;
    return p.t > spatial_norm(p.x, dim);  // I^+(0), strict
}

Spacetime Spacetime::minkowski(int d) {
    if (d != 1 && d != 2) throw std::invalid_argument("spatial dimension must be 1 or 2");
    return Spacetime{Geometry::FullMinkowski, d};
}

Spacetime Spacetime::future_cone(int d) {
    if (d != 1 && d != 2) throw std::invalid_argument("spatial dimension must be 1 or 2");
    return Spacetime{Geometry::FutureCone, d};
}

bool operator==(const Spacetime& a, const Spacetime& b) {
    return a.kind == b.kind && a.dim == b.dim;
}

CompactCloud make_cloud(std::vector<Point> points, const Spacetime& ambient) {
    if (points.empty()) throw std::invalid_argument("CompactCloud must be nonempty");
    for (const auto& p : points) {
        if (!ambient.contains(p))
            throw std::invalid_argument("CompactCloud point outside ambient spacetime");
    }
    return CompactCloud{std::move(points), ambient};
}

CompactCloud time_mirror(const CompactCloud& k) {
    CompactCloud out = k;
    for (auto& p : out.points) p = time_mirror(p);
    return out;
}

namespace {

void check_domain(const Point& p, const Spacetime& st, const char* op) {
    if (!st.contains(p)) throw std::domain_error(std::string(op) + ": point outside spacetime");
}

}  // namespace

bool causally_precedes(const Point& p, const Point& q, const Spacetime& st) {
    check_domain(p, st, "causally_precedes");
    check_domain(q, st, "causally_precedes");
    // Within FutureCone the restricted relation coincides with the ambient
    // one: the region is causally convex.
    return q.t - p.t >= spatial_dist(p, q);
}

bool chronologically_precedes(const Point& p, const Point& q, const Spacetime& st) {
    check_domain(p, st, "chronologically_precedes");
    check_domain(q, st, "chronologically_precedes");
    return q.t - p.t > spatial_dist(p, q);
}

bool in_causal_set(const CompactCloud& k, const Point& p, Direction dir) {
    check_domain(p, k.ambient, "in_causal_set");
    for (const auto& g : k.points) {
        const double d = spatial_dist(g, p);
        if (dir != Direction::Past && p.t - g.t >= d) return true;
        if (dir != Direction::Future && g.t - p.t >= d) return true;
    }
    return false;
}

bool in_chronological_set(const CompactCloud& k, const Point& p, Direction dir) {
    check_domain(p, k.ambient, "in_chronological_set");
    for (const auto& g : k.points) {
        const double d = spatial_dist(g, p);
        if (dir != Direction::Past && p.t - g.t > d) return true;
        if (dir != Direction::Future && g.t - p.t > d) return true;
    }
    return false;
}

bool in_domain_of_dependence(const DiamondRegion& d, const Point& p) {
    if (p.dim != d.dim)
        throw std::domain_error("in_domain_of_dependence: dimension mismatch");
    const double dx = spatial_norm(spatial_sub(p.x, d.center), d.dim);
    return std::abs(p.t - d.leaf_time) + dx < d.radius;
}

}  // namespace causalkit
