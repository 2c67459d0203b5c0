#ifndef CAUSALKIT_GEOMETRY_HPP
#define CAUSALKIT_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

// Exact causal arithmetic in Minkowski charts (c = 1). Spatial dimension is
// 1 or 2; points carry their dimension so mixed-dimension use is caught early.

namespace causalkit {

using Spatial = std::array<double, 2>;

double spatial_norm(const Spatial& x, int dim);
Spatial spatial_sub(const Spatial& a, const Spatial& b);

struct Point {
    double t = 0.0;
    Spatial x{0.0, 0.0};
    int dim = 1;
};

Point make_point(double t, double x0);
Point make_point(double t, double x0, double x1);

double spatial_dist(const Point& p, const Point& q);

/// Time reflection t -> -t.
Point time_mirror(const Point& p);

enum class Geometry { FullMinkowski, FutureCone };

// FullMinkowski(d) or the open sub-spacetime I^+(0), which is globally
// hyperbolic in its own right.
struct Spacetime {
    Geometry kind = Geometry::FullMinkowski;
    int dim = 1;

    bool contains(const Point& p) const;

    static Spacetime minkowski(int d);
    static Spacetime future_cone(int d);
};

bool operator==(const Spacetime& a, const Spacetime& b);

// Finite point set standing in for a compact K in cone arithmetic J(K).
struct CompactCloud {
    std::vector<Point> points;
    Spacetime ambient;
};

/// Throws std::invalid_argument on an empty cloud or a point outside ambient.
CompactCloud make_cloud(std::vector<Point> points, const Spacetime& ambient);

CompactCloud time_mirror(const CompactCloud& k);

enum class Direction { Future, Past, Both };

/// Closed causal order: p <= q iff t_q - t_p >= |x_q - x_p|.
/// Throws std::domain_error if either point lies outside st.
bool causally_precedes(const Point& p, const Point& q, const Spacetime& st);

/// Strict (chronological) order: t_q - t_p > |x_q - x_p|.
bool chronologically_precedes(const Point& p, const Point& q, const Spacetime& st);

/// Membership of p in J^+(K), J^-(K) or J(K).
bool in_causal_set(const CompactCloud& k, const Point& p, Direction dir);

/// Strict version, I^+-style cones.
bool in_chronological_set(const CompactCloud& k, const Point& p, Direction dir);

// Domain of dependence of an open ball on the flat leaf t = leaf_time;
// a diamond |t - s| + |x - c| < r.
struct DiamondRegion {
    double leaf_time = 0.0;
    Spatial center{0.0, 0.0};
    double radius = 1.0;
    int dim = 1;
};

bool in_domain_of_dependence(const DiamondRegion& d, const Point& p);

}  // namespace causalkit

#endif
