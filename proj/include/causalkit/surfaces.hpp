#ifndef CAUSALKIT_SURFACES_HPP
#define CAUSALKIT_SURFACES_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "causalkit/geometry.hpp"

namespace causalkit {

struct AnalyticSet;  // sets.hpp

// Hypersurface given as a graph t = f(x). Spacelike graphs have Lipschitz
// constant < 1, achronal ones <= 1. A graph that is uniformly spacelike
// (lipschitz_bound < 1) or 1-Lipschitz but flat outside a bounded region is
// a Cauchy surface of the Minkowski chart.
struct SurfaceGraph {
    enum class Kind { Spacelike, Achronal };

    std::string label;
    Kind kind = Kind::Spacelike;
    Spacetime ambient = Spacetime::minkowski(1);
    std::function<double(const Spatial&)> f;

    // log(f(x)) for strictly positive graphs; keeps slice checks on
    // Gaussian-type surfaces finite where f itself underflows.
    std::function<double(const Spatial&)> log_f;

    double lipschitz_bound = 1.0;  // declared analytic bound

    // f(x) == flat_value for |x| >= flat_radius.
    bool flat_outside = false;
    double flat_value = 0.0;
    double flat_radius = 0.0;

    // Knot list (x, f(x)) for piecewise-linear graphs in d = 1.
    std::vector<std::pair<double, double>> knots;

    double value(const Spatial& x) const { return f(x); }
    double value(double x0) const { return f(Spatial{x0, 0.0}); }
    Point at(const Spatial& x) const { return Point{f(x), x, ambient.dim}; }

    bool cauchy_certifiable() const;
};

SurfaceGraph flat_leaf(double s, int dim = 1);

struct Foliation {
    std::string label;
    std::function<SurfaceGraph(double)> leaf;
    double param_lo = 0.0;
    double param_hi = 0.0;
};

Foliation standard_foliation(int dim = 1);

// Nested compact intervals K_1 c interior(K_2) c ... on the base leaf (d = 1).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct Exhaustion {
    std::vector<Interval> regions;
};

/// Throws std::invalid_argument unless strictly nested.
Exhaustion make_exhaustion(std::vector<Interval> regions);

struct SampleSpec {
    double radius = 5.0;
    int count = 2000;
    std::uint64_t seed = 1;
};

struct LipschitzEstimate {
    double estimate = 0.0;
    Point witness_a;
    Point witness_b;
};

/// Max of |f(x)-f(y)| / |x-y| over sampled pairs; throws on count < 2.
LipschitzEstimate lipschitz_estimate(const SurfaceGraph& s, const SampleSpec& spec);

/// Sigma_minus of the covering construction: T_-(x) = min(0, min_k(t_k + |x - x_k|)).
/// Achronal 1-Lipschitz graph with A c J^+(graph), flat (== 0) outside a
/// bounded region.
SurfaceGraph construct_sigma_minus(const CompactCloud& a);

/// Time mirror: T_+(x) = max(0, max_k(t_k - |x - x_k|)), A c J^-(graph).
SurfaceGraph construct_sigma_plus(const CompactCloud& a);

/// Deforms the flat leaf t = 0 into a spacelike piecewise-linear graph through
/// every given point, zero outside the exhaustion interiors (d = 1 only).
/// Throws std::invalid_argument naming the first failing hypothesis (i), (ii),
/// (iii), or slope-cap infeasibility.
SurfaceGraph deform_surface(const std::vector<Point>& points, const Exhaustion& e,
                            double slope_cap = 0.9);

struct SliceSearchSpec {
    double r_max = 1000.0;
    int density = 64;
    std::vector<double> rungs;  // defaults to powers of 10 up to r_max
    std::uint64_t seed = 1;
};

struct SliceWitness {
    double radius = 0.0;
    Spatial x{0.0, 0.0};
    double t = 0.0;
    bool has_log_t = false;
    double log_t = 0.0;
};

struct SliceResult {
    enum class Kind { Bounded, Unbounded, Inconclusive } kind = Kind::Inconclusive;
    double r_max = 0.0;  // valid for Bounded
    std::vector<SliceWitness> witnesses;
    std::string note;
};

/// Certifies or refutes boundedness of A intersected with the graph of S.
SliceResult slice_bound(const AnalyticSet& a, const SurfaceGraph& s,
                        const SliceSearchSpec& spec);

}  // namespace causalkit

#endif
