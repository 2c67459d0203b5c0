#include "causalkit/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "causalkit/sets.hpp"

namespace causalkit {

bool SurfaceGraph::cauchy_certifiable() const {
    if (lipschitz_bound < 1.0) return true;
    return lipschitz_bound <= 1.0 && flat_outside;
}

SurfaceGraph flat_leaf(double s, int dim) {
    SurfaceGraph g;
    g.label = "leaf(t=" + std::to_string(s) + ")";
    g.kind = SurfaceGraph::Kind::Spacelike;
    g.ambient = Spacetime::minkowski(dim);
    g.f = [s](const Spatial&) { return s; };
    g.lipschitz_bound = 0.0;
    g.flat_outside = true;
    g.flat_value = s;
    g.flat_radius = 0.0;
    return g;
}

Foliation standard_foliation(int dim) {
    Foliation f;
    f.label = "standard";
    f.leaf = [dim](double s) { return flat_leaf(s, dim); };
    f.param_lo = -100.0;
    f.param_hi = 100.0;
    return f;
}

Exhaustion make_exhaustion(std::vector<Interval> regions) {
    for (std::size_t i = 0; i < regions.size(); ++i) {
        if (!(regions[i].lo < regions[i].hi))
            throw std::invalid_argument("Exhaustion: degenerate interval");
        if (i > 0 && !(regions[i].lo < regions[i - 1].lo && regions[i - 1].hi < regions[i].hi))
            throw std::invalid_argument("Exhaustion: intervals must be strictly nested");
    }
    return Exhaustion{std::move(regions)};
}

LipschitzEstimate lipschitz_estimate(const SurfaceGraph& s, const SampleSpec& spec) {
    if (spec.count < 2) throw std::invalid_argument("lipschitz_estimate: need >= 2 samples");
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> coord(-spec.radius, spec.radius);
    const int dim = s.ambient.dim;

    auto draw = [&]() {
        Spatial x{coord(rng), 0.0};
        if (dim == 2) x[1] = coord(rng);
        return x;
    };

    LipschitzEstimate best;
    for (int i = 0; i < spec.count; ++i) {
        const Spatial a = draw();
        const Spatial b = draw();
        const double d = spatial_norm(spatial_sub(a, b), dim);
        if (d == 0.0) continue;
        const double slope = std::abs(s.f(a) - s.f(b)) / d;
        if (slope > best.estimate) {
            best.estimate = slope;
            best.witness_a = s.at(a);
            best.witness_b = s.at(b);
        }
    }
    return best;
}

namespace {

SurfaceGraph cone_hull_surface(const CompactCloud& a, bool past) {
    const int dim = a.ambient.dim;
    double flat_r = 0.0;
    for (const auto& k : a.points)
        flat_r = std::max(flat_r, spatial_norm(k.x, dim) + std::abs(k.t));

    auto pts = a.points;
    auto eval = [pts, dim, past](const Spatial& x) {
        double best = 0.0;
        for (const auto& k : pts) {
            const double d = spatial_norm(spatial_sub(x, k.x), dim);
            const double v = past ? k.t + d : k.t - d;
            best = past ? std::min(best, v) : std::max(best, v);
        }
        return best;
    };

    SurfaceGraph g;
    g.label = past ? "sigma_minus" : "sigma_plus";
    g.kind = SurfaceGraph::Kind::Achronal;
    g.ambient = a.ambient;
    g.f = eval;
    g.lipschitz_bound = 1.0;
    g.flat_outside = true;
    g.flat_value = 0.0;
    g.flat_radius = flat_r;
    return g;
}

}  // namespace

SurfaceGraph construct_sigma_minus(const CompactCloud& a) {
    if (a.ambient.kind != Geometry::FullMinkowski)
        throw std::invalid_argument("construct_sigma_minus: ambient must be full Minkowski");
    return cone_hull_surface(a, /*past=*/true);
}

SurfaceGraph construct_sigma_plus(const CompactCloud& a) {
    if (a.ambient.kind != Geometry::FullMinkowski)
        throw std::invalid_argument("construct_sigma_plus: ambient must be full Minkowski");
    return cone_hull_surface(a, /*past=*/false);
}

SurfaceGraph deform_surface(const std::vector<Point>& points, const Exhaustion& e,
                            double slope_cap) {
    if (!(slope_cap > 0.0 && slope_cap < 1.0))
        throw std::invalid_argument("deform_surface: slope_cap must be in (0, 1)");

    SurfaceGraph g;
    g.label = "deformed_leaf";
    g.kind = SurfaceGraph::Kind::Spacelike;
    g.ambient = Spacetime::minkowski(1);
    g.lipschitz_bound = slope_cap;
    g.flat_outside = true;
    g.flat_value = 0.0;

    if (points.empty()) {
        g.f = [](const Spatial&) { return 0.0; };
        g.lipschitz_bound = 0.0;
        return g;
    }
    if (points.size() > e.regions.size())
        throw std::invalid_argument("deform_surface: fewer exhaustion regions than points");

    std::vector<std::pair<double, double>> knots;
    for (std::size_t n = 0; n < points.size(); ++n) {
        const Point& p = points[n];
        if (p.dim != 1 || !std::isfinite(p.t) || !std::isfinite(p.x[0]))
            throw std::invalid_argument("deform_surface: hypothesis (i) fails: point " +
                                        std::to_string(n + 1) + " is not a finite d=1 event");
        const Interval& kn = e.regions[n];
        const double shadow_lo = p.x[0] - std::abs(p.t);
        const double shadow_hi = p.x[0] + std::abs(p.t);
        // (ii): J(B_n) meets the base leaf inside the interior of K_n.
        if (!(kn.lo < shadow_lo && shadow_hi < kn.hi))
            throw std::invalid_argument(
                "deform_surface: hypothesis (ii) fails: J(B_" + std::to_string(n + 1) +
                ") on the base leaf is not inside the interior of K_" + std::to_string(n + 1));
        // (iii): J(B_{n+1}) avoids K_n.
        if (n > 0) {
            const Interval& prev = e.regions[n - 1];
            if (shadow_hi >= prev.lo && shadow_lo <= prev.hi)
                throw std::invalid_argument(
                    "deform_surface: hypothesis (iii) fails: J(B_" + std::to_string(n + 1) +
                    ") meets K_" + std::to_string(n));
        }
        const double w = std::abs(p.t) / slope_cap;
        const double base_lo = p.x[0] - w;
        const double base_hi = p.x[0] + w;
        if (!(kn.lo < base_lo && base_hi < kn.hi) ||
            (n > 0 && base_hi >= e.regions[n - 1].lo && base_lo <= e.regions[n - 1].hi))
            throw std::invalid_argument(
                "deform_surface: slope cap infeasible for point " + std::to_string(n + 1) +
                ": |t| must stay below slope_cap times the room left by the exhaustion");
        if (p.t != 0.0) {
            knots.emplace_back(base_lo, 0.0);
            knots.emplace_back(p.x[0], p.t);
            knots.emplace_back(base_hi, 0.0);
        }
    }
    std::sort(knots.begin(), knots.end());

    double flat_r = 0.0;
    for (const auto& [x, y] : knots) flat_r = std::max(flat_r, std::abs(x));
    g.flat_radius = flat_r;
    g.knots = knots;
    g.f = [knots](const Spatial& xv) {
        const double x = xv[0];
        if (knots.empty() || x <= knots.front().first || x >= knots.back().first) return 0.0;
        auto it = std::upper_bound(knots.begin(), knots.end(), std::make_pair(x, 1e300));
        const auto& [x1, y1] = *it;
        const auto& [x0, y0] = *(it - 1);
        if (x1 == x0) return y0;
        return y0 + (y1 - y0) * ((x - x0) / (x1 - x0));
    };
    return g;
}

namespace {

std::vector<double> default_rungs(double r_max) {
    std::vector<double> rungs;
    for (double r = 1.0; r <= r_max * (1.0 + 1e-12); r *= 10.0) rungs.push_back(r);
    while (rungs.size() < 3) rungs.insert(rungs.begin(), rungs.front() / 10.0);
    return rungs;
}

// Membership of the surface point above x, in log form when both sides
// support it (keeps Gaussian-tail products finite).
bool on_surface_member(const AnalyticSet& a, const SurfaceGraph& s, const Spatial& x,
                       SliceWitness* w) {
    const int dim = s.ambient.dim;
    if (a.member_logt && s.log_f) {
        const double lt = s.log_f(x);
        if (std::isfinite(lt) && a.member_logt(lt, x)) {
            if (w) *w = SliceWitness{spatial_norm(x, dim), x, s.f(x), true, lt};
            return true;
        }
        return false;
    }
    const Point p{s.f(x), x, dim};
    if (a.member(p)) {
        if (w) *w = SliceWitness{spatial_norm(x, dim), x, p.t, false, 0.0};
        return true;
    }
    return false;
}

}  // namespace

SliceResult slice_bound(const AnalyticSet& a, const SurfaceGraph& s,
                        const SliceSearchSpec& spec) {
    const int dim = s.ambient.dim;
    std::vector<double> rungs = spec.rungs.empty() ? default_rungs(spec.r_max) : spec.rungs;

    auto probe_radius = [&](double r, SliceWitness* w) {
        const int nang = (dim == 1) ? 2 : std::max(4, spec.density);
        for (int i = 0; i < nang; ++i) {
            Spatial x{0.0, 0.0};
            if (dim == 1) {
                x[0] = (i == 0) ? r : -r;
            } else {
                const double ang = 2.0 * M_PI * i / nang;
                x = {r * std::cos(ang), r * std::sin(ang)};
            }
            if (on_surface_member(a, s, x, w)) return true;
        }
        return false;
    };

    // Refutation: members on the surface at the last three rungs.
    if (rungs.size() >= 3) {
        std::vector<SliceWitness> far;
        bool all = true;
        for (std::size_t i = rungs.size() - 3; i < rungs.size(); ++i) {
            SliceWitness w;
            if (probe_radius(rungs[i], &w)) {
                far.push_back(w);
            } else {
                all = false;
                break;
            }
        }
        if (all) {
            SliceResult res;
            res.kind = SliceResult::Kind::Unbounded;
            res.witnesses = std::move(far);
            res.note = "members found at the last three radius rungs";
            return res;
        }
    }

    // Analytic certificate from A c J(K) against a uniformly spacelike graph.
    if (a.containing_cloud && s.lipschitz_bound < 1.0) {
        double r = 0.0;
        for (const auto& k : a.containing_cloud->points) {
            const double fk = s.f(k.x);
            r = std::max(r, spatial_norm(k.x, dim) +
                                std::abs(k.t - fk) / (1.0 - s.lipschitz_bound));
        }
        return SliceResult{SliceResult::Kind::Bounded, r, {}, "cone bound from A c J(K)"};
    }

    // Analytic per-leaf bound against a flat leaf.
    if (a.slice_radius_bound && s.lipschitz_bound == 0.0 && s.flat_outside) {
        const auto b = a.slice_radius_bound(s.flat_value);
        return SliceResult{SliceResult::Kind::Bounded, b.value_or(0.0), {},
                           b ? "analytic slice-radius bound" : "empty slice"};
    }

    SliceResult res;
    res.kind = SliceResult::Kind::Inconclusive;
    res.note = "no analytic bound and no far members found up to r_max";
    return res;
}

}  // namespace causalkit
