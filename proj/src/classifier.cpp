#include "causalkit/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace causalkit {

std::string to_string(CompactnessKind k) {
    switch (k) {
        case CompactnessKind::SC: return "spacelike compact";
        case CompactnessKind::FC: return "future compact";
        case CompactnessKind::PC: return "past compact";
        case CompactnessKind::TC: return "timelike compact";
        case CompactnessKind::FSC: return "future spacelike compact";
        case CompactnessKind::PSC: return "past spacelike compact";
    }
    return "?";
}

const VerdictEntry& Verdict::entry(CompactnessKind k) const {
    switch (k) {
        case CompactnessKind::SC: return sc;
        case CompactnessKind::FC: return fc;
        case CompactnessKind::PC: return pc;
        case CompactnessKind::TC: return tc;
        case CompactnessKind::FSC: return fsc;
        case CompactnessKind::PSC: return psc;
    }
    return sc;
}

std::vector<double> SearchBudget::rungs() const {
    std::vector<double> out;
    for (double r = radius0; r <= radius_cap * (1.0 + 1e-12); r *= 10.0) out.push_back(r);
    while (out.size() < 3) out.push_back(out.back() * 10.0);
    return out;
}

std::vector<SurfaceGraph> adversarial_surfaces(const SearchBudget& b, int dim) {
    std::vector<SurfaceGraph> fam;
    for (int i = 0; i < b.leaf_count; ++i) {
        const double s = b.leaf_lo + (b.leaf_hi - b.leaf_lo) * i / std::max(1, b.leaf_count - 1);
        fam.push_back(flat_leaf(s, dim));
    }
    for (double v : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        fam.push_back(boost_plane(v, dim).surface);
        fam.push_back(boost_plane(-v, dim).surface);
    }
    // (c, a) grid kept inside the spacelike window |c| sqrt(2a) < sqrt(e);
    // the (1, 1) entry is the Gaussian-band counterexample surface.
    const std::pair<double, double> grid[] = {{1.0, 1.0}, {0.5, 0.5}, {0.5, 1.0},
                                              {1.0, 0.5}, {1.5, 0.5}};
    for (const auto& [c, aa] : grid) {
        fam.push_back(scaled_gaussian_surface(c, aa, dim));
        fam.push_back(scaled_gaussian_surface(-c, aa, dim));
    }
    return fam;
}

namespace {

// Candidate members of A with |x| ~ r, drawn from the analytic envelopes
// first (the sampler cannot reach radii where the set's time values fall
// outside double range) and the sampler second.
std::vector<Point> members_at_radius(const AnalyticSet& a, double r, std::uint64_t seed) {
    const int dim = a.ambient.dim;
    std::vector<Point> found;
    auto consider = [&](const Point& p) {
        if (a.member(p)) found.push_back(p);
    };
    const int nang = (dim == 1) ? 2 : 8;
    for (int i = 0; i < nang; ++i) {
        Spatial x{0.0, 0.0};
        if (dim == 1)
            x[0] = (i == 0) ? r : -r;
        else {
            const double ang = 2.0 * M_PI * i / nang;
            x = {r * std::cos(ang), r * std::sin(ang)};
        }
        if (a.lower_envelope && a.upper_envelope) {
            const double lo = a.lower_envelope->f(x);
            const double hi = a.upper_envelope->f(x);
            for (double t : {lo, 0.5 * (lo + hi), hi, lo + 1e-6 * (hi - lo),
                             hi - 1e-6 * (hi - lo)})
                consider(Point{t, x, dim});
        } else if (a.upper_envelope) {
            consider(Point{a.upper_envelope->f(x), x, dim});
        } else if (a.lower_envelope) {
            consider(Point{a.lower_envelope->f(x), x, dim});
        }
    }
    if (found.empty() && a.sample) {
        for (const auto& p : a.sample(r, 256, seed))
            if (spatial_norm(p.x, dim) >= 0.5 * r && a.member(p)) found.push_back(p);
    }
    return found;
}

std::vector<Point> witness_grid_points(const SearchBudget& b, int dim) {
    std::vector<Point> grid;
    const int g = std::max(1, b.witness_grid);
    for (int i = -g; i <= g; ++i) {
        for (int j = -g; j <= g; ++j) {
            const double t = b.witness_t * i / g;
            const double x = b.witness_r * j / g;
            grid.push_back(Point{t, {x, 0.0}, dim});
        }
    }
    std::sort(grid.begin(), grid.end(), [](const Point& a, const Point& c) {
        const double ka = std::abs(a.t) + std::abs(a.x[0]);
        const double kc = std::abs(c.t) + std::abs(c.x[0]);
        if (ka != kc) return ka < kc;
        if (a.t != c.t) return a.t < c.t;
        return a.x[0] < c.x[0];
    });
    return grid;
}

std::vector<Point> fresh_samples(const AnalyticSet& a, const SearchBudget& b,
                                 std::uint64_t salt) {
    if (!a.sample) return {};
    return a.sample(b.sample_radius, b.sample_count, b.seed + salt);
}

// Shared future/past classifier; future == true decides future compactness
// (A c J^-(Sigma); refuted by a point p with A cap J^+(p) unbounded).
VerdictEntry classify_time_compact(const AnalyticSet& a, const SearchBudget& b, bool future) {
    VerdictEntry out;
    const int dim = a.ambient.dim;
    const auto rungs = b.rungs();
    const std::size_t first_far = rungs.size() - 3;

    // Refutation: a witness point whose cone holds members at every far rung.
    for (const Point& p : witness_grid_points(b, dim)) {
        std::vector<SliceWitness> far;
        for (std::size_t i = first_far; i < rungs.size(); ++i) {
            bool got = false;
            for (const auto& m : members_at_radius(a, rungs[i], b.seed + i)) {
                const double d = spatial_dist(m, p);
                const bool in_cone = future ? (m.t - p.t >= d) : (p.t - m.t >= d);
                if (in_cone) {
                    far.push_back(SliceWitness{spatial_norm(m.x, dim), m.x, m.t, false, 0.0});
                    got = true;
                    break;
                }
            }
            if (!got) break;
        }
        if (far.size() == 3) {
            out.status = VerdictEntry::Status::Refutation;
            out.refuting_point = p;
            out.witnesses = std::move(far);
            out.detail = std::string("members of A in J") + (future ? "+" : "-") +
                         "(p) at the last three radius rungs";
            return out;
        }
    }

    // Certificate: first an analytic envelope that is a Cauchy graph, then
    // the sigma construction over a padded sample cloud.
    auto verify = [&](const SurfaceGraph& s) {
        const auto samples = fresh_samples(a, b, 7919);
        if (samples.empty()) return false;
        for (const auto& p : samples) {
            const double fv = s.f(p.x);
            if (future ? !(p.t <= fv) : !(p.t >= fv)) return false;
        }
        for (std::size_t i = first_far; i < rungs.size(); ++i) {
            for (const auto& m : members_at_radius(a, rungs[i], b.seed + 31 * i)) {
                const double fv = s.f(m.x);
                if (future ? !(m.t <= fv) : !(m.t >= fv)) return false;
            }
        }
        return true;
    };

    const auto& envelope = future ? a.upper_envelope : a.lower_envelope;
    if (envelope && envelope->cauchy_certifiable() && verify(*envelope)) {
        out.status = VerdictEntry::Status::Certificate;
        out.surface = *envelope;
        out.detail = "analytic envelope surface " + envelope->label;
        return out;
    }

    auto proposal = fresh_samples(a, b, 0);
    if (!proposal.empty()) {
        for (auto& p : proposal) p.t += future ? b.radius0 : -b.radius0;
        const auto cloud = make_cloud(std::move(proposal), Spacetime::minkowski(dim));
        const SurfaceGraph sigma =
            future ? construct_sigma_plus(cloud) : construct_sigma_minus(cloud);
        if (verify(sigma)) {
            out.status = VerdictEntry::Status::Certificate;
            out.surface = sigma;
            out.detail = std::string(future ? "sigma_plus" : "sigma_minus") +
                         " over the padded sample cloud";
            return out;
        }
    }

    out.detail = "no refuting point on the grid; no verifiable certificate surface";
    return out;
}

}  // namespace

VerdictEntry classify_spacelike_compact(const AnalyticSet& a, const SearchBudget& b) {
    VerdictEntry out;
    SliceSearchSpec spec;
    spec.r_max = b.radius_cap;
    spec.rungs = b.rungs();
    spec.seed = b.seed;

    for (const auto& s : adversarial_surfaces(b, a.ambient.dim)) {
        const SliceResult res = slice_bound(a, s, spec);
        if (res.kind == SliceResult::Kind::Unbounded) {
            out.status = VerdictEntry::Status::Refutation;
            out.refuting_surface = s.label;
            out.witnesses = res.witnesses;
            out.detail = "unbounded slice on " + s.label;
            return out;
        }
    }

    if (a.containing_cloud) {
        bool ok = true;
        for (const auto& p : fresh_samples(a, b, 7919)) {
            if (!in_causal_set(*a.containing_cloud, p, Direction::Both)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.status = VerdictEntry::Status::Certificate;
            out.cloud = a.containing_cloud;
            out.detail = "sampled A c J(K) for the declared cloud";
            return out;
        }
    }

    out.detail = "no unbounded slice found; no verified containing cloud";
    return out;
}

VerdictEntry classify_future_compact(const AnalyticSet& a, const SearchBudget& b) {
    return classify_time_compact(a, b, /*future=*/true);
}

VerdictEntry classify_past_compact(const AnalyticSet& a, const SearchBudget& b) {
    return classify_time_compact(a, b, /*future=*/false);
}

namespace {

VerdictEntry conjunction(const VerdictEntry& lhs, const VerdictEntry& rhs,
                         const char* lname, const char* rname) {
    VerdictEntry out;
    using S = VerdictEntry::Status;
    if (lhs.status == S::Refutation || rhs.status == S::Refutation) {
        out.status = S::Refutation;
        out.detail = std::string("refuted via ") +
                     (lhs.status == S::Refutation ? lname : rname);
    } else if (lhs.status == S::Certificate && rhs.status == S::Certificate) {
        out.status = S::Certificate;
        out.detail = std::string("certified as ") + lname + " and " + rname;
    } else {
        out.detail = std::string("conjunction of ") + lname + " and " + rname +
                     " is inconclusive";
    }
    return out;
}

}  // namespace

Verdict classify(const AnalyticSet& a, const SearchBudget& b) {
    Verdict v;
    v.sc = classify_spacelike_compact(a, b);
    v.fc = classify_future_compact(a, b);
    v.pc = classify_past_compact(a, b);
    v.tc = conjunction(v.fc, v.pc, "fc", "pc");
    v.fsc = conjunction(v.sc, v.fc, "sc", "fc");
    v.psc = conjunction(v.sc, v.pc, "sc", "pc");
    return v;
}

SandwichResult foliation_sandwich(const AnalyticSet& a, const Foliation& f,
                                  const SearchBudget& b) {
    SandwichResult out;
    const int dim = a.ambient.dim;

    std::vector<Point> members = fresh_samples(a, b, 0);
    const auto rungs = b.rungs();
    for (std::size_t i = rungs.size() - 3; i < rungs.size(); ++i)
        for (const auto& m : members_at_radius(a, rungs[i], b.seed + i)) members.push_back(m);
    if (members.empty()) return out;

    const int n = 41;
    std::vector<double> params;
    const bool log_grid = f.param_lo > 0.0;
    for (int i = 0; i < n; ++i) {
        if (log_grid) {
            const double e = std::log(f.param_lo) +
                             (std::log(f.param_hi) - std::log(f.param_lo)) * i / (n - 1);
            params.push_back(std::exp(e));
        } else {
            params.push_back(f.param_lo + (f.param_hi - f.param_lo) * i / (n - 1));
        }
    }

    auto below_all = [&](double s) {
        const SurfaceGraph leaf = f.leaf(s);
        for (const auto& m : members)
            if (!(m.t >= leaf.f(m.x))) return false;
        return true;
    };
    auto above_all = [&](double s) {
        const SurfaceGraph leaf = f.leaf(s);
        for (const auto& m : members)
            if (!(m.t <= leaf.f(m.x))) return false;
        return true;
    };

    std::optional<double> s_minus, s_plus;
    for (double s : params)
        if (below_all(s)) s_minus = s;  // keep the largest
    for (auto it = params.rbegin(); it != params.rend(); ++it)
        if (above_all(*it)) s_plus = *it;  // keep the smallest

    if (s_minus && s_plus && *s_minus < *s_plus) {
        out.range = std::make_pair(*s_minus, *s_plus);
        return out;
    }

    // No sandwich: report members escaping the extreme leaves.
    const SurfaceGraph bottom = f.leaf(params.front());
    const SurfaceGraph top = f.leaf(params.back());
    for (const auto& m : members) {
        if (m.t < bottom.f(m.x) || m.t > top.f(m.x)) {
            out.witnesses.push_back(m);
            if (out.witnesses.size() >= 3) break;
        }
    }
    return out;
}

std::vector<CurveIntersection> causal_curve_intersections(const AnalyticSet& a,
                                                          const SearchBudget& b) {
    std::vector<CurveIntersection> report;
    const int dim = a.ambient.dim;
    const auto rungs = b.rungs();

    auto scan_extent = [&](auto member_at, double lo, double hi, int steps,
                           CurveIntersection& ci) {
        bool any = false;
        double plo = 0.0, phi = 0.0;
        auto consider = [&](double u) {
            if (!member_at(u)) return;
            if (!any) {
                plo = phi = u;
                any = true;
            } else {
                plo = std::min(plo, u);
                phi = std::max(phi, u);
            }
        };
        for (int i = 0; i <= steps; ++i) consider(lo + (hi - lo) * i / steps);
        if (!any) {
            ci.kind = CurveIntersection::Kind::Empty;
            return;
        }
        // Far probes decide bounded vs unbounded.
        int far = 0;
        for (std::size_t i = rungs.size() - 3; i < rungs.size(); ++i)
            if (member_at(rungs[i]) || member_at(-rungs[i])) ++far;
        ci.kind = far == 3 ? CurveIntersection::Kind::Unbounded
                           : CurveIntersection::Kind::Bounded;
        ci.param_lo = plo;
        ci.param_hi = phi;
    };

    const int g = std::max(1, b.witness_grid);
    for (int j = -g; j <= g; ++j) {
        const double c = b.witness_r * j / g;
        const Spatial x{c, 0.0};
        CurveIntersection ci;
        ci.curve = "vertical(x=" + std::to_string(c) + ")";
        auto member_at = [&](double t) { return a.member(Point{t, x, dim}); };

        double lo = -b.witness_t, hi = b.witness_t;
        if (a.lower_envelope && a.upper_envelope) {
            lo = std::min(lo, a.lower_envelope->f(x));
            hi = std::max(hi, a.upper_envelope->f(x));
        }
        scan_extent(member_at, lo, hi, 400, ci);
        // Envelope edges are often the exact boundary of the intersection.
        if (ci.kind == CurveIntersection::Kind::Bounded && a.lower_envelope &&
            a.upper_envelope) {
            const double el = a.lower_envelope->f(x);
            const double eh = a.upper_envelope->f(x);
            if (member_at(el)) ci.param_lo = std::min(ci.param_lo, el);
            if (member_at(eh)) ci.param_hi = std::max(ci.param_hi, eh);
        }
        report.push_back(ci);
    }

    const int nang = (dim == 1) ? 2 : 8;
    for (int i = 0; i < nang; ++i) {
        Spatial u{1.0, 0.0};
        if (dim == 1)
            u[0] = (i == 0) ? 1.0 : -1.0;
        else {
            const double ang = 2.0 * M_PI * i / nang;
            u = {std::cos(ang), std::sin(ang)};
        }
        CurveIntersection ci;
        ci.curve = "boost_curve(x=" + std::to_string(u[0]) +
                   (dim == 2 ? "," + std::to_string(u[1]) : std::string()) + ")";
        auto member_at = [&](double tau) {
            if (std::abs(tau) > 30.0) return false;  // cosh overflow guard
            return a.member(boost_curve(u, tau, dim));
        };
        scan_extent(member_at, -6.0, 6.0, 400, ci);

        // A member causally above the curve's tau = 0 point, when one exists.
        const Point base = boost_curve(u, 0.0, dim);
        for (const auto& m : members_at_radius(a, std::sqrt(2.0), b.seed)) {
            if (m.t - base.t >= spatial_dist(m, base)) {
                ci.past_witness = m;
                break;
            }
        }
        if (!ci.past_witness) {
            for (const auto& m : fresh_samples(a, b, 0)) {
                if (m.t - base.t >= spatial_dist(m, base)) {
                    ci.past_witness = m;
                    break;
                }
            }
        }
        report.push_back(ci);
    }
    return report;
}

}  // namespace causalkit
