// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion re-derives its expected values from an independent
// oracle (closed form, BFS sweep, or direct predicate evaluation) rather than
// trusting the module under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "causalkit/classifier.hpp"
#include "causalkit/wave.hpp"

using namespace causalkit;
using Status = VerdictEntry::Status;

namespace {

int g_failures = 0;

void run(int idx, const std::string& name, const std::function<void()>& body,
         double budget_s) {
    const auto start = std::chrono::steady_clock::now();
    std::string err;
    try {
        body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (err.empty() && secs <= budget_s) {
        std::printf("criterion %d (%s): PASS (%.2f s)\n", idx, name.c_str(), secs);
    } else {
        ++g_failures;
        if (err.empty()) err = "runtime budget exceeded";
        std::printf("criterion %d (%s): FAIL (%.2f s) %s\n", idx, name.c_str(), secs,
                    err.c_str());
    }
    std::fflush(stdout);
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

// ---- criterion 1: the gaussian band counterexample -------------------------

void criterion1() {
    const auto a = gaussian_band(1);
    // (a) 50 leaves over (0, 4/3], each slice bounded within sqrt(ln(4/(3t)))
    for (int i = 1; i <= 50; ++i) {
        const double t = (4.0 / 3.0) * i / 50.0;
        const auto res = slice_bound(a, flat_leaf(t, 1), SliceSearchSpec{});
        require(res.kind == SliceResult::Kind::Bounded, "leaf slice not bounded");
        const double analytic = std::sqrt(std::max(0.0, std::log(4.0 / (3.0 * t))));
        require(res.r_max <= analytic + 1e-9, "slice bound exceeds the analytic radius");
    }
    // (b) refutation through the gaussian surface with far witnesses
    const auto v = classify(a, SearchBudget{});
    require(v.sc.status == Status::Refutation, "verdict is not 'not spacelike compact'");
    require(v.sc.refuting_surface.find("gaussian") != std::string::npos,
            "refuting surface is not the gaussian graph");
    require(v.sc.witnesses.size() >= 3, "fewer than 3 refutation witnesses");
    double seen1 = 0, seen10 = 0, seen100 = 0;
    for (const auto& w : v.sc.witnesses) {
        const double r = spatial_norm(w.x, 1);
        if (r >= 1.0) seen1 = 1;
        if (r >= 10.0) seen10 = 1;
        if (r >= 100.0) seen100 = 1;
        // membership identity e^{r^2} t == 1, exact in log space
        require(w.has_log_t, "witness lacks log-time payload");
        require(w.log_t + r * r == 0.0, "witness product identity not exact");
    }
    require(seen1 + seen10 + seen100 == 3, "witness radii do not reach {1, 10, 100}");
}

// ---- criterion 2: J(K) certificates against the adversarial family ---------

void criterion2() {
    const SearchBudget b{};
    const auto family = adversarial_surfaces(b, 1);
    require(family.size() >= 30, "adversarial family smaller than 30");
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Point> pts;
        const int npts = 2 + int(rng() % 5);
        for (int i = 0; i < npts; ++i) pts.push_back(make_point(u(rng), u(rng)));
        const auto a = causal_region(make_cloud(pts, Spacetime::minkowski(1)));
        const auto e = classify_spacelike_compact(a, b);
        require(e.status == Status::Certificate, "sc certificate not found for J(K)");
        require(e.cloud.has_value(), "certificate carries no cloud");
        for (const auto& s : family) {
            const auto r = slice_bound(a, s, SliceSearchSpec{});
            require(r.kind != SliceResult::Kind::Unbounded,
                    "false refutation of J(K) on surface " + s.label);
        }
    }
}

// ---- criterion 3: the covering surface against a lattice BFS oracle --------

// Earliest-arrival BFS from a single lattice source; unit speed, unit steps.
std::vector<double> bfs_from(int j0, double t0, int jhalf) {
    std::vector<double> dist(2 * jhalf + 1, 1e300);
    std::deque<std::pair<int, int>> q;  // (j, level)
    std::vector<char> seen(2 * jhalf + 1, 0);
    q.push_back({j0, 0});
    seen[j0 + jhalf] = 1;
    while (!q.empty()) {
        auto [j, lvl] = q.front();
        q.pop_front();
        dist[j + jhalf] = t0 + lvl;
        for (int dj : {-1, 1}) {
            const int nj = j + dj;
            if (std::abs(nj) <= jhalf && !seen[nj + jhalf]) {
                seen[nj + jhalf] = 1;
                q.push_back({nj, lvl + 1});
            }
        }
    }
    return dist;
}

void criterion3() {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-8.0, 8.0);
    const int jhalf = 40;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Point> pts;
        const int npts = 3 + int(rng() % 5);
        for (int i = 0; i < npts; ++i) pts.push_back(make_point(u(rng), u(rng)));
        const auto k = make_cloud(pts, Spacetime::minkowski(1));
        const auto sig = construct_sigma_minus(k);

        // 1-Lipschitz on 10^4 sampled pairs
        std::uniform_real_distribution<double> w(-50.0, 50.0);
        for (int i = 0; i < 10000; ++i) {
            const double xa = w(rng), xb = w(rng);
            const double gap =
                std::abs(sig.f(Spatial{xa, 0.0}) - sig.f(Spatial{xb, 0.0}));
            require(gap <= std::abs(xa - xb) + 1e-12, "Lipschitz violation");
        }
        // exact containment of every cloud point in J^+(graph)
        for (const auto& p : k.points)
            require(causally_precedes(sig.at(p.x), p, k.ambient),
                    "cloud point outside J^+(Sigma_-)");

        // BFS oracle on the snapped cloud, agreement within one lattice cell
        std::vector<double> oracle(2 * jhalf + 1, 0.0);
        std::vector<std::vector<double>> per;
        for (const auto& p : k.points)
            per.push_back(bfs_from(int(std::lround(p.x[0])), std::lround(p.t), jhalf));
        for (int j = -jhalf; j <= jhalf; ++j) {
            double m = 0.0;
            for (const auto& d : per) m = std::min(m, d[j + jhalf]);
            oracle[j + jhalf] = m;
            const double exact = sig.f(Spatial{double(j), 0.0});
            require(std::abs(exact - m) <= 1.0 + 1e-12, "BFS oracle disagrees by > 1 cell");
        }
    }
}

// ---- criterion 4: the hyperbola band counterexample -------------------------

void criterion4() {
    const auto a = hyperbola_band(1);
    const auto v = classify(a, SearchBudget{});
    require(v.sc.status == Status::Certificate, "band not certified spacelike compact");
    require(v.fc.status == Status::Refutation, "future compactness not refuted");
    require(v.fc.refuting_point.has_value(), "no refuting point");
    require(v.fc.refuting_point->t == 0.0 && v.fc.refuting_point->x[0] == 0.0,
            "refuting point is not the origin");
    for (double want : {10.0, 100.0, 1000.0}) {
        bool found = false;
        for (const auto& w : v.fc.witnesses)
            found = found || std::abs(w.radius - want) <= 1e-6 * want;
        require(found, "missing member witness at radius " + std::to_string(want));
    }
    // past-compact certificate, re-verified on fresh samples
    require(v.pc.status == Status::Certificate && v.pc.surface.has_value(),
            "no past-compact certificate");
    const auto& sig = *v.pc.surface;
    for (const auto& p : a.sample(40.0, 500, 99))
        require(causally_precedes(sig.at(p.x), p, Spacetime::minkowski(1)),
                "sampled member below the certificate surface");

    // curve intersections: bounded everywhere, boost curves empty with a
    // member of A above them
    const auto rows = causal_curve_intersections(a, SearchBudget{});
    require(!rows.empty(), "no curve report");
    bool saw_boost = false;
    for (const auto& r : rows) {
        require(r.kind != CurveIntersection::Kind::Unbounded,
                "unbounded curve intersection on " + r.curve);
        if (r.curve.find("boost") != std::string::npos) {
            saw_boost = true;
            require(r.kind == CurveIntersection::Kind::Empty,
                    "boost curve meets the band");
            require(r.past_witness.has_value(), "boost curve has no J^-(A) witness");
            require(a.member(*r.past_witness), "past witness is not a member");
        }
    }
    require(saw_boost, "no boost curves tested");
    // spot check: boost curve points are never members
    for (double tau = -5.0; tau <= 5.0; tau += 0.25)
        require(!a.member(boost_curve(Spatial{1.0, 0.0}, tau)),
                "boost curve point inside the band");
}

// ---- criterion 5: the boosted plane and the foliation sandwich --------------

void criterion5() {
    const SearchBudget b{};
    const auto bp = boost_plane(0.5, 1);
    const auto v = classify(bp.set, b);
    require(v.fc.status == Status::Certificate, "no future-compact certificate");
    require(v.pc.status == Status::Certificate, "no past-compact certificate");
    require(v.tc.status == Status::Certificate, "plane not timelike compact");
    const auto sw = foliation_sandwich(bp.set, standard_foliation(1), b);
    require(!sw.range.has_value(), "sandwich unexpectedly succeeded");
    bool far = false;
    for (const auto& w : sw.witnesses) far = far || std::abs(w.t) >= 500.0;
    require(far, "no escaping witness with |t| >= 500");
}

// ---- criterion 6: lattice wave support, inverses, adjointness, energy -------

void criterion6() {
    const auto g = make_grid(1.0, 1.0, 2000, 1000);
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> amp(-2.0, 2.0);

    std::vector<LatticeField> sources;
    for (int s = 0; s < 20; ++s) {
        auto f = LatticeField::zeros(g);
        const int ncells = 3 + int(rng() % 10);
        for (int i = 0; i < ncells; ++i)
            f.at(1200 + int(rng() % 41), -40 + int(rng() % 81)) += amp(rng);
        sources.push_back(std::move(f));
    }

    for (std::size_t s = 0; s < sources.size(); ++s) {
        const auto& f = sources[s];
        const auto u = green_retarded(f);

        // exact cone support, tolerance 0.0: per row, the union of source
        // cones as merged intervals
        std::vector<std::array<int, 3>> cells;  // (n0, j0)
        for (int n = 0; n <= g.nt; ++n)
            for (int j = -g.jhalf; j <= g.jhalf; ++j)
                if (f.at(n, j) != 0.0) cells.push_back({n, j, 0});
        for (int n = 0; n <= g.nt; ++n) {
            std::vector<std::pair<int, int>> iv;
            for (const auto& c : cells)
                if (n >= c[0]) iv.push_back({c[1] - (n - c[0]), c[1] + (n - c[0])});
            std::sort(iv.begin(), iv.end());
            std::vector<std::pair<int, int>> merged;
            for (auto& p : iv) {
                if (!merged.empty() && p.first <= merged.back().second + 1)
                    merged.back().second = std::max(merged.back().second, p.second);
                else
                    merged.push_back(p);
            }
            int j = -g.jhalf;
            for (const auto& m : merged) {
                for (; j < m.first && j <= g.jhalf; ++j)
                    require(u.at(n, j) == 0.0, "support leaks outside the lattice cone");
                j = std::max(j, m.second + 1);
            }
            for (; j <= g.jhalf; ++j)
                require(u.at(n, j) == 0.0, "support leaks outside the lattice cone");
        }

        // P(E+ f) = f on interior nodes
        double fmax = 0.0;
        for (double v : f.values) fmax = std::max(fmax, std::abs(v));
        const auto pf = apply_wave_operator(u);
        for (int n = 1; n < g.nt; ++n)
            for (int j = -g.jhalf + 1; j < g.jhalf; ++j)
                require(std::abs(pf.at(n, j) - f.at(n, j)) <= 1e-12 * fmax,
                        "P(E+ f) != f");

    }

    // adjointness <E+ phi, f> = <phi, E- f>: a wider spatial extent so both
    // the future cone of phi and the past cone of f stay off the boundary
    const auto gw = make_grid(1.0, 1.0, 2000, 2100);
    for (int pair_i = 0; pair_i < 5; ++pair_i) {
        auto f = LatticeField::zeros(gw), phi = LatticeField::zeros(gw);
        for (int i = 0; i < 8; ++i) {
            f.at(990 + int(rng() % 21), -40 + int(rng() % 81)) += amp(rng);
            phi.at(990 + int(rng() % 21), -40 + int(rng() % 81)) += amp(rng);
        }
        const auto ep = green_retarded(phi);
        const auto em = green_advanced(f);
        double lhs = 0.0, rhs = 0.0;
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            lhs += ep.values[i] * f.values[i];
            rhs += phi.values[i] * em.values[i];
        }
        require(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)),
                "adjointness identity fails");
    }

    // energy drift over 10^3 homogeneous steps at lambda = 0.5
    const int steps = 1000, jh = 1030;
    std::vector<double> u0(2 * jh + 1, 0.0), u1(2 * jh + 1, 0.0);
    for (int j = -8; j <= 8; ++j) {
        u0[j + jh] = std::cos(0.3 * j) * std::exp(-0.2 * j * j);
        u1[j + jh] = u0[j + jh] * 0.9;
    }
    const auto u = solve_cauchy(u0, u1, steps, 0.5, 1.0);
    const double e0 = leapfrog_energy(u, steps);
    for (int n = 0; n < u.grid.nt; n += 25)
        require(std::abs(leapfrog_energy(u, n) - e0) <= 1e-8 * std::abs(e0),
                "energy drift exceeds 1e-8");
}

// ---- criterion 7: Cauchy evolution support gets an sc certificate -----------

void criterion7() {
    const int steps = 500, jh = 540;
    std::vector<double> u0(2 * jh + 1, 0.0), u1(2 * jh + 1, 0.0);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    for (int j = -6; j <= 6; ++j) {
        u0[j + jh] = amp(rng);
        u1[j + jh] = amp(rng);
    }
    const auto u = solve_cauchy(u0, u1, steps, 1.0, 1.0);

    // K = the initial support box in chart coordinates (data rows sit at
    // t = 0 and t = 1)
    std::vector<Point> box;
    for (int t = 0; t <= 1; ++t)
        for (int j = -6; j <= 6; ++j) box.push_back(make_point(t, j));
    const auto k = make_cloud(box, Spacetime::minkowski(1));
    std::vector<Point> support;
    for (int n = 0; n <= u.grid.nt; ++n)
        for (int j = -jh; j <= jh; ++j)
            if (u.at(n, j) != 0.0) support.push_back(make_point(n - steps, j));
    require(!support.empty(), "evolved field vanished");
    for (const auto& p : support)
        require(in_causal_set(k, p, Direction::Both),
                "evolved support escapes J(initial box)");

    // wrap the support as a set and let the classifier certify it
    AnalyticSet a;
    a.label = "evolved_support";
    a.ambient = Spacetime::minkowski(1);
    a.member = [u, steps, jh](const Point& p) {
        const int n = int(std::lround(p.t)) + steps;
        const int j = int(std::lround(p.x[0]));
        if (std::abs(p.t - std::lround(p.t)) > 0.25 ||
            std::abs(p.x[0] - std::lround(p.x[0])) > 0.25)
            return false;
        if (n < 0 || n > u.grid.nt || std::abs(j) > jh) return false;
        return u.at(n, j) != 0.0;
    };
    a.sample = [support](double, int count, std::uint64_t seed) {
        std::vector<Point> out;
        for (int i = 0; i < count; ++i)
            out.push_back(support[(seed + 131 * i) % support.size()]);
        return out;
    };
    a.containing_cloud = k;
    const auto e = classify_spacelike_compact(a, SearchBudget{});
    require(e.status == Status::Certificate, "no sc certificate for the evolved support");

    // truncated-tail data must be rejected, not misclassified
    std::vector<double> bad0(2 * jh + 1, 0.0), bad1(2 * jh + 1, 0.0);
    for (int j = -6; j <= 6; ++j) bad0[j + jh] = 1.0;
    for (int i = jh; i < 2 * jh + 1; ++i) bad1[i] = 0.1;  // tail cut at the edge
    bool rejected = false;
    try {
        solve_cauchy(bad0, bad1, steps, 1.0, 1.0);
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    require(rejected, "truncated-tail data was not rejected");
}

// ---- criterion 8: the duality table, all ordered combinations ---------------

void criterion8() {
    const SupportClass all[] = {SupportClass::Compact,      SupportClass::SC,
                                SupportClass::FSC,          SupportClass::PSC,
                                SupportClass::TC,           SupportClass::FC,
                                SupportClass::PC,           SupportClass::Unrestricted};
    int accepted = 0, rejected = 0;
    for (auto a : all) {
        for (auto b : all) {
            const bool dual = (a == SupportClass::SC && b == SupportClass::TC) ||
                              (a == SupportClass::TC && b == SupportClass::SC) ||
                              (a == SupportClass::FSC && b == SupportClass::PC) ||
                              (a == SupportClass::PC && b == SupportClass::FSC) ||
                              (a == SupportClass::PSC && b == SupportClass::FC) ||
                              (a == SupportClass::FC && b == SupportClass::PSC) ||
                              (a == SupportClass::Compact &&
                               b == SupportClass::Unrestricted) ||
                              (a == SupportClass::Unrestricted &&
                               b == SupportClass::Compact);
            require(PairingGuard::compatible(a, b) == dual,
                    "guard disagrees with the duality table on (" + to_string(a) + ", " +
                        to_string(b) + ")");
            (dual ? accepted : rejected) += 1;

            // the pairing itself enforces the guard
            const auto g = make_grid(1.0, 1.0, 2, 2);
            auto fa = LatticeField::zeros(g, a);
            auto fb = LatticeField::zeros(g, b);
            bool threw = false;
            try {
                pairing(fa, fb);
            } catch (const std::invalid_argument&) {
                threw = true;
            }
            require(threw != dual, "pairing guard mismatch");
        }
    }
    // six proper duality identities plus the compact/unrestricted row
    require(accepted == 8 && rejected == 56, "unexpected acceptance count");
}

}  // namespace

int main() {
    run(1, "gaussian band counterexample", criterion1, 5.0);
    run(2, "J(K) certificates vs adversarial family", criterion2, 30.0);
    run(3, "covering surface vs BFS oracle", criterion3, 60.0);
    run(4, "hyperbola band counterexample", criterion4, 10.0);
    run(5, "boosted plane and foliation sandwich", criterion5, 30.0);
    run(6, "lattice wave support and inverses", criterion6, 60.0);
    run(7, "Cauchy evolution support certificate", criterion7, 60.0);
    run(8, "duality table pairing guard", criterion8, 10.0);
    if (g_failures) std::printf("%d criterion(s) FAILED\n", g_failures);
    return g_failures ? 1 : 0;
}
