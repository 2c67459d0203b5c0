// Scenario runner: batch front end over the geometry, surface, set,
// classifier, and lattice wave modules. One scenario per invocation; all
// outputs are deterministic functions of (config, seed).
//
// Exit codes: 0 success, 1 execution error, 2 config/schema error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "causalkit/classifier.hpp"
#include "causalkit/wave.hpp"

using json = nlohmann::json;
using namespace causalkit;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void check_keys(const json& o, const std::set<std::string>& allowed,
                const std::string& where) {
    if (!o.is_object()) throw ConfigError(where + ": expected an object");
    for (auto it = o.begin(); it != o.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError(where + ": unknown key '" + it.key() + "'");
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
}

struct Output {
    std::filesystem::path dir;
    bool svg = false;

    std::ofstream open(const std::string& name) const {
        std::filesystem::create_directories(dir);
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
        return out;
    }
};

// ---- config -> domain objects ----------------------------------------------

std::vector<Point> parse_points(const json& arr, const std::string& where) {
    if (!arr.is_array() || arr.empty())
        throw ConfigError(where + ": expected a nonempty array of [t, x] pairs");
    std::vector<Point> pts;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2)
            throw ConfigError(where + ": each point must be [t, x]");
        pts.push_back(make_point(e[0].get<double>(), e[1].get<double>()));
    }
    return pts;
}

AnalyticSet parse_set(const json& s) {
    check_keys(s, {"name", "v", "points"}, "set");
    if (!s.contains("name")) throw ConfigError("set: missing 'name'");
    const std::string name = s["name"].get<std::string>();
    if (name == "gaussian_band") return gaussian_band(1);
    if (name == "hyperbola_band") return hyperbola_band(1);
    if (name == "boost_plane") {
        if (!s.contains("v")) throw ConfigError("set: boost_plane needs 'v'");
        return boost_plane(s["v"].get<double>(), 1).set;
    }
    if (name == "causal_region" || name == "finite_set") {
        if (!s.contains("points")) throw ConfigError("set: " + name + " needs 'points'");
        const auto k = make_cloud(parse_points(s["points"], "set.points"),
                                  Spacetime::minkowski(1));
        return name == "causal_region" ? causal_region(k) : finite_set(k);
    }
    throw ConfigError("set: unknown library set '" + name + "'");
}

SearchBudget parse_budget(const json& cfg, std::optional<std::uint64_t> seed_override) {
    SearchBudget b{};
    if (cfg.contains("budget")) {
        const auto& j = cfg["budget"];
        check_keys(j, {"seed", "radius_cap", "sample_count", "sample_radius"}, "budget");
        if (j.contains("seed")) b.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("radius_cap")) b.radius_cap = j["radius_cap"].get<double>();
        if (j.contains("sample_count")) b.sample_count = j["sample_count"].get<int>();
        if (j.contains("sample_radius")) b.sample_radius = j["sample_radius"].get<double>();
    }
    if (seed_override) b.seed = *seed_override;
    return b;
}

// ---- report / csv / svg emitters --------------------------------------------

void print_entry(std::ostream& os, const std::string& kind, const VerdictEntry& e) {
    os << kind << ": ";
    switch (e.status) {
        case VerdictEntry::Status::Certificate: os << "certificate"; break;
        case VerdictEntry::Status::Refutation: os << "refutation"; break;
        case VerdictEntry::Status::Inconclusive: os << "inconclusive"; break;
    }
    if (!e.detail.empty()) os << " | " << e.detail;
    os << "\n";
    if (e.cloud) {
        os << "  cloud K:";
        for (const auto& p : e.cloud->points)
            os << " (" << fmt17(p.t) << ", " << fmt17(p.x[0]) << ")";
        os << "\n";
    }
    if (e.surface) os << "  surface: " << e.surface->label << "\n";
    if (!e.refuting_surface.empty()) os << "  refuting surface: " << e.refuting_surface << "\n";
    if (e.refuting_point)
        os << "  refuting point: (" << fmt17(e.refuting_point->t) << ", "
           << fmt17(e.refuting_point->x[0]) << ")\n";
    for (const auto& w : e.witnesses)
        os << "  witness: radius " << fmt17(w.radius) << " x " << fmt17(w.x[0])
           << (w.has_log_t ? " log_t " + fmt17(w.log_t) : " t " + fmt17(w.t)) << "\n";
}

void write_samples_csv(std::ostream& os, const std::vector<Point>& pts) {
    os << "t,x\n";
    for (const auto& p : pts) os << fmt17(p.t) << "," << fmt17(p.x[0]) << "\n";
}

void write_surface_csv(std::ostream& os, const SurfaceGraph& s, double r, int n) {
    os << "x,f\n";
    for (int i = 0; i <= n; ++i) {
        const double x = -r + 2.0 * r * i / n;
        os << fmt17(x) << "," << fmt17(s.value(x)) << "\n";
    }
}

// Minimal deterministic SVG scatter/line plot with axis labels.
void svg_plot(std::ostream& os, const std::string& title,
              const std::vector<std::pair<double, double>>& scatter,
              const std::vector<std::pair<double, double>>& line) {
    double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
    bool first = true;
    for (const auto* src : {&scatter, &line}) {
        for (const auto& [x, y] : *src) {
            if (first) { xlo = xhi = x; ylo = yhi = y; first = false; }
            xlo = std::min(xlo, x); xhi = std::max(xhi, x);
            ylo = std::min(ylo, y); yhi = std::max(yhi, y);
        }
    }
    if (xhi == xlo) xhi = xlo + 1;
    if (yhi == ylo) yhi = ylo + 1;
    const double W = 640, H = 480, M = 48;
    auto px = [&](double x) { return M + (x - xlo) / (xhi - xlo) * (W - 2 * M); };
    auto py = [&](double y) { return H - M - (y - ylo) / (yhi - ylo) * (H - 2 * M); };
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
       << "'>\n<rect width='100%' height='100%' fill='white'/>\n"
       << "<text x='8' y='20' font-size='14'>" << title << "</text>\n"
       << "<text x='" << W / 2 << "' y='" << H - 8 << "' font-size='12'>x</text>\n"
       << "<text x='8' y='" << H / 2 << "' font-size='12'>t</text>\n";
    if (!line.empty()) {
        os << "<polyline fill='none' stroke='black' points='";
        for (const auto& [x, y] : line) os << fmt17(px(x)) << "," << fmt17(py(y)) << " ";
        os << "'/>\n";
    }
    for (const auto& [x, y] : scatter)
        os << "<circle cx='" << fmt17(px(x)) << "' cy='" << fmt17(py(y))
           << "' r='2' fill='crimson'/>\n";
    os << "</svg>\n";
}

void svg_field(std::ostream& os, const LatticeField& u) {
    const Grid& g = u.grid;
    double vmax = 0.0;
    for (double v : u.values) vmax = std::max(vmax, std::abs(v));
    if (vmax == 0.0) vmax = 1.0;
    const int cell = std::max(1, 600 / std::max(g.rows(), g.nx()));
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << g.nx() * cell
       << "' height='" << g.rows() * cell << "'>\n";
    for (int n = 0; n <= g.nt; ++n) {
        for (int j = -g.jhalf; j <= g.jhalf; ++j) {
            const double v = u.at(n, j);
            if (v == 0.0) continue;
            const int shade = 255 - int(std::min(1.0, std::abs(v) / vmax) * 255);
            os << "<rect x='" << (j + g.jhalf) * cell << "' y='" << (g.nt - n) * cell
               << "' width='" << cell << "' height='" << cell << "' fill='rgb("
               << (v > 0 ? 255 : shade) << "," << shade << "," << (v > 0 ? shade : 255)
               << ")'/>\n";
        }
    }
    os << "</svg>\n";
}

// ---- tasks -------------------------------------------------------------------

int task_classify(const json& cfg, const Output& out,
                  std::optional<std::uint64_t> seed) {
    check_keys(cfg, {"set", "budget"}, "config");
    if (!cfg.contains("set")) throw ConfigError("config: missing 'set'");
    const auto a = parse_set(cfg["set"]);
    const auto b = parse_budget(cfg, seed);
    const auto v = classify(a, b);

    auto rep = out.open("report.txt");
    rep << "classification of " << a.label << "\n";
    print_entry(rep, "sc", v.sc);
    print_entry(rep, "fc", v.fc);
    print_entry(rep, "pc", v.pc);
    print_entry(rep, "tc", v.tc);
    print_entry(rep, "fsc", v.fsc);
    print_entry(rep, "psc", v.psc);

    if (a.sample) {
        const auto pts = a.sample(b.sample_radius, b.sample_count, b.seed);
        auto csv = out.open("samples.csv");
        write_samples_csv(csv, pts);
        if (out.svg) {
            std::vector<std::pair<double, double>> sc;
            for (const auto& p : pts) sc.push_back({p.x[0], p.t});
            auto svg = out.open("samples.svg");
            svg_plot(svg, a.label + " members", sc, {});
        }
    }
    return 0;
}

int task_counterexample(const json& cfg, const Output& out,
                        std::optional<std::uint64_t> seed) {
    check_keys(cfg, {"name", "budget"}, "config");
    if (!cfg.contains("name")) throw ConfigError("config: missing 'name'");
    const std::string name = cfg["name"].get<std::string>();
    const auto b = parse_budget(cfg, seed);
    auto rep = out.open("report.txt");

    if (name == "notSC") {
        const auto a = gaussian_band(1);
        rep << "counterexample notSC: " << a.label << "\n";
        rep << "per-leaf slice radii (bounded on every flat leaf):\n";
        for (int i = 1; i <= 50; ++i) {
            const double t = (4.0 / 3.0) * i / 50.0;
            const auto r = slice_bound(a, flat_leaf(t, 1), SliceSearchSpec{});
            rep << "  t=" << fmt17(t) << " radius<=" << fmt17(r.r_max) << "\n";
        }
        const auto v = classify(a, b);
        print_entry(rep, "sc", v.sc);
        rep << "verdict: not spacelike compact\n";
        if (out.svg && a.slice_radius_bound) {
            std::vector<std::pair<double, double>> edge;
            for (int i = 1; i <= 100; ++i) {
                const double t = (4.0 / 3.0) * i / 100.0;
                if (auto r = a.slice_radius_bound(t)) edge.push_back({*r, t});
            }
            auto svg = out.open("band_slice.svg");
            svg_plot(svg, "band slice edge radius vs t", {}, edge);
        }
        return 0;
    }
    if (name == "notTC") {
        const auto a = hyperbola_band(1);
        rep << "counterexample notTC: " << a.label << "\n";
        const auto rows = causal_curve_intersections(a, b);
        rep << "curve intersections (all bounded):\n";
        for (const auto& r : rows) {
            rep << "  " << r.curve << ": "
                << (r.kind == CurveIntersection::Kind::Empty      ? "empty"
                    : r.kind == CurveIntersection::Kind::Bounded  ? "bounded"
                                                                  : "unbounded");
            if (r.kind == CurveIntersection::Kind::Bounded)
                rep << " [" << fmt17(r.param_lo) << ", " << fmt17(r.param_hi) << "]";
            if (r.past_witness)
                rep << " past-witness (" << fmt17(r.past_witness->t) << ", "
                    << fmt17(r.past_witness->x[0]) << ")";
            rep << "\n";
        }
        const auto v = classify(a, b);
        print_entry(rep, "sc", v.sc);
        print_entry(rep, "fc", v.fc);
        print_entry(rep, "pc", v.pc);
        rep << "verdict: spacelike compact, past compact, not future compact\n";
        return 0;
    }
    throw ConfigError("config: unknown counterexample '" + name + "'");
}

int task_sigma_minus(const json& cfg, const Output& out,
                     std::optional<std::uint64_t>) {
    check_keys(cfg, {"points", "direction"}, "config");
    if (!cfg.contains("points")) throw ConfigError("config: missing 'points'");
    std::string dir = "past";
    if (cfg.contains("direction")) dir = cfg["direction"].get<std::string>();
    if (dir != "past" && dir != "future")
        throw ConfigError("config: direction must be 'past' or 'future'");
    const auto k = make_cloud(parse_points(cfg["points"], "points"),
                              Spacetime::minkowski(1));
    const auto s = dir == "past" ? construct_sigma_minus(k) : construct_sigma_plus(k);

    double r = 1.0;
    for (const auto& p : k.points)
        r = std::max(r, std::abs(p.x[0]) + std::abs(p.t) + 2.0);

    auto rep = out.open("report.txt");
    rep << s.label << " for a " << k.points.size() << "-point cloud\n";
    rep << "flat value " << fmt17(s.flat_value) << " outside radius "
        << fmt17(s.flat_radius) << "\n";
    for (const auto& p : k.points)
        rep << "  cloud point (" << fmt17(p.t) << ", " << fmt17(p.x[0]) << ") graph "
            << fmt17(s.f(p.x)) << "\n";

    auto csv = out.open("surface.csv");
    write_surface_csv(csv, s, r, 400);
    if (out.svg) {
        std::vector<std::pair<double, double>> line, sc;
        for (int i = 0; i <= 400; ++i) {
            const double x = -r + 2.0 * r * i / 400;
            line.push_back({x, s.value(x)});
        }
        for (const auto& p : k.points) sc.push_back({p.x[0], p.t});
        auto svg = out.open("surface.svg");
        svg_plot(svg, s.label, sc, line);
    }
    return 0;
}

LatticeField parse_field(const json& j, const Grid& g, const std::string& where) {
    check_keys(j, {"class", "cells", "kind", "n", "j", "amplitude"}, where);
    SupportClass cls = SupportClass::Compact;
    if (j.contains("class")) {
        const auto c = support_class_from_string(j["class"].get<std::string>());
        if (!c) throw ConfigError(where + ": unknown support class");
        cls = *c;
    }
    auto f = LatticeField::zeros(g, cls);
    if (j.contains("kind") && j["kind"] == "impulse") {
        f.at(j.value("n", g.nt / 2), j.value("j", 0)) = j.value("amplitude", 1.0);
    } else if (j.contains("cells")) {
        for (const auto& c : j["cells"]) {
            if (!c.is_array() || c.size() != 3)
                throw ConfigError(where + ".cells: entries are [n, j, value]");
            f.at(c[0].get<int>(), c[1].get<int>()) = c[2].get<double>();
        }
    } else {
        throw ConfigError(where + ": need 'kind: impulse' or 'cells'");
    }
    return f;
}

Grid parse_grid(const json& cfg) {
    if (!cfg.contains("grid")) throw ConfigError("config: missing 'grid'");
    const auto& j = cfg["grid"];
    check_keys(j, {"dt", "dx", "nt", "jhalf"}, "grid");
    return make_grid(j.value("dt", 1.0), j.value("dx", 1.0), j.value("nt", 200),
                     j.value("jhalf", 150));
}

int task_wave(const json& cfg, const Output& out, std::optional<std::uint64_t>) {
    check_keys(cfg, {"grid", "source", "direction"}, "config");
    const Grid g = parse_grid(cfg);
    if (!cfg.contains("source")) throw ConfigError("config: missing 'source'");
    const auto f = parse_field(cfg["source"], g, "source");
    std::string dir = "retarded";
    if (cfg.contains("direction")) dir = cfg["direction"].get<std::string>();
    if (dir != "retarded" && dir != "advanced")
        throw ConfigError("config: direction must be 'retarded' or 'advanced'");

    const auto u = dir == "retarded" ? green_retarded(f) : green_advanced(f);

    // support containment verdict: zero outside the union of source cones
    bool exact = true;
    const auto fb = f.support_box();
    for (int n = 0; n <= g.nt && exact; ++n)
        for (int j = -g.jhalf; j <= g.jhalf; ++j) {
            bool cone = false;
            for (int n0 = fb.n_lo; n0 <= fb.n_hi && !cone; ++n0)
                for (int j0 = fb.j_lo; j0 <= fb.j_hi && !cone; ++j0)
                    if (f.at(n0, j0) != 0.0)
                        cone = dir == "retarded" ? (n >= n0 && std::abs(j - j0) <= n - n0)
                                                 : (n <= n0 && std::abs(j - j0) <= n0 - n);
            if (!cone && u.at(n, j) != 0.0) { exact = false; break; }
        }

    auto rep = out.open("report.txt");
    rep << "lattice wave " << dir << " solve, lambda=" << fmt17(g.lambda()) << "\n";
    rep << "source class " << to_string(f.support_class) << " -> solution class "
        << to_string(u.support_class) << "\n";
    rep << "support containment: " << (exact ? "exact cone" : "VIOLATION") << "\n";

    auto csv = out.open("field.csv");
    write_field_csv(csv, u);
    auto bin = out.open("field.bin");
    write_field(bin, u);
    if (out.svg) {
        auto svg = out.open("field.svg");
        svg_field(svg, u);
    }
    return exact ? 0 : 1;
}

int task_pair(const json& cfg, const Output& out, std::optional<std::uint64_t>) {
    check_keys(cfg, {"grid", "phi", "f"}, "config");
    const Grid g = parse_grid(cfg);
    if (!cfg.contains("phi") || !cfg.contains("f"))
        throw ConfigError("config: need both 'phi' and 'f'");
    const auto phi = parse_field(cfg["phi"], g, "phi");
    const auto f = parse_field(cfg["f"], g, "f");
    auto rep = out.open("report.txt");
    rep << "pairing <phi, f>, classes " << to_string(phi.support_class) << " / "
        << to_string(f.support_class) << "\n";
    const double v = pairing(phi, f);  // throws on a duality-table violation
    rep << "value " << fmt17(v) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"causal structure toolkit scenario runner"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out";
    std::optional<std::uint64_t> seed;
    bool svg = false;
    app.add_option("--config", config_path, "scenario config (JSON)")->required();
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed, "override the budget seed");
    app.add_flag("--svg", svg, "also emit SVG plots");

    auto* c_classify = app.add_subcommand("classify", "full compactness verdict");
    auto* c_counter = app.add_subcommand("counterexample", "reproduce a library counterexample");
    auto* c_sigma = app.add_subcommand("sigma-minus", "covering Cauchy surface of a cloud");
    auto* c_wave = app.add_subcommand("wave", "lattice wave solve with support verdict");
    auto* c_pair = app.add_subcommand("pair", "duality pairing of two lattice fields");
    for (auto* sub : {c_classify, c_counter, c_sigma, c_wave, c_pair})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    // honor an output-directory override from the environment, nothing else
    if (const char* env = std::getenv("CAUSALKIT_OUT")) out_dir = env;

    try {
        const json cfg = load_config(config_path);
        const Output out{std::filesystem::path(out_dir), svg};
        if (c_classify->parsed()) return task_classify(cfg, out, seed);
        if (c_counter->parsed()) return task_counterexample(cfg, out, seed);
        if (c_sigma->parsed()) return task_sigma_minus(cfg, out, seed);
        if (c_wave->parsed()) return task_wave(cfg, out, seed);
        if (c_pair->parsed()) return task_pair(cfg, out, seed);
        return 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const json::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
