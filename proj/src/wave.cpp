#include "causalkit/wave.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace causalkit {

std::string to_string(SupportClass c) {
    switch (c) {
        case SupportClass::Compact: return "compact";
        case SupportClass::SC: return "sc";
        case SupportClass::FSC: return "fsc";
        case SupportClass::PSC: return "psc";
        case SupportClass::TC: return "tc";
        case SupportClass::FC: return "fc";
        case SupportClass::PC: return "pc";
        case SupportClass::Unrestricted: return "unrestricted";
    }
    return "?";
}

std::optional<SupportClass> support_class_from_string(const std::string& s) {
    for (SupportClass c : {SupportClass::Compact, SupportClass::SC, SupportClass::FSC,
                           SupportClass::PSC, SupportClass::TC, SupportClass::FC,
                           SupportClass::PC, SupportClass::Unrestricted})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

SupportClass PairingGuard::dual(SupportClass c) {
    switch (c) {
        case SupportClass::Compact: return SupportClass::Unrestricted;
        case SupportClass::Unrestricted: return SupportClass::Compact;
        case SupportClass::SC: return SupportClass::TC;
        case SupportClass::TC: return SupportClass::SC;
        case SupportClass::FSC: return SupportClass::PC;
        case SupportClass::PC: return SupportClass::FSC;
        case SupportClass::PSC: return SupportClass::FC;
        case SupportClass::FC: return SupportClass::PSC;
    }
    return SupportClass::Unrestricted;
}

bool PairingGuard::compatible(SupportClass a, SupportClass b) {
    return dual(a) == b;
}

Grid make_grid(double dt, double dx, int nt, int jhalf) {
    if (!(dt > 0.0) || !(dx > 0.0)) throw std::invalid_argument("grid spacings must be > 0");
    if (dt / dx > 1.0 + 1e-15) throw std::invalid_argument("CFL violation: lambda > 1");
    if (nt < 1 || jhalf < 1) throw std::invalid_argument("grid extents too small");
    return Grid{dt, dx, nt, jhalf};
}

double& LatticeField::at(int n, int j) {
    return values[static_cast<std::size_t>(n) * grid.nx() + (j + grid.jhalf)];
}

double LatticeField::at(int n, int j) const {
    return values[static_cast<std::size_t>(n) * grid.nx() + (j + grid.jhalf)];
}

SupportBox LatticeField::support_box() const {
    SupportBox box{grid.nt + 1, -1, grid.jhalf + 1, -grid.jhalf - 1};
    for (int n = 0; n <= grid.nt; ++n) {
        for (int j = -grid.jhalf; j <= grid.jhalf; ++j) {
            if (at(n, j) != 0.0) {
                box.n_lo = std::min(box.n_lo, n);
                box.n_hi = std::max(box.n_hi, n);
                box.j_lo = std::min(box.j_lo, j);
                box.j_hi = std::max(box.j_hi, j);
            }
        }
    }
    if (box.n_hi < box.n_lo) return SupportBox{};
    return box;
}

LatticeField LatticeField::zeros(const Grid& g, SupportClass c) {
    LatticeField u;
    u.grid = g;
    u.values.assign(g.cells(), 0.0);
    u.support_class = c;
    return u;
}

LatticeField LatticeField::impulse(const Grid& g, int n, int j, double amplitude,
                                   SupportClass c) {
    LatticeField u = zeros(g, c);
    u.at(n, j) = amplitude;
    return u;
}

LatticeField apply_wave_operator(const LatticeField& u) {
    const Grid& g = u.grid;
    LatticeField out = LatticeField::zeros(g, u.support_class);
    const double idt2 = 1.0 / (g.dt * g.dt);
    const double idx2 = 1.0 / (g.dx * g.dx);
    for (int n = 1; n < g.nt; ++n) {
        for (int j = -g.jhalf + 1; j < g.jhalf; ++j) {
            out.at(n, j) = (u.at(n + 1, j) - 2.0 * u.at(n, j) + u.at(n - 1, j)) * idt2 -
                           (u.at(n, j + 1) - 2.0 * u.at(n, j) + u.at(n, j - 1)) * idx2;
        }
    }
    return out;
}

namespace {

SupportClass green_output_class(SupportClass in, bool retarded) {
    if (retarded) {
        switch (in) {
            case SupportClass::Compact:
            case SupportClass::PSC: return SupportClass::PSC;
            case SupportClass::PC:
            case SupportClass::TC: return SupportClass::PC;
            default: break;
        }
        throw std::invalid_argument("green_retarded: no transition for input class " +
                                    to_string(in));
    }
    switch (in) {
        case SupportClass::Compact:
        case SupportClass::FSC: return SupportClass::FSC;
        case SupportClass::FC:
        case SupportClass::TC: return SupportClass::FC;
        default: break;
    }
    throw std::invalid_argument("green_advanced: no transition for input class " +
                                to_string(in));
}

void check_cone_margin(const Grid& g, const SupportBox& box, const char* who) {
    if (box.empty()) return;
    const int reach = g.nt - box.n_lo;
    if (box.j_hi + reach > g.jhalf || box.j_lo - reach < -g.jhalf)
        throw std::invalid_argument(std::string(who) +
                                    ": causal cone of the source reaches the spatial "
                                    "boundary; enlarge the grid");
}

}  // namespace

LatticeField green_retarded(const LatticeField& f) {
    const Grid& g = f.grid;
    const SupportClass out_class = green_output_class(f.support_class, /*retarded=*/true);
    check_cone_margin(g, f.support_box(), "green_retarded");

    LatticeField u = LatticeField::zeros(g, out_class);
    const double l2 = g.lambda() * g.lambda();
    const double dt2 = g.dt * g.dt;
    // u^{n+1}_j = 2u^n_j - u^{n-1}_j + l2 (u^n_{j+1} - 2u^n_j + u^n_{j-1}) + dt^2 f^n_j
    // with u == 0 for n <= 0 (zero past data).
    for (int n = 0; n < g.nt; ++n) {
        for (int j = -g.jhalf + 1; j < g.jhalf; ++j) {
            const double prev = (n > 0) ? u.at(n - 1, j) : 0.0;
            u.at(n + 1, j) = 2.0 * u.at(n, j) - prev +
                             l2 * (u.at(n, j + 1) - 2.0 * u.at(n, j) + u.at(n, j - 1)) +
                             dt2 * f.at(n, j);
        }
    }
    return u;
}

LatticeField time_mirror(const LatticeField& u) {
    LatticeField out = LatticeField::zeros(u.grid, u.support_class);
    switch (u.support_class) {
        case SupportClass::FSC: out.support_class = SupportClass::PSC; break;
        case SupportClass::PSC: out.support_class = SupportClass::FSC; break;
        case SupportClass::FC: out.support_class = SupportClass::PC; break;
        case SupportClass::PC: out.support_class = SupportClass::FC; break;
        default: break;
    }
    const Grid& g = u.grid;
    for (int n = 0; n <= g.nt; ++n)
        for (int j = -g.jhalf; j <= g.jhalf; ++j) out.at(g.nt - n, j) = u.at(n, j);
    return out;
}

LatticeField green_advanced(const LatticeField& f) {
    const SupportClass out_class = green_output_class(f.support_class, /*retarded=*/false);
    // Exact time mirror of the retarded solve.
    LatticeField mirrored = time_mirror(f);
    mirrored.support_class = SupportClass::Compact;
    switch (f.support_class) {
        case SupportClass::FSC: mirrored.support_class = SupportClass::PSC; break;
        case SupportClass::FC: mirrored.support_class = SupportClass::PC; break;
        case SupportClass::TC: mirrored.support_class = SupportClass::TC; break;
        default: break;
    }
    LatticeField u = time_mirror(green_retarded(mirrored));
    u.support_class = out_class;
    return u;
}

LatticeField solve_cauchy(const std::vector<double>& u0, const std::vector<double>& u1,
                          int steps, double dt, double dx) {
    if (steps < 1) throw std::invalid_argument("solve_cauchy: steps must be >= 1");
    if (u0.size() != u1.size() || u0.empty())
        throw std::invalid_argument("solve_cauchy: data slices must match and be nonempty");
    const int nx = static_cast<int>(u0.size());
    if (nx % 2 == 0) throw std::invalid_argument("solve_cauchy: data slice must be odd-sized");
    const int jhalf = nx / 2;
    const Grid g = make_grid(dt, dx, 2 * steps + 1, jhalf);

    // Boundary policy: data support must leave `steps` cells of margin.
    for (int j = -jhalf; j <= jhalf; ++j) {
        const bool nonzero = u0[j + jhalf] != 0.0 || u1[j + jhalf] != 0.0;
        if (nonzero && (j - steps < -jhalf + 1 || j + steps > jhalf - 1))
            throw std::invalid_argument(
                "solve_cauchy: initial data support reaches the spatial boundary within "
                "the requested number of steps");
    }

    LatticeField u = LatticeField::zeros(g, SupportClass::SC);
    for (int j = -jhalf; j <= jhalf; ++j) {
        u.at(steps, j) = u0[j + jhalf];
        u.at(steps + 1, j) = u1[j + jhalf];
    }
    const double l2 = g.lambda() * g.lambda();
    for (int n = steps + 1; n < g.nt; ++n)
        for (int j = -jhalf + 1; j < jhalf; ++j)
            u.at(n + 1, j) = 2.0 * u.at(n, j) - u.at(n - 1, j) +
                             l2 * (u.at(n, j + 1) - 2.0 * u.at(n, j) + u.at(n, j - 1));
    for (int n = steps; n > 0; --n)
        for (int j = -jhalf + 1; j < jhalf; ++j)
            u.at(n - 1, j) = 2.0 * u.at(n, j) - u.at(n + 1, j) +
                             l2 * (u.at(n, j + 1) - 2.0 * u.at(n, j) + u.at(n, j - 1));
    return u;
}

double pairing(const LatticeField& phi, const LatticeField& f) {
    if (!PairingGuard::compatible(phi.support_class, f.support_class))
        throw std::invalid_argument(
            "pairing: incompatible support classes: " + to_string(phi.support_class) +
            " pairs only with " + to_string(PairingGuard::dual(phi.support_class)) +
            ", got " + to_string(f.support_class));
    const Grid& g = phi.grid;
    if (f.grid.nt != g.nt || f.grid.jhalf != g.jhalf || f.grid.dt != g.dt ||
        f.grid.dx != g.dx)
        throw std::invalid_argument("pairing: mismatched grids");
    double acc = 0.0;
    for (std::size_t i = 0; i < phi.values.size(); ++i) acc += phi.values[i] * f.values[i];
    return acc * g.dt * g.dx;
}

double leapfrog_energy(const LatticeField& u, int n) {
    const Grid& g = u.grid;
    if (n < 0 || n + 1 > g.nt) throw std::invalid_argument("leapfrog_energy: slice out of range");
    double kin = 0.0, pot = 0.0;
    for (int j = -g.jhalf; j <= g.jhalf; ++j) {
        const double v = (u.at(n + 1, j) - u.at(n, j)) / g.dt;
        kin += v * v;
    }
    for (int j = -g.jhalf; j < g.jhalf; ++j) {
        const double da = (u.at(n + 1, j + 1) - u.at(n + 1, j)) / g.dx;
        const double db = (u.at(n, j + 1) - u.at(n, j)) / g.dx;
        pot += da * db;
    }
    return 0.5 * g.dx * (kin + pot);
}

namespace {
constexpr char kMagic[8] = {'C', 'K', 'L', 'F', '0', '0', '0', '1'};
}

void write_field(std::ostream& os, const LatticeField& u) {
    os.write(kMagic, 8);
    const double dt = u.grid.dt, dx = u.grid.dx;
    const std::int32_t nt = u.grid.nt, jhalf = u.grid.jhalf;
    os.write(reinterpret_cast<const char*>(&dt), 8);
    os.write(reinterpret_cast<const char*>(&dx), 8);
    os.write(reinterpret_cast<const char*>(&nt), 4);
    os.write(reinterpret_cast<const char*>(&jhalf), 4);
    const std::string tag = to_string(u.support_class);
    const std::uint32_t len = static_cast<std::uint32_t>(tag.size());
    os.write(reinterpret_cast<const char*>(&len), 4);
    os.write(tag.data(), len);
    os.write(reinterpret_cast<const char*>(u.values.data()),
             static_cast<std::streamsize>(u.values.size() * 8));
}

LatticeField read_field(std::istream& is) {
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, kMagic, 8) != 0)
        throw std::runtime_error("read_field: bad magic");
    double dt = 0.0, dx = 0.0;
    std::int32_t nt = 0, jhalf = 0;
    is.read(reinterpret_cast<char*>(&dt), 8);
    is.read(reinterpret_cast<char*>(&dx), 8);
    is.read(reinterpret_cast<char*>(&nt), 4);
    is.read(reinterpret_cast<char*>(&jhalf), 4);
    std::uint32_t len = 0;
    is.read(reinterpret_cast<char*>(&len), 4);
    std::string tag(len, '\0');
    is.read(tag.data(), len);
    const auto cls = support_class_from_string(tag);
    if (!is || !cls) throw std::runtime_error("read_field: corrupt header");
    LatticeField u = LatticeField::zeros(make_grid(dt, dx, nt, jhalf), *cls);
    is.read(reinterpret_cast<char*>(u.values.data()),
            static_cast<std::streamsize>(u.values.size() * 8));
    if (!is) throw std::runtime_error("read_field: truncated payload");
    return u;
}

void write_field_csv(std::ostream& os, const LatticeField& u) {
    os << "n,j,value\n";
    char buf[64];
    for (int n = 0; n <= u.grid.nt; ++n) {
        for (int j = -u.grid.jhalf; j <= u.grid.jhalf; ++j) {
            const double v = u.at(n, j);
            if (v == 0.0) continue;
            std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", n, j, v);
            os << buf;
        }
    }
}

}  // namespace causalkit
