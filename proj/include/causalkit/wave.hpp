#ifndef CAUSALKIT_WAVE_HPP
#define CAUSALKIT_WAVE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

// 1+1 lattice wave operator and its advanced/retarded inverses. At lambda = 1
// the discrete causal cone equals the chart cone on lattice nodes, so the
// support inclusions supp(E^:mf) c J^:m(supp f) hold with zero tolerance.

namespace causalkit {

enum class SupportClass : std::uint8_t {
    Compact,
    SC,
    FSC,
    PSC,
    TC,
    FC,
    PC,
    Unrestricted,
};

std::string to_string(SupportClass c);
std::optional<SupportClass> support_class_from_string(const std::string& s);

// Duality table of the section/distribution pairing: a class pairs exactly
// with its dual partner.
struct PairingGuard {
    static SupportClass dual(SupportClass c);
    static bool compatible(SupportClass a, SupportClass b);
};

struct Grid {
    double dt = 1.0;
    double dx = 1.0;
    int nt = 0;      // time index n in [0, nt]
    int jhalf = 0;   // space index j in [-jhalf, jhalf]

    double lambda() const { return dt / dx; }
    int nx() const { return 2 * jhalf + 1; }
    int rows() const { return nt + 1; }
    std::size_t cells() const { return static_cast<std::size_t>(rows()) * nx(); }
};

/// Throws std::invalid_argument on non-positive spacings or lambda > 1 (CFL).
Grid make_grid(double dt, double dx, int nt, int jhalf);

struct SupportBox {
    int n_lo = 0, n_hi = -1;  // empty when n_lo > n_hi
    int j_lo = 0, j_hi = -1;
    bool empty() const { return n_lo > n_hi; }
};

struct LatticeField {
    Grid grid;
    std::vector<double> values;  // row-major, (nt+1) x (2 jhalf + 1)
    SupportClass support_class = SupportClass::Compact;

    double& at(int n, int j);
    double at(int n, int j) const;

    SupportBox support_box() const;

    static LatticeField zeros(const Grid& g, SupportClass c = SupportClass::Compact);
    static LatticeField impulse(const Grid& g, int n, int j, double amplitude = 1.0,
                                SupportClass c = SupportClass::Compact);
};

/// Discrete d'Alembertian by second differences; defined on interior nodes
/// n in [1, nt-1], j in [-jhalf+1, jhalf-1]; zero elsewhere.
LatticeField apply_wave_operator(const LatticeField& u);

/// Retarded inverse: forward leapfrog with zero past data. Requires the
/// lattice cone of supp f to stay off the spatial boundary (hard error, never
/// silent reflection). Output class per the transition table: compact -> psc,
/// psc -> psc, pc/tc -> pc.
LatticeField green_retarded(const LatticeField& f);

/// Advanced inverse, the exact time mirror of green_retarded.
LatticeField green_advanced(const LatticeField& f);

/// Reverses the time axis (and the support-class tag).
LatticeField time_mirror(const LatticeField& u);

/// Homogeneous evolution of Cauchy data: u0 and u1 are slices n = steps and
/// n = steps + 1 of the result; the evolution runs both forward and backward,
/// filling a grid with nt = 2 * steps + 1. Data support must leave a margin
/// of `steps` cells to the spatial boundary.
LatticeField solve_cauchy(const std::vector<double>& u0, const std::vector<double>& u1,
                          int steps, double dt = 1.0, double dx = 1.0);

/// <phi, f> = sum phi f dt dx. Throws std::invalid_argument naming the
/// duality-table row when the support classes are not dual-compatible.
double pairing(const LatticeField& phi, const LatticeField& f);

/// Staggered leapfrog energy of slices (n, n+1); exactly conserved by the
/// homogeneous scheme up to rounding.
double leapfrog_energy(const LatticeField& u, int n);

// Compact binary dump: header (magic, dt, dx, extents, class tag) + row-major
// little-endian doubles.
void write_field(std::ostream& os, const LatticeField& u);
LatticeField read_field(std::istream& is);

void write_field_csv(std::ostream& os, const LatticeField& u);

}  // namespace causalkit

#endif
