#ifndef CAUSALKIT_CLASSIFIER_HPP
#define CAUSALKIT_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "causalkit/sets.hpp"
#include "causalkit/surfaces.hpp"

// Certificate / refutation search for the compactness taxonomy:
//   sc  -- contained in J(K), K compact
//   fc  -- contained in J^-(Sigma) for a Cauchy surface (A cap J^+(p) compact
//          for every p)
//   pc  -- contained in J^+(Sigma) (A cap J^-(p) compact for every p)
//   tc  = fc and pc;  fsc = sc and fc;  psc = sc and pc
// Finite search cannot decide a universally quantified property, so every
// verdict entry is three-valued and certificates carry their payloads.

namespace causalkit {

enum class CompactnessKind { SC, FC, PC, TC, FSC, PSC };

std::string to_string(CompactnessKind k);

struct VerdictEntry {
    enum class Status { Certificate, Refutation, Inconclusive } status =
        Status::Inconclusive;

    // Certificate payloads.
    std::optional<CompactCloud> cloud;     // sc: sampled A c J(cloud)
    std::optional<SurfaceGraph> surface;   // fc: A c J^-(surface); pc: A c J^+(surface)

    // Refutation payloads.
    std::string refuting_surface;          // sc: surface with unbounded slice
    std::optional<Point> refuting_point;   // fc / pc: point p with unbounded A cap J(p)
    std::vector<SliceWitness> witnesses;

    std::string detail;
};

struct Verdict {
    VerdictEntry sc, fc, pc, tc, fsc, psc;
    const VerdictEntry& entry(CompactnessKind k) const;
};

struct SearchBudget {
    double radius0 = 1.0;        // first rung / certificate inflation pad
    double radius_cap = 1000.0;  // last rung of the geometric radius schedule
    double leaf_lo = -3.0;       // standard-leaf grid for the surface family
    double leaf_hi = 3.0;
    int leaf_count = 13;
    double witness_t = 4.0;      // witness-point grid [-T,T] x [-R,R]
    double witness_r = 4.0;
    int witness_grid = 4;        // grid half-count per axis
    double sample_radius = 6.0;
    int sample_count = 400;
    std::uint64_t seed = 1;

    std::vector<double> rungs() const;  // powers of 10 up to radius_cap
};

/// The fixed adversarial surface family: standard leaves, boosted planes
/// (|v| <= 0.9), and scaled Gaussian graphs. Contains >= 30 surfaces,
/// including the refuting surface of the Gaussian-band counterexample.
std::vector<SurfaceGraph> adversarial_surfaces(const SearchBudget& b, int dim);

VerdictEntry classify_spacelike_compact(const AnalyticSet& a, const SearchBudget& b);
VerdictEntry classify_future_compact(const AnalyticSet& a, const SearchBudget& b);
VerdictEntry classify_past_compact(const AnalyticSet& a, const SearchBudget& b);

/// Full verdict; tc/fsc/psc are the three-valued conjunctions, never searched
/// independently.
Verdict classify(const AnalyticSet& a, const SearchBudget& b);

struct SandwichResult {
    std::optional<std::pair<double, double>> range;
    std::vector<Point> witnesses;  // members escaping every candidate sandwich
};

/// Leaf parameters (s-, s+) with every tested member of A between the leaves,
/// including members pushed out to the far radius rungs; none + witnesses
/// when no candidate survives. Leaves must be pointwise monotone in the
/// parameter.
SandwichResult foliation_sandwich(const AnalyticSet& a, const Foliation& f,
                                  const SearchBudget& b);

struct CurveIntersection {
    std::string curve;
    enum class Kind { Empty, Bounded, Unbounded } kind = Kind::Empty;
    double param_lo = 0.0;  // t-extent (or tau-extent) of the intersection
    double param_hi = 0.0;
    std::optional<Point> past_witness;  // member of A causally above the curve
};

/// Intersection verdicts of A with a family of inextendible causal curves:
/// vertical lines on a spatial grid plus the unit-hyperboloid boost curves.
std::vector<CurveIntersection> causal_curve_intersections(const AnalyticSet& a,
                                                          const SearchBudget& b);

}  // namespace causalkit

#endif
