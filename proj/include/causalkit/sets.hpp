#ifndef CAUSALKIT_SETS_HPP
#define CAUSALKIT_SETS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "causalkit/geometry.hpp"
#include "causalkit/surfaces.hpp"

namespace causalkit {

// A closed set given by an exact membership predicate, with optional analytic
// extras: a per-leaf slice radius bound, a log-time membership form for
// positive-t envelopes, and a finite cloud K with A c J(K) when one is known.
struct AnalyticSet {
    std::string label;
    Spacetime ambient = Spacetime::minkowski(1);

    std::function<bool(const Point&)> member;

    // member(exp(log_t), x) evaluated without under/overflow; present for
    // sets whose time extent spans many orders of magnitude.
    std::function<bool(double /*log_t*/, const Spatial&)> member_logt;

    // Radius bound of the slice on the standard leaf t = s; nullopt = empty
    // slice. Absent function = no analytic bound known.
    std::function<std::optional<double>(double /*leaf_t*/)> slice_radius_bound;

    // Deterministic member sampler.
    std::function<std::vector<Point>(double /*radius*/, int /*count*/, std::uint64_t /*seed*/)>
        sample;

    // Cloud K with A c J(K), when analytically known.
    std::optional<CompactCloud> containing_cloud;

    // Analytic t-envelope: lower(x) <= t <= upper(x) for every member, when
    // the set has graph-like bounds.
    std::optional<SurfaceGraph> lower_envelope;
    std::optional<SurfaceGraph> upper_envelope;
};

/// The region J(K) of a finite cloud, with its tautological certificate.
AnalyticSet causal_region(const CompactCloud& k, Direction dir = Direction::Both);

/// The finite point set of a cloud itself, as a closed (compact) set.
AnalyticSet finite_set(const CompactCloud& k);

/// { 2/3 <= e^{|x|^2} t <= 4/3 }: compact on every flat leaf, yet not
/// spacelike compact.
AnalyticSet gaussian_band(int dim = 1);

/// The spacelike Cauchy surface t = e^{-|x|^2}, which lies inside
/// gaussian_band (the product is identically 1).
SurfaceGraph gaussian_surface(int dim = 1);

/// Scaled Gaussian graph c * e^{-a r^2}; throws unless |c| sqrt(2a) e^{-1/2} < 1.
SurfaceGraph scaled_gaussian_surface(double c, double a, int dim = 1);

/// { |t - sqrt(1+|x|^2)| <= 1/(2 sqrt(1+|x|^2)) }: a band hugging the unit
/// hyperbola; lies inside the open future cone of the origin.
AnalyticSet hyperbola_band(int dim = 1);

/// Leaves t = sqrt(R^2 + |x|^2), R > 0, foliating I^+(0).
Foliation hyperbola_foliation(int dim = 1);

struct BoostPlane {
    AnalyticSet set;
    SurfaceGraph surface;
};

/// The boosted plane t = v x_1, |v| < 1: a Cauchy surface containing points
/// of arbitrarily large |t|.
BoostPlane boost_plane(double v, int dim = 1);

/// gamma_x(tau) = (sinh tau, cosh tau * x_unit): an inextendible timelike
/// curve on the unit hyperboloid t^2 - |x|^2 = -1, never entering I^+(0).
Point boost_curve(const Spatial& x_unit, double tau, int dim = 1);

}  // namespace causalkit

#endif
