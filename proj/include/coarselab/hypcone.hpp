#pragma once

#include "coarselab/metric_space.hpp"

#include <optional>
#include <vector>

namespace coarselab {

/// Point (z, t) of the hyperbolic cone over a finite base; all points with
/// t = 0 are the vertex o.
struct ConePoint {
    int z = 0;
    double t = 0.0;
};

/// Hyperbolic cone Co(Z) with angle scale mu = pi / diam Z. A one-point base
/// degenerates to the ray [0, infinity).
struct HyperbolicCone {
    const FiniteMetricSpace* base = nullptr;
    double mu = 0.0; // 0 marks the degenerate ray

    explicit HyperbolicCone(const FiniteMetricSpace& z);
};

/// Stable arccosh(1 + delta) for delta >= 0.
double acosh1p(double delta);

/// Isosceles chord a(t, alpha): cosh a = cosh^2 t - sinh^2 t cos alpha.
double chord_length(double t, double alpha);

/// General hyperbolic law of cosines with sides t, t2 and angle alpha.
/// Switches to the log-domain evaluation when t + t2 > kLogDomainSwitch.
double hyp_side(double t, double t2, double alpha);
double hyp_side_exact(double t, double t2, double alpha);
double hyp_side_logdomain(double t, double t2, double alpha);
inline constexpr double kLogDomainSwitch = 40.0;

double cone_distance(const HyperbolicCone& cone, const ConePoint& x, const ConePoint& y);

/// Gromov product w.r.t. a base point in a finite metric space.
double gromov_product(const FiniteMetricSpace& space, int o, int x, int y);

/// Gromov product of cone points w.r.t. the vertex.
double cone_gromov_product(const HyperbolicCone& cone, const ConePoint& x, const ConePoint& y);

/// Defect of a delta-triple: difference of the two smallest of three numbers.
double triple_defect(double a, double b, double c);

/// Exact max triple defect of Gromov products w.r.t. o: the minimal delta for
/// which the space is delta-hyperbolic w.r.t. o.
double delta_certificate(const FiniteMetricSpace& space, int o);

struct ConeDeltaReport {
    double max_defect = 0.0;
    double max_comparison_gap = 0.0; // max of (defect - comparison defect)
    long triples = 0;
};

/// Max triple defect over the given cone points w.r.t. the vertex, together
/// with the per-triple comparison against the straightened H^2 configuration.
ConeDeltaReport cone_delta_certificate(const HyperbolicCone& cone,
                                       const std::vector<ConePoint>& sample);

/// Defect of the matched H^2 comparison configuration of a cone triple: the
/// two triangles share the side through the point whose opposite pair has
/// the smallest product, and the outer distance is straightened.
double comparison_defect(const HyperbolicCone& cone, const ConePoint& a,
                         const ConePoint& b, const ConePoint& c);

/// Copy of the base at radius t with the cone metric. Requires t > 0.
FiniteMetricSpace level_space(const HyperbolicCone& cone, double t,
                              const std::optional<PointSet>& sample = std::nullopt);

inline constexpr double kGromovSentinel = 1e9;

/// Proxy boundary product (gamma(T) | gamma'(T))_o; requires the grid value
/// to have stabilized (increment below kStabilizationTol per unit T).
double visual_product(const HyperbolicCone& cone, int z, int z2, double T);
inline constexpr double kStabilizationTol = 1e-6;

struct SandwichReport {
    bool pass = true;
    double worst_lower_margin = 1e300; // min of tan - lower bound
    double worst_upper_margin = 1e300; // min of upper bound - tan
    int arg_i = -1, arg_j = -1;
    long pairs = 0;
};

/// Checks e^{-5 delta} e^{-P} <= tan(mu |zz'|/4) <= e^{-P + 2 delta} for all
/// base pairs, P the proxy product at T.
SandwichReport visual_sandwich_check(const HyperbolicCone& cone, double T, double delta);

// ---- rough-similarity embedding of rooted trees -------------------------

struct RoughEmbedReport {
    std::vector<int> leaf_of;        // chosen boundary leaf per vertex
    std::vector<double> radius;      // |x| = d(x, root)
    PointSet leaves;                 // boundary set (indices into the tree)
    double visual_defect = 0.0;      // D: max |x| - (x|xi(x))
    double additive_error = 0.0;     // sup | |xx'| - |F(x)F(x')| |
};

/// Visual boundary of a rooted 0-hyperbolic space: its leaves with the
/// metric d(xi, xi') = exp(-(xi|xi')_root).
FiniteMetricSpace visual_boundary(const FiniteMetricSpace& tree, int root, PointSet& leaves_out);

/// F(x) = (xi(x), |x|) into the cone over the visual boundary; throws when
/// the input is not a tree metric (nonzero hyperbolicity defect at the root).
RoughEmbedReport rough_embed(const FiniteMetricSpace& tree, int root,
                             const HyperbolicCone& target, const PointSet& leaves);

} // namespace coarselab
