#pragma once

#include "coarselab/covering.hpp"
#include "coarselab/hypcone.hpp"
#include "coarselab/polyhedron.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coarselab {

enum class WindowPolicy { Strict, Report };

/// Scale schedule of the cone construction: half-gap d = (m+2)^2 / (2 lambda),
/// windows tau_{k+1} = e^{-2d} tau_k, levels t_k = ln(2/tau_k) + 2(m+2)^2/lambda.
/// The identity d = (m+2)^2/lambda + ln(c0 delta) pins c0 * delta = e^{-d}.
struct CechSchedule {
    double lambda = 0.0;
    int m = 0;
    int depth = 0; // K: levels k = 0..K
    double d = 0.0;
    double sigma = 0.0; // c0 * delta = e^{-d}
    double c0 = 0.0;    // min measured capacity of the supplied coverings
    double delta = 0.0; // sigma / c0
    double mu = 0.0;
    double tau0 = 0.0;
    std::vector<double> tau;
    std::vector<double> t;
    std::vector<double> level_mesh; // mu * mesh of each covering
    std::vector<double> level_cap;
    std::vector<std::string> window_violations; // clause (ii) diagnostics
};

/// Builds and validates the schedule against the supplied inscribed chain.
/// Clauses (i) multiplicity and (iii) inscription always raise on violation;
/// clause (ii) raises under Strict and is recorded under Report. tau0 <= 0
/// selects the placement minimizing the worst window violation.
CechSchedule build_schedule(double lambda, int m, const std::vector<Covering>& coverings,
                            int depth, WindowPolicy policy = WindowPolicy::Strict,
                            double tau0 = 0.0);

struct LambdaFeasibility {
    bool feasible = false;
    double lambda_min = 0.0; // smallest certifiable lambda for the chain
    double lambda_max = 0.0;
    double c0 = 0.0;
};

/// Inverts the schedule identities: the range of lambda for which the
/// supplied chain satisfies every clause-(ii) window for some tau0.
LambdaFeasibility feasible_lambda_range(int m, const std::vector<Covering>& coverings);

/// Product point (x, s) of N_k x [0,1].
struct ProductPoint {
    BaryPoint x;
    double s = 0.0;
};

/// The assembled polyhedron P and everything needed to evaluate f.
class WitnessMap {
public:
    WitnessMap(const HyperbolicCone& cone, CechSchedule schedule,
               std::vector<Covering> coverings);

    const CechSchedule& schedule() const { return schedule_; }
    const UniformComplex& polyhedron() const { return P_; }
    const HyperbolicCone& cone() const { return *cone_; }

    /// f(z, t) as a point of P; t must not exceed t_K.
    BaryPoint evaluate(int z, double t) const;

    /// Barycentric map of level t against covering k (band [t_{k-1}, t_k]).
    BaryPoint level_barycentric(int k, double t, int z) const;
    LipschitzReport level_lipschitz(int k, double t) const;

    /// Homotopy h_k on the annulus [t_k, t_k + d], as a product point.
    ProductPoint homotopy_map(int k, int z, double t) const;

    /// phi_k . g_k on the annulus [t_k + d, t_{k+1}], in C_k coordinates.
    BaryPoint cylinder_leg(int k, int z, double t) const;

    /// Level metric mesh of covering k at radius t.
    double level_mesh_metric(int k, double t) const;

    const UniformComplex& nerve_of(int k) const { return nerves_[static_cast<size_t>(k)]; }
    const std::vector<int>& projection_of(int k) const { return rho_[static_cast<size_t>(k)]; }
    const Covering& covering_of(int k) const { return coverings_[static_cast<size_t>(k)]; }
    int global_vertex(int k, bool top, int j) const;

    /// Decodes a global vertex label: (covering level, member index), or
    /// (-1, -1) for the apex.
    std::pair<int, int> vertex_member(int global_id) const;

private:
    const HyperbolicCone* cone_;
    CechSchedule schedule_;
    std::vector<Covering> coverings_;
    std::vector<UniformComplex> nerves_;
    std::vector<std::vector<int>> rho_; // rho_k: N_{k+1} -> N_k vertex map
    std::vector<std::vector<BaryPoint>> p_at_level_; // p_k(z, t_k) per k
    UniformComplex P_;
    std::vector<std::vector<int>> bottom_ids_, top_ids_; // global vertex ids
    int apex_ = 0;

    BaryPoint to_global(int k, const CylinderCoords& c, bool cylinder_piece) const;
};

struct WitnessReport {
    int dim = 0;
    double lambda = 0.0;
    double d = 0.0;
    double lip_measured = 0.0;       // worst sampled pair ratio
    double lip_same_piece = 0.0;     // worst single-annulus ratio
    double lip_cross_piece = 0.0;    // worst cross-annulus ratio
    double cobound_max = 0.0;        // max simplex preimage diameter
    double cobound_bound = 0.0;      // 4d + max level footprint
    bool cobound_pass = true;
    double max_level_mesh = 0.0;     // max simplex footprint at its level
    double range_t = 0.0;            // certified range [0, t_K]
    double seam_gap = 0.0;           // max seam discrepancy (exact: ~1e-15)
    long pairs = 0;
    std::vector<double> per_level_mesh;
    std::vector<double> per_level_lip;
    std::vector<std::string> window_violations;
};

struct SamplingPlan {
    int vertical_per_band = 8;   // t-grid step d/8
    int random_cross_pairs = 10000;
    std::uint64_t seed = 1;
};

/// Full certification run: level pair scans, vertical ray scans, random
/// cross pairs, seam checks, per-simplex preimage diameters.
WitnessReport certify(const WitnessMap& f, const SamplingPlan& plan);

} // namespace coarselab
