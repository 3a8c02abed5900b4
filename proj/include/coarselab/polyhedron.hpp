#pragma once

#include "coarselab/covering.hpp"
#include "coarselab/metric_space.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace coarselab {

/// Abstract simplicial complex with the uniform (standard-simplex) metric.
/// Stored by its maximal simplices; every vertex label is unique.
class UniformComplex {
public:
    UniformComplex() = default;
    static UniformComplex from_maximal(std::vector<std::string> labels,
                                       std::vector<std::vector<int>> maximal);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(const std::string& label) const;

    const std::vector<std::vector<int>>& maximal_simplices() const { return maximal_; }
    bool has_simplex(const std::vector<int>& sorted_vertices) const;
    int dimension() const; // max |sigma| - 1

    /// Full downward closure, deduplicated (desk scale only).
    std::vector<std::vector<int>> all_simplices() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> maximal_;
};

/// Point of a uniform complex as a sparse barycentric coordinate vector.
/// Weights are positive and sum to 1 within kWeightTol.
struct BaryPoint {
    static constexpr double kWeightTol = 1e-12;
    std::vector<std::pair<int, double>> coords; // sorted by vertex index

    std::vector<int> support() const;
    double weight(int v) const;
};

BaryPoint make_bary(std::vector<std::pair<int, double>> coords);
BaryPoint vertex_point(int v);

/// Euclidean distance in the ambient coordinate space R^J.
double bary_distance(const BaryPoint& x, const BaryPoint& y);

/// Distance with support validation against P; throws if a support does not
/// span a simplex of P.
double point_distance(const UniformComplex& P, const BaryPoint& x, const BaryPoint& y);

BaryPoint bary_interpolate(const BaryPoint& x, const BaryPoint& y, double s);

/// Pushforward along a vertex map (weights of collapsing vertices add up).
BaryPoint apply_vertex_map(const std::vector<int>& vmap, const BaryPoint& x);

// ---- nerves and barycentric maps --------------------------------------

/// Nerve of a covering: vertex i is member i; a set of vertices spans a
/// simplex iff the members have a common point.
UniformComplex nerve(const Covering& cov);

/// Barycentric map weights q_j(z) = min(diam Z, dist(z, Z\U_j)), normalized.
BaryPoint barycentric_map(const Covering& cov, int z);

struct LipschitzReport {
    double measured = 0.0;
    double bound = 0.0;
    bool pass = true;
    long pair_count = 0;
    int arg_i = -1, arg_j = -1;
};

/// Pair-scan Lipschitz measurement of z -> image(z) against `bound`
/// (pass when measured <= bound). Pairs at distance 0 are skipped.
LipschitzReport measure_lipschitz(const FiniteMetricSpace& space,
                                  const std::vector<BaryPoint>& images, double bound);

/// Barycentric map of a covering with the paper bound (m+2)^2 / L.
LipschitzReport barycentric_lipschitz_certificate(const Covering& cov);

/// Vertex map of nerves induced by containment of members; ties broken by
/// lowest coarse member index. Throws when `fine` is not inscribed.
std::vector<int> simplicial_projection(const Covering& fine, const Covering& coarse);

/// Checks that `vmap` maps simplices of K to simplices of L.
bool is_simplicial_map(const UniformComplex& K, const UniformComplex& L,
                       const std::vector<int>& vmap);

// ---- barycentric subdivision stars -------------------------------------

/// Open stars of barycenters in the first barycentric subdivision, colored
/// by simplex dimension. Star sigma contains x iff sigma is one of the
/// superlevel sets of x's coordinates.
struct SubdivisionStars {
    std::vector<std::vector<int>> simplices; // the sigma of each star
    std::vector<int> colors;                 // dim sigma
};

SubdivisionStars colored_star_covering(const UniformComplex& P);

/// Simplices of the canonical chain of x (superlevel sets with strict gaps).
std::vector<std::vector<int>> chain_of(const BaryPoint& x);

bool star_contains(const std::vector<int>& sigma, const BaryPoint& x);

/// Pullback of the subdivision stars through the barycentric map of `cov`:
/// an (m+1)-colored covering of the base space.
Covering pullback_star_covering(const Covering& cov);

// ---- mapping cylinders --------------------------------------------------

/// Simplicial mapping cylinder C_rho of a simplicial vertex map rho: K -> L.
/// Vertices of the result are K's followed by L's (labels must not clash);
/// simplices are those of K, of L, and all subsets of
/// {v_0..v_j, rho(v_j)..rho(v_p)} over ordered simplices of K.
UniformComplex mapping_cylinder(const UniformComplex& K, const UniformComplex& L,
                                const std::vector<int>& rho,
                                const std::vector<int>& order);

/// Point of K x [0,1] in the staircase triangulation (the mapping cylinder
/// of the identity): returns weights on the source copy (s=1 side) and the
/// target copy (s=0 side). Exact at s=0 and s=1.
struct CylinderCoords {
    std::vector<std::pair<int, double>> source; // K-vertex -> weight
    std::vector<std::pair<int, double>> target;
};

CylinderCoords staircase_coords(const BaryPoint& x, double s, const std::vector<int>& order);

/// Canonical simplicial map phi of the cylinder over K to C_rho: the s=1 end
/// goes identically to K, the s=0 end through rho into L. Returns a point in
/// C_rho's vertex indexing (K's vertices first, then L's).
BaryPoint cylinder_projection(const UniformComplex& K, const std::vector<int>& rho,
                              int l_vertex_count, const BaryPoint& x, double s,
                              const std::vector<int>& order);

// ---- dense sampling (used by measurement oracles) -----------------------

/// Lattice sample of each maximal simplex with denominator `grid`,
/// deduplicated across shared faces.
std::vector<BaryPoint> sample_complex(const UniformComplex& P, int grid);

/// Finite metric space of a sample under the ambient Euclidean distance.
FiniteMetricSpace sample_space(const std::vector<BaryPoint>& pts);

/// JSON-facing views.
std::vector<std::vector<std::string>> maximal_simplex_labels(const UniformComplex& P);

} // namespace coarselab
