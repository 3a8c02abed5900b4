#pragma once

#include <string>
#include <vector>

namespace coarselab {

/// Index set into a FiniteMetricSpace, kept sorted and duplicate-free.
using PointSet = std::vector<int>;

/// A finite metric space given by its full distance matrix.
///
/// The matrix is validated on construction: zero diagonal, symmetry and the
/// triangle inequality, all with absolute tolerance kMetricTol (inputs come
/// from floating-point generators).
class FiniteMetricSpace {
public:
    static constexpr double kMetricTol = 1e-9;

    FiniteMetricSpace(int n, std::vector<double> flat_dist);
    static FiniteMetricSpace from_matrix(const std::vector<std::vector<double>>& m);

    int size() const { return n_; }
    double dist(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }
    double diam() const { return diam_; }

    /// Smallest nonzero entry, 0 if none exists (one-point space).
    double min_positive_dist() const;

    PointSet all_points() const;

private:
    int n_;
    std::vector<double> d_;
    double diam_;
};

// ---- point-set helpers ------------------------------------------------

PointSet make_point_set(std::vector<int> indices, int n);
bool set_contains(const PointSet& s, int z);
PointSet set_complement(const PointSet& s, int n);
PointSet set_union(const PointSet& a, const PointSet& b);
bool sets_intersect(const PointSet& a, const PointSet& b);
bool is_subset(const PointSet& a, const PointSet& b);

// ---- metric operations ------------------------------------------------

/// dist(U,V) = min over cross pairs; throws on empty input.
double set_distance(const FiniteMetricSpace& space, const PointSet& U, const PointSet& V);

/// dist(z, U); +infinity when U is empty.
double dist_to_set(const FiniteMetricSpace& space, int z, const PointSet& U);

/// Generalized r-neighborhood: open B_r(U) for r > 0, U itself for r = 0,
/// and the complement of the closed |r|-neighborhood of the complement for
/// r < 0.
PointSet neighborhood(const FiniteMetricSpace& space, const PointSet& U, double r);

/// diam U; 0 for empty sets and singletons.
double diameter_of(const FiniteMetricSpace& space, const PointSet& U);

/// Entrywise rescaling of the metric by factor lambda > 0.
FiniteMetricSpace scale_metric(const FiniteMetricSpace& space, double lambda);

} // namespace coarselab
