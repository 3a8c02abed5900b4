#include "coarselab/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace coarselab {

FiniteMetricSpace::FiniteMetricSpace(int n, std::vector<double> flat_dist)
    : n_(n), d_(std::move(flat_dist)), diam_(0.0) {
    if (n <= 0) throw std::invalid_argument("metric space needs at least one point");
    if (d_.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("distance matrix size mismatch");
    for (int i = 0; i < n_; ++i) {
        if (std::abs(dist(i, i)) > kMetricTol)
            throw std::invalid_argument("nonzero diagonal in distance matrix");
        for (int j = 0; j < n_; ++j) {
            double v = dist(i, j);
            if (!std::isfinite(v) || v < -kMetricTol)
                throw std::invalid_argument("distance entries must be finite and nonnegative");
            if (std::abs(v - dist(j, i)) > kMetricTol)
                throw std::invalid_argument("distance matrix is not symmetric");
            diam_ = std::max(diam_, v);
        }
    }
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                if (dist(i, j) > dist(i, k) + dist(k, j) + kMetricTol)
                    throw std::invalid_argument("triangle inequality violated");
}

FiniteMetricSpace FiniteMetricSpace::from_matrix(const std::vector<std::vector<double>>& m) {
    int n = static_cast<int>(m.size());
    std::vector<double> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("distance matrix must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return FiniteMetricSpace(n, std::move(flat));
}

double FiniteMetricSpace::min_positive_dist() const {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (dist(i, j) > 0) best = std::min(best, dist(i, j));
    return std::isfinite(best) ? best : 0.0;
}

PointSet FiniteMetricSpace::all_points() const {
    PointSet s(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) s[static_cast<size_t>(i)] = i;
    return s;
}

PointSet make_point_set(std::vector<int> indices, int n) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (!indices.empty() && (indices.front() < 0 || indices.back() >= n))
        throw std::invalid_argument("point index out of range");
    return indices;
}

bool set_contains(const PointSet& s, int z) {
    return std::binary_search(s.begin(), s.end(), z);
}

PointSet set_complement(const PointSet& s, int n) {
    PointSet out;
    out.reserve(static_cast<size_t>(n) - s.size());
    size_t k = 0;
    for (int i = 0; i < n; ++i) {
        if (k < s.size() && s[k] == i) { ++k; continue; }
        out.push_back(i);
    }
    return out;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
    PointSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool sets_intersect(const PointSet& a, const PointSet& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

bool is_subset(const PointSet& a, const PointSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

double set_distance(const FiniteMetricSpace& space, const PointSet& U, const PointSet& V) {
    if (U.empty() || V.empty())
        throw std::invalid_argument("empty set distance undefined");
    double best = std::numeric_limits<double>::infinity();
    for (int u : U)
        for (int v : V) best = std::min(best, space.dist(u, v));
    return best;
}

double dist_to_set(const FiniteMetricSpace& space, int z, const PointSet& U) {
    double best = std::numeric_limits<double>::infinity();
    for (int u : U) best = std::min(best, space.dist(z, u));
    return best;
}

PointSet neighborhood(const FiniteMetricSpace& space, const PointSet& U, double r) {
    if (r == 0.0) return U;
    PointSet out;
    if (r > 0) {
        for (int z = 0; z < space.size(); ++z)
            if (dist_to_set(space, z, U) < r) out.push_back(z);
        return out;
    }
    // B_r(U) = Z \ closed |r|-neighborhood of Z \ U
    PointSet comp = set_complement(U, space.size());
    for (int z = 0; z < space.size(); ++z)
        if (!(dist_to_set(space, z, comp) <= -r)) out.push_back(z);
    return out;
}

double diameter_of(const FiniteMetricSpace& space, const PointSet& U) {
    double best = 0.0;
    for (size_t i = 0; i < U.size(); ++i)
        for (size_t j = i + 1; j < U.size(); ++j)
            best = std::max(best, space.dist(U[i], U[j]));
    return best;
}

FiniteMetricSpace scale_metric(const FiniteMetricSpace& space, double lambda) {
    if (!(lambda > 0)) throw std::invalid_argument("scale factor must be positive");
    int n = space.size();
    std::vector<double> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = lambda * space.dist(i, j);
    return FiniteMetricSpace(n, std::move(flat));
}

} // namespace coarselab
