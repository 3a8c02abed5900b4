#pragma once

#include "coarselab/metric_space.hpp"

#include <optional>
#include <vector>

namespace coarselab {

/// Indexed family of nonempty point subsets, optionally colored.
///
/// Members of one color must be pairwise disjoint when the family is used as
/// an m-colored covering; validate_colors() checks that on demand.
struct Covering {
    const FiniteMetricSpace* space = nullptr;
    std::vector<PointSet> members;
    std::optional<std::vector<int>> colors; // one label per member
    int dropped_empty = 0;                  // bookkeeping from shrink()

    int size() const { return static_cast<int>(members.size()); }
};

Covering make_covering(const FiniteMetricSpace& space, std::vector<PointSet> members,
                       std::optional<std::vector<int>> colors = std::nullopt);

bool is_covering(const Covering& cov);
void require_covering(const Covering& cov);

/// Same-color members pairwise disjoint; trivially true when uncolored.
bool colors_valid(const Covering& cov);
int color_count(const Covering& cov);

double mesh(const Covering& cov);
double mesh_at(const Covering& cov, int z); // throws "point not covered"

/// L'(U,z) = sup over members of dist(z, Z \ U), with dist(z, empty set)
/// capped at diam Z.
double lebesgue_prime_at(const Covering& cov, int z);
double lebesgue_at(const Covering& cov, int z);
double lebesgue(const Covering& cov);

int multiplicity(const Covering& cov);
int multiplicity_at(const Covering& cov, int z);
int r_multiplicity(const Covering& cov, double r);

/// cap(U) = L(U)/mesh(U), with cap = 1 when mesh = 0.
double capacity(const Covering& cov);

/// inf over z of L(U,z)/mesh(U,z); pointwise ratio is 1 where mesh(U,z)=0.
double local_capacity(const Covering& cov);

/// Member-wise B_{-s}; requires 0 < s < L(cov). Empty members are dropped
/// and counted in the result's dropped_empty field.
Covering shrink(const Covering& cov, double s);

/// U * W: for every U-member, its union with all W-members meeting it.
std::vector<PointSet> star_merge(const std::vector<PointSet>& U,
                                 const std::vector<PointSet>& W);

/// Any two members are disjoint or nested.
bool is_separated(const std::vector<PointSet>& members);

/// Every member of `fine` is contained in some member of `coarse`.
bool is_inscribed(const Covering& fine, const Covering& coarse);

/// inf member diameter >= c * mesh.
bool is_balanced(const Covering& cov, double c);

/// Drops members contained in some other member (keeps the first of equals).
Covering drop_dominated(const Covering& cov);

} // namespace coarselab
