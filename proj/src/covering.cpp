#include "coarselab/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace coarselab {

Covering make_covering(const FiniteMetricSpace& space, std::vector<PointSet> members,
                       std::optional<std::vector<int>> colors) {
    Covering cov;
    cov.space = &space;
    for (auto& m : members) {
        if (m.empty()) throw std::invalid_argument("covering members must be nonempty");
        m = make_point_set(std::move(m), space.size());
    }
    cov.members = std::move(members);
    if (colors && colors->size() != cov.members.size())
        throw std::invalid_argument("one color label per member required");
    cov.colors = std::move(colors);
    return cov;
}

bool is_covering(const Covering& cov) {
    std::vector<char> hit(static_cast<size_t>(cov.space->size()), 0);
    for (const auto& m : cov.members)
        for (int z : m) hit[static_cast<size_t>(z)] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

void require_covering(const Covering& cov) {
    if (!is_covering(cov)) throw std::invalid_argument("family is not a covering");
}

bool colors_valid(const Covering& cov) {
    if (!cov.colors) return true;
    for (size_t i = 0; i < cov.members.size(); ++i)
        for (size_t j = i + 1; j < cov.members.size(); ++j)
            if ((*cov.colors)[i] == (*cov.colors)[j] &&
                sets_intersect(cov.members[i], cov.members[j]))
                return false;
    return true;
}

int color_count(const Covering& cov) {
    if (!cov.colors) return 0;
    std::set<int> c(cov.colors->begin(), cov.colors->end());
    return static_cast<int>(c.size());
}

double mesh(const Covering& cov) {
    double best = 0.0;
    for (const auto& m : cov.members) best = std::max(best, diameter_of(*cov.space, m));
    return best;
}

double mesh_at(const Covering& cov, int z) {
    double best = -1.0;
    for (const auto& m : cov.members)
        if (set_contains(m, z)) best = std::max(best, diameter_of(*cov.space, m));
    if (best < 0) throw std::invalid_argument("point not covered");
    return best;
}

double lebesgue_prime_at(const Covering& cov, int z) {
    const double cap = cov.space->diam();
    double best = 0.0;
    for (const auto& m : cov.members) {
        PointSet comp = set_complement(m, cov.space->size());
        double v = comp.empty() ? cap : dist_to_set(*cov.space, z, comp);
        best = std::max(best, v);
    }
    return best;
}

double lebesgue_at(const Covering& cov, int z) {
    require_covering(cov);
    return std::min(lebesgue_prime_at(cov, z), mesh_at(cov, z));
}

double lebesgue(const Covering& cov) {
    require_covering(cov);
    double best = std::numeric_limits<double>::infinity();
    for (int z = 0; z < cov.space->size(); ++z)
        best = std::min(best, std::min(lebesgue_prime_at(cov, z), mesh_at(cov, z)));
    return best;
}

int multiplicity_at(const Covering& cov, int z) {
    int c = 0;
    for (const auto& m : cov.members)
        if (set_contains(m, z)) ++c;
    return c;
}

int multiplicity(const Covering& cov) {
    int best = 0;
    for (int z = 0; z < cov.space->size(); ++z) best = std::max(best, multiplicity_at(cov, z));
    return best;
}

int r_multiplicity(const Covering& cov, double r) {
    if (r < 0) throw std::invalid_argument("r-multiplicity needs r >= 0");
    if (r == 0) return multiplicity(cov);
    int best = 0;
    for (int z = 0; z < cov.space->size(); ++z) {
        int c = 0;
        for (const auto& m : cov.members)
            if (dist_to_set(*cov.space, z, m) < r) ++c;
        best = std::max(best, c);
    }
    return best;
}

double capacity(const Covering& cov) {
    double ms = mesh(cov);
    if (ms == 0.0) return 1.0;
    return lebesgue(cov) / ms;
}

double local_capacity(const Covering& cov) {
    require_covering(cov);
    double best = 1.0;
    for (int z = 0; z < cov.space->size(); ++z) {
        double ma = mesh_at(cov, z);
        if (ma == 0.0) continue; // degenerate point: ratio counts as 1
        double la = std::min(lebesgue_prime_at(cov, z), ma);
        best = std::min(best, la / ma);
    }
    return best;
}

Covering shrink(const Covering& cov, double s) {
    if (!(s > 0)) throw std::invalid_argument("shrink amount must be positive");
    if (s >= lebesgue(cov)) throw std::invalid_argument("shrink exceeds Lebesgue number");
    Covering out;
    out.space = cov.space;
    for (size_t i = 0; i < cov.members.size(); ++i) {
        PointSet shrunk = neighborhood(*cov.space, cov.members[i], -s);
        if (shrunk.empty()) {
            ++out.dropped_empty;
            continue;
        }
        out.members.push_back(std::move(shrunk));
        if (cov.colors) {
            if (!out.colors) out.colors.emplace();
            out.colors->push_back((*cov.colors)[i]);
        }
    }
    return out;
}

std::vector<PointSet> star_merge(const std::vector<PointSet>& U,
                                 const std::vector<PointSet>& W) {
    std::vector<PointSet> out;
    out.reserve(U.size());
    for (const auto& u : U) {
        PointSet v = u;
        for (const auto& w : W)
            if (sets_intersect(u, w)) v = set_union(v, w);
        out.push_back(std::move(v));
    }
    return out;
}

bool is_separated(const std::vector<PointSet>& members) {
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            const auto& a = members[i];
            const auto& b = members[j];
            if (!sets_intersect(a, b)) continue;
            if (!is_subset(a, b) && !is_subset(b, a)) return false;
        }
    return true;
}

bool is_inscribed(const Covering& fine, const Covering& coarse) {
    for (const auto& f : fine.members) {
        bool found = false;
        for (const auto& c : coarse.members)
            if (is_subset(f, c)) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

bool is_balanced(const Covering& cov, double c) {
    double ms = mesh(cov);
    double inf_diam = std::numeric_limits<double>::infinity();
    for (const auto& m : cov.members)
        inf_diam = std::min(inf_diam, diameter_of(*cov.space, m));
    return inf_diam >= c * ms - 1e-12;
}

Covering drop_dominated(const Covering& cov) {
    Covering out;
    out.space = cov.space;
    for (size_t i = 0; i < cov.members.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < cov.members.size(); ++j) {
            if (i == j) continue;
            if (is_subset(cov.members[i], cov.members[j])) {
                // keep the first of identical members
                if (cov.members[i] == cov.members[j] && i < j) continue;
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        out.members.push_back(cov.members[i]);
        if (cov.colors) {
            if (!out.colors) out.colors.emplace();
            out.colors->push_back((*cov.colors)[i]);
        }
    }
    return out;
}

} // namespace coarselab
