#include "coarselab/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace coarselab {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Remove simplices contained in another one of the list.
std::vector<std::vector<int>> prune_dominated(std::vector<std::vector<int>> simplices) {
    std::sort(simplices.begin(), simplices.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<std::vector<int>> out;
    for (const auto& s : simplices) {
        bool dominated = false;
        for (const auto& kept : out)
            if (std::includes(kept.begin(), kept.end(), s.begin(), s.end())) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

UniformComplex UniformComplex::from_maximal(std::vector<std::string> labels,
                                            std::vector<std::vector<int>> maximal) {
    UniformComplex P;
    P.labels_ = std::move(labels);
    {
        std::set<std::string> seen(P.labels_.begin(), P.labels_.end());
        if (seen.size() != P.labels_.size())
            throw std::invalid_argument("vertex labels must be unique");
    }
    const int n = P.vertex_count();
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (auto& s : maximal) {
        s = sorted_unique(std::move(s));
        if (s.empty()) throw std::invalid_argument("empty simplex");
        if (s.front() < 0 || s.back() >= n)
            throw std::invalid_argument("simplex vertex out of range");
        for (int v : s) used[static_cast<size_t>(v)] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<size_t>(v)]) maximal.push_back({v});
    P.maximal_ = prune_dominated(std::move(maximal));
    return P;
}

int UniformComplex::index_of(const std::string& label) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (labels_[static_cast<size_t>(v)] == label) return v;
    throw std::invalid_argument("unknown vertex label: " + label);
}

bool UniformComplex::has_simplex(const std::vector<int>& sorted_vertices) const {
    if (sorted_vertices.empty()) return false;
    for (const auto& m : maximal_)
        if (std::includes(m.begin(), m.end(), sorted_vertices.begin(), sorted_vertices.end()))
            return true;
    return false;
}

int UniformComplex::dimension() const {
    size_t best = 0;
    for (const auto& m : maximal_) best = std::max(best, m.size());
    return static_cast<int>(best) - 1;
}

std::vector<std::vector<int>> UniformComplex::all_simplices() const {
    std::set<std::vector<int>> out;
    for (const auto& m : maximal_) {
        const size_t k = m.size();
        if (k > 20) throw std::runtime_error("simplex too large to enumerate");
        for (size_t mask = 1; mask < (size_t(1) << k); ++mask) {
            std::vector<int> s;
            for (size_t i = 0; i < k; ++i)
                if (mask & (size_t(1) << i)) s.push_back(m[i]);
            out.insert(std::move(s));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<int> BaryPoint::support() const {
    std::vector<int> s;
    s.reserve(coords.size());
    for (const auto& [v, w] : coords) s.push_back(v);
    return s;
}

double BaryPoint::weight(int v) const {
    for (const auto& [u, w] : coords)
        if (u == v) return w;
    return 0.0;
}

BaryPoint make_bary(std::vector<std::pair<int, double>> coords) {
    std::sort(coords.begin(), coords.end());
    BaryPoint x;
    double total = 0.0;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i + 1 < coords.size() && coords[i].first == coords[i + 1].first) {
            coords[i + 1].second += coords[i].second;
            continue;
        }
        if (coords[i].second < 0 && coords[i].second > -BaryPoint::kWeightTol)
            coords[i].second = 0.0;
        if (coords[i].second < 0) throw std::invalid_argument("negative barycentric weight");
        if (coords[i].second > 0) {
            x.coords.push_back(coords[i]);
            total += coords[i].second;
        }
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("barycentric weights must sum to 1");
    return x;
}

BaryPoint vertex_point(int v) {
    BaryPoint x;
    x.coords = {{v, 1.0}};
    return x;
}

double bary_distance(const BaryPoint& x, const BaryPoint& y) {
    double sq = 0.0;
    size_t i = 0, j = 0;
    while (i < x.coords.size() || j < y.coords.size()) {
        if (j >= y.coords.size() ||
            (i < x.coords.size() && x.coords[i].first < y.coords[j].first)) {
            sq += x.coords[i].second * x.coords[i].second;
            ++i;
        } else if (i >= x.coords.size() || y.coords[j].first < x.coords[i].first) {
            sq += y.coords[j].second * y.coords[j].second;
            ++j;
        } else {
            double d = x.coords[i].second - y.coords[j].second;
            sq += d * d;
            ++i;
            ++j;
        }
    }
    return std::sqrt(sq);
}

double point_distance(const UniformComplex& P, const BaryPoint& x, const BaryPoint& y) {
    if (!P.has_simplex(x.support()) || !P.has_simplex(y.support()))
        throw std::invalid_argument("point support outside complex");
    return bary_distance(x, y);
}

BaryPoint bary_interpolate(const BaryPoint& x, const BaryPoint& y, double s) {
    std::vector<std::pair<int, double>> coords;
    for (const auto& [v, w] : x.coords) coords.emplace_back(v, (1.0 - s) * w);
    for (const auto& [v, w] : y.coords) coords.emplace_back(v, s * w);
    return make_bary(std::move(coords));
}

BaryPoint apply_vertex_map(const std::vector<int>& vmap, const BaryPoint& x) {
    std::vector<std::pair<int, double>> coords;
    coords.reserve(x.coords.size());
    for (const auto& [v, w] : x.coords)
        coords.emplace_back(vmap[static_cast<size_t>(v)], w);
    return make_bary(std::move(coords));
}

UniformComplex nerve(const Covering& cov) {
    std::vector<std::string> labels;
    labels.reserve(cov.members.size());
    for (size_t i = 0; i < cov.members.size(); ++i) labels.push_back("U" + std::to_string(i));
    std::vector<std::vector<int>> maximal;
    for (int z = 0; z < cov.space->size(); ++z) {
        std::vector<int> s;
        for (int j = 0; j < cov.size(); ++j)
            if (set_contains(cov.members[static_cast<size_t>(j)], z)) s.push_back(j);
        if (!s.empty()) maximal.push_back(std::move(s));
    }
    return UniformComplex::from_maximal(std::move(labels), std::move(maximal));
}

BaryPoint barycentric_map(const Covering& cov, int z) {
    const double cap = cov.space->diam();
    std::vector<std::pair<int, double>> q;
    double total = 0.0;
    int first_member = -1;
    for (int j = 0; j < cov.size(); ++j) {
        const auto& m = cov.members[static_cast<size_t>(j)];
        if (!set_contains(m, z)) continue;
        if (first_member < 0) first_member = j;
        PointSet comp = set_complement(m, cov.space->size());
        double qj = comp.empty() ? cap : std::min(cap, dist_to_set(*cov.space, z, comp));
        if (qj > 0) {
            q.emplace_back(j, qj);
            total += qj;
        }
    }
    if (first_member < 0) throw std::invalid_argument("point not covered");
    if (total <= 0) {
        // zero-diameter degenerate case: all capped weights vanish
        return vertex_point(first_member);
    }
    for (auto& [j, w] : q) w /= total;
    return make_bary(std::move(q));
}

LipschitzReport measure_lipschitz(const FiniteMetricSpace& space,
                                  const std::vector<BaryPoint>& images, double bound) {
    LipschitzReport rep;
    rep.bound = bound;
    const int n = space.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = space.dist(i, j);
            if (d <= 0) continue;
            double r = bary_distance(images[static_cast<size_t>(i)],
                                     images[static_cast<size_t>(j)]) / d;
            ++rep.pair_count;
            if (r > rep.measured) {
                rep.measured = r;
                rep.arg_i = i;
                rep.arg_j = j;
            }
        }
    rep.pass = rep.measured <= bound;
    return rep;
}

LipschitzReport barycentric_lipschitz_certificate(const Covering& cov) {
    require_covering(cov);
    double L = lebesgue(cov);
    if (!(L > 0)) throw std::invalid_argument("barycentric certificate needs L > 0");
    int m = multiplicity(cov) - 1;
    double bound = (m + 2.0) * (m + 2.0) / L;
    std::vector<BaryPoint> images;
    images.reserve(static_cast<size_t>(cov.space->size()));
    for (int z = 0; z < cov.space->size(); ++z) images.push_back(barycentric_map(cov, z));
    return measure_lipschitz(*cov.space, images, bound);
}

std::vector<int> simplicial_projection(const Covering& fine, const Covering& coarse) {
    std::vector<int> vmap;
    vmap.reserve(fine.members.size());
    for (const auto& f : fine.members) {
        int target = -1;
        for (int j = 0; j < coarse.size(); ++j)
            if (is_subset(f, coarse.members[static_cast<size_t>(j)])) {
                target = j;
                break;
            }
        if (target < 0)
            throw std::invalid_argument("fine covering is not inscribed in coarse");
        vmap.push_back(target);
    }
    return vmap;
}

bool is_simplicial_map(const UniformComplex& K, const UniformComplex& L,
                       const std::vector<int>& vmap) {
    if (vmap.size() != static_cast<size_t>(K.vertex_count())) return false;
    for (const auto& s : K.maximal_simplices()) {
        std::vector<int> img;
        img.reserve(s.size());
        for (int v : s) img.push_back(vmap[static_cast<size_t>(v)]);
        img = sorted_unique(std::move(img));
        if (!L.has_simplex(img)) return false;
    }
    return true;
}

SubdivisionStars colored_star_covering(const UniformComplex& P) {
    SubdivisionStars stars;
    for (const auto& s : P.all_simplices()) {
        stars.colors.push_back(static_cast<int>(s.size()) - 1);
        stars.simplices.push_back(s);
    }
    return stars;
}

std::vector<std::vector<int>> chain_of(const BaryPoint& x) {
    std::vector<std::pair<double, int>> by_weight;
    by_weight.reserve(x.coords.size());
    for (const auto& [v, w] : x.coords) by_weight.emplace_back(w, v);
    std::sort(by_weight.begin(), by_weight.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::vector<int>> chain;
    std::vector<int> prefix;
    for (size_t i = 0; i < by_weight.size(); ++i) {
        prefix.push_back(by_weight[i].second);
        bool strict_drop =
            (i + 1 == by_weight.size()) || (by_weight[i + 1].first < by_weight[i].first);
        if (strict_drop) {
            std::vector<int> s = prefix;
            std::sort(s.begin(), s.end());
            chain.push_back(std::move(s));
        }
    }
    return chain;
}

bool star_contains(const std::vector<int>& sigma, const BaryPoint& x) {
    for (const auto& s : chain_of(x))
        if (s == sigma) return true;
    return false;
}

Covering pullback_star_covering(const Covering& cov) {
    require_covering(cov);
    UniformComplex N = nerve(cov);
    SubdivisionStars stars = colored_star_covering(N);
    std::vector<BaryPoint> images;
    images.reserve(static_cast<size_t>(cov.space->size()));
    for (int z = 0; z < cov.space->size(); ++z) images.push_back(barycentric_map(cov, z));

    std::vector<PointSet> members;
    std::vector<int> colors;
    for (size_t k = 0; k < stars.simplices.size(); ++k) {
        PointSet pts;
        for (int z = 0; z < cov.space->size(); ++z)
            if (star_contains(stars.simplices[k], images[static_cast<size_t>(z)]))
                pts.push_back(z);
        if (pts.empty()) continue;
        members.push_back(std::move(pts));
        colors.push_back(stars.colors[k]);
    }
    return make_covering(*cov.space, std::move(members), std::move(colors));
}

UniformComplex mapping_cylinder(const UniformComplex& K, const UniformComplex& L,
                                const std::vector<int>& rho,
                                const std::vector<int>& order) {
    if (!is_simplicial_map(K, L, rho)) throw std::invalid_argument("map is not simplicial");
    if (order.size() != static_cast<size_t>(K.vertex_count()))
        throw std::invalid_argument("order must cover all source vertices");
    std::vector<int> rank(static_cast<size_t>(K.vertex_count()), -1);
    for (size_t i = 0; i < order.size(); ++i) rank[static_cast<size_t>(order[i])] = static_cast<int>(i);
    for (int r : rank)
        if (r < 0) throw std::invalid_argument("order must be a permutation of K's vertices");

    const int nk = K.vertex_count();
    std::vector<std::string> labels = K.labels();
    for (const auto& l : L.labels()) labels.push_back(l);

    std::vector<std::vector<int>> maximal;
    for (const auto& s : K.maximal_simplices()) {
        std::vector<int> byrank = s;
        std::sort(byrank.begin(), byrank.end(), [&](int a, int b) {
            return rank[static_cast<size_t>(a)] < rank[static_cast<size_t>(b)];
        });
        const size_t p = byrank.size();
        for (size_t j = 0; j < p; ++j) {
            std::vector<int> cell;
            for (size_t i = 0; i <= j; ++i) cell.push_back(byrank[i]);
            for (size_t i = j; i < p; ++i) cell.push_back(nk + rho[static_cast<size_t>(byrank[i])]);
            maximal.push_back(sorted_unique(std::move(cell)));
        }
    }
    for (const auto& s : L.maximal_simplices()) {
        std::vector<int> cell;
        cell.reserve(s.size());
        for (int v : s) cell.push_back(nk + v);
        maximal.push_back(std::move(cell));
    }
    return UniformComplex::from_maximal(std::move(labels), std::move(maximal));
}

CylinderCoords staircase_coords(const BaryPoint& x, double s, const std::vector<int>& order) {
    if (s < 0 || s > 1) throw std::invalid_argument("cylinder parameter outside [0,1]");
    std::vector<int> rank(order.size(), -1);
    for (size_t i = 0; i < order.size(); ++i) rank[static_cast<size_t>(order[i])] = static_cast<int>(i);

    std::vector<std::pair<int, double>> sorted = x.coords; // (vertex, weight)
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        return rank[static_cast<size_t>(a.first)] < rank[static_cast<size_t>(b.first)];
    });

    CylinderCoords out;
    if (s == 1.0) {
        out.source = sorted;
        return out;
    }
    if (s == 0.0) {
        out.target = sorted;
        return out;
    }
    const size_t p = sorted.size();
    double csum = 0.0;
    size_t k = 0;
    double prev = 0.0;
    for (; k < p; ++k) {
        prev = csum;
        csum += sorted[k].second;
        if (s <= csum + 1e-15) break;
    }
    if (k == p) { k = p - 1; csum = 1.0; prev = csum - sorted[k].second; }
    for (size_t i = 0; i < k; ++i) out.source.emplace_back(sorted[i].first, sorted[i].second);
    double lam = s - prev;
    double mu = csum - s;
    if (lam > 0) out.source.emplace_back(sorted[k].first, lam);
    if (mu > 0) out.target.emplace_back(sorted[k].first, mu);
    for (size_t i = k + 1; i < p; ++i) out.target.emplace_back(sorted[i].first, sorted[i].second);
    return out;
}

BaryPoint cylinder_projection(const UniformComplex& K, const std::vector<int>& rho,
                              int l_vertex_count, const BaryPoint& x, double s,
                              const std::vector<int>& order) {
    (void)l_vertex_count;
    CylinderCoords c = staircase_coords(x, s, order);
    std::vector<std::pair<int, double>> coords;
    for (const auto& [v, w] : c.source) coords.emplace_back(v, w);
    const int nk = K.vertex_count();
    for (const auto& [v, w] : c.target) coords.emplace_back(nk + rho[static_cast<size_t>(v)], w);
    return make_bary(std::move(coords));
}

std::vector<BaryPoint> sample_complex(const UniformComplex& P, int grid) {
    if (grid < 1) throw std::invalid_argument("grid must be positive");
    std::set<std::vector<std::pair<int, int>>> seen; // (vertex, numerator)
    std::vector<BaryPoint> out;
    for (const auto& s : P.maximal_simplices()) {
        const size_t q = s.size();
        std::vector<int> comp(q, 0);
        comp[0] = grid;
        // enumerate compositions of `grid` into q parts
        while (true) {
            std::vector<std::pair<int, int>> key;
            for (size_t i = 0; i < q; ++i)
                if (comp[i] > 0) key.emplace_back(s[i], comp[i]);
            if (seen.insert(key).second) {
                std::vector<std::pair<int, double>> coords;
                for (const auto& [v, num] : key)
                    coords.emplace_back(v, static_cast<double>(num) / grid);
                out.push_back(make_bary(std::move(coords)));
            }
            // next composition
            size_t i = 0;
            while (i + 1 < q && comp[i] == 0) ++i;
            if (i + 1 >= q) break;
            int take = comp[i];
            comp[i] = 0;
            comp[i + 1] += 1;
            comp[0] = take - 1;
        }
    }
    return out;
}

FiniteMetricSpace sample_space(const std::vector<BaryPoint>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<double> flat(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = bary_distance(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)]);
            flat[static_cast<size_t>(i) * n + j] = d;
            flat[static_cast<size_t>(j) * n + i] = d;
        }
    return FiniteMetricSpace(n, std::move(flat));
}

std::vector<std::vector<std::string>> maximal_simplex_labels(const UniformComplex& P) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : P.maximal_simplices()) {
        std::vector<std::string> labels;
        labels.reserve(s.size());
        for (int v : s) labels.push_back(P.label(v));
        out.push_back(std::move(labels));
    }
    return out;
}

} // namespace coarselab
