#include "coarselab/cdim.hpp"

#include "coarselab/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace coarselab {

std::vector<double> ScaleWindow::grid() const {
    std::vector<double> g;
    if (steps <= 1) {
        g.push_back(s_min);
        return g;
    }
    double q = std::pow(s_max / s_min, 1.0 / (steps - 1));
    double s = s_min;
    for (int i = 0; i < steps; ++i) {
        g.push_back(s);
        s *= q;
    }
    return g;
}

ScaleWindow make_window(double s_min, double s_max, int steps, double diam) {
    if (!(0 < s_min && s_min < s_max && s_max <= diam + 1e-12))
        throw std::invalid_argument("window must satisfy 0 < s_min < s_max <= diam");
    if (steps < 1) throw std::invalid_argument("window needs at least one step");
    return ScaleWindow{s_min, s_max, steps};
}

namespace {

// farthest-first traversal from index 0: pairwise separation >= sep and the
// covering radius is the first rejected farthest distance
PointSet greedy_net(const FiniteMetricSpace& space, double sep) {
    std::vector<double> dist_to(static_cast<size_t>(space.size()),
                                std::numeric_limits<double>::infinity());
    PointSet centers = {0};
    for (int z = 0; z < space.size(); ++z)
        dist_to[static_cast<size_t>(z)] = space.dist(z, 0);
    while (true) {
        int far = -1;
        double best = -1;
        for (int z = 0; z < space.size(); ++z)
            if (dist_to[static_cast<size_t>(z)] > best + 1e-15) {
                best = dist_to[static_cast<size_t>(z)];
                far = z;
            }
        if (best < sep) break;
        centers.push_back(far);
        for (int z = 0; z < space.size(); ++z)
            dist_to[static_cast<size_t>(z)] =
                std::min(dist_to[static_cast<size_t>(z)], space.dist(z, far));
    }
    std::sort(centers.begin(), centers.end());
    return centers;
}

std::vector<PointSet> closed_ball_family(const FiniteMetricSpace& space, const PointSet& centers,
                                         double r) {
    std::vector<PointSet> members;
    members.reserve(centers.size());
    for (int c : centers) {
        PointSet m;
        for (int z = 0; z < space.size(); ++z)
            if (space.dist(z, c) <= r) m.push_back(z);
        members.push_back(std::move(m));
    }
    return members;
}

std::vector<PointSet> threshold_components(const FiniteMetricSpace& space, double theta) {
    const int n = space.size();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (comp[static_cast<size_t>(i)] >= 0) continue;
        std::vector<int> stack = {i};
        comp[static_cast<size_t>(i)] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (comp[static_cast<size_t>(w)] < 0 && space.dist(v, w) <= theta) {
                    comp[static_cast<size_t>(w)] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    std::vector<PointSet> members(static_cast<size_t>(count));
    for (int i = 0; i < n; ++i) members[static_cast<size_t>(comp[static_cast<size_t>(i)])].push_back(i);
    return members;
}

int s_multiplicity_of(const FiniteMetricSpace& space, const std::vector<PointSet>& members,
                      double s) {
    int best = 0;
    for (int z = 0; z < space.size(); ++z) {
        int c = 0;
        for (const auto& m : members)
            if (dist_to_set(space, z, m) < s) ++c;
        best = std::max(best, c);
    }
    return best;
}

double family_mesh(const FiniteMetricSpace& space, const std::vector<PointSet>& members) {
    double best = 0;
    for (const auto& m : members) best = std::max(best, diameter_of(space, m));
    return best;
}

bool family_covers(const FiniteMetricSpace& space, const std::vector<PointSet>& members) {
    std::vector<char> hit(static_cast<size_t>(space.size()), 0);
    for (const auto& m : members)
        for (int z : m) hit[static_cast<size_t>(z)] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

/// Candidate coverings with mesh within [mesh_lo, mesh_hi].
std::vector<std::vector<PointSet>> covering_candidates(const FiniteMetricSpace& space,
                                                       double mesh_lo, double mesh_hi) {
    std::vector<std::vector<PointSet>> out;
    std::set<std::vector<PointSet>> seen;
    auto offer = [&](std::vector<PointSet> members) {
        if (members.empty() || !family_covers(space, members)) return;
        double ms = family_mesh(space, members);
        if (ms < mesh_lo - 1e-12 || ms > mesh_hi + 1e-12) return;
        std::sort(members.begin(), members.end());
        if (seen.insert(members).second) out.push_back(std::move(members));
    };

    // threshold-component decompositions (disjoint coverings when they fit)
    for (double theta : {mesh_hi / 8, mesh_hi / 4, mesh_hi / 2, mesh_lo})
        if (theta > 0) offer(threshold_components(space, theta));

    // nearest-neighbor pairs: the resolution-floor covering
    if (space.size() > 1) {
        std::vector<PointSet> pairs;
        for (int z = 0; z < space.size(); ++z) {
            int nn = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int w2 = 0; w2 < space.size(); ++w2)
                if (w2 != z && space.dist(z, w2) < best) {
                    best = space.dist(z, w2);
                    nn = w2;
                }
            pairs.push_back(make_point_set({z, nn}, space.size()));
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        offer(std::move(pairs));
    }

    // nets of closed balls over a grid of separations and radii
    for (int i = 0; i <= 8; ++i) {
        double sep = mesh_hi / 2.0 * std::pow(0.6, i);
        if (sep <= 0) break;
        PointSet centers = greedy_net(space, sep);
        double cover_rad = 0;
        for (int z = 0; z < space.size(); ++z)
            cover_rad = std::max(cover_rad, dist_to_set(space, z, centers));
        for (double f : {1.0, 1.25, 1.5, 2.0}) {
            double r = std::max(cover_rad, sep * f / 2.0);
            offer(closed_ball_family(space, centers, r));
            offer(closed_ball_family(space, centers, cover_rad * f));
        }
    }
    return out;
}

/// Closed balls of radius r around a net of pairwise separation >= r + s:
/// a point of the open s-fattening of a member is within r + s of its
/// center, and three such centers would violate the separation, so the
/// s-multiplicity is at most 2.
std::vector<std::vector<PointSet>> mult_two_candidates(const FiniteMetricSpace& space, double s,
                                                       double mesh_hi) {
    std::vector<std::vector<PointSet>> out;
    for (double f : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 6.0}) {
        double sigma = (1.0 + f) * s;
        PointSet centers = greedy_net(space, sigma);
        double cover_rad = 0;
        for (int z = 0; z < space.size(); ++z)
            cover_rad = std::max(cover_rad, dist_to_set(space, z, centers));
        double separation = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < centers.size(); ++i)
            for (size_t j = i + 1; j < centers.size(); ++j)
                separation = std::min(separation, space.dist(centers[i], centers[j]));
        for (double r : {cover_rad, sigma - s}) {
            if (r < cover_rad) continue;
            if (centers.size() > 1 && separation < r + s) continue; // no guarantee
            auto members = closed_ball_family(space, centers, r);
            if (family_covers(space, members) && family_mesh(space, members) <= mesh_hi + 1e-12)
                out.push_back(std::move(members));
        }
    }
    return out;
}

// ---- exact branch-and-bound for n <= 24 ---------------------------------

struct ExactResult {
    bool complete = false;
    int best_mult = std::numeric_limits<int>::max();
    std::vector<PointSet> best_members;
};

void enum_max_cliques(const std::vector<std::uint32_t>& adj, std::uint32_t R, std::uint32_t P,
                      std::uint32_t X, std::vector<std::uint32_t>& out, long& budget) {
    if (budget-- < 0) return;
    if (!P && !X) {
        out.push_back(R);
        return;
    }
    std::uint32_t PX = P | X;
    int pivot = __builtin_ctz(PX);
    std::uint32_t cand = P & ~adj[static_cast<size_t>(pivot)];
    while (cand) {
        int v = __builtin_ctz(cand);
        cand &= cand - 1;
        std::uint32_t bit = 1u << v;
        enum_max_cliques(adj, R | bit, P & adj[static_cast<size_t>(v)],
                         X & adj[static_cast<size_t>(v)], out, budget);
        P &= ~bit;
        X |= bit;
    }
}

ExactResult exact_min_smultiplicity(const FiniteMetricSpace& space, double s, double mesh_cap) {
    const int n = space.size();
    ExactResult res;
    if (n > 24) return res;
    std::vector<std::uint32_t> adj(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && space.dist(i, j) <= mesh_cap) adj[static_cast<size_t>(i)] |= 1u << j;
    std::vector<std::uint32_t> cliques;
    long budget = 200000;
    enum_max_cliques(adj, 0, (n == 32 ? ~0u : (1u << n) - 1u), 0, cliques, budget);
    if (budget < 0 || cliques.empty() || cliques.size() > 300) return res;

    std::vector<std::vector<int>> contains(static_cast<size_t>(n));
    for (size_t c = 0; c < cliques.size(); ++c)
        for (int z = 0; z < n; ++z)
            if ((cliques[c] >> z) & 1u) contains[static_cast<size_t>(z)].push_back(static_cast<int>(c));

    std::vector<std::vector<char>> near_mat(cliques.size(), std::vector<char>(static_cast<size_t>(n), 0));
    for (size_t c = 0; c < cliques.size(); ++c)
        for (int z = 0; z < n; ++z) {
            std::uint32_t bits = cliques[c];
            while (bits) {
                int v = __builtin_ctz(bits);
                bits &= bits - 1;
                if (space.dist(z, v) < s) {
                    near_mat[c][static_cast<size_t>(z)] = 1;
                    break;
                }
            }
        }

    std::vector<int> load(static_cast<size_t>(n), 0);
    std::vector<int> chosen;
    std::uint32_t covered = 0;
    const std::uint32_t full = (n == 32 ? ~0u : (1u << n) - 1u);
    long nodes = 0;
    std::function<void(int)> dfs = [&](int current_mult) {
        if (++nodes > 200000) return;
        if (current_mult >= res.best_mult) return;
        if (covered == full) {
            res.best_mult = current_mult;
            res.best_members.clear();
            for (int c : chosen) {
                PointSet m;
                std::uint32_t bits = cliques[static_cast<size_t>(c)];
                while (bits) {
                    int v = __builtin_ctz(bits);
                    bits &= bits - 1;
                    m.push_back(v);
                }
                res.best_members.push_back(std::move(m));
            }
            return;
        }
        int z = __builtin_ctz(~covered & full);
        for (int c : contains[static_cast<size_t>(z)]) {
            int new_mult = current_mult;
            for (int w = 0; w < n; ++w)
                if (near_mat[static_cast<size_t>(c)][static_cast<size_t>(w)])
                    new_mult = std::max(new_mult, load[static_cast<size_t>(w)] + 1);
            if (new_mult >= res.best_mult) continue;
            chosen.push_back(c);
            std::uint32_t saved = covered;
            covered |= cliques[static_cast<size_t>(c)];
            for (int w = 0; w < n; ++w)
                if (near_mat[static_cast<size_t>(c)][static_cast<size_t>(w)])
                    ++load[static_cast<size_t>(w)];
            dfs(new_mult);
            for (int w = 0; w < n; ++w)
                if (near_mat[static_cast<size_t>(c)][static_cast<size_t>(w)])
                    --load[static_cast<size_t>(w)];
            covered = saved;
            chosen.pop_back();
        }
    };
    dfs(0);
    res.complete = nodes <= 200000 && res.best_mult < std::numeric_limits<int>::max();
    return res;
}

} // namespace

NetCoveringResult net_covering(const FiniteMetricSpace& space, double s, int mult_target,
                               double c_limit) {
    if (!(s > 0)) throw std::invalid_argument("net scale must be positive");
    auto candidates = covering_candidates(space, 0.0, c_limit * s);
    for (auto& extra : mult_two_candidates(space, s, c_limit * s))
        candidates.push_back(std::move(extra));
    int best_mult = std::numeric_limits<int>::max();
    double best_mesh = std::numeric_limits<double>::max();
    std::vector<PointSet> best;
    for (auto& members : candidates) {
        int mult = s_multiplicity_of(space, members, s);
        double ms = family_mesh(space, members);
        if (mult < best_mult || (mult == best_mult && ms < best_mesh)) {
            best_mult = mult;
            best_mesh = ms;
            best = members;
        }
    }
    (void)mult_target; // goal only; the best found is reported either way
    bool exact = false;
    if (space.size() <= 24) {
        ExactResult ex = exact_min_smultiplicity(space, s, c_limit * s);
        if (ex.complete && ex.best_mult < best_mult) {
            best_mult = ex.best_mult;
            best = ex.best_members;
            best_mesh = family_mesh(space, best);
            exact = true;
        } else if (ex.complete) {
            exact = true;
        }
    }
    if (best.empty()) throw std::runtime_error("no covering candidate found");
    NetCoveringResult res{make_covering(space, std::move(best)), best_mesh / s, best_mult, exact};
    return res;
}

ColoredCoveringResult colored_covering(const FiniteMetricSpace& space, double tau, int m,
                                       double delta) {
    if (!(tau > 0 && tau <= space.diam() + 1e-12))
        throw std::invalid_argument("tau must lie in (0, diam]");
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0,1)");
    ColoredCoveringResult out;
    out.colors_needed = std::numeric_limits<int>::max();
    auto candidates = covering_candidates(space, delta * tau, tau);
    for (auto& members : candidates) {
        // greedy first-fit coloring of the intersection graph
        const int k = static_cast<int>(members.size());
        std::vector<int> color(static_cast<size_t>(k), -1);
        int used = 0;
        for (int i = 0; i < k; ++i) {
            std::set<int> banned;
            for (int j = 0; j < i; ++j)
                if (sets_intersect(members[static_cast<size_t>(i)], members[static_cast<size_t>(j)]))
                    banned.insert(color[static_cast<size_t>(j)]);
            int c = 0;
            while (banned.count(c)) ++c;
            color[static_cast<size_t>(i)] = c;
            used = std::max(used, c + 1);
        }
        if (used > m + 1) {
            out.colors_needed = std::min(out.colors_needed, used);
            continue;
        }
        Covering cov = make_covering(space, members, color);
        double cap = capacity(cov);
        if (!out.ok || cap > out.capacity) {
            out.ok = true;
            out.capacity = cap;
            out.covering = std::move(cov);
        }
    }
    if (!out.ok && out.colors_needed == std::numeric_limits<int>::max())
        out.colors_needed = m + 2; // no candidate in the mesh window at all
    return out;
}

namespace {

/// Plateau rule: value present on at least 70% of the grid cells.
std::optional<int> plateau(const std::vector<int>& values) {
    if (values.empty()) return std::nullopt;
    std::map<int, int> freq;
    for (int v : values) ++freq[v];
    for (const auto& [v, count] : freq)
        if (count * 10 >= static_cast<int>(values.size()) * 7) return v;
    return std::nullopt;
}

constexpr double kColoredCapacityFloor = 0.05;
constexpr double kMapCapacityFloor = 0.02;

} // namespace

CdimReport estimate_cdim(const FiniteMetricSpace& space, const ScaleWindow& window,
                         const std::vector<double>& c_grid) {
    CdimReport rep;
    rep.window = window;
    std::vector<double> scales = window.grid();

    // second-definition machinery (Prop. 3.2 form): minimal s-multiplicity.
    // Cells with c*s >= diam are recorded but carry no dimension information
    // (any covering, including the whole space, meets the mesh constraint),
    // so the plateau is voted over the informative cells only.
    int best_est = std::numeric_limits<int>::max();
    for (double c : c_grid) {
        std::vector<int> mults;
        for (double s : scales) {
            NetCoveringResult r = net_covering(space, s, 1, c);
            Covering fat = make_covering(
                *r.covering.space, [&] {
                    std::vector<PointSet> f;
                    for (const auto& mset : r.covering.members)
                        f.push_back(neighborhood(space, mset, s));
                    return f;
                }());
            CdimCell cell;
            cell.s = s;
            cell.c = c;
            cell.multiplicity = r.s_multiplicity;
            cell.capacity = capacity(fat);
            cell.exact = r.exact;
            cell.informative = c * s < space.diam();
            rep.cells.push_back(cell);
            if (cell.informative) mults.push_back(r.s_multiplicity);
        }
        if (mults.size() < 4) continue;
        if (auto p = plateau(mults)) best_est = std::min(best_est, *p - 1);
    }
    rep.estimate = best_est == std::numeric_limits<int>::max() ? -1 : best_est;

    // first definition: colored coverings with capacity bounded below
    for (int m = 0; m <= 3 && rep.estimate_colored < 0; ++m) {
        int good = 0;
        for (double tau : scales) {
            ColoredCoveringResult r = colored_covering(space, tau, m, 0.25);
            if (r.ok && r.capacity >= kColoredCapacityFloor) ++good;
        }
        if (good * 10 >= static_cast<int>(scales.size()) * 7) rep.estimate_colored = m;
    }

    // third definition: barycentric maps of multiplicity-(m+1) coverings
    for (int m = 0; m <= 3 && rep.estimate_maps < 0; ++m) {
        int good = 0;
        for (double s : scales) {
            NetCoveringResult r = net_covering(space, s, m + 1, c_grid.back());
            if (r.s_multiplicity > m + 1) continue;
            std::vector<PointSet> fat;
            for (const auto& mset : r.covering.members)
                fat.push_back(neighborhood(space, mset, s));
            Covering cov = make_covering(space, std::move(fat));
            if (multiplicity(cov) > m + 1) continue;
            double L = lebesgue(cov);
            double ms = mesh(cov);
            if (!(L > 0) || !(ms > 0)) continue;
            LipschitzReport lip = barycentric_lipschitz_certificate(cov);
            double cap_f = lip.measured > 0 ? 1.0 / (lip.measured * ms) : 1.0;
            // dimensionless via the scale: mesh(f) = mesh(U)
            if (cap_f >= kMapCapacityFloor) ++good;
        }
        if (good * 10 >= static_cast<int>(scales.size()) * 7) rep.estimate_maps = m;
    }

    rep.status = rep.estimate >= 0 ? "ok" : "inconclusive";
    return rep;
}

SeparatedSequence separated_sequence(const FiniteMetricSpace& space,
                                     const std::vector<Covering>& base,
                                     SequenceParams params) {
    if (base.empty()) throw std::invalid_argument("base sequence must be nonempty");
    const int K = static_cast<int>(base.size());
    for (const auto& cov : base) {
        require_covering(cov);
        if (!cov.colors) throw std::invalid_argument("clause (i) violated: base must be colored");
        if (!colors_valid(cov))
            throw std::invalid_argument("clause (i) violated: same-color members intersect");
    }
    std::set<int> color_set(base[0].colors->begin(), base[0].colors->end());
    for (const auto& cov : base) {
        std::set<int> cs(cov.colors->begin(), cov.colors->end());
        if (!std::includes(color_set.begin(), color_set.end(), cs.begin(), cs.end()))
            throw std::invalid_argument("clause (i) violated: color sets differ across levels");
    }

    std::vector<double> meshes, lebs;
    for (const auto& cov : base) {
        meshes.push_back(mesh(cov));
        lebs.push_back(lebesgue(cov));
    }
    double c0p = params.c0_prime;
    if (c0p <= 0) {
        c0p = 1.0;
        for (int j = 0; j < K; ++j)
            c0p = std::min(c0p, meshes[static_cast<size_t>(j)] > 0
                                    ? lebs[static_cast<size_t>(j)] / meshes[static_cast<size_t>(j)]
                                    : 1.0);
    }
    double r = params.r;
    double dp = params.delta_prime;
    if (!(r > 0 && r < std::min(c0p * dp / 4.0, 1.0)))
        throw std::invalid_argument("r must satisfy r < min(c0' * delta' / 4, 1)");
    double w0 = params.w0;
    if (w0 <= 0) {
        w0 = 0;
        for (int j = 0; j < K; ++j)
            w0 = std::max(w0, meshes[static_cast<size_t>(j)] / std::pow(r, j + 1));
    }
    for (int j = 0; j < K; ++j) {
        double top = w0 * std::pow(r, j + 1);
        if (meshes[static_cast<size_t>(j)] > top * (1 + 1e-9) ||
            meshes[static_cast<size_t>(j)] < dp * top * (1 - 1e-9))
            throw std::invalid_argument("clause (ii) violated at level " + std::to_string(j + 1) +
                                        ": mesh outside [delta' w_j, w_j]");
        if (lebs[static_cast<size_t>(j)] < c0p * meshes[static_cast<size_t>(j)] * (1 - 1e-9))
            throw std::invalid_argument("clause (ii) violated at level " + std::to_string(j + 1) +
                                        ": L < c0' * mesh");
    }
    for (int j = 0; j + 1 < K; ++j)
        if (!is_inscribed(base[static_cast<size_t>(j + 1)], base[static_cast<size_t>(j)]))
            throw std::invalid_argument("clause (iii) violated at level " + std::to_string(j + 2) +
                                        ": not inscribed in previous level");

    // recursion per color: V_{k+1} = B_{-s_k}(V_k) * U^_{k+1}  union  U^_{k+1}
    struct Fam {
        std::vector<PointSet> members;
    };
    std::map<int, std::vector<Fam>> per_color; // color -> families indexed by level j
    auto color_members = [&](int level, int color) {
        std::vector<PointSet> out;
        const Covering& cov = base[static_cast<size_t>(level)];
        for (int i = 0; i < cov.size(); ++i)
            if ((*cov.colors)[static_cast<size_t>(i)] == color)
                out.push_back(cov.members[static_cast<size_t>(i)]);
        return out;
    };
    for (int a : color_set) per_color[a] = {Fam{color_members(0, a)}};

    for (int k = 1; k < K; ++k) {
        double s_k = c0p * dp * w0 * std::pow(r, k) / 4.0;
        for (int a : color_set) {
            auto& fams = per_color[a];
            std::vector<PointSet> fresh = color_members(k, a);
            for (auto& fam : fams) {
                std::vector<PointSet> shrunk;
                for (const auto& mset : fam.members) {
                    PointSet sm = neighborhood(space, mset, -s_k);
                    if (!sm.empty()) shrunk.push_back(std::move(sm));
                }
                fam.members = star_merge(shrunk, fresh);
            }
            fams.push_back(Fam{std::move(fresh)});
        }
    }

    SeparatedSequence out;
    out.c0 = out.delta = c0p * dp / 2.0;
    out.w0 = w0;
    out.r = r;
    for (int j = 0; j < K; ++j) {
        std::vector<PointSet> members;
        std::vector<int> colors;
        for (int a : color_set)
            for (const auto& mset : per_color[a][static_cast<size_t>(j)].members) {
                members.push_back(mset);
                colors.push_back(a);
            }
        Covering cov = make_covering(space, std::move(members), std::move(colors));
        require_covering(cov);
        if (!colors_valid(cov))
            throw std::runtime_error("output clause (iv) violated at level " + std::to_string(j + 1));
        out.levels.push_back(std::move(cov));
        out.level_of.push_back(std::vector<int>(out.levels.back().members.size(), j + 1));
    }
    // output windows with delta = c0 = c0' delta' / 2
    for (int j = 0; j < K; ++j) {
        double ms = mesh(out.levels[static_cast<size_t>(j)]);
        double L = lebesgue(out.levels[static_cast<size_t>(j)]);
        double top = w0 * std::pow(r, j + 1);
        if (ms > top * (1 + 1e-9) || ms < out.delta * top * (1 - 1e-9))
            throw std::runtime_error("output clause (ii) violated at level " + std::to_string(j + 1));
        if (L < out.c0 * ms * (1 - 1e-9))
            throw std::runtime_error("output clause (ii) violated at level " + std::to_string(j + 1) +
                                     ": L < c0 * mesh");
    }
    for (int j = 0; j + 1 < K; ++j)
        if (!is_inscribed(out.levels[static_cast<size_t>(j + 1)], out.levels[static_cast<size_t>(j)]))
            throw std::runtime_error("output clause (iii) violated at level " + std::to_string(j + 2));
    // clause (iv): per color across all levels
    for (int a : color_set) {
        std::vector<PointSet> all;
        for (int j = 0; j < K; ++j) {
            const Covering& cov = out.levels[static_cast<size_t>(j)];
            for (int i = 0; i < cov.size(); ++i)
                if ((*cov.colors)[static_cast<size_t>(i)] == a)
                    all.push_back(cov.members[static_cast<size_t>(i)]);
        }
        if (!is_separated(all))
            throw std::runtime_error("output clause (iv) violated for color " + std::to_string(a));
    }
    return out;
}

std::vector<Covering> build_inscribed_ladder(const FiniteMetricSpace& space, int m,
                                             int levels, double ratio) {
    if (levels < 1) throw std::invalid_argument("ladder needs at least one level");
    std::vector<Covering> out;
    out.push_back(make_covering(space, {space.all_points()}));
    double target = space.diam() * ratio;
    while (static_cast<int>(out.size()) < levels) {
        const Covering& prev = out.back();
        std::optional<Covering> chosen;
        double best_cap = -1;
        for (auto& members : covering_candidates(space, 0.35 * target, target)) {
            Covering cand = make_covering(space, std::move(members));
            if (mesh(cand) <= 0) continue;
            if (multiplicity(cand) > m + 1) continue;
            if (!is_inscribed(cand, prev)) continue;
            double cap = capacity(cand);
            if (cap > best_cap) {
                best_cap = cap;
                chosen = std::move(cand);
            }
        }
        if (!chosen) {
            out.push_back(prev); // scale floor reached: repeat the finest level
        } else {
            out.push_back(std::move(*chosen));
        }
        target *= ratio;
    }
    return out;
}

} // namespace coarselab
