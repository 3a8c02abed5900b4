#include "coarselab/witness.hpp"

#include "coarselab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace coarselab {

namespace {

double mu_of(const Covering& cov) {
    double diam = cov.space->diam();
    return diam > 0 ? M_PI / diam : 0.0;
}

} // namespace

CechSchedule build_schedule(double lambda, int m, const std::vector<Covering>& coverings,
                            int depth, WindowPolicy policy, double tau0) {
    if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");
    if (m < 0) throw std::invalid_argument("dimension parameter must be nonnegative");
    if (static_cast<int>(coverings.size()) != depth + 1)
        throw std::invalid_argument("schedule of depth K needs K+1 coverings");

    CechSchedule sch;
    sch.lambda = lambda;
    sch.m = m;
    sch.depth = depth;
    sch.d = (m + 2.0) * (m + 2.0) / (2.0 * lambda);
    sch.sigma = std::exp(-sch.d);
    sch.mu = mu_of(coverings[0]);

    sch.c0 = 1.0;
    for (int k = 0; k <= depth; ++k) {
        const Covering& cov = coverings[static_cast<size_t>(k)];
        require_covering(cov);
        int mult = multiplicity(cov);
        if (mult > m + 1)
            throw std::invalid_argument("clause (i) violated at k=" + std::to_string(k) +
                                        ": multiplicity " + std::to_string(mult) + " > m+1");
        double ms = mesh(cov);
        double cap = capacity(cov);
        sch.level_mesh.push_back(sch.mu * ms);
        sch.level_cap.push_back(cap);
        sch.c0 = std::min(sch.c0, cap);
    }
    for (int k = 0; k < depth; ++k)
        if (!is_inscribed(coverings[static_cast<size_t>(k + 1)], coverings[static_cast<size_t>(k)]))
            throw std::invalid_argument("clause (iii) violated at k=" + std::to_string(k + 1) +
                                        ": not inscribed in previous covering");

    if (sch.sigma >= sch.c0) {
        std::string msg = "lambda infeasible: c0*delta = e^{-(m+2)^2/(2 lambda)} = " +
                          std::to_string(sch.sigma) + " requires delta >= 1 at measured c0 = " +
                          std::to_string(sch.c0);
        if (policy == WindowPolicy::Strict) throw std::invalid_argument(msg);
        sch.window_violations.push_back(msg);
        sch.delta = 1.0;
    } else {
        sch.delta = sch.sigma / sch.c0;
    }

    // place tau0 to center the clause (ii) windows around the measured
    // meshes, subject to t_0 staying positive
    if (tau0 > 0) {
        sch.tau0 = tau0;
    } else if (sch.mu > 0) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (int k = 0; k <= depth; ++k) {
            double w = sch.level_mesh[static_cast<size_t>(k)];
            if (w <= 0) continue;
            double base = std::log(w) + 2.0 * sch.d * k;
            hi = std::max(hi, base);
            lo = std::min(lo, base);
        }
        double centered = std::isfinite(hi) ? std::exp((hi + lo - std::log(sch.delta)) / 2.0) : 1.0;
        double t0_cap = 1.9 * std::exp(2.0 * (m + 2.0) * (m + 2.0) / lambda);
        sch.tau0 = std::min({centered, t0_cap,
                             std::max(sch.level_mesh[0], 1e-12)});
    } else {
        sch.tau0 = 1.0;
    }

    double tk = sch.tau0;
    for (int k = 0; k <= depth; ++k) {
        sch.tau.push_back(tk);
        sch.t.push_back(std::log(2.0 / tk) + 2.0 * (m + 2.0) * (m + 2.0) / lambda);
        tk *= std::exp(-2.0 * sch.d);
    }
    if (sch.t[0] <= 0) throw std::invalid_argument("tau0 too large: t_0 not positive");

    if (sch.mu > 0) {
        for (int k = 0; k <= depth; ++k) {
            double w = sch.level_mesh[static_cast<size_t>(k)];
            double tau_k = sch.tau[static_cast<size_t>(k)];
            if (w > tau_k * (1 + 1e-9))
                sch.window_violations.push_back("clause (ii) violated at k=" + std::to_string(k) +
                                                ": mu*mesh > tau_k");
            if (w < sch.delta * tau_k * (1 - 1e-9))
                sch.window_violations.push_back("clause (ii) violated at k=" + std::to_string(k) +
                                                ": mu*mesh < delta*tau_k");
        }
    }
    if (policy == WindowPolicy::Strict && !sch.window_violations.empty())
        throw std::invalid_argument(sch.window_violations.front());
    return sch;
}

LambdaFeasibility feasible_lambda_range(int m, const std::vector<Covering>& coverings) {
    LambdaFeasibility out;
    if (coverings.empty()) return out;
    double mu = mu_of(coverings[0]);
    out.c0 = 1.0;
    std::vector<double> w;
    for (const auto& cov : coverings) {
        out.c0 = std::min(out.c0, capacity(cov));
        double ms = mu * mesh(cov);
        if (ms <= 0) return out;
        w.push_back(std::log(ms));
    }
    if (!(out.c0 > 0)) return out;
    // feasible d: exists tau0 with every level inside [delta tau_k, tau_k],
    // delta = e^{-d}/c0 < 1
    auto feasible_d = [&](double d) {
        double delta = std::exp(-d) / out.c0;
        if (delta >= 1) return false;
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (size_t k = 0; k < w.size(); ++k) {
            double base = w[k] + 2.0 * d * static_cast<double>(k);
            hi = std::max(hi, base);
            lo = std::min(lo, base);
        }
        return hi - lo <= -std::log(delta) + 1e-12;
    };
    double d_lo = 0, d_hi = 0;
    const double d_cap = 60.0;
    for (double d = std::log(1.0 / out.c0) + 1e-6; d < d_cap; d += 0.001) {
        if (feasible_d(d)) {
            if (d_lo == 0) d_lo = d;
            d_hi = d;
        }
    }
    if (d_lo == 0) return out;
    out.feasible = true;
    double mm = (m + 2.0) * (m + 2.0);
    out.lambda_min = mm / (2.0 * d_hi);
    out.lambda_max = mm / (2.0 * d_lo);
    return out;
}

WitnessMap::WitnessMap(const HyperbolicCone& cone, CechSchedule schedule,
                       std::vector<Covering> coverings)
    : cone_(&cone), schedule_(std::move(schedule)), coverings_(std::move(coverings)) {
    const int K = schedule_.depth;
    if (static_cast<int>(coverings_.size()) != K + 1)
        throw std::invalid_argument("coverings do not match schedule depth");
    for (const auto& cov : coverings_) nerves_.push_back(nerve(cov));
    for (int k = 0; k < K; ++k)
        rho_.push_back(simplicial_projection(coverings_[static_cast<size_t>(k + 1)],
                                             coverings_[static_cast<size_t>(k)]));

    // p_k at level t_k, computed in the level metric
    const int n = cone_->base->size();
    for (int k = 0; k <= K; ++k) {
        FiniteMetricSpace level = level_space(*cone_, schedule_.t[static_cast<size_t>(k)]);
        Covering lifted = make_covering(level, coverings_[static_cast<size_t>(k)].members);
        std::vector<BaryPoint> p;
        p.reserve(static_cast<size_t>(n));
        for (int z = 0; z < n; ++z) p.push_back(barycentric_map(lifted, z));
        p_at_level_.push_back(std::move(p));
    }

    // global polyhedron: apex, bottom_k (k=0..K), top_k (k=0..K-1)
    std::vector<std::string> labels = {"apex"};
    apex_ = 0;
    int next = 1;
    bottom_ids_.resize(static_cast<size_t>(K) + 1);
    top_ids_.resize(static_cast<size_t>(K));
    for (int k = 0; k <= K; ++k) {
        const UniformComplex& N = nerves_[static_cast<size_t>(k)];
        for (int j = 0; j < N.vertex_count(); ++j) {
            labels.push_back("B" + std::to_string(k) + ":" + N.label(j));
            bottom_ids_[static_cast<size_t>(k)].push_back(next++);
        }
    }
    for (int k = 0; k < K; ++k) {
        const UniformComplex& N = nerves_[static_cast<size_t>(k)];
        for (int j = 0; j < N.vertex_count(); ++j) {
            labels.push_back("T" + std::to_string(k) + ":" + N.label(j));
            top_ids_[static_cast<size_t>(k)].push_back(next++);
        }
    }

    std::vector<std::vector<int>> maximal;
    for (const auto& sigma : nerves_[0].maximal_simplices()) {
        std::vector<int> cell = {apex_};
        for (int v : sigma) cell.push_back(bottom_ids_[0][static_cast<size_t>(v)]);
        maximal.push_back(std::move(cell));
    }
    for (int k = 0; k < K; ++k) {
        const auto& bot = bottom_ids_[static_cast<size_t>(k)];
        const auto& top = top_ids_[static_cast<size_t>(k)];
        for (const auto& sigma : nerves_[static_cast<size_t>(k)].maximal_simplices()) {
            const size_t p = sigma.size();
            for (size_t j = 0; j < p; ++j) {
                std::vector<int> cell;
                for (size_t i = 0; i <= j; ++i) cell.push_back(top[static_cast<size_t>(sigma[i])]);
                for (size_t i = j; i < p; ++i) cell.push_back(bot[static_cast<size_t>(sigma[i])]);
                maximal.push_back(std::move(cell));
            }
        }
        // mapping cylinder cells of rho_k: source N_{k+1} bottom, target top_k
        const auto& src = bottom_ids_[static_cast<size_t>(k + 1)];
        const auto& vmap = rho_[static_cast<size_t>(k)];
        for (const auto& sigma : nerves_[static_cast<size_t>(k + 1)].maximal_simplices()) {
            const size_t p = sigma.size();
            for (size_t j = 0; j < p; ++j) {
                std::vector<int> cell;
                for (size_t i = 0; i <= j; ++i) cell.push_back(src[static_cast<size_t>(sigma[i])]);
                for (size_t i = j; i < p; ++i)
                    cell.push_back(top[static_cast<size_t>(vmap[static_cast<size_t>(sigma[i])])]);
                std::sort(cell.begin(), cell.end());
                cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
                maximal.push_back(std::move(cell));
            }
        }
    }
    P_ = UniformComplex::from_maximal(std::move(labels), std::move(maximal));
}

int WitnessMap::global_vertex(int k, bool top, int j) const {
    return top ? top_ids_[static_cast<size_t>(k)][static_cast<size_t>(j)]
               : bottom_ids_[static_cast<size_t>(k)][static_cast<size_t>(j)];
}

std::pair<int, int> WitnessMap::vertex_member(int global_id) const {
    const std::string& label = P_.label(global_id);
    if (label == "apex") return {-1, -1};
    size_t colon = label.find(':');
    int k = std::stoi(label.substr(1, colon - 1));
    int j = std::stoi(label.substr(colon + 2)); // member labels are "U<j>"
    return {k, j};
}

BaryPoint WitnessMap::level_barycentric(int k, double t, int z) const {
    const double lo = k > 0 ? schedule_.t[static_cast<size_t>(k - 1)]
                            : std::max(schedule_.t[0] - 2 * schedule_.d, 1e-9);
    const double hi = schedule_.t[static_cast<size_t>(k)];
    if (t < lo - 1e-9 || t > hi + 1e-9)
        throw std::invalid_argument("level outside the covering's band");
    FiniteMetricSpace level = level_space(*cone_, t);
    Covering lifted = make_covering(level, coverings_[static_cast<size_t>(k)].members);
    return barycentric_map(lifted, z);
}

LipschitzReport WitnessMap::level_lipschitz(int k, double t) const {
    FiniteMetricSpace level = level_space(*cone_, t);
    Covering lifted = make_covering(level, coverings_[static_cast<size_t>(k)].members);
    std::vector<BaryPoint> images;
    for (int z = 0; z < level.size(); ++z) images.push_back(barycentric_map(lifted, z));
    return measure_lipschitz(level, images, schedule_.lambda);
}

double WitnessMap::level_mesh_metric(int k, double t) const {
    double best = 0;
    for (const auto& mset : coverings_[static_cast<size_t>(k)].members)
        for (size_t i = 0; i < mset.size(); ++i)
            for (size_t j = i + 1; j < mset.size(); ++j)
                best = std::max(best, cone_distance(*cone_, {mset[i], t}, {mset[j], t}));
    return best;
}

ProductPoint WitnessMap::homotopy_map(int k, int z, double t) const {
    const double tk = schedule_.t[static_cast<size_t>(k)];
    if (t < tk - 1e-9 || t > tk + schedule_.d + 1e-9)
        throw std::invalid_argument("point outside annulus A_k");
    if (k + 1 > schedule_.depth) throw std::invalid_argument("extend schedule");
    double s = std::clamp((t - tk) / schedule_.d, 0.0, 1.0);
    const BaryPoint& pk = p_at_level_[static_cast<size_t>(k)][static_cast<size_t>(z)];
    BaryPoint rp = apply_vertex_map(rho_[static_cast<size_t>(k)],
                                    p_at_level_[static_cast<size_t>(k + 1)][static_cast<size_t>(z)]);
    std::vector<int> joint = set_union(pk.support(), rp.support());
    if (!nerves_[static_cast<size_t>(k)].has_simplex(joint))
        throw std::runtime_error("projection does not share a simplex at z=" + std::to_string(z) +
                                 ", k=" + std::to_string(k));
    ProductPoint out;
    out.s = s;
    out.x = bary_interpolate(pk, rp, s);
    return out;
}

BaryPoint WitnessMap::cylinder_leg(int k, int z, double t) const {
    const double lo = schedule_.t[static_cast<size_t>(k)] + schedule_.d;
    const double hi = schedule_.t[static_cast<size_t>(k + 1)];
    if (t < lo - 1e-9 || t > hi + 1e-9)
        throw std::invalid_argument("point outside annulus B_k");
    double s = std::clamp((t - lo) / schedule_.d, 0.0, 1.0);
    const UniformComplex& N1 = nerves_[static_cast<size_t>(k + 1)];
    std::vector<int> order(static_cast<size_t>(N1.vertex_count()));
    for (int i = 0; i < N1.vertex_count(); ++i) order[static_cast<size_t>(i)] = i;
    return cylinder_projection(N1, rho_[static_cast<size_t>(k)],
                               nerves_[static_cast<size_t>(k)].vertex_count(),
                               p_at_level_[static_cast<size_t>(k + 1)][static_cast<size_t>(z)], s,
                               order);
}

BaryPoint WitnessMap::to_global(int k, const CylinderCoords& c, bool cylinder_piece) const {
    std::vector<std::pair<int, double>> coords;
    if (!cylinder_piece) {
        // product piece of N_k: source copy at s=1 (top_k), target at s=0 (bottom_k)
        for (const auto& [v, wt] : c.source)
            coords.emplace_back(top_ids_[static_cast<size_t>(k)][static_cast<size_t>(v)], wt);
        for (const auto& [v, wt] : c.target)
            coords.emplace_back(bottom_ids_[static_cast<size_t>(k)][static_cast<size_t>(v)], wt);
    } else {
        // cylinder piece over N_{k+1}: source copy = bottom_{k+1}, target
        // through rho_k into top_k
        const auto& vmap = rho_[static_cast<size_t>(k)];
        for (const auto& [v, wt] : c.source)
            coords.emplace_back(bottom_ids_[static_cast<size_t>(k + 1)][static_cast<size_t>(v)], wt);
        for (const auto& [v, wt] : c.target)
            coords.emplace_back(
                top_ids_[static_cast<size_t>(k)][static_cast<size_t>(vmap[static_cast<size_t>(v)])],
                wt);
    }
    return make_bary(std::move(coords));
}

BaryPoint WitnessMap::evaluate(int z, double t) const {
    const int K = schedule_.depth;
    const double tK = schedule_.t[static_cast<size_t>(K)];
    if (t < 0) throw std::invalid_argument("negative radius");
    if (t > tK + 1e-9) throw std::invalid_argument("extend schedule");
    t = std::min(t, tK);
    const double t0 = schedule_.t[0];
    if (t <= t0) {
        double u = t / t0;
        std::vector<std::pair<int, double>> coords = {{apex_, 1.0 - u}};
        for (const auto& [v, wt] : p_at_level_[0][static_cast<size_t>(z)].coords)
            coords.emplace_back(bottom_ids_[0][static_cast<size_t>(v)], u * wt);
        return make_bary(std::move(coords));
    }
    int k = 0;
    while (k + 1 < K && t > schedule_.t[static_cast<size_t>(k + 1)] + 1e-15) ++k;
    // t in (t_k, t_{k+1}]
    const double tk = schedule_.t[static_cast<size_t>(k)];
    std::vector<int> order(static_cast<size_t>(nerves_[static_cast<size_t>(k)].vertex_count()));
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    if (t <= tk + schedule_.d) {
        ProductPoint h = homotopy_map(k, z, t);
        CylinderCoords c = staircase_coords(h.x, h.s, order);
        return to_global(k, c, false);
    }
    double s = (t - tk - schedule_.d) / schedule_.d;
    std::vector<int> order1(static_cast<size_t>(nerves_[static_cast<size_t>(k + 1)].vertex_count()));
    for (size_t i = 0; i < order1.size(); ++i) order1[i] = static_cast<int>(i);
    CylinderCoords c = staircase_coords(p_at_level_[static_cast<size_t>(k + 1)][static_cast<size_t>(z)],
                                        std::clamp(s, 0.0, 1.0), order1);
    return to_global(k, c, true);
}

WitnessReport certify(const WitnessMap& f, const SamplingPlan& plan) {
    const CechSchedule& sch = f.schedule();
    const HyperbolicCone& cone = f.cone();
    const int n = cone.base->size();
    const int K = sch.depth;
    WitnessReport rep;
    rep.lambda = sch.lambda;
    rep.d = sch.d;
    rep.dim = f.polyhedron().dimension();
    rep.range_t = sch.t[static_cast<size_t>(K)];
    rep.window_violations = sch.window_violations;

    // t-grid: cone segment plus d/8 steps across every band, seams included
    std::vector<double> grid;
    const double step = sch.d / plan.vertical_per_band;
    for (double t = 0; t < sch.t[0]; t += std::max(step, sch.t[0] / 16.0)) grid.push_back(t);
    for (int k = 0; k < K; ++k)
        for (int i = 0; i <= 2 * plan.vertical_per_band; ++i) {
            double t = sch.t[static_cast<size_t>(k)] + i * step;
            if (t <= sch.t[static_cast<size_t>(K)] + 1e-12) grid.push_back(std::min(t, rep.range_t));
        }
    grid.push_back(rep.range_t);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               grid.end());
    const int G = static_cast<int>(grid.size());

    auto band_of = [&](double t) {
        if (t <= sch.t[0]) return 0;
        for (int k = 0; k < K; ++k) {
            if (t <= sch.t[static_cast<size_t>(k)] + sch.d + 1e-12) return 2 * k + 1;
            if (t <= sch.t[static_cast<size_t>(k + 1)] + 1e-12) return 2 * k + 2;
        }
        return 2 * K;
    };

    std::vector<std::vector<BaryPoint>> F(static_cast<size_t>(n));
    for (int z = 0; z < n; ++z) {
        F[static_cast<size_t>(z)].reserve(static_cast<size_t>(G));
        for (int gi = 0; gi < G; ++gi)
            F[static_cast<size_t>(z)].push_back(f.evaluate(z, grid[static_cast<size_t>(gi)]));
    }

    auto record = [&](double ratio, bool same_piece) {
        rep.lip_measured = std::max(rep.lip_measured, ratio);
        if (same_piece)
            rep.lip_same_piece = std::max(rep.lip_same_piece, ratio);
        else
            rep.lip_cross_piece = std::max(rep.lip_cross_piece, ratio);
    };

    // all pairs within each grid level
    for (int gi = 0; gi < G; ++gi) {
        double t = grid[static_cast<size_t>(gi)];
        if (t <= 0) continue;
        for (int z = 0; z < n; ++z)
            for (int z2 = z + 1; z2 < n; ++z2) {
                double dd = cone_distance(cone, {z, t}, {z2, t});
                if (dd <= 0) continue;
                ++rep.pairs;
                record(bary_distance(F[static_cast<size_t>(z)][static_cast<size_t>(gi)],
                                     F[static_cast<size_t>(z2)][static_cast<size_t>(gi)]) / dd,
                       true);
            }
    }
    // vertical pairs along every ray
    for (int z = 0; z < n; ++z)
        for (int gi = 0; gi < G; ++gi)
            for (int gj = gi + 1; gj < G; ++gj) {
                double dd = grid[static_cast<size_t>(gj)] - grid[static_cast<size_t>(gi)];
                if (dd <= 0) continue;
                ++rep.pairs;
                record(bary_distance(F[static_cast<size_t>(z)][static_cast<size_t>(gi)],
                                     F[static_cast<size_t>(z)][static_cast<size_t>(gj)]) / dd,
                       band_of(grid[static_cast<size_t>(gi)]) == band_of(grid[static_cast<size_t>(gj)]));
            }
    // random cross pairs
    SplitMix64 rng(plan.seed);
    for (int it = 0; it < plan.random_cross_pairs; ++it) {
        int z = rng.next_below(n), z2 = rng.next_below(n);
        int gi = rng.next_below(G), gj = rng.next_below(G);
        double dd = cone_distance(cone, {z, grid[static_cast<size_t>(gi)]},
                                  {z2, grid[static_cast<size_t>(gj)]});
        if (dd <= 0) continue;
        ++rep.pairs;
        record(bary_distance(F[static_cast<size_t>(z)][static_cast<size_t>(gi)],
                             F[static_cast<size_t>(z2)][static_cast<size_t>(gj)]) / dd,
               band_of(grid[static_cast<size_t>(gi)]) == band_of(grid[static_cast<size_t>(gj)]));
    }

    // seam agreement across piece boundaries
    for (int z = 0; z < n; ++z)
        for (int k = 0; k <= K; ++k) {
            double tk = sch.t[static_cast<size_t>(k)];
            double gap = bary_distance(f.evaluate(z, tk),
                                       f.evaluate(z, std::max(0.0, tk - 1e-13)));
            rep.seam_gap = std::max(rep.seam_gap, gap);
            if (k < K) {
                double ts = tk + sch.d;
                gap = bary_distance(f.evaluate(z, ts), f.evaluate(z, ts - 1e-13));
                rep.seam_gap = std::max(rep.seam_gap, gap);
            }
        }

    // per-level covering mesh and barycentric Lipschitz at t_k
    for (int k = 0; k <= K; ++k) {
        rep.per_level_mesh.push_back(f.level_mesh_metric(k, sch.t[static_cast<size_t>(k)]));
        rep.per_level_lip.push_back(f.level_lipschitz(k, sch.t[static_cast<size_t>(k)]).measured);
    }

    // preimage diameters per maximal simplex of P: collect sampled (z, t)
    // with supp f(z,t) inside the simplex, then take diameters over the
    // per-ray t-extremes (the cone distance is convex in each radius)
    const auto& maximal = f.polyhedron().maximal_simplices();
    std::vector<std::map<int, std::pair<double, double>>> groups(maximal.size());
    std::vector<std::vector<int>> supports(static_cast<size_t>(n) * static_cast<size_t>(G));
    for (int z = 0; z < n; ++z)
        for (int gi = 0; gi < G; ++gi)
            supports[static_cast<size_t>(z) * G + gi] =
                F[static_cast<size_t>(z)][static_cast<size_t>(gi)].support();
    for (size_t si = 0; si < maximal.size(); ++si) {
        const auto& sigma = maximal[si];
        for (int z = 0; z < n; ++z)
            for (int gi = 0; gi < G; ++gi) {
                const auto& sup = supports[static_cast<size_t>(z) * G + gi];
                if (!std::includes(sigma.begin(), sigma.end(), sup.begin(), sup.end())) continue;
                double t = grid[static_cast<size_t>(gi)];
                auto it = groups[si].find(z);
                if (it == groups[si].end())
                    groups[si].emplace(z, std::make_pair(t, t));
                else {
                    it->second.first = std::min(it->second.first, t);
                    it->second.second = std::max(it->second.second, t);
                }
            }
    }

    double max_footprint = 0.0;
    rep.cobound_pass = true;
    for (size_t si = 0; si < maximal.size(); ++si) {
        if (groups[si].empty()) continue;
        const auto& sigma = maximal[si];
        bool has_apex = false;
        int kmin = std::numeric_limits<int>::max();
        PointSet zsigma;
        for (int v : sigma) {
            auto [k, j] = f.vertex_member(v);
            if (k < 0) {
                has_apex = true;
                continue;
            }
            kmin = std::min(kmin, k);
            zsigma = set_union(zsigma, f.covering_of(k).members[static_cast<size_t>(j)]);
        }
        if (zsigma.empty()) continue;
        if (has_apex) kmin = 0;
        const double t_ref = sch.t[static_cast<size_t>(kmin)];
        double footprint = 0.0;
        for (size_t a = 0; a < zsigma.size(); ++a)
            for (size_t b = a + 1; b < zsigma.size(); ++b)
                footprint = std::max(footprint, cone_distance(cone, {zsigma[a], t_ref},
                                                              {zsigma[b], t_ref}));
        max_footprint = std::max(max_footprint, footprint);

        double diam = 0.0;
        for (auto ita = groups[si].begin(); ita != groups[si].end(); ++ita)
            for (auto itb = ita; itb != groups[si].end(); ++itb) {
                for (double ta : {ita->second.first, ita->second.second})
                    for (double tb : {itb->second.first, itb->second.second})
                        diam = std::max(diam,
                                        cone_distance(cone, {ita->first, ta}, {itb->first, tb}));
            }
        // the apex cap is a bounded region of height t_0; annular pieces obey
        // the 4d half-gap bound
        double bound = (has_apex ? sch.t[0] : 4.0 * sch.d) + footprint;
        rep.cobound_max = std::max(rep.cobound_max, diam);
        if (diam > bound + 1e-9) rep.cobound_pass = false;
    }
    rep.max_level_mesh = max_footprint;
    rep.cobound_bound = 4.0 * sch.d + max_footprint;
    return rep;
}

} // namespace coarselab
