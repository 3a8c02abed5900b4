#include "coarselab/hypcone.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coarselab {

HyperbolicCone::HyperbolicCone(const FiniteMetricSpace& z) : base(&z) {
    double d = z.diam();
    mu = d > 0 ? M_PI / d : 0.0;
}

double acosh1p(double delta) {
    if (delta < 0) {
        if (delta < -1e-12) throw std::invalid_argument("acosh argument below 1");
        delta = 0;
    }
    return std::log1p(delta + std::sqrt(delta * (delta + 2.0)));
}

double hyp_side_exact(double t, double t2, double alpha) {
    double half = std::sin(alpha / 2.0);
    double dh = std::sinh((t - t2) / 2.0);
    double delta = 2.0 * dh * dh + 2.0 * std::sinh(t) * std::sinh(t2) * half * half;
    return acosh1p(delta);
}

double hyp_side_logdomain(double t, double t2, double alpha) {
    // cosh a = e^{t+t2} * S with S evaluated without overflow
    double lo = std::min(t, t2), hi = std::max(t, t2);
    double half = std::sin(alpha / 2.0);
    double s = 0.5 * (std::exp(-2.0 * lo) + std::exp(-2.0 * hi)) +
               0.5 * (1.0 - std::exp(-2.0 * t)) * (1.0 - std::exp(-2.0 * t2)) * half * half;
    if (s <= 0) return hi - lo;
    double ln2x = (t + t2) + std::log(2.0 * s);
    // a = ln(2x) + ln((1 + sqrt(1 - x^-2)) / 2); the second term is
    // below 1e-34 past the switchover, kept for the crossover band
    double inv_x2 = std::exp(-2.0 * ln2x) * 4.0;
    double corr = inv_x2 < 1.0 ? std::log1p(-inv_x2 / (1.0 + std::sqrt(1.0 - inv_x2)) / 2.0) : 0.0;
    return ln2x + corr;
}

double hyp_side(double t, double t2, double alpha) {
    if (alpha <= 0) return std::abs(t - t2);
    if (t <= 0 || t2 <= 0) return std::abs(t - t2); // degenerate triangle through the apex
    if (t + t2 > kLogDomainSwitch) return hyp_side_logdomain(t, t2, alpha);
    return hyp_side_exact(t, t2, alpha);
}

double chord_length(double t, double alpha) {
    if (alpha < 0 || alpha > M_PI + 1e-12)
        throw std::invalid_argument("angle outside [0, pi]");
    return hyp_side(t, t, alpha);
}

double cone_distance(const HyperbolicCone& cone, const ConePoint& x, const ConePoint& y) {
    if (cone.mu == 0.0) return std::abs(x.t - y.t); // degenerate ray
    double alpha = cone.mu * cone.base->dist(x.z, y.z);
    return hyp_side(x.t, y.t, std::min(alpha, M_PI));
}

double gromov_product(const FiniteMetricSpace& space, int o, int x, int y) {
    return 0.5 * (space.dist(x, o) + space.dist(y, o) - space.dist(x, y));
}

double cone_gromov_product(const HyperbolicCone& cone, const ConePoint& x, const ConePoint& y) {
    return 0.5 * (x.t + y.t - cone_distance(cone, x, y));
}

double triple_defect(double a, double b, double c) {
    double lo = std::min({a, b, c});
    double hi = std::max({a, b, c});
    double mid = a + b + c - lo - hi;
    return mid - lo;
}

double delta_certificate(const FiniteMetricSpace& space, int o) {
    const int n = space.size();
    double worst = 0.0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            double pxy = gromov_product(space, o, x, y);
            for (int z = y + 1; z < n; ++z) {
                double d = triple_defect(pxy, gromov_product(space, o, y, z),
                                         gromov_product(space, o, x, z));
                worst = std::max(worst, d);
            }
        }
    return worst;
}

double comparison_defect(const HyperbolicCone& cone, const ConePoint& a,
                         const ConePoint& b, const ConePoint& c) {
    double pab = cone_gromov_product(cone, a, b);
    double pbc = cone_gromov_product(cone, b, c);
    double pac = cone_gromov_product(cone, a, c);
    // middle point = the one off the smallest-product pair
    ConePoint o1, mid, o2;
    double keep1, keep2;
    if (pab <= pbc && pab <= pac) {
        o1 = a; o2 = b; mid = c; keep1 = pac; keep2 = pbc;
    } else if (pbc <= pab && pbc <= pac) {
        o1 = b; o2 = c; mid = a; keep1 = pab; keep2 = pac;
    } else {
        o1 = a; o2 = c; mid = b; keep1 = pab; keep2 = pbc;
    }
    double th1 = cone.mu == 0 ? 0.0 : cone.mu * cone.base->dist(o1.z, mid.z);
    double th2 = cone.mu == 0 ? 0.0 : cone.mu * cone.base->dist(mid.z, o2.z);
    double straight = hyp_side(o1.t, o2.t, std::min(th1 + th2, M_PI));
    double outer = 0.5 * (o1.t + o2.t - straight);
    return triple_defect(outer, keep1, keep2);
}

ConeDeltaReport cone_delta_certificate(const HyperbolicCone& cone,
                                       const std::vector<ConePoint>& sample) {
    ConeDeltaReport rep;
    const size_t n = sample.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            double pij = cone_gromov_product(cone, sample[i], sample[j]);
            for (size_t k = j + 1; k < n; ++k) {
                double d = triple_defect(pij, cone_gromov_product(cone, sample[j], sample[k]),
                                         cone_gromov_product(cone, sample[i], sample[k]));
                rep.max_defect = std::max(rep.max_defect, d);
                rep.max_comparison_gap = std::max(
                    rep.max_comparison_gap,
                    d - comparison_defect(cone, sample[i], sample[j], sample[k]));
                ++rep.triples;
            }
        }
    return rep;
}

FiniteMetricSpace level_space(const HyperbolicCone& cone, double t,
                              const std::optional<PointSet>& sample) {
    if (!(t > 0)) throw std::invalid_argument("level radius must be positive");
    PointSet pts = sample ? *sample : cone.base->all_points();
    const int n = static_cast<int>(pts.size());
    std::vector<double> flat(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = cone_distance(cone, {pts[static_cast<size_t>(i)], t},
                                     {pts[static_cast<size_t>(j)], t});
            flat[static_cast<size_t>(i) * n + j] = d;
            flat[static_cast<size_t>(j) * n + i] = d;
        }
    return FiniteMetricSpace(n, std::move(flat));
}

double visual_product(const HyperbolicCone& cone, int z, int z2, double T) {
    if (z == z2 || cone.base->dist(z, z2) == 0.0) return kGromovSentinel;
    auto proxy = [&](double tt) {
        return cone_gromov_product(cone, {z, tt}, {z2, tt});
    };
    double p = proxy(T);
    if (std::abs(proxy(T + 1.0) - p) >= kStabilizationTol)
        throw std::invalid_argument("increase T");
    return p;
}

SandwichReport visual_sandwich_check(const HyperbolicCone& cone, double T, double delta) {
    SandwichReport rep;
    const int n = cone.base->size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = cone.base->dist(i, j);
            if (d == 0.0) continue;
            double P = visual_product(cone, i, j, T);
            double tan_term = std::tan(cone.mu * d / 4.0);
            double lower = std::exp(-5.0 * delta - P);
            double upper = std::exp(-P + 2.0 * delta);
            ++rep.pairs;
            double lm = tan_term - lower;
            double um = upper - tan_term;
            if (lm < rep.worst_lower_margin) {
                rep.worst_lower_margin = lm;
                rep.arg_i = i;
                rep.arg_j = j;
            }
            if (um < rep.worst_upper_margin) rep.worst_upper_margin = um;
            if (lm < 0 || um < 0) rep.pass = false;
        }
    return rep;
}

FiniteMetricSpace visual_boundary(const FiniteMetricSpace& tree, int root, PointSet& leaves_out) {
    const int n = tree.size();
    const double tol = 1e-9;
    leaves_out.clear();
    for (int x = 0; x < n; ++x) {
        bool has_descendant = false;
        for (int y = 0; y < n && !has_descendant; ++y) {
            if (y == x) continue;
            if (gromov_product(tree, root, x, y) >= tree.dist(x, root) - tol &&
                tree.dist(y, root) > tree.dist(x, root) + tol)
                has_descendant = true;
        }
        if (!has_descendant) leaves_out.push_back(x);
    }
    const int k = static_cast<int>(leaves_out.size());
    std::vector<double> flat(static_cast<size_t>(k) * k, 0.0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            double d = std::exp(-gromov_product(tree, root, leaves_out[static_cast<size_t>(i)],
                                                leaves_out[static_cast<size_t>(j)]));
            flat[static_cast<size_t>(i) * k + j] = d;
            flat[static_cast<size_t>(j) * k + i] = d;
        }
    return FiniteMetricSpace(k, std::move(flat));
}

RoughEmbedReport rough_embed(const FiniteMetricSpace& tree, int root,
                             const HyperbolicCone& target, const PointSet& leaves) {
    if (delta_certificate(tree, root) > 1e-9)
        throw std::invalid_argument("input is not a tree metric (nonzero hyperbolicity defect)");
    if (target.base->size() != static_cast<int>(leaves.size()))
        throw std::invalid_argument("target cone base must be the leaf set");
    const int n = tree.size();
    RoughEmbedReport rep;
    rep.leaves = leaves;
    rep.leaf_of.resize(static_cast<size_t>(n), -1);
    rep.radius.resize(static_cast<size_t>(n), 0.0);
    for (int x = 0; x < n; ++x) {
        rep.radius[static_cast<size_t>(x)] = tree.dist(x, root);
        double best = -1.0;
        int arg = -1;
        for (int li = 0; li < static_cast<int>(leaves.size()); ++li) {
            double p = gromov_product(tree, root, x, leaves[static_cast<size_t>(li)]);
            if (p > best + 1e-12) {
                best = p;
                arg = li;
            }
        }
        rep.leaf_of[static_cast<size_t>(x)] = arg;
        rep.visual_defect = std::max(rep.visual_defect, rep.radius[static_cast<size_t>(x)] - best);
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            ConePoint fx{rep.leaf_of[static_cast<size_t>(x)], rep.radius[static_cast<size_t>(x)]};
            ConePoint fy{rep.leaf_of[static_cast<size_t>(y)], rep.radius[static_cast<size_t>(y)]};
            double err = std::abs(tree.dist(x, y) - cone_distance(target, fx, fy));
            rep.additive_error = std::max(rep.additive_error, err);
        }
    return rep;
}

} // namespace coarselab
