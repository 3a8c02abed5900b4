#include "coarselab/qsmaps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace coarselab {

double EtaModulus::operator()(double t) const {
    if (t <= 0) return 0.0;
    return C * std::max(std::pow(t, alpha), std::pow(t, 1.0 / alpha));
}

double EtaModulus::inverse(double y) const {
    if (y <= 0) return 0.0;
    double u = y / C;
    // max(t^a, t^{1/a}) equals t^a below 1 and t^{1/a} above 1 (a <= 1)
    if (u <= 1.0) return std::pow(u, 1.0 / alpha);
    return std::pow(u, alpha);
}

double inverse_modulus(const EtaModulus& eta, double t) {
    if (t <= 0) return 0.0;
    double inv = eta.inverse(1.0 / t);
    if (inv <= 0) return std::numeric_limits<double>::infinity();
    return 1.0 / inv;
}

FiniteMap identity_map(const FiniteMetricSpace& domain, const FiniteMetricSpace& target) {
    if (domain.size() != target.size())
        throw std::invalid_argument("finite map needs equal point counts");
    FiniteMap f;
    f.domain = &domain;
    f.target = &target;
    f.perm.resize(static_cast<size_t>(domain.size()));
    for (int i = 0; i < domain.size(); ++i) f.perm[static_cast<size_t>(i)] = i;
    return f;
}

namespace {

void validate_bijection(const FiniteMap& f) {
    if (!f.domain || !f.target) throw std::invalid_argument("map is not bound to spaces");
    if (f.perm.size() != static_cast<size_t>(f.domain->size()) ||
        f.domain->size() != f.target->size())
        throw std::invalid_argument("map must be a bijection of equal-sized spaces");
    std::vector<char> seen(f.perm.size(), 0);
    for (int v : f.perm) {
        if (v < 0 || v >= f.target->size() || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("map must be a bijection");
        seen[static_cast<size_t>(v)] = 1;
    }
}

} // namespace

EtaCertificate certify_eta(const FiniteMap& f, const EtaModulus& eta) {
    validate_bijection(f);
    const FiniteMetricSpace& X = *f.domain;
    const FiniteMetricSpace& Y = *f.target;
    EtaCertificate cert;
    const int n = X.size();
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a) {
            if (a == x) continue;
            double img_xa = Y.dist(f(x), f(a));
            double d_xa = X.dist(x, a);
            for (int b = 0; b < n; ++b) {
                if (b == x) continue;
                ++cert.triples;
                double d_xb = X.dist(x, b);
                double img_xb = Y.dist(f(x), f(b));
                if (d_xb == 0.0) {
                    // the hypothesis |xa| <= t|xb| holds only when |xa| = 0,
                    // and then the conclusion must hold for all t, t -> 0+
                    if (d_xa == 0.0 && img_xa > 0.0) {
                        cert.pass = false;
                        cert.fail_x = x;
                        cert.fail_a = a;
                        cert.fail_b = b;
                        cert.worst_ratio = std::numeric_limits<double>::infinity();
                    }
                    continue;
                }
                double t = d_xa / d_xb;
                double allowed = eta(t) * img_xb;
                double ratio = allowed > 0 ? img_xa / allowed
                                           : (img_xa > 0 ? std::numeric_limits<double>::infinity() : 0.0);
                if (ratio > cert.worst_ratio) {
                    cert.worst_ratio = ratio;
                    if (ratio > 1.0 + 1e-12) {
                        cert.pass = false;
                        cert.fail_x = x;
                        cert.fail_a = a;
                        cert.fail_b = b;
                    }
                }
            }
        }
    return cert;
}

EtaModulus fit_eta(const FiniteMap& f) {
    validate_bijection(f);
    const FiniteMetricSpace& X = *f.domain;
    const FiniteMetricSpace& Y = *f.target;
    const int n = X.size();
    // Pareto data: for each triple, required C(alpha) = s / max(t^a, t^{1/a})
    // with s the image ratio. Collected per triple, evaluated per alpha.
    std::vector<std::pair<double, double>> ts; // (t, s)
    ts.reserve(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a) {
            if (a == x) continue;
            for (int b = 0; b < n; ++b) {
                if (b == x || X.dist(x, b) == 0.0) continue;
                double t = X.dist(x, a) / X.dist(x, b);
                double img_b = Y.dist(f(x), f(b));
                if (img_b == 0.0) continue;
                double s = Y.dist(f(x), f(a)) / img_b;
                if (t <= 0) continue;
                ts.emplace_back(t, s);
            }
        }
    EtaModulus best;
    double best_C = std::numeric_limits<double>::infinity();
    for (double alpha : {1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1}) {
        double C = 1.0;
        for (const auto& [t, s] : ts) {
            double denom = std::max(std::pow(t, alpha), std::pow(t, 1.0 / alpha));
            if (denom > 0) C = std::max(C, s / denom);
        }
        // ties favor the larger alpha, i.e. the modulus closest to linear
        if (C < best_C - 1e-9) {
            best_C = C;
            best = EtaModulus{C, alpha};
        }
    }
    best.C = best_C * (1.0 + 1e-12);
    return best;
}

Covering pushforward(const FiniteMap& f, const Covering& cov) {
    validate_bijection(f);
    if (cov.space != f.domain)
        throw std::invalid_argument("covering must live on the map's domain");
    std::vector<PointSet> members;
    members.reserve(cov.members.size());
    for (const auto& m : cov.members) {
        PointSet img;
        img.reserve(m.size());
        for (int z : m) img.push_back(f(z));
        members.push_back(make_point_set(std::move(img), f.target->size()));
    }
    return make_covering(*f.target, std::move(members), cov.colors);
}

LemmaCapacityCheck check_pushforward_capacity(const FiniteMap& f, const Covering& cov,
                                              const EtaModulus& eta) {
    LemmaCapacityCheck out;
    double cl = local_capacity(cov);
    double cl_img = local_capacity(pushforward(f, cov));
    out.lhs = cl_img > 0 ? 1.0 / cl_img : std::numeric_limits<double>::infinity();
    out.rhs = 16.0 * eta(cl > 0 ? 2.0 / cl : std::numeric_limits<double>::infinity());
    out.pass = out.lhs <= out.rhs * (1 + 1e-9);
    return out;
}

std::vector<TaggedMember> small_image_family(const FiniteMap& f, const SeparatedSequence& seq,
                                             double s) {
    validate_bijection(f);
    if (!(s > 0)) throw std::invalid_argument("image scale must be positive");
    const FiniteMetricSpace& Y = *f.target;
    std::vector<TaggedMember> family;
    for (size_t j = 0; j < seq.levels.size(); ++j) {
        const Covering& cov = seq.levels[j];
        for (int i = 0; i < cov.size(); ++i) {
            PointSet img;
            for (int z : cov.members[static_cast<size_t>(i)]) img.push_back(f(z));
            img = make_point_set(std::move(img), Y.size());
            if (diameter_of(Y, img) <= s)
                family.push_back(TaggedMember{cov.members[static_cast<size_t>(i)],
                                              static_cast<int>(j) + 1,
                                              (*cov.colors)[static_cast<size_t>(i)]});
        }
    }
    // covering check over the domain
    std::vector<char> hit(static_cast<size_t>(f.domain->size()), 0);
    for (const auto& m : family)
        for (int z : m.pts) hit[static_cast<size_t>(z)] = 1;
    for (char h : hit)
        if (!h) throw std::runtime_error("increase depth");
    return family;
}

std::vector<TaggedMember> minimal_family(const FiniteMetricSpace& space,
                                         const std::vector<TaggedMember>& family) {
    (void)space;
    std::vector<TaggedMember> out;
    for (size_t i = 0; i < family.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < family.size() && !dominated; ++j) {
            if (i == j) continue;
            if (is_subset(family[i].pts, family[j].pts)) {
                if (family[i].pts == family[j].pts && i < j) continue;
                dominated = true;
            }
        }
        if (!dominated) out.push_back(family[i]);
    }
    return out;
}

Covering family_to_covering(const FiniteMetricSpace& space,
                            const std::vector<TaggedMember>& family) {
    std::vector<PointSet> members;
    std::vector<int> colors;
    for (const auto& m : family) {
        members.push_back(m.pts);
        colors.push_back(m.color);
    }
    return make_covering(space, std::move(members), std::move(colors));
}

double solve_mu_hat(const EtaModulus& eta, double c0, double delta) {
    // 4 eta(4 mu / (c0 delta)) = 1  <=>  4 mu / (c0 delta) = eta^{-1}(1/4)
    return eta.inverse(0.25) * c0 * delta / 4.0;
}

BalancedImageReport balanced_image_check(const FiniteMap& f, const FiniteMetricSpace& space,
                                         const std::vector<TaggedMember>& minimal, double s,
                                         const EtaModulus& eta, double c0, double delta, double r) {
    (void)space;
    validate_bijection(f);
    BalancedImageReport rep;
    const FiniteMetricSpace& Y = *f.target;
    double t = 4.0 / (c0 * delta * r);
    rep.required_diam = s / (4.0 * eta(t));
    rep.required_balance = 1.0 / (4.0 * eta(t));
    rep.min_image_diam = std::numeric_limits<double>::infinity();
    for (const auto& m : minimal) {
        PointSet img;
        for (int z : m.pts) img.push_back(f(z));
        img = make_point_set(std::move(img), Y.size());
        double d = diameter_of(Y, img);
        rep.min_image_diam = std::min(rep.min_image_diam, d);
        rep.image_mesh = std::max(rep.image_mesh, d);
    }
    rep.balance_constant = rep.image_mesh > 0 ? rep.min_image_diam / rep.image_mesh : 1.0;
    rep.pass = rep.min_image_diam >= rep.required_diam - 1e-12 &&
               rep.image_mesh <= s + 1e-12 &&
               rep.balance_constant >= rep.required_balance - 1e-12;
    return rep;
}

} // namespace coarselab
