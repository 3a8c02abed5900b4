#pragma once

#include "coarselab/cdim.hpp"
#include "coarselab/covering.hpp"
#include "coarselab/metric_space.hpp"

#include <functional>
#include <string>
#include <vector>

namespace coarselab {

/// Control function eta(t) = C * max(t^alpha, t^{1/alpha}), C >= 1,
/// alpha in (0, 1]. Increasing homeomorphism of [0, infinity).
struct EtaModulus {
    double C = 1.0;
    double alpha = 1.0;

    double operator()(double t) const;
    double inverse(double y) const;
};

/// eta' of the inverse map: eta'(t) = 1 / eta^{-1}(1/t).
double inverse_modulus(const EtaModulus& eta, double t);

/// Bijection between the point indices of two spaces over the same index
/// set (perm[i] = image of i).
struct FiniteMap {
    const FiniteMetricSpace* domain = nullptr;
    const FiniteMetricSpace* target = nullptr;
    std::vector<int> perm;

    int operator()(int i) const { return perm[static_cast<size_t>(i)]; }
};

FiniteMap identity_map(const FiniteMetricSpace& domain, const FiniteMetricSpace& target);

struct EtaCertificate {
    bool pass = true;
    double worst_ratio = 0.0; // max over triples of |fx fa| / (eta(t) |fx fb|)
    int fail_x = -1, fail_a = -1, fail_b = -1;
    long triples = 0;
};

/// Exact O(n^3) scan of the quasi-symmetry condition
/// |xa| <= t |xb|  =>  |f(x)f(a)| <= eta(t) |f(x)f(b)|.
EtaCertificate certify_eta(const FiniteMap& f, const EtaModulus& eta);

/// Grid search over alpha for the minimal certified C of the default family.
EtaModulus fit_eta(const FiniteMap& f);

/// Member-wise image covering; the covering property survives bijections.
Covering pushforward(const FiniteMap& f, const Covering& cov);

struct LemmaCapacityCheck {
    double lhs = 0.0; // 1 / cap_loc(f(U))
    double rhs = 0.0; // 16 eta(2 / cap_loc(U))
    bool pass = false;
};

/// Lemma "capacity": 1/cap_loc(f(U)) <= 16 eta(2 / cap_loc(U)).
LemmaCapacityCheck check_pushforward_capacity(const FiniteMap& f, const Covering& cov,
                                              const EtaModulus& eta);

// ---- the small-image-family pipeline -------------------------------------

struct TaggedMember {
    PointSet pts;
    int level = 0; // 1-based level in the sequence
    int color = 0;
};

/// U(s): members of the sequence whose image diameter is at most s. Errors
/// with "increase depth" when the truncated sequence cannot cover.
std::vector<TaggedMember> small_image_family(const FiniteMap& f, const SeparatedSequence& seq,
                                             double s);

/// Minimal subfamily: dominated members deleted; still an (n+1)-colored
/// covering by the separatedness of the sequence.
std::vector<TaggedMember> minimal_family(const FiniteMetricSpace& space,
                                         const std::vector<TaggedMember>& family);

Covering family_to_covering(const FiniteMetricSpace& space,
                            const std::vector<TaggedMember>& family);

/// mu^ of the local-capacity lemma: solves 4 eta(4 mu / (c0 delta)) = 1.
double solve_mu_hat(const EtaModulus& eta, double c0, double delta);

struct BalancedImageReport {
    bool pass = true;
    double min_image_diam = 0.0;
    double image_mesh = 0.0;
    double required_diam = 0.0;    // s / (4 eta(t)), t = 4 / (c0 delta r)
    double balance_constant = 0.0; // min diam / mesh
    double required_balance = 0.0; // 1 / (4 eta(t))
};

/// Image-side bounds of the minimal family: diameters >= s/4eta(t),
/// mesh <= s, balance >= 1/4eta(t).
BalancedImageReport balanced_image_check(const FiniteMap& f, const FiniteMetricSpace& space,
                                         const std::vector<TaggedMember>& minimal, double s,
                                         const EtaModulus& eta, double c0, double delta, double r);

} // namespace coarselab
