#include "coarselab/hypcone.hpp"
#include "coarselab/fixtures.hpp"
#include "coarselab/rng.hpp"
#include <cstdio>
#include <cmath>
#include <chrono>
using namespace coarselab;

static std::vector<ConePoint> sample_cone(const FiniteMetricSpace& base, int count, uint64_t seed, double tmax) {
    SplitMix64 rng(seed);
    std::vector<ConePoint> pts;
    for (int i = 0; i < count; ++i)
        pts.push_back({rng.next_below(base.size()), rng.next_double() * tmax});
    return pts;
}

int main() {
    auto t0 = std::chrono::steady_clock::now();
    FiniteMetricSpace circle = circle_fixture(64);
    HyperbolicCone cone(circle);
    // delta certificate over sampled points (~84 triples per 3-subset: use 85 pts -> 10^5 triples)
    auto pts = sample_cone(circle, 85, 7, 30.0);
    auto rep = cone_delta_certificate(cone, pts);
    printf("circle cone: delta=%.6f comparison_gap=%.3e triples=%ld\n", rep.max_defect, rep.max_comparison_gap, rep.triples);
    FiniteMetricSpace cantor = cantor_fixture(7);
    HyperbolicCone kcone(cantor);
    auto kpts = sample_cone(cantor, 85, 9, 30.0);
    auto krep = cone_delta_certificate(kcone, kpts);
    printf("cantor cone: delta=%.6f comparison_gap=%.3e triples=%ld\n", krep.max_defect, krep.max_comparison_gap, krep.triples);
    // visual sandwich at T=30 with certified delta
    auto sw = visual_sandwich_check(cone, 30.0, rep.max_defect);
    printf("sandwich: pass=%d lower_margin=%.6f upper_margin=%.6f pairs=%ld\n",
           sw.pass, sw.worst_lower_margin, sw.worst_upper_margin, sw.pairs);
    // antipodal pair: tan(pi/4)=1, proxy ~ 0
    int anti = 32;
    printf("antipodal: P=%.6f tan=%.6f\n", visual_product(cone, 0, anti, 30.0), tan(cone.mu*circle.dist(0,anti)/4));
    // gromov product monotonicity along rays
    bool mono = true;
    for (double t = 1; t < 29; t += 1) {
        double p1 = cone_gromov_product(cone, {0, t}, {5, t});
        double p2 = cone_gromov_product(cone, {0, t+1}, {5, t+1});
        if (p2 < p1 - 1e-12) mono = false;
    }
    printf("ray monotone: %d\n", mono);
    // trees
    for (uint64_t seed : {1, 2, 3}) {
        FiniteMetricSpace tr = random_tree_fixture(40, seed);
        printf("tree seed %llu: delta=%g\n", (unsigned long long)seed, delta_certificate(tr, 0));
    }
    // rough embed on binary trees depth 4 and 5 (n=31, 63)
    for (int depth : {4, 5}) {
        FiniteMetricSpace tr = binary_tree_fixture(depth);
        PointSet leaves;
        FiniteMetricSpace bdry = visual_boundary(tr, 0, leaves);
        HyperbolicCone target(bdry);
        auto emb = rough_embed(tr, 0, target, leaves);
        printf("bin%d: n=%d leaves=%zu D=%.3f err=%.4f\n", depth, tr.size(), leaves.size(), emb.visual_defect, emb.additive_error);
    }
    // star and path
    {
        FiniteMetricSpace tr = star_tree_fixture(3);
        PointSet leaves;
        FiniteMetricSpace bdry = visual_boundary(tr, 0, leaves);
        HyperbolicCone target(bdry);
        auto emb = rough_embed(tr, 0, target, leaves);
        printf("star3(root=center): leaves=%zu err=%.6f\n", leaves.size(), emb.additive_error);
        FiniteMetricSpace pa = path_fixture(6);
        PointSet pl; FiniteMetricSpace pb = visual_boundary(pa, 0, pl);
        HyperbolicCone pt(pb);
        auto pemb = rough_embed(pa, 0, pt, pl);
        printf("path6: leaves=%zu err=%.6f\n", pl.size(), pemb.additive_error);
    }
    printf("total %.1fs\n", std::chrono::duration<double>(std::chrono::steady_clock::now()-t0).count());
    return 0;
}
