#pragma once

#include "coarselab/metric_space.hpp"

#include <cstdint>
#include <string>

namespace coarselab {

/// Uniform sample of a circle of circumference 2*pi with the geodesic metric.
FiniteMetricSpace circle_fixture(int n);

/// Left endpoints of the level-`level` cylinders of the middle-`ratio` Cantor
/// construction on [0,1] (2^level points, Euclidean metric).
FiniteMetricSpace cantor_fixture(int level, double ratio = 1.0 / 3.0);

/// Seeded sample of the unit 2-sphere with the geodesic (arc) metric.
FiniteMetricSpace sphere_fixture(int n, std::uint64_t seed);

/// Star with k unit legs; index 0 is the center.
FiniteMetricSpace star_tree_fixture(int legs);

/// Path 0-1-...-(n-1) with unit edges.
FiniteMetricSpace path_fixture(int n);

/// Balanced binary tree of the given depth with unit edges; index 0 is the
/// root, vertices are laid out level by level.
FiniteMetricSpace binary_tree_fixture(int depth);

/// Random rooted tree with integer edge lengths in [1, max_edge]; parent of
/// vertex i is drawn among 0..i-1. Index 0 is the root.
FiniteMetricSpace random_tree_fixture(int n, std::uint64_t seed, int max_edge = 3);

/// Entrywise snowflake transform d -> d^p, 0 < p < 1.
FiniteMetricSpace snowflake(const FiniteMetricSpace& space, double p);

/// Parses fixture strings such as "circle:64", "cantor:7", "cantor:7:0.333",
/// "sphere:50:11", "tree:star3", "tree:path8", "tree:bin4", "tree:rand24:7",
/// "snowflake:0.5:circle:64".
FiniteMetricSpace generate_fixture(const std::string& descr, std::uint64_t default_seed = 1);

} // namespace coarselab
