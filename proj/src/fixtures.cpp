#include "coarselab/fixtures.hpp"

#include "coarselab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace coarselab {

namespace {

FiniteMetricSpace from_pairwise(int n, const std::vector<std::vector<double>>& pts,
                                double (*metric)(const std::vector<double>&,
                                                 const std::vector<double>&)) {
    std::vector<double> flat(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = metric(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)]);
            flat[static_cast<size_t>(i) * n + j] = d;
            flat[static_cast<size_t>(j) * n + i] = d;
        }
    return FiniteMetricSpace(n, std::move(flat));
}

FiniteMetricSpace tree_space(const std::vector<int>& parent, const std::vector<double>& edge) {
    const int n = static_cast<int>(parent.size());
    std::vector<double> depth(static_cast<size_t>(n), 0.0);
    for (int i = 1; i < n; ++i)
        depth[static_cast<size_t>(i)] = depth[static_cast<size_t>(parent[static_cast<size_t>(i)])] +
                                        edge[static_cast<size_t>(i)];
    // ancestor chains for lca depth
    std::vector<std::vector<int>> chain(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int v = i;
        while (v != 0) {
            chain[static_cast<size_t>(i)].push_back(v);
            v = parent[static_cast<size_t>(v)];
        }
        chain[static_cast<size_t>(i)].push_back(0);
        std::reverse(chain[static_cast<size_t>(i)].begin(), chain[static_cast<size_t>(i)].end());
    }
    std::vector<double> flat(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& a = chain[static_cast<size_t>(i)];
            const auto& b = chain[static_cast<size_t>(j)];
            size_t k = 0;
            while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
            double lca_depth = depth[static_cast<size_t>(a[k - 1])];
            double d = depth[static_cast<size_t>(i)] + depth[static_cast<size_t>(j)] -
                       2.0 * lca_depth;
            flat[static_cast<size_t>(i) * n + j] = d;
            flat[static_cast<size_t>(j) * n + i] = d;
        }
    return FiniteMetricSpace(n, std::move(flat));
}

} // namespace

FiniteMetricSpace circle_fixture(int n) {
    if (n < 1) throw std::invalid_argument("circle fixture needs n >= 1");
    std::vector<double> flat(static_cast<size_t>(n) * n, 0.0);
    const double step = 2.0 * M_PI / n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int k = std::min(j - i, n - (j - i));
            double d = step * k;
            flat[static_cast<size_t>(i) * n + j] = d;
            flat[static_cast<size_t>(j) * n + i] = d;
        }
    return FiniteMetricSpace(n, std::move(flat));
}

FiniteMetricSpace cantor_fixture(int level, double ratio) {
    if (level < 0 || level > 20) throw std::invalid_argument("cantor level out of range");
    if (!(ratio > 0 && ratio < 0.5)) throw std::invalid_argument("cantor ratio must be in (0, 1/2)");
    std::vector<double> xs = {0.0};
    double len = 1.0;
    for (int l = 0; l < level; ++l) {
        len *= ratio;
        std::vector<double> next;
        next.reserve(xs.size() * 2);
        for (double x : xs) {
            next.push_back(x);
            next.push_back(x + (1.0 - ratio) * len / ratio); // right child offset
        }
        xs = std::move(next);
    }
    // offsets above place level-l cylinders of width len at [x, x+len]
    std::sort(xs.begin(), xs.end());
    const int n = static_cast<int>(xs.size());
    std::vector<double> flat(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = std::abs(xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(j)]);
            flat[static_cast<size_t>(i) * n + j] = d;
            flat[static_cast<size_t>(j) * n + i] = d;
        }
    return FiniteMetricSpace(n, std::move(flat));
}

FiniteMetricSpace sphere_fixture(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::vector<double>> pts;
    pts.reserve(static_cast<size_t>(n));
    while (static_cast<int>(pts.size()) < n) {
        double x = 2.0 * rng.next_double() - 1.0;
        double y = 2.0 * rng.next_double() - 1.0;
        double z = 2.0 * rng.next_double() - 1.0;
        double norm2 = x * x + y * y + z * z;
        if (norm2 < 1e-6 || norm2 > 1.0) continue;
        double norm = std::sqrt(norm2);
        pts.push_back({x / norm, y / norm, z / norm});
    }
    return from_pairwise(n, pts, [](const std::vector<double>& a, const std::vector<double>& b) {
        double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        return std::acos(std::clamp(dot, -1.0, 1.0));
    });
}

FiniteMetricSpace star_tree_fixture(int legs) {
    if (legs < 1) throw std::invalid_argument("star needs at least one leg");
    std::vector<int> parent(static_cast<size_t>(legs) + 1, 0);
    std::vector<double> edge(static_cast<size_t>(legs) + 1, 1.0);
    return tree_space(parent, edge);
}

FiniteMetricSpace path_fixture(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<int> parent(static_cast<size_t>(n), 0);
    std::vector<double> edge(static_cast<size_t>(n), 1.0);
    for (int i = 1; i < n; ++i) parent[static_cast<size_t>(i)] = i - 1;
    return tree_space(parent, edge);
}

FiniteMetricSpace binary_tree_fixture(int depth) {
    if (depth < 0 || depth > 10) throw std::invalid_argument("binary tree depth out of range");
    int n = (1 << (depth + 1)) - 1;
    std::vector<int> parent(static_cast<size_t>(n), 0);
    std::vector<double> edge(static_cast<size_t>(n), 1.0);
    for (int i = 1; i < n; ++i) parent[static_cast<size_t>(i)] = (i - 1) / 2;
    return tree_space(parent, edge);
}

FiniteMetricSpace random_tree_fixture(int n, std::uint64_t seed, int max_edge) {
    if (n < 1) throw std::invalid_argument("tree needs n >= 1");
    SplitMix64 rng(seed);
    std::vector<int> parent(static_cast<size_t>(n), 0);
    std::vector<double> edge(static_cast<size_t>(n), 0.0);
    for (int i = 1; i < n; ++i) {
        parent[static_cast<size_t>(i)] = rng.next_below(i);
        edge[static_cast<size_t>(i)] = 1.0 + rng.next_below(max_edge);
    }
    return tree_space(parent, edge);
}

FiniteMetricSpace snowflake(const FiniteMetricSpace& space, double p) {
    if (!(p > 0 && p < 1)) throw std::invalid_argument("snowflake exponent must be in (0,1)");
    const int n = space.size();
    std::vector<double> flat(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                flat[static_cast<size_t>(i) * n + j] = std::pow(space.dist(i, j), p);
    return FiniteMetricSpace(n, std::move(flat));
}

FiniteMetricSpace generate_fixture(const std::string& descr, std::uint64_t default_seed) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= descr.size()) {
        size_t next = descr.find(':', pos);
        if (next == std::string::npos) {
            parts.push_back(descr.substr(pos));
            break;
        }
        parts.push_back(descr.substr(pos, next - pos));
        pos = next + 1;
    }
    if (parts.empty()) throw std::invalid_argument("empty fixture description");
    const std::string& kind = parts[0];
    auto arg_int = [&](size_t i) { return std::stoi(parts.at(i)); };
    if (kind == "circle") return circle_fixture(arg_int(1));
    if (kind == "cantor")
        return cantor_fixture(arg_int(1), parts.size() > 2 ? std::stod(parts[2]) : 1.0 / 3.0);
    if (kind == "sphere")
        return sphere_fixture(arg_int(1),
                              parts.size() > 2 ? std::stoull(parts[2]) : default_seed);
    if (kind == "snowflake") {
        if (parts.size() < 3) throw std::invalid_argument("snowflake:<p>:<inner fixture>");
        std::string inner = parts[2];
        for (size_t i = 3; i < parts.size(); ++i) inner += ":" + parts[i];
        return snowflake(generate_fixture(inner, default_seed), std::stod(parts[1]));
    }
    if (kind == "tree") {
        const std::string& shape = parts.at(1);
        if (shape.rfind("star", 0) == 0) return star_tree_fixture(std::stoi(shape.substr(4)));
        if (shape.rfind("path", 0) == 0) return path_fixture(std::stoi(shape.substr(4)));
        if (shape.rfind("bin", 0) == 0) return binary_tree_fixture(std::stoi(shape.substr(3)));
        if (shape.rfind("rand", 0) == 0)
            return random_tree_fixture(std::stoi(shape.substr(4)),
                                       parts.size() > 2 ? std::stoull(parts[2]) : default_seed);
        throw std::invalid_argument("unknown tree shape: " + shape);
    }
    throw std::invalid_argument("unknown fixture kind: " + kind);
}

} // namespace coarselab
