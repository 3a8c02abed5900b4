#pragma once

#include "coarselab/covering.hpp"
#include "coarselab/metric_space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coarselab {

/// Geometric scale grid; finite samples only see scales above their
/// resolution, so estimates are always relative to a window.
struct ScaleWindow {
    double s_min = 0.0;
    double s_max = 0.0;
    int steps = 12;

    std::vector<double> grid() const;
};

ScaleWindow make_window(double s_min, double s_max, int steps, double diam);

struct NetCoveringResult {
    Covering covering;
    double achieved_c = 0.0; // mesh / s
    int s_multiplicity = 0;
    bool exact = false; // true when the n <= 24 branch-and-bound ran
};

/// Greedy net covering with mesh <= c_limit * s minimizing the measured
/// s-multiplicity; heuristic, best found is reported. mult_target is a goal,
/// not a guarantee.
NetCoveringResult net_covering(const FiniteMetricSpace& space, double s, int mult_target,
                               double c_limit = 6.0);

struct ColoredCoveringResult {
    bool ok = false;
    std::optional<Covering> covering;
    int colors_needed = 0; // chromatic obstruction when !ok
    double capacity = 0.0;
};

/// (m+1)-colored covering with mesh in [delta*tau, tau], built by nets plus
/// greedy coloring of the member-intersection graph.
ColoredCoveringResult colored_covering(const FiniteMetricSpace& space, double tau, int m,
                                       double delta);

struct CdimCell {
    double s = 0;
    double c = 0;
    int multiplicity = 0; // best achieved s-multiplicity
    double capacity = 0;  // capacity of the fattened covering
    bool exact = false;
    bool informative = true; // c*s < diam: the mesh constraint binds
};

struct CdimReport {
    ScaleWindow window;
    std::vector<CdimCell> cells;
    int estimate = -1;          // via s-multiplicity coverings (Prop. 3.2 form)
    int estimate_colored = -1;  // via colored coverings (first definition)
    int estimate_maps = -1;     // via barycentric maps (third definition)
    std::string status;         // "ok" or "inconclusive"
};

/// Windowed capacity-dimension estimate; the liminf/limsup over vanishing
/// scales is replaced by the plateau rule (identical value on >= 70% of the
/// grid scales).
CdimReport estimate_cdim(const FiniteMetricSpace& space, const ScaleWindow& window,
                         const std::vector<double>& c_grid = {4.0, 6.0, 8.0});

// ---- separated covering sequences ---------------------------------------

struct SequenceParams {
    double r = 0.1;        // scale ratio between consecutive levels
    double c0_prime = 0.0; // measured from the base when 0
    double delta_prime = 0.25;
    double w0 = 0.0;       // absolute scale of the level-1 window top; the
                           // level-j window is [delta' * w0 * r^j, w0 * r^j].
                           // Inferred from the base when 0.
};

struct SeparatedSequence {
    std::vector<Covering> levels;      // one covering per level j = 1..K
    std::vector<std::vector<int>> level_of; // provenance per member: level index
    double c0 = 0.0;                   // output constants delta = c0 = c0' delta' / 2
    double delta = 0.0;
    double w0 = 0.0;
    double r = 0.0;
};

/// Prop. 4.3 recursion: shrink-and-star-merge per color. The base must be a
/// chain of identically colored coverings satisfying (i)-(iii); violations
/// raise errors naming the clause. Output satisfies (i)-(iv), re-verified.
SeparatedSequence separated_sequence(const FiniteMetricSpace& space,
                                     const std::vector<Covering>& base,
                                     SequenceParams params);

/// Inscribed chain of coverings with multiplicity <= m+1 at geometrically
/// shrinking scales, for cone schedules. Scales stall at the sample
/// resolution: deeper levels then repeat the finest covering.
std::vector<Covering> build_inscribed_ladder(const FiniteMetricSpace& space, int m,
                                             int levels, double ratio = 0.25);

} // namespace coarselab
