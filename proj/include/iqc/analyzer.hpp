#pragma once

#include "iqc/circuit.hpp"
#include "iqc/timing.hpp"
#include "iqc/topology.hpp"

#include <span>
#include <string>
#include <vector>

namespace iqc {

struct MetricsRow {
    int controls = 0;
    int radix = 0;
    bool feasible = true;
    long gates_pre = 0;
    long gates_post = 0;
    long swap_count = 0;
    long depth_pre = 0;
    long depth_post = 0;
    long swap_decomposed_depth_post = 0;
    double duration_ns = 0.0;
    long qudits_used = 0;
    double space_time = 0.0;
    /// Controlled flips the routed SWAPs expand to.
    long swap_flips = 0;
    /// Why the row is infeasible, empty otherwise.
    std::string note;
};

/// Longest duration-weighted path through the dependency graph.
double duration(const Circuit& c, const TimingTable& t);

/// Controlled flips in each op's SWAP expansion at its occupied dimension
/// (0 for non-SWAP ops).
std::vector<long> swap_flip_counts(const Circuit& c, const OccupancyTrace& trace);

/// c_pre: decomposed circuit before routing; c_post: its routed form.
MetricsRow metrics(const Circuit& c_pre, const Circuit& c_post, const TimingTable& t);

struct CompileResult {
    Circuit decomposed;
    Circuit routed;
    MetricsRow row;
};

/// decompose_all, place, route, metrics.
CompileResult compile(const Circuit& input, const Topology& topo, const TimingTable& t);

struct SweepPoint {
    int radix;
    int controls;
};

/// One row per point, sorted by radix then controls. Capacity failures give
/// infeasible rows. `threads` = 0 picks the hardware concurrency.
std::vector<MetricsRow> sweep(std::span<const int> radices, std::span<const int> controls, const Topology& topo,
                              const TimingTable& t, unsigned threads = 0);

std::string csv_header();
std::string to_csv_line(const MetricsRow& row);
std::string to_csv(std::span<const MetricsRow> rows);

/// Shortest round-trip decimal form.
std::string format_number(double v);

}  // namespace iqc
