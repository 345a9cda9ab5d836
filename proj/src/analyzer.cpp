#include "iqc/analyzer.hpp"

#include "iqc/bench.hpp"
#include "iqc/gates.hpp"
#include "iqc/layout.hpp"
#include "iqc/router.hpp"
#include "iqc/swapsynth.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <thread>

namespace iqc {

double duration(const Circuit& c, const TimingTable& t) {
    return build_dep_graph(c, t, occupied_levels(c)).longest_path();
}

std::vector<long> swap_flip_counts(const Circuit& c, const OccupancyTrace& trace) {
    std::vector<long> out(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c.ops()[i].kind != GateKind::Swap) continue;
        const auto& d = trace.during[i];
        out[i] = swap_gate_count(*std::max_element(d.begin(), d.end()));
    }
    return out;
}

MetricsRow metrics(const Circuit& c_pre, const Circuit& c_post, const TimingTable& t) {
    if (!std::equal(c_pre.qudits().begin(), c_pre.qudits().end(), c_post.qudits().begin(), c_post.qudits().end(),
                    [](const QuditSpec& a, const QuditSpec& b) { return a.id == b.id && a.dim == b.dim; })) {
        throw std::invalid_argument("metrics: circuits have different qudit registries");
    }
    MetricsRow row;
    row.controls = c_pre.meta().controls;
    row.radix = c_pre.meta().radix;
    const long surplus = static_cast<long>(kQubitToffoliCostSurplus) * c_pre.meta().qubit_toffolis;

    row.gates_pre = static_cast<long>(c_pre.size()) + surplus;
    row.depth_pre = depth(c_pre);

    const OccupancyTrace trace = occupied_levels(c_post);
    const auto flips = swap_flip_counts(c_post, trace);
    std::vector<double> weights(c_post.size(), 1.0);
    for (std::size_t i = 0; i < c_post.size(); ++i) {
        if (c_post.ops()[i].kind == GateKind::Swap) {
            ++row.swap_count;
            row.swap_flips += flips[i];
            weights[i] = static_cast<double>(flips[i]);
        }
    }
    row.gates_post = static_cast<long>(c_post.size()) - row.swap_count + surplus + row.swap_flips;
    row.depth_post = depth(c_post);
    row.swap_decomposed_depth_post =
        static_cast<long>(build_weighted_dep_graph(c_post, std::move(weights)).longest_path());
    row.duration_ns = build_dep_graph(c_post, t, trace).longest_path();
    row.qudits_used = static_cast<long>(c_pre.num_qudits());
    row.space_time = static_cast<double>(row.qudits_used) * row.duration_ns;
    return row;
}

CompileResult compile(const Circuit& input, const Topology& topo, const TimingTable& t) {
    Circuit decomposed = decompose_all(input);
    const Mapping initial = place(decomposed, topo, t);
    Circuit routed = route(decomposed, topo, t, initial);
    MetricsRow row = metrics(decomposed, routed, t);
    return {std::move(decomposed), std::move(routed), std::move(row)};
}

std::vector<MetricsRow> sweep(std::span<const int> radices, std::span<const int> controls, const Topology& topo,
                              const TimingTable& t, unsigned threads) {
    std::vector<SweepPoint> points;
    for (int r : radices) {
        for (int n : controls) points.push_back({r, n});
    }
    std::sort(points.begin(), points.end(), [](SweepPoint a, SweepPoint b) {
        return std::pair{a.radix, a.controls} < std::pair{b.radix, b.controls};
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [](SweepPoint a, SweepPoint b) { return a.radix == b.radix && a.controls == b.controls; }),
                 points.end());

    std::vector<MetricsRow> rows(points.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    const auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            const auto [radix, n] = points[i];
            try {
                rows[i] = compile(gen_cnx(n, radix), topo, t).row;
            } catch (const CapacityError& e) {
                rows[i] = MetricsRow{};
                rows[i].feasible = false;
                rows[i].note = e.what();
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
            rows[i].radix = radix;
            rows[i].controls = n;
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(points.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::string format_number(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

std::string csv_header() {
    return "controls,radix,gates_pre,gates_post,swap_count,depth_pre,depth_post,swap_decomposed_depth_post,"
           "duration_ns,qudits_used,space_time";
}

std::string to_csv_line(const MetricsRow& r) {
    std::string s = std::to_string(r.controls) + "," + std::to_string(r.radix);
    if (!r.feasible) return s + ",NA,NA,NA,NA,NA,NA,NA,NA,NA";
    for (long v : {r.gates_pre, r.gates_post, r.swap_count, r.depth_pre, r.depth_post, r.swap_decomposed_depth_post}) {
        s += "," + std::to_string(v);
    }
    s += "," + format_number(r.duration_ns) + "," + std::to_string(r.qudits_used) + "," + format_number(r.space_time);
    return s;
}

std::string to_csv(std::span<const MetricsRow> rows) {
    std::string out = csv_header() + "\n";
    for (const auto& r : rows) out += to_csv_line(r) + "\n";
    return out;
}

}  // namespace iqc
