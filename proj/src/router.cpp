#include "iqc/router.hpp"

#include <algorithm>
#include <limits>

namespace iqc {

namespace {

int level(const RouteState& s, QuditId q) {
    return q == kNoQudit ? 1 : s.dims[static_cast<std::size_t>(q)] - 1;
}

// Weighted distance from qudit u (if it sat at `at`) to all its partners
// except `skip`.
double pull(const RouteState& s, QuditId u, SiteId at, QuditId skip, const Topology& topo, const TimingTable& t) {
    double sum = 0.0;
    for (QuditId v : s.weights.partners(u)) {
        if (v == skip) continue;
        sum += s.weights(u, v) *
               distance_time(topo, at, s.mapping.site_of(v), level(s, u), level(s, v), t);
    }
    return sum;
}

}  // namespace

double score(const RouteState& state, const Topology& topo, const TimingTable& t) {
    double sum = 0.0;
    const auto n = static_cast<QuditId>(state.weights.num_qudits());
    for (QuditId u = 0; u < n; ++u) {
        for (QuditId v : state.weights.partners(u)) {
            if (v <= u) continue;
            sum += state.weights(u, v) * distance_time(topo, state.mapping.site_of(u), state.mapping.site_of(v),
                                                       level(state, u), level(state, v), t);
        }
    }
    return sum;
}

double swap_delta(const RouteState& state, SiteId a, SiteId b, const Topology& topo, const TimingTable& t) {
    const QuditId x = state.mapping.qudit_at(a);
    const QuditId y = state.mapping.qudit_at(b);
    double delta = 0.0;
    // The x-y term keeps its distance, so it is skipped on both sides.
    if (x != kNoQudit) delta += pull(state, x, b, y, topo, t) - pull(state, x, a, y, topo, t);
    if (y != kNoQudit) delta += pull(state, y, a, x, topo, t) - pull(state, y, b, x, topo, t);
    return delta;
}

Circuit route(const Circuit& c, const Topology& topo, const TimingTable& t, const Mapping& initial) {
    if (!initial.is_total() || initial.num_qudits() != c.num_qudits() ||
        initial.num_sites() != static_cast<std::size_t>(topo.num_sites())) {
        throw std::invalid_argument("routing needs a total mapping onto this grid");
    }
    const OccupancyTrace trace = occupied_levels(c);
    RouteState st{initial, compute_weights(c), std::vector<int>(c.num_qudits(), kMinDim)};

    Circuit out = c.empty_copy();
    out.meta().grid_rows = topo.rows();
    out.meta().grid_cols = topo.cols();
    const int swap_limit = topo.num_sites() * 4;

    const auto ops = c.ops();
    for (std::size_t idx = 0; idx < ops.size(); ++idx) {
        const GateApp& op = ops[idx];
        if (op.arity() > 2 || op.kind == GateKind::Swap) {
            throw std::invalid_argument("op " + std::to_string(idx) + ": route needs decomposed one- and two-qudit gates");
        }
        const auto operands = op.operands();
        if (operands.size() == 2) {
            const QuditId u = operands[0];
            const QuditId v = operands[1];
            int swaps = 0;
            int best_hops = topo.hops(st.mapping.site_of(u), st.mapping.site_of(v));
            int stale = 0;  // swaps since the operands last got closer than ever before
            while (topo.hops(st.mapping.site_of(u), st.mapping.site_of(v)) > 1) {
                if (++swaps > swap_limit) {
                    throw LivelockError("op " + std::to_string(idx) + ": no adjacency after " +
                                        std::to_string(swap_limit) + " swaps");
                }
                const bool force = stale >= 2;
                const int hops_now = topo.hops(st.mapping.site_of(u), st.mapping.site_of(v));

                SiteId best_a = -1, best_b = -1;
                double best_delta = std::numeric_limits<double>::infinity();
                int best_after = std::numeric_limits<int>::max();
                for (QuditId mover : {u, v}) {
                    const SiteId from = st.mapping.site_of(mover);
                    const SiteId other = st.mapping.site_of(mover == u ? v : u);
                    for (SiteId to : topo.neighbors(from)) {
                        const SiteId a = std::min(from, to);
                        const SiteId b = std::max(from, to);
                        if (to == other) continue;
                        const int after = topo.hops(to, other);
                        if (force && after >= hops_now) continue;
                        const double d = swap_delta(st, a, b, topo, t);
                        const bool better =
                            d < best_delta ||
                            (d == best_delta && (after < best_after ||
                                                 (after == best_after && std::pair{a, b} < std::pair{best_a, best_b})));
                        if (better) {
                            best_delta = d;
                            best_after = after;
                            best_a = a;
                            best_b = b;
                        }
                    }
                }
                if (best_a < 0) throw LivelockError("op " + std::to_string(idx) + ": no swap candidate");

                GateApp sw = GateApp::swap(st.mapping.qudit_at(best_a), st.mapping.qudit_at(best_b));
                sw.sites = {best_a, best_b};
                out.append(std::move(sw));
                st.mapping.swap_sites(best_a, best_b);

                const int h = topo.hops(st.mapping.site_of(u), st.mapping.site_of(v));
                if (h < best_hops) {
                    best_hops = h;
                    stale = 0;
                } else {
                    ++stale;
                }
            }
        }
        GateApp routed = op;
        routed.sites.clear();
        for (QuditId q : operands) routed.sites.push_back(st.mapping.site_of(q));
        out.append(std::move(routed));
        if (operands.size() == 2) st.weights.remove_op(op);
        for (std::size_t i = 0; i < operands.size(); ++i) {
            st.dims[static_cast<std::size_t>(operands[i])] = trace.after[idx][i];
        }
    }
    out.set_mappings(initial, st.mapping);
    return out;
}

}  // namespace iqc
