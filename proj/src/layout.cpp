#include "iqc/layout.hpp"

#include <algorithm>
#include <limits>

namespace iqc {

void InteractionWeights::add(QuditId u, QuditId v, int by) {
    if (u == v) return;
    w_[index(u, v)] += by;
    w_[index(v, u)] += by;
    if (w_[index(u, v)] < 0) throw std::logic_error("interaction weight went negative");
    refresh_partners(u);
    refresh_partners(v);
}

void InteractionWeights::decrement(QuditId u, QuditId v) {
    if (u != v && w_[index(u, v)] <= 0) {
        throw std::logic_error("interaction weight of " + std::to_string(u) + "," + std::to_string(v) +
                               " already zero");
    }
    add(u, v, -1);
}

void InteractionWeights::refresh_partners(QuditId u) {
    if (partners_.size() != n_) partners_.assign(n_, {});
    auto& p = partners_[static_cast<std::size_t>(u)];
    p.clear();
    for (std::size_t v = 0; v < n_; ++v) {
        if (w_[static_cast<std::size_t>(u) * n_ + v] > 0) p.push_back(static_cast<QuditId>(v));
    }
}

namespace {

template <typename F>
void for_each_pair(const GateApp& op, F&& f) {
    const auto q = op.operands();
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t j = i + 1; j < q.size(); ++j) {
            if (q[i] != kNoQudit && q[j] != kNoQudit) f(q[i], q[j]);
        }
    }
}

}  // namespace

void InteractionWeights::add_op(const GateApp& op) {
    for_each_pair(op, [this](QuditId u, QuditId v) { add(u, v); });
}

void InteractionWeights::remove_op(const GateApp& op) {
    for_each_pair(op, [this](QuditId u, QuditId v) { decrement(u, v); });
}

long InteractionWeights::total(QuditId u) const {
    long s = 0;
    for (std::size_t v = 0; v < n_; ++v) s += w_[index(u, static_cast<QuditId>(v))];
    return s;
}

bool InteractionWeights::all_zero() const {
    return std::all_of(w_.begin(), w_.end(), [](int x) { return x == 0; });
}

InteractionWeights compute_weights(const Circuit& c) {
    InteractionWeights w(c.num_qudits());
    for (const auto& op : c.ops()) {
        if (op.kind == GateKind::Swap && !op.sites.empty()) continue;
        w.add_op(op);
    }
    return w;
}

double placement_cost(const InteractionWeights& w, const Mapping& phi, const Circuit& c, QuditId u, SiteId s,
                      const Topology& topo, const TimingTable& t) {
    double m = 0.0;
    for (QuditId v : w.partners(u)) {
        if (!phi.is_placed(v)) continue;
        m += w(u, v) * distance_time(topo, s, phi.site_of(v), c.dim(u) - 1, c.dim(v) - 1, t);
    }
    return m;
}

Mapping place(const Circuit& c, const Topology& topo, const TimingTable& t) {
    const std::size_t n = c.num_qudits();
    if (n > static_cast<std::size_t>(topo.num_sites())) {
        throw CapacityError("circuit needs " + std::to_string(n) + " qudits but the grid has " +
                            std::to_string(topo.num_sites()) + " sites");
    }
    for (const auto& q : c.qudits()) {
        if (q.dim > topo.site_max_dim(0)) {
            throw CapacityError("qudit " + std::to_string(q.id) + " needs dimension " + std::to_string(q.dim));
        }
    }
    Mapping phi(n, static_cast<std::size_t>(topo.num_sites()));
    if (n == 0) return phi;

    const InteractionWeights w = compute_weights(c);
    QuditId seed = 0;
    for (QuditId u = 1; u < static_cast<QuditId>(n); ++u) {
        if (w.total(u) > w.total(seed)) seed = u;
    }
    phi.assign(seed, center_site(topo));

    std::vector<long> pull(n, 0);  // weight to the placed set
    const auto absorb = [&](QuditId placed) {
        for (QuditId v : w.partners(placed)) pull[static_cast<std::size_t>(v)] += w(placed, v);
    };
    absorb(seed);

    for (std::size_t placed = 1; placed < n; ++placed) {
        QuditId u = -1;
        for (QuditId v = 0; v < static_cast<QuditId>(n); ++v) {
            if (phi.is_placed(v)) continue;
            if (u < 0 || pull[static_cast<std::size_t>(v)] > pull[static_cast<std::size_t>(u)]) u = v;
        }

        std::vector<SiteId> frontier;
        for (SiteId s = 0; s < topo.num_sites(); ++s) {
            if (phi.qudit_at(s) != kNoQudit) continue;
            const auto& nb = topo.neighbors(s);
            if (std::any_of(nb.begin(), nb.end(), [&](SiteId x) { return phi.qudit_at(x) != kNoQudit; })) {
                frontier.push_back(s);
            }
        }
        if (frontier.empty()) {
            // Walled in: take the nearest free sites by hops from any placed qudit.
            int best = std::numeric_limits<int>::max();
            for (SiteId s = 0; s < topo.num_sites(); ++s) {
                if (phi.qudit_at(s) != kNoQudit) continue;
                int h = std::numeric_limits<int>::max();
                for (QuditId v = 0; v < static_cast<QuditId>(n); ++v) {
                    if (phi.is_placed(v)) h = std::min(h, topo.hops(s, phi.site_of(v)));
                }
                if (h < best) {
                    best = h;
                    frontier.clear();
                }
                if (h == best) frontier.push_back(s);
            }
        }

        SiteId site = frontier.front();
        double best_m = std::numeric_limits<double>::infinity();
        for (SiteId s : frontier) {
            const double m = placement_cost(w, phi, c, u, s, topo, t);
            if (m < best_m) {
                best_m = m;
                site = s;
            }
        }
        phi.assign(u, site);
        absorb(u);
    }
    return phi;
}

}  // namespace iqc
