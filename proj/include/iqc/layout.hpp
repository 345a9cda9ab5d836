#pragma once

#include "iqc/circuit.hpp"
#include "iqc/timing.hpp"
#include "iqc/topology.hpp"

#include <stdexcept>
#include <vector>

namespace iqc {

/// Raised when a circuit needs more sites (or higher site dimension) than
/// the device offers.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Symmetric co-occurrence counts between virtual qudits.
class InteractionWeights {
public:
    InteractionWeights() = default;
    explicit InteractionWeights(std::size_t num_qudits) : n_(num_qudits), w_(num_qudits * num_qudits, 0) {}

    int operator()(QuditId u, QuditId v) const { return w_[index(u, v)]; }
    void add(QuditId u, QuditId v, int by = 1);
    /// Throws std::logic_error rather than going negative.
    void decrement(QuditId u, QuditId v);
    /// Adds 1 for (or removes 1 from) every operand pair of `op`.
    void add_op(const GateApp& op);
    void remove_op(const GateApp& op);

    /// Sum of w(u, v) over all v.
    long total(QuditId u) const;
    /// Qudits v with w(u, v) > 0, ascending.
    const std::vector<QuditId>& partners(QuditId u) const { return partners_.at(static_cast<std::size_t>(u)); }
    bool all_zero() const;
    std::size_t num_qudits() const { return n_; }

private:
    std::size_t index(QuditId u, QuditId v) const {
        return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
    }
    void refresh_partners(QuditId u);

    std::size_t n_ = 0;
    std::vector<int> w_;
    std::vector<std::vector<QuditId>> partners_ = std::vector<std::vector<QuditId>>(n_);
};

InteractionWeights compute_weights(const Circuit& c);

/// Greedy placement: the heaviest qudit goes to the centre; each next qudit
/// (largest weight to the placed set) takes the free neighbouring site with
/// the smallest weighted distance m(u) to its placed partners.
Mapping place(const Circuit& c, const Topology& topo, const TimingTable& t);

/// m(u) for qudit u if it sat at site s, over already placed partners.
double placement_cost(const InteractionWeights& w, const Mapping& phi, const Circuit& c, QuditId u, SiteId s,
                      const Topology& topo, const TimingTable& t);

}  // namespace iqc
