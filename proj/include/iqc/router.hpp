#pragma once

#include "iqc/circuit.hpp"
#include "iqc/layout.hpp"
#include "iqc/timing.hpp"
#include "iqc/topology.hpp"

#include <stdexcept>
#include <vector>

namespace iqc {

class LivelockError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Snapshot used by the scoring function.
struct RouteState {
    Mapping mapping;
    InteractionWeights weights;
    /// Occupied dimension per virtual qudit at the routing frontier.
    std::vector<int> dims;
};

/// Sum over unordered virtual pairs of w(u, v) * distance_time(phi(u), phi(v)).
double score(const RouteState& state, const Topology& topo, const TimingTable& t);

/// Change in score if the contents of sites a and b were exchanged.
double swap_delta(const RouteState& state, SiteId a, SiteId b, const Topology& topo, const TimingTable& t);

/// Inserts SWAPs so every two-qudit op acts on coupled sites. Every output op
/// carries sites; SWAP operands are the virtual occupants (kNoQudit for an
/// empty site). The result records initial and final mappings.
Circuit route(const Circuit& c, const Topology& topo, const TimingTable& t, const Mapping& initial);

}  // namespace iqc
