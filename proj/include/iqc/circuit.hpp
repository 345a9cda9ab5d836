#pragma once

/**
 * @file circuit.hpp
 * @brief Mixed-radix circuit IR: qudit registry, gate applications and the
 * dependency graph used for depth and duration.
 *
 * A circuit is a flat, ordered list of gate applications over virtual
 * qudits. Every qudit declares the largest dimension it may occupy. Routed
 * circuits additionally carry a physical site for every operand plus the
 * initial and final virtual-to-site mappings.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iqc {

using QuditId = int;
using SiteId = int;

/// Marks an unoccupied site in a routed SWAP.
inline constexpr QuditId kNoQudit = -1;

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 7;

enum class Role { Control, Target, Ancilla, Plain };

std::string_view to_string(Role role);
Role role_from_string(std::string_view s);

struct QuditSpec {
    QuditId id = 0;
    int dim = 2;
    Role role = Role::Plain;

    friend bool operator==(const QuditSpec&, const QuditSpec&) = default;
};

enum class GateKind {
    Shift,                 // x+k
    Flip,                  // flip i j
    ControlledShift,       // cx+k
    ControlledFlip,        // cflip
    MultiControlledShift,  // ccx+k, macro
    Swap,                  // swap, macro until routed
    CnX,                   // cnx, macro
    Hadamard,              // h, qubit only
    T,                     // t, qubit only
    Tdg,                   // tdg, qubit only
};

std::string_view to_string(GateKind kind);
std::optional<GateKind> kind_from_string(std::string_view s);

/// True for gates that act on basis states as a classical permutation.
bool is_permutation(GateKind kind);

/// True for gates that must be decomposed before mapping.
bool is_macro(GateKind kind);

struct Control {
    QuditId qudit = 0;
    int value = 1;

    friend bool operator==(const Control&, const Control&) = default;
};

/// One gate application. Operand order is always controls first, then
/// targets; `sites` (routed circuits only) follows the same order.
struct GateApp {
    GateKind kind = GateKind::Shift;
    std::vector<Control> controls;
    std::vector<QuditId> targets;
    int k = 0;
    int i = 0;
    int j = 0;
    std::vector<SiteId> sites;

    std::vector<QuditId> operands() const;
    std::size_t arity() const { return controls.size() + targets.size(); }
    QuditId target() const { return targets.front(); }

    friend bool operator==(const GateApp&, const GateApp&) = default;

    static GateApp shift(QuditId t, int k);
    static GateApp flip(QuditId t, int i, int j);
    static GateApp cshift(QuditId c, int value, QuditId t, int k);
    static GateApp cflip(QuditId c, int value, QuditId t, int i, int j);
    static GateApp ccshift(Control c0, Control c1, QuditId t, int k);
    static GateApp swap(QuditId a, QuditId b);
    static GateApp cnx(std::vector<QuditId> controls, QuditId t);
    static GateApp hadamard(QuditId t);
    static GateApp t_gate(QuditId t);
    static GateApp tdg(QuditId t);
};

/// The permutation a single-target gate applies to its target digit when its
/// controls match. `value` must be below `dim`.
int apply_base(const GateApp& op, int value, int dim);

/// Raised when a circuit violates an IR invariant. `op_index` is -1 for
/// registry-level errors.
class ValidationError : public std::runtime_error {
public:
    ValidationError(long op_index, const std::string& what);
    long op_index() const noexcept { return op_index_; }

private:
    long op_index_;
};

/// Virtual-to-site assignment. Partial while placement runs.
class Mapping {
public:
    Mapping() = default;
    Mapping(std::size_t num_qudits, std::size_t num_sites);

    void assign(QuditId q, SiteId s);
    /// Exchanges the contents of two sites; either may be empty.
    void swap_sites(SiteId a, SiteId b);

    SiteId site_of(QuditId q) const { return phi_.at(static_cast<std::size_t>(q)); }
    QuditId qudit_at(SiteId s) const { return occupant_.at(static_cast<std::size_t>(s)); }
    bool is_placed(QuditId q) const { return site_of(q) >= 0; }
    bool is_total() const;

    std::size_t num_qudits() const { return phi_.size(); }
    std::size_t num_sites() const { return occupant_.size(); }
    const std::vector<SiteId>& phi() const { return phi_; }

    friend bool operator==(const Mapping&, const Mapping&) = default;

private:
    std::vector<SiteId> phi_;
    std::vector<QuditId> occupant_;
};

struct CircuitMeta {
    std::string name;
    int io_radix = 2;
    int radix = 0;
    int controls = 0;
    int ancilla = 0;
    /// Qubit Toffolis expanded by decomposition; used by the gate-count cost model.
    int qubit_toffolis = 0;
    /// Qudit Toffolis expanded by decomposition.
    int qudit_toffolis = 0;
    /// Grid extents for routed circuits (0 when unrouted).
    int grid_rows = 0;
    int grid_cols = 0;

    friend bool operator==(const CircuitMeta&, const CircuitMeta&) = default;
};

class Circuit {
public:
    Circuit() = default;
    explicit Circuit(std::string name);

    QuditId add_qudit(int dim, Role role = Role::Plain);

    /// Appends after validating against the registry; throws ValidationError
    /// naming the index the op would receive.
    void append(GateApp op);
    void append(std::span<const GateApp> ops);

    std::span<const QuditSpec> qudits() const { return qudits_; }
    const QuditSpec& qudit(QuditId q) const;
    int dim(QuditId q) const { return qudit(q).dim; }
    std::size_t num_qudits() const { return qudits_.size(); }

    std::span<const GateApp> ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }
    bool empty() const { return ops_.empty(); }

    CircuitMeta& meta() { return meta_; }
    const CircuitMeta& meta() const { return meta_; }

    bool is_routed() const { return initial_.has_value(); }
    const std::optional<Mapping>& initial_mapping() const { return initial_; }
    const std::optional<Mapping>& final_mapping() const { return final_; }
    void set_mappings(Mapping initial, Mapping final);

    /// Same registry and metadata, no ops.
    Circuit empty_copy() const;

    /// Re-runs every check; useful after hand-assembling a circuit.
    void validate() const;

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    void check(const GateApp& op, long index) const;

    std::vector<QuditSpec> qudits_;
    std::vector<GateApp> ops_;
    CircuitMeta meta_;
    std::optional<Mapping> initial_;
    std::optional<Mapping> final_;
};

/// Reversed op order with each gate inverted; run(c) then run(inverse(c)) is
/// the identity.
Circuit inverse(const Circuit& c);
GateApp inverse(const GateApp& op, const Circuit& c);

// ---------------------------------------------------------------------------
// Occupied levels

/// Occupied dimension (1 + highest reachable basis index, never below 2) of
/// every operand of every op, computed by forward data flow from all-binary
/// inputs.
struct OccupancyTrace {
    /// during[op][operand]: dimension the gate touches (max of before/after).
    std::vector<std::vector<int>> during;
    /// after[op][operand]: dimension right after the op.
    std::vector<std::vector<int>> after;
    /// Per-qudit dimension at the end of the circuit.
    std::vector<int> final_dims;
};

OccupancyTrace occupied_levels(const Circuit& c);

// ---------------------------------------------------------------------------
// Dependency graph

class TimingTable;

struct DepGraph {
    std::vector<double> duration;
    /// Arcs between consecutive users of a qudit (or site, once routed).
    std::vector<std::pair<int, int>> edges;

    std::size_t num_nodes() const { return duration.size(); }
    /// Longest path with node weights; 0 for an empty graph.
    double longest_path() const;
};

DepGraph build_dep_graph(const Circuit& c, const TimingTable& t, const OccupancyTrace& levels);

/// Same arcs as build_dep_graph with caller-supplied node weights.
DepGraph build_weighted_dep_graph(const Circuit& c, std::vector<double> weights);

/// Unit-weight dependency graph (duration 1 per op).
DepGraph build_unit_dep_graph(const Circuit& c);

/// Layers on the critical path; SWAPs count as one layer.
int depth(const Circuit& c);

}  // namespace iqc
