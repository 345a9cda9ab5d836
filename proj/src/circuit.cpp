#include "iqc/circuit.hpp"

#include "iqc/timing.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace iqc {

namespace {

struct KindName {
    GateKind kind;
    std::string_view name;
};

constexpr std::array kKindNames{
    KindName{GateKind::Shift, "x+k"},
    KindName{GateKind::Flip, "flip"},
    KindName{GateKind::ControlledShift, "cx+k"},
    KindName{GateKind::ControlledFlip, "cflip"},
    KindName{GateKind::MultiControlledShift, "ccx+k"},
    KindName{GateKind::Swap, "swap"},
    KindName{GateKind::CnX, "cnx"},
    KindName{GateKind::Hadamard, "h"},
    KindName{GateKind::T, "t"},
    KindName{GateKind::Tdg, "tdg"},
};

std::string op_prefix(long index) {
    return index < 0 ? std::string("circuit: ") : "op " + std::to_string(index) + ": ";
}

}  // namespace

std::string_view to_string(Role role) {
    switch (role) {
        case Role::Control: return "control";
        case Role::Target: return "target";
        case Role::Ancilla: return "ancilla";
        case Role::Plain: return "plain";
    }
    return "plain";
}

Role role_from_string(std::string_view s) {
    if (s == "control") return Role::Control;
    if (s == "target") return Role::Target;
    if (s == "ancilla") return Role::Ancilla;
    if (s == "plain") return Role::Plain;
    throw std::invalid_argument("unknown qudit role '" + std::string(s) + "'");
}

std::string_view to_string(GateKind kind) {
    for (const auto& kn : kKindNames) {
        if (kn.kind == kind) return kn.name;
    }
    return "?";
}

std::optional<GateKind> kind_from_string(std::string_view s) {
    for (const auto& kn : kKindNames) {
        if (kn.name == s) return kn.kind;
    }
    return std::nullopt;
}

bool is_permutation(GateKind kind) {
    return kind != GateKind::Hadamard && kind != GateKind::T && kind != GateKind::Tdg;
}

bool is_macro(GateKind kind) {
    return kind == GateKind::MultiControlledShift || kind == GateKind::Swap ||
           kind == GateKind::CnX;
}

std::vector<QuditId> GateApp::operands() const {
    std::vector<QuditId> out;
    out.reserve(arity());
    for (const auto& c : controls) out.push_back(c.qudit);
    out.insert(out.end(), targets.begin(), targets.end());
    return out;
}

GateApp GateApp::shift(QuditId t, int k) {
    GateApp g;
    g.kind = GateKind::Shift;
    g.targets = {t};
    g.k = k;
    return g;
}

GateApp GateApp::flip(QuditId t, int i, int j) {
    GateApp g;
    g.kind = GateKind::Flip;
    g.targets = {t};
    g.i = i;
    g.j = j;
    return g;
}

GateApp GateApp::cshift(QuditId c, int value, QuditId t, int k) {
    GateApp g = shift(t, k);
    g.kind = GateKind::ControlledShift;
    g.controls = {{c, value}};
    return g;
}

GateApp GateApp::cflip(QuditId c, int value, QuditId t, int i, int j) {
    GateApp g = flip(t, i, j);
    g.kind = GateKind::ControlledFlip;
    g.controls = {{c, value}};
    return g;
}

GateApp GateApp::ccshift(Control c0, Control c1, QuditId t, int k) {
    GateApp g = shift(t, k);
    g.kind = GateKind::MultiControlledShift;
    g.controls = {c0, c1};
    return g;
}

GateApp GateApp::swap(QuditId a, QuditId b) {
    GateApp g;
    g.kind = GateKind::Swap;
    g.targets = {a, b};
    return g;
}

GateApp GateApp::cnx(std::vector<QuditId> controls, QuditId t) {
    GateApp g;
    g.kind = GateKind::CnX;
    for (QuditId c : controls) g.controls.push_back({c, 1});
    g.targets = {t};
    g.i = 0;
    g.j = 1;
    return g;
}

GateApp GateApp::hadamard(QuditId t) {
    GateApp g;
    g.kind = GateKind::Hadamard;
    g.targets = {t};
    return g;
}

GateApp GateApp::t_gate(QuditId t) {
    GateApp g = hadamard(t);
    g.kind = GateKind::T;
    return g;
}

GateApp GateApp::tdg(QuditId t) {
    GateApp g = hadamard(t);
    g.kind = GateKind::Tdg;
    return g;
}

int apply_base(const GateApp& op, int value, int dim) {
    switch (op.kind) {
        case GateKind::Shift:
        case GateKind::ControlledShift:
        case GateKind::MultiControlledShift:
            return (value + op.k) % dim;
        case GateKind::Flip:
        case GateKind::ControlledFlip:
        case GateKind::CnX:
            if (value == op.i) return op.j;
            if (value == op.j) return op.i;
            return value;
        default:
            throw std::logic_error(std::string(to_string(op.kind)) + " is not a single-target permutation");
    }
}

ValidationError::ValidationError(long op_index, const std::string& what)
    : std::runtime_error(op_prefix(op_index) + what), op_index_(op_index) {}

// ---------------------------------------------------------------------------

Mapping::Mapping(std::size_t num_qudits, std::size_t num_sites)
    : phi_(num_qudits, -1), occupant_(num_sites, kNoQudit) {
    if (num_qudits > num_sites) {
        throw std::invalid_argument("mapping: more qudits than sites");
    }
}

void Mapping::assign(QuditId q, SiteId s) {
    if (q < 0 || static_cast<std::size_t>(q) >= phi_.size()) {
        throw std::out_of_range("mapping: qudit out of range");
    }
    if (s < 0 || static_cast<std::size_t>(s) >= occupant_.size()) {
        throw std::out_of_range("mapping: site out of range");
    }
    if (occupant_[static_cast<std::size_t>(s)] != kNoQudit) {
        throw std::invalid_argument("mapping: site " + std::to_string(s) + " already occupied");
    }
    if (phi_[static_cast<std::size_t>(q)] >= 0) {
        occupant_[static_cast<std::size_t>(phi_[static_cast<std::size_t>(q)])] = kNoQudit;
    }
    phi_[static_cast<std::size_t>(q)] = s;
    occupant_[static_cast<std::size_t>(s)] = q;
}

void Mapping::swap_sites(SiteId a, SiteId b) {
    auto& qa = occupant_.at(static_cast<std::size_t>(a));
    auto& qb = occupant_.at(static_cast<std::size_t>(b));
    std::swap(qa, qb);
    if (qa != kNoQudit) phi_[static_cast<std::size_t>(qa)] = a;
    if (qb != kNoQudit) phi_[static_cast<std::size_t>(qb)] = b;
}

bool Mapping::is_total() const {
    return std::all_of(phi_.begin(), phi_.end(), [](SiteId s) { return s >= 0; });
}

// ---------------------------------------------------------------------------

Circuit::Circuit(std::string name) { meta_.name = std::move(name); }

QuditId Circuit::add_qudit(int dim, Role role) {
    if (dim < kMinDim || dim > kMaxDim) {
        throw ValidationError(-1, "qudit dimension " + std::to_string(dim) + " outside [2, 7]");
    }
    const auto id = static_cast<QuditId>(qudits_.size());
    qudits_.push_back({id, dim, role});
    return id;
}

const QuditSpec& Circuit::qudit(QuditId q) const {
    if (q < 0 || static_cast<std::size_t>(q) >= qudits_.size()) {
        throw std::out_of_range("no qudit " + std::to_string(q));
    }
    return qudits_[static_cast<std::size_t>(q)];
}

void Circuit::check(const GateApp& op, long index) const {
    const auto fail = [index](const std::string& msg) { throw ValidationError(index, msg); };
    const std::string name(to_string(op.kind));

    std::size_t want_controls_min = 0;
    std::size_t want_controls_max = 0;
    std::size_t want_targets = 1;
    switch (op.kind) {
        case GateKind::Shift:
        case GateKind::Flip:
        case GateKind::Hadamard:
        case GateKind::T:
        case GateKind::Tdg:
            break;
        case GateKind::ControlledShift:
        case GateKind::ControlledFlip:
            want_controls_min = want_controls_max = 1;
            break;
        case GateKind::MultiControlledShift:
            want_controls_min = 2;
            want_controls_max = static_cast<std::size_t>(-1);
            break;
        case GateKind::CnX:
            want_controls_min = 1;
            want_controls_max = static_cast<std::size_t>(-1);
            break;
        case GateKind::Swap:
            want_targets = 2;
            break;
    }
    if (op.controls.size() < want_controls_min || op.controls.size() > want_controls_max) {
        fail(name + " takes a different number of controls (got " +
             std::to_string(op.controls.size()) + ")");
    }
    if (op.targets.size() != want_targets) {
        fail(name + " expects " + std::to_string(want_targets) + " target(s)");
    }
    if (!op.sites.empty() && op.sites.size() != op.arity()) {
        fail("site annotation count does not match operand count");
    }

    std::vector<QuditId> seen;
    for (QuditId q : op.operands()) {
        if (q == kNoQudit) {
            if (op.kind != GateKind::Swap || op.sites.empty()) {
                fail("empty operand is only allowed in routed swaps");
            }
            continue;
        }
        if (q < 0 || static_cast<std::size_t>(q) >= qudits_.size()) {
            fail("dangling qudit id " + std::to_string(q));
        }
        if (std::find(seen.begin(), seen.end(), q) != seen.end()) {
            fail("qudit " + std::to_string(q) + " used twice");
        }
        seen.push_back(q);
    }
    if (op.kind == GateKind::Swap && seen.empty()) fail("swap between two empty sites");
    for (const auto& c : op.controls) {
        if (c.value < 0 || c.value >= dim(c.qudit)) {
            fail("control value " + std::to_string(c.value) + " out of range for qudit " +
                 std::to_string(c.qudit));
        }
    }
    std::vector<SiteId> sites = op.sites;
    std::sort(sites.begin(), sites.end());
    if (std::adjacent_find(sites.begin(), sites.end()) != sites.end()) fail("repeated site");
    if (!sites.empty() && sites.front() < 0) fail("negative site");

    if (op.kind == GateKind::Swap) return;
    const int d = dim(op.target());
    switch (op.kind) {
        case GateKind::Shift:
        case GateKind::ControlledShift:
        case GateKind::MultiControlledShift:
            if (op.k < 0 || op.k >= d) fail("shift amount " + std::to_string(op.k) + " outside [0, dim)");
            break;
        case GateKind::Flip:
        case GateKind::ControlledFlip:
        case GateKind::CnX:
            if (op.i == op.j || op.i < 0 || op.j < 0 || op.i >= d || op.j >= d) {
                fail("flip levels " + std::to_string(op.i) + "," + std::to_string(op.j) +
                     " invalid for dimension " + std::to_string(d));
            }
            break;
        case GateKind::Hadamard:
        case GateKind::T:
        case GateKind::Tdg:
            if (d != 2) fail(name + " requires a qubit target");
            break;
        case GateKind::Swap:
            break;
    }
}

void Circuit::append(GateApp op) {
    check(op, static_cast<long>(ops_.size()));
    ops_.push_back(std::move(op));
}

void Circuit::append(std::span<const GateApp> ops) {
    for (const auto& op : ops) append(op);
}

void Circuit::set_mappings(Mapping initial, Mapping final) {
    if (initial.num_qudits() != qudits_.size() || final.num_qudits() != qudits_.size()) {
        throw ValidationError(-1, "mapping size does not match qudit registry");
    }
    initial_ = std::move(initial);
    final_ = std::move(final);
}

Circuit Circuit::empty_copy() const {
    Circuit out;
    out.qudits_ = qudits_;
    out.meta_ = meta_;
    return out;
}

void Circuit::validate() const {
    for (std::size_t i = 0; i < qudits_.size(); ++i) {
        if (qudits_[i].id != static_cast<QuditId>(i)) {
            throw ValidationError(-1, "qudit ids must be dense and ordered");
        }
    }
    for (std::size_t i = 0; i < ops_.size(); ++i) check(ops_[i], static_cast<long>(i));
}

GateApp inverse(const GateApp& op, const Circuit& c) {
    GateApp inv = op;
    switch (op.kind) {
        case GateKind::Shift:
        case GateKind::ControlledShift:
        case GateKind::MultiControlledShift: {
            const int d = c.dim(op.target());
            inv.k = (d - op.k) % d;
            break;
        }
        case GateKind::T: inv.kind = GateKind::Tdg; break;
        case GateKind::Tdg: inv.kind = GateKind::T; break;
        default: break;
    }
    return inv;
}

Circuit inverse(const Circuit& c) {
    Circuit out = c.empty_copy();
    for (auto it = c.ops().rbegin(); it != c.ops().rend(); ++it) out.append(inverse(*it, c));
    return out;
}

// ---------------------------------------------------------------------------

double DepGraph::longest_path() const {
    // Edges always point forward in op order, so op order is topological.
    std::vector<double> finish(duration.size(), 0.0);
    std::vector<std::vector<int>> preds(duration.size());
    for (const auto& [from, to] : edges) preds[static_cast<std::size_t>(to)].push_back(from);
    double best = 0.0;
    for (std::size_t n = 0; n < duration.size(); ++n) {
        double start = 0.0;
        for (int p : preds[n]) start = std::max(start, finish[static_cast<std::size_t>(p)]);
        finish[n] = start + duration[n];
        best = std::max(best, finish[n]);
    }
    return best;
}

DepGraph build_weighted_dep_graph(const Circuit& c, std::vector<double> weights) {
    DepGraph g;
    g.duration = std::move(weights);
    // Routed circuits are tracked by site so SWAPs into empty sites still order.
    std::vector<int> last_by_qudit(c.num_qudits(), -1);
    std::vector<int> last_by_site;
    const auto ops = c.ops();
    for (std::size_t n = 0; n < ops.size(); ++n) {
        const auto& op = ops[n];
        if (!op.sites.empty()) {
            for (SiteId s : op.sites) {
                if (static_cast<std::size_t>(s) >= last_by_site.size()) {
                    last_by_site.resize(static_cast<std::size_t>(s) + 1, -1);
                }
                int& last = last_by_site[static_cast<std::size_t>(s)];
                if (last >= 0) g.edges.emplace_back(last, static_cast<int>(n));
                last = static_cast<int>(n);
            }
        } else {
            for (QuditId q : op.operands()) {
                int& last = last_by_qudit[static_cast<std::size_t>(q)];
                if (last >= 0) g.edges.emplace_back(last, static_cast<int>(n));
                last = static_cast<int>(n);
            }
        }
    }
    return g;
}

DepGraph build_unit_dep_graph(const Circuit& c) {
    return build_weighted_dep_graph(c, std::vector<double>(c.size(), 1.0));
}

DepGraph build_dep_graph(const Circuit& c, const TimingTable& t, const OccupancyTrace& levels) {
    if (levels.during.size() != c.size()) {
        throw std::invalid_argument("occupancy trace does not match circuit");
    }
    std::vector<double> weights;
    weights.reserve(c.size());
    for (std::size_t n = 0; n < c.size(); ++n) {
        weights.push_back(gate_duration(c.ops()[n], levels.during[n], t));
    }
    return build_weighted_dep_graph(c, std::move(weights));
}

int depth(const Circuit& c) {
    return static_cast<int>(build_unit_dep_graph(c).longest_path());
}

}  // namespace iqc
