#include "iqc/gates.hpp"

#include "iqc/bench.hpp"
#include "iqc/swapsynth.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace iqc {

bool controls_match(const GateApp& op, std::span<const int> state) {
    return std::all_of(op.controls.begin(), op.controls.end(), [&](const Control& c) {
        return state[static_cast<std::size_t>(c.qudit)] == c.value;
    });
}

void apply_classical(const GateApp& op, std::span<int> state, std::span<const int> dims) {
    const auto digit = [&](QuditId q) -> int& { return state[static_cast<std::size_t>(q)]; };
    const auto dim = [&](QuditId q) { return dims[static_cast<std::size_t>(q)]; };
    for (QuditId q : op.operands()) {
        if (q == kNoQudit) continue;
        if (digit(q) < 0 || digit(q) >= dim(q)) {
            throw DigitError("qudit " + std::to_string(q) + " holds " + std::to_string(digit(q)) +
                             " outside dimension " + std::to_string(dim(q)));
        }
    }
    if (!is_permutation(op.kind)) {
        throw std::logic_error(std::string(to_string(op.kind)) + " is not a basis permutation");
    }
    if (op.kind == GateKind::Swap) {
        const QuditId a = op.targets[0];
        const QuditId b = op.targets[1];
        if (a == kNoQudit || b == kNoQudit) return;  // state moves with the site
        if (digit(a) >= dim(b) || digit(b) >= dim(a)) {
            throw DigitError("swap moves a level that does not fit between qudits " + std::to_string(a) + " and " +
                             std::to_string(b));
        }
        std::swap(digit(a), digit(b));
        return;
    }
    if (!controls_match(op, state)) return;
    const QuditId t = op.target();
    digit(t) = apply_base(op, digit(t), dim(t));
}

// ---------------------------------------------------------------------------
// Qubit Toffoli

std::vector<GateApp> decompose_qubit_toffoli(const GateApp& app, const Circuit& c) {
    if ((app.kind != GateKind::MultiControlledShift && app.kind != GateKind::CnX) || app.controls.size() != 2 ||
        app.targets.size() != 1) {
        throw DecompositionError("qubit Toffoli needs exactly two controls and one target");
    }
    for (QuditId q : app.operands()) {
        if (c.dim(q) != 2) throw DecompositionError("qubit Toffoli on non-qubit operand " + std::to_string(q));
    }
    if (app.kind == GateKind::MultiControlledShift && app.k == 0) return {};

    const QuditId a = app.controls[0].qudit;
    const QuditId b = app.controls[1].qudit;
    const QuditId t = app.target();
    std::vector<GateApp> pre;
    for (const auto& ctl : app.controls) {
        if (ctl.value == 0) pre.push_back(GateApp::flip(ctl.qudit, 0, 1));
    }
    const auto cx = [](QuditId ctl, QuditId tgt) { return GateApp::cflip(ctl, 1, tgt, 0, 1); };

    std::vector<GateApp> out = pre;
    out.insert(out.end(), {
                              GateApp::hadamard(t),
                              cx(b, t),
                              GateApp::tdg(t),
                              cx(a, t),
                              GateApp::t_gate(t),
                              cx(b, t),
                              GateApp::tdg(t),
                              cx(a, t),
                              GateApp::t_gate(b),
                              GateApp::t_gate(t),
                              GateApp::hadamard(t),
                              cx(a, b),
                              GateApp::t_gate(a),
                              GateApp::tdg(b),
                              cx(a, b),
                          });
    out.insert(out.end(), pre.rbegin(), pre.rend());
    return out;
}

// ---------------------------------------------------------------------------
// Qudit Toffoli

namespace {

using Cycle = std::array<int, 3>;  // i -> j -> l -> i

// Splits an even permutation into 3-cycles; applying them in order yields perm.
std::vector<Cycle> three_cycles(std::vector<int> perm) {
    const int d = static_cast<int>(perm.size());
    std::vector<Cycle> out;
    for (;;) {
        int x = 0;
        while (x < d && perm[static_cast<std::size_t>(x)] == x) ++x;
        if (x == d) return out;
        const int y = perm[static_cast<std::size_t>(x)];
        int z = perm[static_cast<std::size_t>(y)];
        if (z == x) {
            z = -1;
            for (int w = 0; w < d; ++w) {
                if (w != x && w != y && perm[static_cast<std::size_t>(w)] != w) {
                    z = w;
                    break;
                }
            }
            if (z < 0) throw DecompositionError("odd target permutation has no 3-cycle factorization");
        }
        const Cycle tau{x, y, z};
        out.push_back(tau);
        // perm <- perm . tau^-1
        std::vector<int> next(perm.size());
        for (int v = 0; v < d; ++v) {
            int pre = v;
            if (v == y) pre = x;
            else if (v == z) pre = y;
            else if (v == x) pre = z;
            next[static_cast<std::size_t>(v)] = perm[static_cast<std::size_t>(pre)];
        }
        perm = std::move(next);
    }
}

}  // namespace

std::vector<GateApp> decompose_qudit_toffoli(const GateApp& app, const Circuit& c) {
    if ((app.kind != GateKind::MultiControlledShift && app.kind != GateKind::CnX) || app.controls.size() != 2 ||
        app.targets.size() != 1) {
        throw DecompositionError("qudit Toffoli needs exactly two controls and one target");
    }
    Control ca = app.controls[0];
    Control cb = app.controls[1];
    if (c.dim(cb.qudit) < 3) std::swap(ca, cb);
    if (c.dim(cb.qudit) < 3) throw DecompositionError("qudit Toffoli needs a control of dimension >= 3");
    const QuditId a = ca.qudit;
    const QuditId b = cb.qudit;
    const QuditId t = app.target();
    const int dt = c.dim(t);

    std::vector<int> perm(static_cast<std::size_t>(dt));
    for (int v = 0; v < dt; ++v) perm[static_cast<std::size_t>(v)] = apply_base(app, v, dt);
    if (dt < 3 && perm[0] != 0) throw DecompositionError("qudit Toffoli needs a target of dimension >= 3");

    // Spare levels on b: the two smallest besides its control value.
    std::array<int, 2> spare{};
    for (int v = 0, n = 0; n < 2; ++v) {
        if (v != cb.value) spare[static_cast<std::size_t>(n++)] = v;
    }
    const int f = spare[0];
    const int e = spare[1];

    std::vector<GateApp> out;
    for (const auto& [i, j, l] : three_cycles(std::move(perm))) {
        const GateApp b_fe = GateApp::flip(b, f, e);
        const GateApp a_b = GateApp::cflip(a, ca.value, b, f, cb.value);
        const GateApp t_il = GateApp::flip(t, i, l);
        const GateApp a_t = GateApp::cflip(a, ca.value, t, i, j);
        const GateApp b_t = GateApp::cflip(b, e, t, i, j);
        out.insert(out.end(), {a_t, b_fe, a_b, b_fe, t_il, b_t, t_il, a_t, t_il, b_t, t_il, b_fe, a_b, b_fe});
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void expand(const GateApp& op, const Circuit& c, Circuit& out) {
    switch (op.kind) {
        case GateKind::Swap: {
            const QuditId a = op.targets[0];
            const QuditId b = op.targets[1];
            if (c.dim(a) != c.dim(b)) {
                throw DecompositionError("swap macro between qudits " + std::to_string(a) + " and " +
                                         std::to_string(b) + " of different declared dimensions");
            }
            out.append(synthesize_swap(c.dim(a), c.dim(b), {a, b}).gates);
            return;
        }
        case GateKind::MultiControlledShift:
        case GateKind::CnX: {
            if (op.kind == GateKind::CnX && op.controls.size() == 1) {
                out.append(GateApp::cflip(op.controls[0].qudit, op.controls[0].value, op.target(), 0, 1));
                return;
            }
            std::vector<QuditId> ctl_ids;
            int min_ctl_dim = kMaxDim;
            for (const auto& ctl : op.controls) {
                ctl_ids.push_back(ctl.qudit);
                min_ctl_dim = std::min(min_ctl_dim, c.dim(ctl.qudit));
            }
            const bool all_qubits = std::all_of(ctl_ids.begin(), ctl_ids.end(), [&](QuditId q) {
                return c.dim(q) == 2;
            }) && c.dim(op.target()) == 2;
            if (op.controls.size() == 2 && all_qubits) {
                out.append(decompose_qubit_toffoli(op, c));
                ++out.meta().qubit_toffolis;
                return;
            }
            const bool uniform = std::all_of(ctl_ids.begin(), ctl_ids.end(), [&](QuditId q) {
                return c.dim(q) == min_ctl_dim;
            });
            if (op.kind == GateKind::CnX && min_ctl_dim >= 3 && uniform) {
                for (const auto& g : cnx_tree_ops(ctl_ids, op.target(), min_ctl_dim)) expand(g, c, out);
                return;
            }
            if (op.controls.size() == 2) {
                out.append(decompose_qudit_toffoli(op, c));
                ++out.meta().qudit_toffolis;
                return;
            }
            throw DecompositionError("no decomposition for " + std::string(to_string(op.kind)) + " with " +
                                     std::to_string(op.controls.size()) + " controls on these dimensions");
        }
        default:
            out.append(op);
    }
}

}  // namespace

Circuit decompose_all(const Circuit& c) {
    Circuit out = c.empty_copy();
    for (const auto& op : c.ops()) {
        if (!op.sites.empty() && op.kind == GateKind::Swap) {
            out.append(op);  // routed SWAPs stay atomic
            continue;
        }
        expand(op, c, out);
    }
    return out;
}

bool is_native(const Circuit& c) {
    return std::all_of(c.ops().begin(), c.ops().end(), [](const GateApp& op) {
        return op.arity() <= 2 && !(is_macro(op.kind) && op.kind != GateKind::Swap) &&
               !(op.kind == GateKind::Swap && op.sites.empty());
    });
}

}  // namespace iqc
