#include "iqc/bench.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace iqc {

namespace {

void require_controls(int n) {
    if (n < 2) throw std::invalid_argument("generalized Toffoli needs at least 2 controls");
}

std::string bench_name(int n, int radix) { return "cnx-r" + std::to_string(radix) + "-n" + std::to_string(n); }

// Heap-ordered tree over control slots 0..n-1; slot p has children
// k*p+1 .. k*p+k.
class ControlTree {
public:
    ControlTree(std::span<const QuditId> qudits, int radix)
        : q_(qudits.begin(), qudits.end()), radix_(radix), arity_(tree_arity(radix)),
          ready_(q_.size(), 0) {}

    std::vector<GateApp> build(QuditId target) {
        std::vector<GateApp> compute;
        emit(0, compute);
        std::vector<GateApp> out = compute;
        out.push_back(GateApp::cflip(q_[0], activation(0), target, 0, 1));
        for (auto it = compute.rbegin(); it != compute.rend(); ++it) {
            GateApp inv = *it;
            inv.k = (radix_ - it->k) % radix_;
            out.push_back(std::move(inv));
        }
        return out;
    }

private:
    std::vector<int> children(int p) const {
        std::vector<int> out;
        const int n = static_cast<int>(q_.size());
        for (int c = arity_ * p + 1; c <= arity_ * p + arity_ && c < n; ++c) out.push_back(c);
        return out;
    }

    int activation(int p) const {
        const auto kids = children(p);
        if (kids.empty()) return 1;
        if (radix_ == 3) return 2;
        return 1 + static_cast<int>(kids.size());
    }

    void emit(int p, std::vector<GateApp>& out) {
        auto kids = children(p);
        if (kids.empty()) return;
        for (int c : kids) emit(c, out);
        const auto slot = [](int x) { return static_cast<std::size_t>(x); };
        if (radix_ == 3) {
            if (kids.size() == 2) {
                out.push_back(GateApp::ccshift({q_[slot(kids[0])], activation(kids[0])},
                                               {q_[slot(kids[1])], activation(kids[1])}, q_[slot(p)], 1));
            } else {
                out.push_back(GateApp::cshift(q_[slot(kids[0])], activation(kids[0]), q_[slot(p)], 1));
            }
            int r = 0;
            for (int c : kids) r = std::max(r, ready_[slot(c)]);
            ready_[slot(p)] = r + 1;
            return;
        }
        std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) { return ready_[slot(a)] < ready_[slot(b)]; });
        int t = 0;
        for (int c : kids) {
            out.push_back(GateApp::cshift(q_[slot(c)], activation(c), q_[slot(p)], 1));
            t = std::max(t, ready_[slot(c)]) + 1;
        }
        ready_[slot(p)] = t;
    }

    std::vector<QuditId> q_;
    int radix_;
    int arity_;
    std::vector<int> ready_;
};

Circuit tree_circuit(int n, int radix) {
    require_controls(n);
    Circuit c(bench_name(n, radix));
    std::vector<QuditId> controls;
    for (int i = 0; i < n; ++i) controls.push_back(c.add_qudit(radix, Role::Control));
    const QuditId target = c.add_qudit(2, Role::Target);
    c.append(cnx_tree_ops(controls, target, radix));
    c.meta().radix = radix;
    c.meta().controls = n;
    return c;
}

}  // namespace

int tree_arity(int radix) {
    if (radix < 3 || radix > kMaxDim) throw std::invalid_argument("tree radix must be in [3, 7]");
    return radix == 3 ? 2 : radix - 2;
}

std::vector<GateApp> cnx_tree_ops(std::span<const QuditId> controls, QuditId target, int radix) {
    if (controls.empty()) throw std::invalid_argument("control tree needs at least one control");
    return ControlTree(controls, radix).build(target);
}

Circuit gen_qubit_cnx(int n) {
    require_controls(n);
    Circuit c(bench_name(n, 2));
    std::vector<QuditId> layer;
    for (int i = 0; i < n; ++i) layer.push_back(c.add_qudit(2, Role::Control));
    const QuditId target = c.add_qudit(2, Role::Target);

    std::vector<GateApp> compute;
    while (layer.size() > 2) {
        std::vector<QuditId> next;
        for (std::size_t i = 0; i < layer.size(); i += 2) {
            if (i + 1 == layer.size()) {
                next.push_back(layer[i]);
                continue;
            }
            const QuditId anc = c.add_qudit(2, Role::Ancilla);
            compute.push_back(GateApp::ccshift({layer[i], 1}, {layer[i + 1], 1}, anc, 1));
            next.push_back(anc);
        }
        layer = std::move(next);
    }
    c.append(compute);
    c.append(GateApp::ccshift({layer[0], 1}, {layer[1], 1}, target, 1));
    for (auto it = compute.rbegin(); it != compute.rend(); ++it) c.append(*it);

    c.meta().radix = 2;
    c.meta().controls = n;
    c.meta().ancilla = static_cast<int>(c.num_qudits()) - n - 1;
    return c;
}

Circuit gen_qutrit_cnx(int n) { return tree_circuit(n, 3); }

Circuit gen_ququart_cnx(int n) { return gen_general_cnx(n, 4); }

Circuit gen_general_cnx(int n, int radix) {
    if (radix < 4 || radix > kMaxDim) throw std::invalid_argument("general tree radix must be in [4, 7]");
    return tree_circuit(n, radix);
}

Circuit gen_cnx(int n, int radix) {
    if (radix == 2) return gen_qubit_cnx(n);
    if (radix == 3) return gen_qutrit_cnx(n);
    return gen_general_cnx(n, radix);
}

}  // namespace iqc
