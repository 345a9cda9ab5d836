// Occupied-level tracking.
//
// Each qudit's value is a function of the binary circuit inputs, stored as a
// hash-consed multi-terminal decision diagram with one variable per qudit.
// The occupied dimension is 1 + the largest terminal reachable from the
// qudit's root. Exact for permutation gates; a qudit touched by a Hadamard
// (or whose diagram grows past the node cap) becomes Unknown and is priced at
// its declared dimension from then on.

#include "iqc/circuit.hpp"

#include <algorithm>
#include <unordered_map>

namespace iqc {

namespace {

constexpr int kUnknown = -1;
constexpr int kTerminalCount = kMaxDim + 1;  // values 0..kMaxDim-1, then Unknown
constexpr int kUnknownNode = kMaxDim;
constexpr std::size_t kNodeCap = 1u << 21;

struct NodeCapHit {};

struct Node {
    int var;  // -1 for terminals
    int lo;
    int hi;
    int max_value;  // kUnknown if an Unknown terminal is reachable
};

struct NodeKey {
    int var, lo, hi;
    bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const noexcept {
        std::size_t h = static_cast<std::size_t>(k.var) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::size_t>(k.lo) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
        h ^= static_cast<std::size_t>(k.hi) + 0x94D049BB133111EBull + (h << 6) + (h >> 2);
        return h;
    }
};

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = v.size();
        for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return h;
    }
};

class Manager {
public:
    Manager() {
        for (int v = 0; v < kTerminalCount; ++v) {
            nodes_.push_back({-1, -1, -1, v == kUnknownNode ? kUnknown : v});
        }
    }

    static int terminal(int value) { return value == kUnknown ? kUnknownNode : value; }
    bool is_terminal(int n) const { return nodes_[static_cast<std::size_t>(n)].var < 0; }
    int terminal_value(int n) const { return nodes_[static_cast<std::size_t>(n)].max_value; }
    const Node& node(int n) const { return nodes_[static_cast<std::size_t>(n)]; }

    int make(int var, int lo, int hi) {
        if (lo == hi) return lo;
        const NodeKey key{var, lo, hi};
        if (auto it = unique_.find(key); it != unique_.end()) return it->second;
        if (nodes_.size() >= kNodeCap) throw NodeCapHit{};
        const Node& l = node(lo);
        const Node& h = node(hi);
        const int mv = (l.max_value == kUnknown || h.max_value == kUnknown) ? kUnknown
                                                                             : std::max(l.max_value, h.max_value);
        const int id = static_cast<int>(nodes_.size());
        nodes_.push_back({var, lo, hi, mv});
        unique_.emplace(key, id);
        return id;
    }

    int max_value(int n) const { return node(n).max_value; }

private:
    std::vector<Node> nodes_;
    std::unordered_map<NodeKey, int, NodeKeyHash> unique_;
};

// New target function for a controlled permutation:
// ITE(all controls equal their values, perm(target), target).
class GateApply {
public:
    GateApply(Manager& m, std::vector<int> control_values, std::vector<int> perm)
        : m_(m), values_(std::move(control_values)), perm_(std::move(perm)) {}

    int run(std::vector<int> fs) { return rec(fs); }

private:
    int rec(const std::vector<int>& fs) {
        const std::size_t nc = values_.size();
        const int tgt = fs[nc];
        bool all_terminal = true;
        for (std::size_t i = 0; i < nc; ++i) {
            if (m_.is_terminal(fs[i])) {
                const int v = m_.terminal_value(fs[i]);
                if (v != kUnknown && v != values_[i]) return tgt;  // control cannot fire
            } else {
                all_terminal = false;
            }
        }
        if (all_terminal && m_.is_terminal(tgt)) return leaf(fs);
        if (auto it = memo_.find(fs); it != memo_.end()) return it->second;

        int top = -1;
        for (int f : fs) {
            if (!m_.is_terminal(f)) {
                const int var = m_.node(f).var;
                if (top < 0 || var < top) top = var;
            }
        }
        std::vector<int> lo(fs.size()), hi(fs.size());
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const int f = fs[i];
            if (!m_.is_terminal(f) && m_.node(f).var == top) {
                lo[i] = m_.node(f).lo;
                hi[i] = m_.node(f).hi;
            } else {
                lo[i] = hi[i] = f;
            }
        }
        const int r = m_.make(top, rec(lo), rec(hi));
        memo_.emplace(fs, r);
        return r;
    }

    int leaf(const std::vector<int>& fs) const {
        const std::size_t nc = values_.size();
        const int t = m_.terminal_value(fs[nc]);
        bool maybe = false;
        for (std::size_t i = 0; i < nc; ++i) {
            if (m_.terminal_value(fs[i]) == kUnknown) maybe = true;
        }
        if (t == kUnknown) return Manager::terminal(kUnknown);
        const int p = t < static_cast<int>(perm_.size()) ? perm_[static_cast<std::size_t>(t)] : t;
        if (maybe && p != t) return Manager::terminal(kUnknown);
        return Manager::terminal(p);
    }

    Manager& m_;
    std::vector<int> values_;
    std::vector<int> perm_;
    std::unordered_map<std::vector<int>, int, VecHash> memo_;
};

}  // namespace

OccupancyTrace occupied_levels(const Circuit& c) {
    const std::size_t n = c.num_qudits();
    Manager m;
    std::vector<int> f(n);
    for (std::size_t q = 0; q < n; ++q) {
        f[q] = m.make(static_cast<int>(q), Manager::terminal(0), Manager::terminal(1));
    }
    const auto dim_of = [&](QuditId q) {
        if (q == kNoQudit) return kMinDim;
        const int mv = m.max_value(f[static_cast<std::size_t>(q)]);
        const int d = mv == kUnknown ? c.dim(q) : mv + 1;
        return std::max(d, kMinDim);
    };

    OccupancyTrace trace;
    trace.during.reserve(c.size());
    trace.after.reserve(c.size());
    for (const auto& op : c.ops()) {
        const auto operands = op.operands();
        std::vector<int> before;
        before.reserve(operands.size());
        for (QuditId q : operands) before.push_back(dim_of(q));

        switch (op.kind) {
            case GateKind::Swap:
                if (op.sites.empty()) {
                    std::swap(f[static_cast<std::size_t>(op.targets[0])],
                              f[static_cast<std::size_t>(op.targets[1])]);
                }
                break;
            case GateKind::T:
            case GateKind::Tdg:
                break;
            case GateKind::Hadamard:
                f[static_cast<std::size_t>(op.target())] = Manager::terminal(kUnknown);
                break;
            default: {
                const QuditId t = op.target();
                const int d = c.dim(t);
                std::vector<int> perm(static_cast<std::size_t>(d));
                for (int v = 0; v < d; ++v) perm[static_cast<std::size_t>(v)] = apply_base(op, v, d);
                std::vector<int> values;
                std::vector<int> fs;
                for (const auto& ctl : op.controls) {
                    values.push_back(ctl.value);
                    fs.push_back(f[static_cast<std::size_t>(ctl.qudit)]);
                }
                fs.push_back(f[static_cast<std::size_t>(t)]);
                try {
                    f[static_cast<std::size_t>(t)] = GateApply(m, std::move(values), std::move(perm)).run(fs);
                } catch (const NodeCapHit&) {
                    f[static_cast<std::size_t>(t)] = Manager::terminal(kUnknown);
                }
                break;
            }
        }

        std::vector<int> after;
        after.reserve(operands.size());
        for (QuditId q : operands) after.push_back(dim_of(q));
        std::vector<int> during(operands.size());
        for (std::size_t i = 0; i < operands.size(); ++i) during[i] = std::max(before[i], after[i]);
        trace.during.push_back(std::move(during));
        trace.after.push_back(std::move(after));
    }
    trace.final_dims.reserve(n);
    for (std::size_t q = 0; q < n; ++q) trace.final_dims.push_back(dim_of(static_cast<QuditId>(q)));
    return trace;
}

}  // namespace iqc
