#pragma once

// Reference semantics written straight from the gate definitions, kept
// separate from the library's own interpreter so tests can cross-check it.

#include "iqc/circuit.hpp"

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

using iqc::GateApp;
using iqc::GateKind;

inline int base_perm(const GateApp& g, int v, int d) {
    switch (g.kind) {
        case GateKind::Shift:
        case GateKind::ControlledShift:
        case GateKind::MultiControlledShift:
            return (v + g.k) % d;
        case GateKind::Flip:
        case GateKind::ControlledFlip:
            return v == g.i ? g.j : v == g.j ? g.i : v;
        case GateKind::CnX:
            return v == 0 ? 1 : v == 1 ? 0 : v;
        default:
            throw std::logic_error("oracle: not a single-target permutation");
    }
}

/// Applies one permutation gate to a digit vector indexed by qudit id.
inline void step(const GateApp& g, std::vector<int>& s, const std::vector<int>& dims) {
    if (g.kind == GateKind::Swap) {
        if (g.targets[0] < 0 || g.targets[1] < 0) return;
        std::swap(s[g.targets[0]], s[g.targets[1]]);
        return;
    }
    for (const auto& c : g.controls) {
        if (s[c.qudit] != c.value) return;
    }
    const int t = g.targets[0];
    s[t] = base_perm(g, s[t], dims[t]);
}

inline std::vector<int> run(const iqc::Circuit& c, std::vector<int> s) {
    std::vector<int> dims;
    for (const auto& q : c.qudits()) dims.push_back(q.dim);
    for (const auto& g : c.ops()) step(g, s, dims);
    return s;
}

inline std::vector<int> run_ops(const std::vector<GateApp>& ops, std::vector<int> s, const std::vector<int>& dims) {
    for (const auto& g : ops) step(g, s, dims);
    return s;
}

/// Every digit vector with digit q below dims[q], qudit 0 slowest.
inline std::vector<std::vector<int>> all_states(const std::vector<int>& dims) {
    std::vector<std::vector<int>> out;
    std::vector<int> s(dims.size(), 0);
    for (;;) {
        out.push_back(s);
        int q = static_cast<int>(dims.size()) - 1;
        while (q >= 0 && ++s[q] == dims[q]) s[q--] = 0;
        if (q < 0) return out;
    }
}

/// Layer count by greedy as-soon-as-possible scheduling.
inline int asap_depth(const iqc::Circuit& c) {
    std::map<int, int> ready;
    int depth = 0;
    for (const auto& g : c.ops()) {
        std::vector<int> keys;
        if (!g.sites.empty()) {
            keys = g.sites;
        } else {
            for (const auto& ctl : g.controls) keys.push_back(ctl.qudit);
            keys.insert(keys.end(), g.targets.begin(), g.targets.end());
        }
        int layer = 0;
        for (int k : keys) layer = std::max(layer, ready[k]);
        ++layer;
        for (int k : keys) ready[k] = layer;
        depth = std::max(depth, layer);
    }
    return depth;
}

/// Dense state vector over qubits, qubit 0 most significant.
class QubitState {
public:
    QubitState(int n, std::uint32_t basis) : n_(n), amp_(std::size_t{1} << n) { amp_[basis] = 1.0; }

    void apply(const GateApp& g) {
        const double r = 1.0 / std::sqrt(2.0);
        const std::complex<double> w = std::polar(1.0, M_PI / 4);
        std::vector<std::complex<double>> next(amp_.size());
        for (std::size_t b = 0; b < amp_.size(); ++b) {
            if (amp_[b] == 0.0) continue;
            const int t = g.targets[0];
            const int bit = get(b, t);
            switch (g.kind) {
                case GateKind::Hadamard:
                    next[set(b, t, 0)] += r * amp_[b];
                    next[set(b, t, 1)] += (bit ? -r : r) * amp_[b];
                    break;
                case GateKind::T:
                    next[b] += (bit ? w : 1.0) * amp_[b];
                    break;
                case GateKind::Tdg:
                    next[b] += (bit ? std::conj(w) : 1.0) * amp_[b];
                    break;
                default: {
                    bool fire = true;
                    for (const auto& c : g.controls) fire = fire && get(b, c.qudit) == c.value;
                    next[fire ? set(b, t, base_perm(g, bit, 2)) : b] += amp_[b];
                }
            }
        }
        amp_ = std::move(next);
    }

    const std::vector<std::complex<double>>& amplitudes() const { return amp_; }

private:
    int get(std::size_t b, int q) const { return static_cast<int>((b >> (n_ - 1 - q)) & 1u); }
    std::size_t set(std::size_t b, int q, int v) const {
        const std::size_t m = std::size_t{1} << (n_ - 1 - q);
        return v ? (b | m) : (b & ~m);
    }

    int n_;
    std::vector<std::complex<double>> amp_;
};

}  // namespace oracle
