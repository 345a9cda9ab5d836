#include "iqc/sim.hpp"

#include "iqc/gates.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <thread>

namespace iqc {

SimError::SimError(long op_index, const std::string& what)
    : std::runtime_error(op_index < 0 ? what : "op " + std::to_string(op_index) + ": " + what),
      op_index_(op_index) {}

namespace {

using Amp = std::complex<double>;
constexpr double kEps = 1e-9;

struct Register {
    std::vector<int> digits;
    std::vector<int> dims;
};

// Rewrites an op to address register slots instead of virtual ids.
GateApp to_slots(const GateApp& op) {
    if (op.sites.empty()) return op;
    GateApp g = op;
    std::size_t k = 0;
    for (auto& ctl : g.controls) ctl.qudit = op.sites[k++];
    for (auto& t : g.targets) t = op.sites[k++];
    return g;
}

class Engine {
public:
    Engine(std::vector<int> digits, std::vector<int> dims, bool physical)
        : dims_(std::move(dims)), physical_(physical) {
        terms_.push_back({std::move(digits), Amp{1.0, 0.0}});
    }

    void apply(const GateApp& raw, long index) {
        const GateApp op = to_slots(raw);
        try {
            if (physical_ && op.kind == GateKind::Swap) {
                const auto a = static_cast<std::size_t>(op.targets[0]);
                const auto b = static_cast<std::size_t>(op.targets[1]);
                for (auto& [d, amp] : terms_) std::swap(d[a], d[b]);
                std::swap(dims_[a], dims_[b]);
                return;
            }
            if (is_permutation(op.kind)) {
                for (auto& [d, amp] : terms_) apply_classical(op, d, dims_);
                return;
            }
            apply_phase_gate(op);
        } catch (const DigitError& e) {
            throw SimError(index, std::string(to_string(raw.kind)) + ": " + e.what());
        }
    }

    std::vector<int> result(long index) const {
        if (terms_.size() != 1 || std::abs(std::abs(terms_[0].second) - 1.0) > 1e-6) {
            throw SimError(index, "output is not a single basis state");
        }
        return terms_[0].first;
    }

    const std::vector<int>& dims() const { return dims_; }

private:
    void apply_phase_gate(const GateApp& op) {
        const auto t = static_cast<std::size_t>(op.target());
        if (dims_[t] != 2) throw SimError(-1, "phase gate on a non-qubit");
        if (op.kind == GateKind::T || op.kind == GateKind::Tdg) {
            const double s = op.kind == GateKind::T ? 1.0 : -1.0;
            const Amp phase = std::polar(1.0, s * M_PI / 4);
            for (auto& [d, amp] : terms_) {
                if (d[t] == 1) amp *= phase;
            }
            return;
        }
        std::map<std::vector<int>, Amp> next;
        const double r = 1.0 / std::sqrt(2.0);
        for (auto& [d, amp] : terms_) {
            const int bit = d[t];
            auto d0 = d;
            d0[t] = 0;
            auto d1 = d;
            d1[t] = 1;
            next[d0] += amp * r;
            next[d1] += bit == 0 ? amp * r : -amp * r;
        }
        terms_.clear();
        for (auto& [d, amp] : next) {
            if (std::abs(amp) > kEps) terms_.emplace_back(d, amp);
        }
    }

    std::vector<std::pair<std::vector<int>, Amp>> terms_;
    std::vector<int> dims_;
    bool physical_;
};

void check_input(const Circuit& c, const BasisState& input) {
    if (input.size() != c.num_qudits()) {
        throw SimError(-1, "input has " + std::to_string(input.size()) + " digits for " +
                               std::to_string(c.num_qudits()) + " qudits");
    }
    for (std::size_t q = 0; q < input.size(); ++q) {
        if (input[q] < 0 || input[q] >= c.dim(static_cast<QuditId>(q))) {
            throw SimError(-1, "input digit " + std::to_string(input[q]) + " out of range for qudit " +
                                   std::to_string(q));
        }
    }
}

}  // namespace

BasisState run(const Circuit& c, const BasisState& input) {
    check_input(c, input);
    const long last = static_cast<long>(c.size()) - 1;
    if (!c.is_routed()) {
        std::vector<int> dims;
        for (const auto& q : c.qudits()) dims.push_back(q.dim);
        Engine e(input, std::move(dims), false);
        long i = 0;
        for (const auto& op : c.ops()) e.apply(op, i++);
        return e.result(last);
    }

    const Mapping& init = *c.initial_mapping();
    const Mapping& fin = *c.final_mapping();
    const std::size_t sites = init.num_sites();
    std::vector<int> digits(sites, 0);
    std::vector<int> dims(sites, kMaxDim);
    for (std::size_t q = 0; q < c.num_qudits(); ++q) {
        const auto s = static_cast<std::size_t>(init.site_of(static_cast<QuditId>(q)));
        digits[s] = input[q];
        dims[s] = c.dim(static_cast<QuditId>(q));
    }
    Engine e(std::move(digits), std::move(dims), true);
    long i = 0;
    for (const auto& op : c.ops()) {
        if (op.sites.empty()) throw SimError(i, "routed circuit op without sites");
        e.apply(op, i++);
    }
    const auto out_sites = e.result(last);
    BasisState out(c.num_qudits());
    for (std::size_t q = 0; q < c.num_qudits(); ++q) {
        out[q] = out_sites[static_cast<std::size_t>(fin.site_of(static_cast<QuditId>(q)))];
    }
    return out;
}

std::uint64_t domain_size(const Circuit& c, Domain domain) {
    std::uint64_t n = 1;
    for (const auto& q : c.qudits()) {
        if (domain == Domain::Binary) {
            if (q.role != Role::Ancilla) n *= 2;
        } else {
            n *= static_cast<std::uint64_t>(q.dim);
        }
    }
    return n;
}

namespace {

void check_domain(const Circuit& c, Domain domain) {
    if (domain == Domain::Binary) {
        const auto free = std::count_if(c.qudits().begin(), c.qudits().end(),
                                        [](const QuditSpec& q) { return q.role != Role::Ancilla; });
        if (free > 12) {
            throw DomainTooLarge("binary domain has " + std::to_string(free) + " free qudits (" +
                                 std::to_string(domain_size(c, domain)) + " inputs); limit is 12");
        }
        return;
    }
    const bool small_dims = std::all_of(c.qudits().begin(), c.qudits().end(),
                                        [](const QuditSpec& q) { return q.dim <= 5; });
    if (c.num_qudits() > 6 || !small_dims) {
        throw DomainTooLarge("full domain over " + std::to_string(c.num_qudits()) + " qudits has " +
                             std::to_string(domain_size(c, domain)) +
                             " inputs; limit is 6 qudits of dimension <= 5");
    }
}

BasisState nth_input(const Circuit& c, Domain domain, std::uint64_t k) {
    BasisState s(c.num_qudits(), 0);
    for (std::size_t q = c.num_qudits(); q-- > 0;) {
        const auto& spec = c.qudits()[q];
        if (domain == Domain::Binary && spec.role == Role::Ancilla) continue;
        const std::uint64_t base = domain == Domain::Binary ? 2 : static_cast<std::uint64_t>(spec.dim);
        s[q] = static_cast<int>(k % base);
        k /= base;
    }
    return s;
}

}  // namespace

std::vector<BasisState> enumerate_domain(const Circuit& c, Domain domain) {
    check_domain(c, domain);
    const auto n = domain_size(c, domain);
    std::vector<BasisState> out;
    out.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) out.push_back(nth_input(c, domain, k));
    return out;
}

Equivalence equivalent(const Circuit& a, const Circuit& b, Domain domain) {
    const bool same_registry = std::equal(
        a.qudits().begin(), a.qudits().end(), b.qudits().begin(), b.qudits().end(),
        [](const QuditSpec& x, const QuditSpec& y) { return x.id == y.id && x.dim == y.dim && x.role == y.role; });
    if (!same_registry) throw std::invalid_argument("equivalence needs identical qudit registries");
    check_domain(a, domain);
    const std::uint64_t n = domain_size(a, domain);

    // Inputs are split across threads; the smallest failing input wins so the
    // reported counterexample does not depend on scheduling.
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> first_bad{n};
    std::mutex mu;
    Equivalence result;
    const auto worker = [&] {
        for (std::uint64_t k = next++; k < n && k < first_bad.load(); k = next++) {
            const BasisState in = nth_input(a, domain, k);
            BasisState oa, ob;
            std::string err;
            try {
                oa = run(a, in);
                ob = run(b, in);
            } catch (const SimError& e) {
                err = e.what();
            }
            if (err.empty() && oa == ob) continue;
            std::lock_guard lock(mu);
            if (k < first_bad.load()) {
                first_bad = k;
                result.counterexample = in;
                result.output_a = std::move(oa);
                result.output_b = std::move(ob);
                result.error = std::move(err);
            }
        }
    };
    const unsigned threads = n < 256 ? 1u : std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    result.equivalent = !result.counterexample.has_value();
    result.inputs_checked = result.equivalent ? n : first_bad.load() + 1;
    return result;
}

}  // namespace iqc
