#pragma once

#include "iqc/circuit.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace iqc {

/// One digit per virtual qudit.
using BasisState = std::vector<int>;

/// Raised for digit overflow, bad input digits, or an output that is not a
/// single basis state. Names the offending op when there is one.
class SimError : public std::runtime_error {
public:
    SimError(long op_index, const std::string& what);
    long op_index() const noexcept { return op_index_; }

private:
    long op_index_;
};

/// Raised instead of silently sampling an oversized input domain.
class DomainTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Executes the circuit on a basis input. Routed circuits run on sites: the
/// input is placed by the initial mapping and read back through the final
/// mapping. Permutation-only circuits never leave the basis; Hadamard/T
/// gates switch to a sparse amplitude path, and the output must again be a
/// single basis state.
BasisState run(const Circuit& c, const BasisState& input);

enum class Domain {
    /// Every non-ancilla qudit in {0, 1}, ancilla at 0. At most 12 free qudits.
    Binary,
    /// Every digit below its dimension. At most 6 qudits of dimension <= 5.
    Full,
};

struct Equivalence {
    bool equivalent = true;
    std::uint64_t inputs_checked = 0;
    std::optional<BasisState> counterexample;
    BasisState output_a;
    BasisState output_b;
    /// Set when one side failed to execute on the counterexample.
    std::string error;
};

/// Exhaustive comparison over the domain; the registries must agree.
Equivalence equivalent(const Circuit& a, const Circuit& b, Domain domain);

/// All inputs of the domain in lexicographic order (qudit 0 slowest).
std::vector<BasisState> enumerate_domain(const Circuit& c, Domain domain);

/// Number of inputs in the domain, without enumerating.
std::uint64_t domain_size(const Circuit& c, Domain domain);

}  // namespace iqc
