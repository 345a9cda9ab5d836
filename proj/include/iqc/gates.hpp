#pragma once

#include "iqc/circuit.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace iqc {

/// Digit overflow or an out-of-range input digit.
class DigitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DecompositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cost model for one qubit Toffoli: 6 two-qubit and 14 one-qubit gates.
inline constexpr int kQubitToffoliTwoQubit = 6;
inline constexpr int kQubitToffoliOneQubit = 14;
/// One-qubit gates the emitted Clifford+T sequence has beyond 9.
inline constexpr int kQubitToffoliCostSurplus = kQubitToffoliOneQubit - 9;

/// True when every control of `op` holds its control value in `state`.
bool controls_match(const GateApp& op, std::span<const int> state);

/// Applies a permutation gate (native or macro) to a basis state in place.
/// `dims` holds the dimension of every qudit. Throws DigitError if a digit is
/// out of range before or after the gate, and std::logic_error for gates
/// that are not permutations.
void apply_classical(const GateApp& op, std::span<int> state, std::span<const int> dims);

/// Clifford+T Toffoli over three qubits (6 CX, 9 one-qubit gates, depth 11).
/// Accepts a 2-control MultiControlledShift or CnX whose operands are all
/// qubits; control value 0 is handled by conjugating with X.
std::vector<GateApp> decompose_qubit_toffoli(const GateApp& app, const Circuit& c);

/// Two-controlled shift on qudits as 6 two-qudit and 8 one-qudit gates per
/// target 3-cycle. At least one control and the target need dimension >= 3,
/// and the target permutation must be even.
std::vector<GateApp> decompose_qudit_toffoli(const GateApp& app, const Circuit& c);

/// Expands every macro into Shift/Flip and their one-control forms (plus the
/// qubit-only h/t/tdg used by the qubit Toffoli). Updates the Toffoli counters
/// in the metadata.
Circuit decompose_all(const Circuit& c);

/// True when `c` contains no macro and no gate on more than two qudits.
bool is_native(const Circuit& c);

}  // namespace iqc
