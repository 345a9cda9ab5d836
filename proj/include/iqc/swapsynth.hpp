#pragma once

#include "iqc/circuit.hpp"

#include <utility>
#include <vector>

namespace iqc {

/// Controlled-flip realization of a SWAP between two qudits. Both operands
/// are treated as having the larger of the two dimensions.
struct SwapPlan {
    int dim_a = 2;
    int dim_b = 2;
    int effective_dim = 2;
    std::vector<GateApp> gates;
};

/// For each pair {i < j} of levels below max(dim_a, dim_b), in lexicographic
/// order, emits flip(A) ctrl B, flip(B) ctrl A, flip(A) ctrl B with control
/// value j.
SwapPlan synthesize_swap(int dim_a, int dim_b, std::pair<QuditId, QuditId> qudits);

/// 3 * C(d, 2): flips in a SWAP at effective dimension d.
int swap_gate_count(int effective_dim);

}  // namespace iqc
