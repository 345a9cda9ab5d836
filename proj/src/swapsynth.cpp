#include "iqc/swapsynth.hpp"

#include <algorithm>
#include <stdexcept>

namespace iqc {

SwapPlan synthesize_swap(int dim_a, int dim_b, std::pair<QuditId, QuditId> qudits) {
    for (int d : {dim_a, dim_b}) {
        if (d < kMinDim || d > kMaxDim) {
            throw std::invalid_argument("swap dimension " + std::to_string(d) + " outside [2, 7]");
        }
    }
    const auto [a, b] = qudits;
    SwapPlan plan{dim_a, dim_b, std::max(dim_a, dim_b), {}};
    plan.gates.reserve(static_cast<std::size_t>(swap_gate_count(plan.effective_dim)));
    for (int i = 0; i < plan.effective_dim; ++i) {
        for (int j = i + 1; j < plan.effective_dim; ++j) {
            plan.gates.push_back(GateApp::cflip(b, j, a, i, j));
            plan.gates.push_back(GateApp::cflip(a, j, b, i, j));
            plan.gates.push_back(GateApp::cflip(b, j, a, i, j));
        }
    }
    return plan;
}

int swap_gate_count(int effective_dim) { return 3 * effective_dim * (effective_dim - 1) / 2; }

}  // namespace iqc
