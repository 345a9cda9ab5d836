#pragma once

#include "iqc/circuit.hpp"

#include <span>
#include <vector>

namespace iqc {

/// n-controlled X at radix 2: pairwise AND of controls into n-2 ancilla,
/// a Toffoli onto the target, then the mirror uncompute.
Circuit gen_qubit_cnx(int n);

/// n-controlled X on qutrit controls: binary heap-ordered tree, one
/// two-controlled +1 macro (or a single cx+1) per internal node.
Circuit gen_qutrit_cnx(int n);

/// Radix-4 tree; identical to gen_general_cnx(n, 4).
Circuit gen_ququart_cnx(int n);

/// Radix >= 4: heap-ordered tree of arity radix-2 built only from
/// two-qudit +1 gates.
Circuit gen_general_cnx(int n, int radix);

/// Dispatches on radix (2, 3, or >= 4).
Circuit gen_cnx(int n, int radix);

/// Tree compute, root flip and uncompute over existing qudits. Controls must
/// have dimension >= radix; radix 3 emits two-controlled macros.
std::vector<GateApp> cnx_tree_ops(std::span<const QuditId> controls, QuditId target, int radix);

/// Children per internal node: 2 for radix 3 and 4, radix-2 above.
int tree_arity(int radix);

}  // namespace iqc
