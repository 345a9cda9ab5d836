#include "iqc/swapsynth.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace iqc;

TEST_CASE("swap plans exchange every joint basis state") {
    for (int a = 2; a <= 5; ++a) {
        for (int b = 2; b <= 5; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            const SwapPlan plan = synthesize_swap(a, b, {0, 1});
            const int d = std::max(a, b);
            CHECK(plan.effective_dim == d);
            CHECK(plan.gates.size() == static_cast<std::size_t>(3 * d * (d - 1) / 2));
            for (const auto& s : oracle::all_states({d, d})) {
                const auto out = oracle::run_ops(plan.gates, s, {d, d});
                CHECK(out[0] == s[1]);
                CHECK(out[1] == s[0]);
            }
        }
    }
}

TEST_CASE("qutrit swap is nine controlled flips") {
    const SwapPlan plan = synthesize_swap(3, 3, {4, 7});
    REQUIRE(plan.gates.size() == 9);
    for (const auto& g : plan.gates) {
        CHECK(g.kind == GateKind::ControlledFlip);
        CHECK(g.arity() == 2);
        const bool forward = g.controls[0].qudit == 7 && g.target() == 4;
        const bool backward = g.controls[0].qudit == 4 && g.target() == 7;
        CHECK((forward || backward));
    }
    CHECK(plan.gates[0].controls[0].value == plan.gates[0].j);
}

TEST_CASE("swap gate count") {
    CHECK(swap_gate_count(2) == 3);
    CHECK(swap_gate_count(3) == 9);
    CHECK(swap_gate_count(4) == 18);
    CHECK(swap_gate_count(5) == 30);
}

TEST_CASE("swap rejects unsupported dimensions") {
    CHECK_THROWS_AS(synthesize_swap(1, 3, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(synthesize_swap(3, 8, {0, 1}), std::invalid_argument);
}
