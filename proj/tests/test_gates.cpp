#include "iqc/bench.hpp"
#include "iqc/gates.hpp"
#include "iqc/sim.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace iqc;

namespace {

Circuit three_qudits(int da, int db, int dt) {
    Circuit c("toffoli");
    c.add_qudit(da, Role::Control);
    c.add_qudit(db, Role::Control);
    c.add_qudit(dt, Role::Target);
    return c;
}

std::vector<int> dims_of(const Circuit& c) {
    std::vector<int> d;
    for (const auto& q : c.qudits()) d.push_back(q.dim);
    return d;
}

int count_two_qudit(const std::vector<GateApp>& ops) {
    return static_cast<int>(std::count_if(ops.begin(), ops.end(), [](const GateApp& g) { return g.arity() == 2; }));
}

}  // namespace

TEST_CASE("apply_classical matches the reference semantics") {
    Circuit c = three_qudits(3, 4, 5);
    const std::vector<GateApp> gates = {
        GateApp::shift(2, 3),          GateApp::flip(1, 0, 3),       GateApp::cshift(0, 2, 2, 4),
        GateApp::cflip(1, 3, 0, 1, 2), GateApp::ccshift({0, 1}, {1, 2}, 2, 2),
    };
    const auto dims = dims_of(c);
    for (const auto& s : oracle::all_states(dims)) {
        for (const auto& g : gates) {
            auto mine = s;
            auto ref = s;
            apply_classical(g, mine, dims);
            oracle::step(g, ref, dims);
            CHECK(mine == ref);
        }
    }
}

TEST_CASE("apply_classical rejects out-of-range digits") {
    std::vector<int> s{3, 0};
    const std::vector<int> dims{3, 2};
    CHECK_THROWS_AS(apply_classical(GateApp::shift(0, 1), s, dims), DigitError);
    std::vector<int> s2{2, 0};
    CHECK_THROWS_AS(apply_classical(GateApp::swap(0, 1), s2, dims), DigitError);
}

TEST_CASE("qudit Toffoli over qutrits agrees on all 27 states") {
    Circuit c = three_qudits(3, 3, 3);
    const GateApp macro = GateApp::ccshift({0, 1}, {1, 1}, 2, 1);
    const auto ops = decompose_qudit_toffoli(macro, c);
    CHECK(ops.size() == 14);
    CHECK(count_two_qudit(ops) == 6);
    const auto dims = dims_of(c);
    int agree = 0;
    for (const auto& s : oracle::all_states(dims)) {
        agree += oracle::run_ops(ops, s, dims) == oracle::run_ops({macro}, s, dims);
    }
    CHECK(agree == 27);
}

TEST_CASE("qudit Toffoli depth is 11") {
    Circuit c = three_qudits(3, 3, 3);
    c.append(decompose_qudit_toffoli(GateApp::ccshift({0, 2}, {1, 2}, 2, 1), c));
    CHECK(depth(c) == 11);
    CHECK(oracle::asap_depth(c) == 11);
}

TEST_CASE("qudit Toffoli on mixed dimensions") {
    struct Case {
        int da, db, dt;
        Control ca, cb;
        int k;
        std::size_t cycles;
    };
    const Case cases[] = {
        {2, 3, 3, {0, 1}, {1, 1}, 1, 1}, {3, 2, 3, {0, 2}, {1, 1}, 2, 1}, {4, 3, 5, {0, 3}, {1, 0}, 2, 2},
        {5, 5, 5, {0, 4}, {1, 2}, 1, 2}, {2, 4, 3, {0, 0}, {1, 3}, 1, 1},
    };
    for (const auto& cs : cases) {
        CAPTURE(cs.da);
        CAPTURE(cs.db);
        CAPTURE(cs.dt);
        Circuit c = three_qudits(cs.da, cs.db, cs.dt);
        const GateApp macro = GateApp::ccshift(cs.ca, cs.cb, 2, cs.k);
        const auto ops = decompose_qudit_toffoli(macro, c);
        CHECK(ops.size() == 14 * cs.cycles);
        const auto dims = dims_of(c);
        for (const auto& s : oracle::all_states(dims)) {
            CHECK(oracle::run_ops(ops, s, dims) == oracle::run_ops({macro}, s, dims));
        }
    }
}

TEST_CASE("qudit Toffoli refuses odd target permutations and qubit-only operands") {
    Circuit c = three_qudits(3, 3, 4);
    CHECK_THROWS_AS(decompose_qudit_toffoli(GateApp::ccshift({0, 1}, {1, 1}, 2, 1), c), DecompositionError);
    Circuit q = three_qudits(2, 2, 3);
    CHECK_THROWS_AS(decompose_qudit_toffoli(GateApp::ccshift({0, 1}, {1, 1}, 2, 1), q), DecompositionError);
    Circuit t2 = three_qudits(3, 3, 2);
    CHECK_THROWS_AS(decompose_qudit_toffoli(GateApp::ccshift({0, 1}, {1, 1}, 2, 1), t2), DecompositionError);
}

TEST_CASE("qubit Toffoli is exact on every basis state") {
    Circuit c = three_qudits(2, 2, 2);
    for (int va = 0; va < 2; ++va) {
        for (int vb = 0; vb < 2; ++vb) {
            const GateApp macro = GateApp::ccshift({0, va}, {1, vb}, 2, 1);
            const auto ops = decompose_qubit_toffoli(macro, c);
            for (std::uint32_t in = 0; in < 8; ++in) {
                oracle::QubitState psi(3, in);
                for (const auto& g : ops) psi.apply(g);
                std::vector<int> s{static_cast<int>(in >> 2 & 1), static_cast<int>(in >> 1 & 1),
                                   static_cast<int>(in & 1)};
                const auto want = oracle::run_ops({macro}, s, {2, 2, 2});
                const std::uint32_t out = static_cast<std::uint32_t>(want[0] << 2 | want[1] << 1 | want[2]);
                for (std::uint32_t b = 0; b < 8; ++b) {
                    CHECK(std::abs(psi.amplitudes()[b]) == doctest::Approx(b == out ? 1.0 : 0.0).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("qubit Toffoli shape") {
    Circuit c = three_qudits(2, 2, 2);
    const auto ops = decompose_qubit_toffoli(GateApp::ccshift({0, 1}, {1, 1}, 2, 1), c);
    CHECK(ops.size() == 15);
    CHECK(count_two_qudit(ops) == kQubitToffoliTwoQubit);
    CHECK(kQubitToffoliTwoQubit + kQubitToffoliOneQubit == 20);
    c.append(ops);
    CHECK(depth(c) == 11);
    CHECK(oracle::asap_depth(c) == 11);
    const auto s = run(c, {1, 1, 0});
    CHECK(s == std::vector<int>{1, 1, 1});
}

TEST_CASE("decompose_all leaves only native gates and keeps semantics") {
    for (int radix = 2; radix <= 5; ++radix) {
        for (int n = 2; n <= 6; ++n) {
            CAPTURE(radix);
            CAPTURE(n);
            const Circuit src = gen_cnx(n, radix);
            const Circuit dec = decompose_all(src);
            CHECK(is_native(dec));
            CHECK(equivalent(src, dec, Domain::Binary).equivalent);
            if (radix == 2) {
                CHECK(dec.meta().qubit_toffolis == (n == 2 ? 1 : 2 * (n - 2) + 1));
            } else {
                CHECK(dec.meta().qubit_toffolis == 0);
            }
        }
    }
}

TEST_CASE("decompose_all macro rules") {
    Circuit c("m");
    c.add_qudit(3);
    c.add_qudit(3);
    c.add_qudit(2);
    c.add_qudit(4);
    c.append(GateApp::swap(0, 1));
    c.append(GateApp::cnx({0}, 2));
    const Circuit d = decompose_all(c);
    REQUIRE(d.size() == 10);
    CHECK(d.ops()[9] == GateApp::cflip(0, 1, 2, 0, 1));

    Circuit bad = c.empty_copy();
    bad.append(GateApp::swap(0, 3));
    CHECK_THROWS_AS(decompose_all(bad), DecompositionError);

    Circuit three = c.empty_copy();
    three.append(GateApp::cnx({0, 1, 3}, 2));
    CHECK_THROWS_AS(decompose_all(three), DecompositionError);
}

TEST_CASE("cnx on qutrit controls expands through the control tree") {
    Circuit c("tree");
    for (int i = 0; i < 4; ++i) c.add_qudit(3, Role::Control);
    c.add_qudit(2, Role::Target);
    c.append(GateApp::cnx({0, 1, 2, 3}, 4));
    const Circuit d = decompose_all(c);
    CHECK(is_native(d));
    for (const auto& s : oracle::all_states({2, 2, 2, 2, 2})) {
        CHECK(oracle::run(d, s) == oracle::run(c, s));
    }
}
