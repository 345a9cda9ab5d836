#include "iqc/bench.hpp"
#include "iqc/gates.hpp"
#include "iqc/layout.hpp"

#include <doctest.h>

#include <set>

using namespace iqc;

namespace {

Circuit chain(int n) {
    Circuit c("chain");
    for (int i = 0; i < n; ++i) c.add_qudit(2);
    for (int i = 0; i + 1 < n; ++i) c.append(GateApp::cflip(i, 1, i + 1, 0, 1));
    return c;
}

}  // namespace

TEST_CASE("interaction weights count operand pairs") {
    Circuit c("w");
    for (int i = 0; i < 4; ++i) c.add_qudit(3);
    c.append(GateApp::cshift(0, 1, 1, 1));
    c.append(GateApp::cshift(1, 1, 0, 2));
    c.append(GateApp::ccshift({0, 1}, {2, 1}, 3, 1));
    c.append(GateApp::flip(3, 0, 2));
    InteractionWeights w = compute_weights(c);
    CHECK(w(0, 1) == 2);
    CHECK(w(1, 0) == 2);
    CHECK(w(0, 2) == 1);
    CHECK(w(2, 3) == 1);
    CHECK(w(1, 2) == 0);
    CHECK(w.total(0) == 4);
    CHECK(w.partners(3) == std::vector<QuditId>{0, 2});
    for (const auto& op : c.ops()) w.remove_op(op);
    CHECK(w.all_zero());
    CHECK_THROWS_AS(w.decrement(0, 1), std::logic_error);
}

TEST_CASE("placement is injective and seeds the heaviest qudit at the centre") {
    const Topology g(12, 12);
    const TimingTable t = TimingTable::load_default();
    const Circuit c = decompose_all(gen_cnx(9, 3));
    const Mapping m = place(c, g, t);
    CHECK(m.is_total());
    std::set<SiteId> used;
    for (QuditId q = 0; q < static_cast<QuditId>(c.num_qudits()); ++q) {
        CHECK(m.qudit_at(m.site_of(q)) == q);
        used.insert(m.site_of(q));
    }
    CHECK(used.size() == c.num_qudits());

    const InteractionWeights w = compute_weights(c);
    QuditId heaviest = 0;
    for (QuditId q = 1; q < static_cast<QuditId>(c.num_qudits()); ++q) {
        if (w.total(q) > w.total(heaviest)) heaviest = q;
    }
    CHECK(m.site_of(heaviest) == center_site(g));
}

TEST_CASE("placement grows a connected cluster") {
    const Topology g(12, 12);
    const TimingTable t = TimingTable::load_default();
    for (int radix = 2; radix <= 5; ++radix) {
        const Circuit c = decompose_all(gen_cnx(8, radix));
        const Mapping m = place(c, g, t);
        for (QuditId q = 0; q < static_cast<QuditId>(c.num_qudits()); ++q) {
            bool touching = false;
            for (SiteId s : g.neighbors(m.site_of(q))) touching = touching || m.qudit_at(s) != kNoQudit;
            CHECK(touching);
        }
    }
}

TEST_CASE("a chain is laid out along adjacent sites") {
    const Topology g(5, 5);
    const TimingTable t = TimingTable::load_default();
    const Circuit c = chain(4);
    const Mapping m = place(c, g, t);
    for (int i = 0; i + 1 < 4; ++i) CHECK(g.adjacent(m.site_of(i), m.site_of(i + 1)));
}

TEST_CASE("placement cost sums weighted distance to placed partners") {
    const Topology g(3, 3);
    const TimingTable t = TimingTable::load_default();
    Circuit c = chain(3);
    c.append(GateApp::cflip(0, 1, 2, 0, 1));
    const InteractionWeights w = compute_weights(c);
    Mapping m(3, 9);
    m.assign(1, 4);
    m.assign(2, 5);
    // qudit 0 at site 3: one hop from qudit 1, two from qudit 2
    CHECK(placement_cost(w, m, c, 0, 3, g, t) == 500 + (900 + 500));
    CHECK(placement_cost(w, m, c, 0, 8, g, t) == (900 + 500) + 500);
}

TEST_CASE("capacity") {
    const TimingTable t = TimingTable::load_default();
    CHECK_THROWS_AS(place(chain(3), Topology(1, 2), t), CapacityError);
    Circuit big("big");
    big.add_qudit(5);
    CHECK_THROWS_AS(place(big, Topology(2, 2, 4), t), CapacityError);
    CHECK_NOTHROW(place(chain(4), Topology(2, 2), t));
}
