#include "iqc/timing.hpp"

#include <doctest.h>

#include <sstream>

using namespace iqc;

namespace {

struct Row {
    int a, b;
    double inter, swap;
};

// Table I as printed, including the rows marked as interpolated.
constexpr Row kTable[] = {
    {0, 1, 150, 600},   {0, 2, 500, 1200},  {0, 3, 500, 1500},  {0, 4, 600, 1800},  {1, 1, 500, 900},
    {1, 2, 500, 1200},  {1, 3, 500, 1500},  {1, 4, 600, 1800},  {2, 2, 675, 2950},  {2, 3, 850, 5000},
    {2, 4, 1025, 7050}, {3, 3, 850, 5000},  {3, 4, 1025, 7050}, {4, 4, 1200, 7500},
};

constexpr std::pair<int, int> kStarred[] = {{1, 4}, {2, 2}, {2, 4}, {3, 4}, {4, 4}};

TimingTable without(TimingTable t, std::initializer_list<std::pair<int, int>> rows) {
    for (auto [a, b] : rows) {
        t.erase(TimingKind::Interaction, a, b);
        t.erase(TimingKind::Swap, a, b);
    }
    return t;
}

}  // namespace

TEST_CASE("default table is verbatim") {
    const TimingTable t = TimingTable::load_default();
    CHECK(t.single(1) == 30);
    CHECK(t.single(2) == 50);
    CHECK(t.single(3) == 50);
    CHECK(t.single(4) == 50);
    for (const auto& r : kTable) {
        CAPTURE(r.a);
        CAPTURE(r.b);
        REQUIRE(t.has(TimingKind::Interaction, r.a, r.b));
        REQUIRE(t.has(TimingKind::Swap, r.b, r.a));
        if (r.a == 0) continue;
        CHECK(t.interaction(r.a, r.b) == r.inter);
        CHECK(t.interaction(r.b, r.a) == r.inter);
        CHECK(t.swap(r.a, r.b) == r.swap);
    }
    CHECK_NOTHROW(t.check());
}

TEST_CASE("rows with a zero label are stored but never looked up") {
    const TimingTable t = TimingTable::load_default();
    const auto inert = t.inert_rows();
    CHECK(inert.size() == 4);
    CHECK(inert.at({0, 1}) == std::pair{150.0, 600.0});
    CHECK_THROWS_AS(t.interaction(0, 1), TimingError);
    CHECK_THROWS_AS(t.swap(0, 4), TimingError);
}

TEST_CASE("interpolation recovers the qutrit-qutrit row") {
    const TimingTable full = TimingTable::load_default();
    const TimingTable t = interpolate(without(full, {{2, 2}}));
    // midpoints of (1,1) and (3,3) on the diagonal
    CHECK(t.interaction(2, 2) == (500.0 + 850.0) / 2);
    CHECK(t.interaction(2, 2) == 675);
    CHECK(t.swap(2, 2) == (900.0 + 5000.0) / 2);
    CHECK(t == full);
}

TEST_CASE("interpolation with every starred row removed") {
    const TimingTable full = TimingTable::load_default();
    const TimingTable t = interpolate(without(full, {kStarred[0], kStarred[1], kStarred[2], kStarred[3], kStarred[4]}));
    CHECK(t.interaction(2, 2) == 675);
    CHECK(t.swap(2, 2) == 2950);
    // extend along row 2 through (2,3) and (2,2)
    CHECK(t.interaction(2, 4) == 850 + (850 - 675));
    CHECK(t.swap(2, 4) == 5000 + (5000 - 2950));
    CHECK(t.interaction(2, 4) == full.interaction(2, 4));
    CHECK(t.swap(2, 4) == full.swap(2, 4));
    // row 3 is flat, so the floor from (2,4) decides
    CHECK(t.interaction(3, 4) == full.interaction(3, 4));
    CHECK(t.swap(3, 4) == full.swap(3, 4));
    // row 1 is flat for interactions; the table's 600 is not reachable
    CHECK(t.interaction(1, 4) == 500);
    CHECK(t.interaction(1, 4) != full.interaction(1, 4));
    CHECK(t.swap(1, 4) == full.swap(1, 4));
    // the top corner is not reachable either (table: 1200 / 7500)
    CHECK(t.interaction(4, 4) == 1025);
    CHECK(t.swap(4, 4) == 7050);
    CHECK_NOTHROW(t.check());
}

TEST_CASE("single removals bracket between neighbours") {
    const TimingTable full = TimingTable::load_default();
    const TimingTable t = interpolate(without(full, {{3, 4}}));
    CHECK(t.interaction(3, 4) == (1025.0 + 1200.0) / 2);
    CHECK(t.swap(3, 4) == (7050.0 + 7500.0) / 2);
    const TimingTable u = interpolate(without(full, {{4, 4}}));
    CHECK(u.interaction(4, 4) == 1025);
}

TEST_CASE("interpolation from anchors alone is complete and monotone") {
    TimingTable m;
    m.set(TimingKind::Single, 1, 0, 30);
    m.set(TimingKind::Single, 3, 0, 50);
    for (const auto& r : {Row{1, 1, 500, 900}, Row{1, 3, 500, 1500}, Row{3, 3, 850, 5000}}) {
        m.set(TimingKind::Interaction, r.a, r.b, r.inter);
        m.set(TimingKind::Swap, r.a, r.b, r.swap);
    }
    const TimingTable t = interpolate(m);
    CHECK_NOTHROW(t.check());
    CHECK(t.single(2) == 40);
    CHECK(t.interaction(1, 2) == 500);
    CHECK(t.swap(1, 2) == 1200);
    CHECK(t.interaction(2, 2) == 675);

    TimingTable missing = m;
    missing.erase(TimingKind::Swap, 3, 3);
    CHECK_THROWS_AS(interpolate(missing), TimingError);
}

TEST_CASE("overrides") {
    TimingTable t = TimingTable::load_default();
    std::istringstream in("kind,level_a,level_b,ns\n# faster qutrits\ninteraction,2,2,600\nsingle,2,,45\n");
    t.apply_overrides(in);
    CHECK(t.interaction(2, 2) == 600);
    CHECK(t.single(2) == 45);

    TimingTable bad = TimingTable::load_default();
    std::istringstream neg("swap,1,1,-3\n");
    CHECK_THROWS_AS(bad.apply_overrides(neg), TimingError);
    std::istringstream slow("interaction,4,4,9000\n");
    CHECK_THROWS_AS(bad.apply_overrides(slow), TimingError);  // swap would undercut the interaction
    std::istringstream kind("fuse,1,1,3\n");
    CHECK_THROWS_AS(bad.apply_overrides(kind), TimingError);
}

TEST_CASE("check rejects non-monotone tables") {
    TimingTable t = TimingTable::load_default();
    t.set(TimingKind::Interaction, 1, 3, 400);
    CHECK_THROWS_AS(t.check(), TimingError);
}

TEST_CASE("gate durations by occupied dimension") {
    const TimingTable t = TimingTable::load_default();
    const std::vector<int> q{2};
    const std::vector<int> qq{2, 2};
    const std::vector<int> mixed{3, 5};
    CHECK(gate_duration(GateApp::flip(0, 0, 1), q, t) == 30);
    CHECK(gate_duration(GateApp::shift(0, 1), std::vector<int>{4}, t) == 50);
    CHECK(gate_duration(GateApp::cflip(0, 1, 1, 0, 1), qq, t) == 500);
    CHECK(gate_duration(GateApp::cshift(0, 2, 1, 1), mixed, t) == 1025);
    CHECK(gate_duration(GateApp::swap(0, 1), qq, t) == 900);
    CHECK(gate_duration(GateApp::swap(0, 1), mixed, t) == 7050);
    CHECK_THROWS_AS(gate_duration(GateApp::flip(0, 0, 1), std::vector<int>{6}, t), TimingError);
}
