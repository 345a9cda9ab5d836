#include "iqc/timing.hpp"
#include "iqc/topology.hpp"

#include <doctest.h>

#include <cstdlib>
#include <set>

using namespace iqc;

TEST_CASE("grid shape and neighbours") {
    const Topology g(3, 4);
    CHECK(g.num_sites() == 12);
    CHECK(g.neighbors(0) == std::vector<SiteId>{1, 4});
    CHECK(g.neighbors(5).size() == 4);
    CHECK(g.edges().size() == 3 * 3 + 2 * 4);
    std::set<std::pair<SiteId, SiteId>> seen(g.edges().begin(), g.edges().end());
    CHECK(seen.size() == g.edges().size());
    for (auto [a, b] : g.edges()) {
        CHECK(a < b);
        CHECK(g.adjacent(a, b));
    }
}

TEST_CASE("hops is Manhattan distance") {
    const Topology g(12, 12);
    for (SiteId a = 0; a < g.num_sites(); a += 7) {
        for (SiteId b = 0; b < g.num_sites(); b += 5) {
            const int want = std::abs(a / 12 - b / 12) + std::abs(a % 12 - b % 12);
            CHECK(g.hops(a, b) == want);
        }
    }
}

TEST_CASE("centre site") {
    CHECK(center_site(Topology(12, 12)) == 65);
    CHECK(center_site(Topology(1, 2)) == 0);
    CHECK(center_site(Topology(3, 3)) == 4);
}

TEST_CASE("grid parsing") {
    const Topology g = Topology::parse_grid("4x6");
    CHECK(g.rows() == 4);
    CHECK(g.cols() == 6);
    CHECK_THROWS_AS(Topology::parse_grid("4by6"), std::invalid_argument);
    CHECK_THROWS_AS(Topology::parse_grid("0x6"), std::invalid_argument);
    CHECK_THROWS_AS(Topology::parse_grid("x"), std::invalid_argument);
}

TEST_CASE("distance time") {
    const Topology g(12, 12);
    const TimingTable t = TimingTable::load_default();
    CHECK(distance_time(g, 65, 65, 1, 1, t) == 0);
    CHECK(distance_time(g, 65, 66, 1, 1, t) == 500);
    CHECK(distance_time(g, 65, 67, 1, 1, t) == 900 + 500);
    CHECK(distance_time(g, 65, 68, 1, 1, t) == 2 * 900 + 500);
    CHECK(distance_time(g, 65, 78, 2, 2, t) == 1200 + 675);
    CHECK(distance_time(g, 0, 2, 3, 1, t) == 900 + 500);
}
