#include <doctest.h>

#include <set>

#include "enumera/triangle.hpp"

using namespace enumera;

TEST_CASE("entry counts per delta") {
    CHECK(triangle_entries(1).size() == 3);
    CHECK(triangle_entries(2).size() == 7);
    CHECK(triangle_entries(3).size() == 7);
    CHECK_THROWS_AS(triangle_entries(0), std::invalid_argument);
    CHECK_THROWS_AS(triangle_entries(4), std::invalid_argument);
}

TEST_CASE("every derivation reproduces its degree") {
    int total = 0;
    for (int delta = 1; delta <= 3; ++delta)
        for (const TriangleEntry& e : triangle_entries(delta)) {
            CHECK(e.derivation.eval() == e.p_degree);
            CHECK(e.multiplicity >= 1);
            CHECK(e.multiplicity <= 3);
            ++total;
        }
    CHECK(total == 17);
}

TEST_CASE("ledger totals") {
    CHECK(triangle_ledger(1).weighted_total() == 21);
    CHECK(triangle_ledger(2).weighted_total() == 132);
    CHECK(triangle_ledger(3).weighted_total() == 304);
    triangle_ledger(1).validate();
    triangle_ledger(2).validate();
    triangle_ledger(3).validate();
}

TEST_CASE("the degree-zero component is kept but not totalled") {
    auto entries = triangle_entries(2);
    int zeros = 0;
    for (const TriangleEntry& e : entries)
        if (e.p_degree == 0) ++zeros;
    CHECK(zeros == 1);
    CHECK(triangle_ledger(2).entries.size() == entries.size() - 1);
}

TEST_CASE("matching and split counts by brute force") {
    // triples of lines through 3+3 points: perfect matchings of two 3-sets
    int matchings = 0;
    int perm[3] = {0, 1, 2};
    do {
        ++matchings;
    } while (std::next_permutation(perm, perm + 3));
    CHECK(matchings == 6);

    // ordered 2+2 splits of the four base points on the double line
    std::set<std::set<int>> first_halves;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) first_halves.insert({a, b});
    CHECK(first_halves.size() == 6);

    auto d3 = triangle_entries(3);
    CHECK(d3.front().label == "V(delta_P=3)");
    CHECK(d3.front().p_degree == matchings);
    CHECK(d3.back().label == "V(W+W_a+W_b, delta_W=3)");
    CHECK(d3.back().p_degree == static_cast<long long>(first_halves.size()));
}

TEST_CASE("pencil counts feed the delta=3 entries") {
    bool saw56 = false, saw18 = false;
    for (const TriangleEntry& e : triangle_entries(3)) {
        if (e.p_degree == 56) {
            saw56 = true;
            CHECK(e.derivation.text().find("pencil_nodal_count") != std::string::npos);
            CHECK(e.multiplicity == 2);
        }
        if (e.p_degree == 18 && e.multiplicity == 3) {
            saw18 = true;
            CHECK(e.derivation.text().find("pencil_nodal_count") != std::string::npos);
        }
    }
    CHECK(saw56);
    CHECK(saw18);
}

TEST_CASE("derivation text renders nested calls") {
    Derivation d = Derivation::call(
        "polar_tangency_correction",
        {Derivation::product({Derivation::constant(9), Derivation::constant(4)}),
         Derivation::constant(4)});
    CHECK(d.eval() == 28);
    CHECK(d.text() == "polar_tangency_correction(9 * 4, 4)");
}
