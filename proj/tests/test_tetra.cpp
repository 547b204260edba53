#include <doctest.h>

#include <map>
#include <set>

#include "enumera/formulas.hpp"
#include "enumera/tetra.hpp"

using namespace enumera;

TEST_CASE("build_config seeds the 24 double points") {
    TetraConfig c = build_config(0);
    CHECK(c.points.size() == 24);

    std::map<int, int> per_edge;
    for (int e : c.point_edge) ++per_edge[e];
    CHECK(per_edge.size() == 6);
    for (const auto& [e, n] : per_edge) CHECK(n == 4);

    for (const ProjPoint& p : c.points) {
        int on = 0;
        for (const ProjPlane& f : c.faces)
            if (incident(p, f)) ++on;
        CHECK(on == 2);
    }

    std::set<std::tuple<int, int, int>> labels;
    for (const EdgePointLabel& l : c.point_labels) labels.insert({l.on_face, l.meets_face, l.sign});
    CHECK(labels.size() == 24);
}

TEST_CASE("genericity holds for the default seeds") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        TetraConfig c = build_config(s);
        GenericityReport rep = verify_genericity(c);
        CHECK(rep.pass());
    }
}

TEST_CASE("genericity violations are reported") {
    TetraConfig c = build_config(0);

    SUBCASE("coincident points") {
        c.points[1] = c.points[0];
        CHECK_FALSE(verify_genericity(c).pass());
    }
    SUBCASE("point equal to a vertex") {
        c.points[0] = c.vertices[0];
        CHECK_FALSE(verify_genericity(c).pass());
    }
    SUBCASE("unforced collinear triple") {
        // Put point 0 on the line joining two points of two other edges.
        const ProjPoint &p = c.points[4], &q = c.points[8];
        std::array<Rat, 4> sum;
        for (int i = 0; i < 4; ++i) sum[i] = p.h.c[i] + q.h.c[i];
        c.points[0] = ProjPoint{normalize(sum)};
        GenericityReport rep = verify_genericity(c);
        CHECK_FALSE(rep.pass());
    }
}

TEST_CASE("edge structure") {
    TetraConfig c = build_config(0);
    for (int e = 0; e < 6; ++e) {
        int opp = c.opposite_edge(e);
        CHECK(opp != e);
        CHECK(c.opposite_edge(opp) == e);
        for (int v = 0; v < 4; ++v) {
            bool on_both = c.vertex_on_edge(v, e) && c.vertex_on_edge(v, opp);
            CHECK_FALSE(on_both);
        }
    }
}

TEST_CASE("delta=1 ledger") {
    TetraConfig c = build_config(0);
    ComponentLedger l = enumerate_ledger(c, 1);
    CHECK(l.target_degree == 36);
    CHECK(l.weighted_total() == to_int64(severi_degree(4, 1)));
    REQUIRE(l.entries.size() == 2);
    CHECK(l.entries[0].count == 24);
    CHECK(l.entries[0].multiplicity == 1);
    CHECK(l.entries[1].count == 4);
    CHECK(l.entries[1].multiplicity == 3);
}

TEST_CASE("delta=2 ledger") {
    TetraConfig c = build_config(0);
    ComponentLedger l = enumerate_ledger(c, 2);
    CHECK(l.target_degree == 480);
    REQUIRE(l.entries.size() == 3);
    CHECK(l.entries[0].count == 240);  // C(24,2) - 6*C(4,2)
    CHECK(l.entries[1].count == 48);
    CHECK(l.entries[1].multiplicity == 3);
    CHECK(l.entries[2].count == 6);
    CHECK(l.entries[2].multiplicity == 16);
    CHECK(l.weighted_total() == to_int64(severi_degree(4, 2)));
}

TEST_CASE("delta=3 ledger") {
    TetraConfig c = build_config(0);
    ComponentLedger l = enumerate_ledger(c, 3);
    CHECK(l.target_degree == 3200);
    REQUIRE(l.entries.size() == 4);
    CHECK(l.entries[0].count == 1024);
    CHECK(l.entries[0].multiplicity == 1);
    CHECK(l.entries[1].count == 192);
    CHECK(l.entries[1].multiplicity == 3);
    CHECK(l.entries[2].count == 24);
    CHECK(l.entries[2].multiplicity == 16);
    CHECK(l.entries[3].count == 4);
    CHECK(l.entries[3].multiplicity == 304);
    CHECK(l.weighted_total() == to_int64(severi_degree(4, 3)));
}

TEST_CASE("ledgers are identical for distinct seeds") {
    TetraConfig c0 = build_config(0);
    TetraConfig c1 = build_config(12345);
    for (int delta = 1; delta <= 3; ++delta) {
        ComponentLedger a = enumerate_ledger(c0, delta);
        ComponentLedger b = enumerate_ledger(c1, delta);
        REQUIRE(a.entries.size() == b.entries.size());
        for (size_t i = 0; i < a.entries.size(); ++i) {
            CHECK(a.entries[i].count == b.entries[i].count);
            CHECK(a.entries[i].multiplicity == b.entries[i].multiplicity);
        }
    }
}

TEST_CASE("partitioned scans agree with the single-threaded ones") {
    TetraConfig c = build_config(3);
    CHECK(verify_genericity(c, 4).pass());
    ComponentLedger a = enumerate_ledger(c, 3, 1);
    ComponentLedger b = enumerate_ledger(c, 3, 4);
    REQUIRE(a.entries.size() == b.entries.size());
    for (size_t i = 0; i < a.entries.size(); ++i)
        CHECK(a.entries[i].count == b.entries[i].count);
}

TEST_CASE("label combinatorics behind the delta=3 counts") {
    TetraConfig c = build_config(0);
    const size_t n = c.points.size();

    // pairwise-edge-distinct triples: C(6,3) * 4^3 = 1280; those on the
    // three edges of one face: 4 * 4^3 = 256.
    long long distinct = 0, on_face = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                int ei = c.point_edge[i], ej = c.point_edge[j], ek = c.point_edge[k];
                if (ei == ej || ei == ek || ej == ek) continue;
                ++distinct;
                for (int f = 0; f < 4; ++f) {
                    auto face_has = [&](int e) {
                        return c.edges[e].face_a == f || c.edges[e].face_b == f;
                    };
                    if (face_has(ei) && face_has(ej) && face_has(ek)) ++on_face;
                }
            }
    CHECK(distinct == 1280);
    CHECK(on_face == 256);
    CHECK(distinct - on_face == 1024);

    // per vertex: pairs from distinct edges of the opposite face, C(3,2)*16
    for (int v = 0; v < 4; ++v) {
        long long pairs = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                int ei = c.point_edge[i], ej = c.point_edge[j];
                if (ei == ej) continue;
                auto on_opp_face = [&](int e) {
                    return c.edges[e].face_a == v || c.edges[e].face_b == v;
                };
                if (on_opp_face(ei) && on_opp_face(ej)) ++pairs;
            }
        CHECK(pairs == 48);
    }
}

TEST_CASE("a generic triple plane holds exactly its three points and no vertex") {
    TetraConfig c = build_config(0);
    // points 0, 4, 20 sit on the edges (0,1), (0,2), (2,3): no common face
    ProjPlane pl = span_plane(c.points[0], c.points[4], c.points[20]);
    int npts = 0, nvtx = 0;
    for (const ProjPoint& p : c.points)
        if (incident(p, pl)) ++npts;
    for (const ProjPoint& v : c.vertices)
        if (incident(v, pl)) ++nvtx;
    CHECK(npts == 3);
    CHECK(nvtx == 0);
}

TEST_CASE("monoid crude limit") {
    TetraConfig c = build_config(0);
    for (int face = 1; face <= 4; ++face) {
        ComponentLedger l = monoid_crude_limit(c, face);
        CHECK(l.target_degree == 36);
        REQUIRE(l.entries.size() == 3);
        CHECK(l.entries[0].count == 21);
        CHECK(l.entries[1].count * l.entries[1].multiplicity == 3);
        CHECK(l.entries[2].count == 12);
        CHECK(l.weighted_total() == 36);
    }
    CHECK_THROWS_AS(monoid_crude_limit(c, 0), std::invalid_argument);
    CHECK_THROWS_AS(monoid_crude_limit(c, 5), std::invalid_argument);
}

TEST_CASE("enumerate_ledger rejects bad delta") {
    TetraConfig c = build_config(0);
    CHECK_THROWS_AS(enumerate_ledger(c, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_ledger(c, 4), std::invalid_argument);
}

TEST_CASE("the scan aborts with a diagnostic on a degenerate configuration") {
    TetraConfig c = build_config(0);
    c.points[1] = c.points[0];  // coincident points break the triple scan
    CHECK_THROWS_AS(enumerate_ledger(c, 3), std::runtime_error);
}
