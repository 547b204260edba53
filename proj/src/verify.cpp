#include "enumera/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "enumera/fibre.hpp"
#include "enumera/formulas.hpp"
#include "enumera/incidence.hpp"
#include "enumera/ledger.hpp"
#include "enumera/tetra.hpp"
#include "enumera/triangle.hpp"

namespace enumera {

namespace {

struct Checker {
    std::ostringstream fail;
    std::ostringstream info;

    template <typename A, typename B>
    void eq(const A& got, const B& want, const std::string& what) {
        if (!(got == want))
            fail << what << ": got " << got << ", want " << want << "; ";
    }
    void require(bool cond, const std::string& what) {
        if (!cond) fail << what << "; ";
    }
};

CheckResult run_check(const std::string& name, long long time_budget_ms,
                      const std::function<void(Checker&)>& body) {
    Checker ck;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(ck);
    } catch (const std::exception& e) {
        ck.fail << "exception: " << e.what() << "; ";
    }
    auto t1 = std::chrono::steady_clock::now();
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (time_budget_ms > 0 && ms >= time_budget_ms)
        ck.fail << "took " << ms << " ms, budget " << time_budget_ms << " ms; ";

    CheckResult r;
    r.name = name;
    r.elapsed_ms = ms;
    r.pass = ck.fail.str().empty();
    r.detail = r.pass ? ck.info.str() : ck.fail.str();
    return r;
}

void expect_entries(Checker& ck, const ComponentLedger& l,
                    const std::vector<std::pair<long long, long long>>& want) {
    ck.eq(l.entries.size(), want.size(), l.target_name + ": entry count");
    if (l.entries.size() != want.size()) return;
    for (size_t i = 0; i < want.size(); ++i) {
        ck.eq(l.entries[i].count, want[i].first, l.target_name + " entry " + std::to_string(i) + " count");
        ck.eq(l.entries[i].multiplicity, want[i].second,
              l.target_name + " entry " + std::to_string(i) + " multiplicity");
    }
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(std::uint64_t seed, int jobs) {
    std::vector<CheckResult> out;

    out.push_back(run_check("1. Severi degrees of a general quartic", 1, [](Checker& ck) {
        ck.eq(severi_degree(4, 1), BigInt(36), "severi_degree(4,1)");
        ck.eq(severi_degree(4, 2), BigInt(480), "severi_degree(4,2)");
        ck.eq(severi_degree(4, 3), BigInt(3200), "severi_degree(4,3)");
    }));

    out.push_back(run_check("2. tetrahedron ledgers, 8 seeds", 10000, [seed, jobs](Checker& ck) {
        std::vector<ComponentLedger> first;
        for (int s = 0; s < 8; ++s) {
            TetraBuildOptions opts;
            opts.jobs = jobs;
            TetraConfig c = build_config(seed + static_cast<std::uint64_t>(s), opts);
            std::vector<ComponentLedger> cur;
            for (int delta = 1; delta <= 3; ++delta)
                cur.push_back(enumerate_ledger(c, delta, jobs));
            if (s == 0) {
                first = cur;
                expect_entries(ck, cur[0], {{24, 1}, {4, 3}});
                expect_entries(ck, cur[1], {{240, 1}, {48, 3}, {6, 16}});
                expect_entries(ck, cur[2], {{1024, 1}, {192, 3}, {24, 16}, {4, 304}});
                ck.eq(cur[0].target_degree, 36LL, "delta=1 total");
                ck.eq(cur[1].target_degree, 480LL, "delta=2 total");
                ck.eq(cur[2].target_degree, 3200LL, "delta=3 total");
            } else {
                for (int d = 0; d < 3; ++d) {
                    ck.require(cur[d].entries.size() == first[d].entries.size(),
                               "seed " + std::to_string(s) + ": entry count drift");
                    for (size_t i = 0; i < cur[d].entries.size(); ++i) {
                        ck.require(cur[d].entries[i].count == first[d].entries[i].count &&
                                       cur[d].entries[i].multiplicity ==
                                           first[d].entries[i].multiplicity,
                                   "seed " + std::to_string(s) + ": ledger drift at delta " +
                                       std::to_string(d + 1));
                    }
                }
            }
        }
    }));

    out.push_back(run_check("3. triangle ledgers with re-evaluated derivations", 10, [](Checker& ck) {
        const long long want[4] = {0, 21, 132, 304};
        for (int delta = 1; delta <= 3; ++delta) {
            ComponentLedger l = triangle_ledger(delta);
            ck.eq(l.weighted_total(), want[delta], "triangle delta=" + std::to_string(delta));
            for (const TriangleEntry& e : triangle_entries(delta))
                ck.eq(e.derivation.eval(), BigInt(e.p_degree), "derivation of " + e.label);
        }
    }));

    out.push_back(run_check("4. Kummer ledgers", 100, [](Checker& ck) {
        ck.eq(kummer_ledger(1).weighted_total(), 36LL, "delta=1 total");
        ck.eq(kummer_ledger(2).weighted_total(), 480LL, "delta=2 total");
        ComponentLedger l3 = kummer_ledger(3);
        ck.eq(l3.weighted_total(), 3200LL, "delta=3 total");
        ck.eq(dual_surface_degree(4, 16, 0), BigInt(4), "dual Kummer degree");
        ck.eq(count_offtrope_triples(build_theta_model()), 240LL, "off-trope triples");
        ck.eq(dejonquieres(8, 0, 3), BigInt(80), "trope multiplicity");
    }));

    out.push_back(run_check("5. tangency counts of space curves", 10, [](Checker& ck) {
        ck.eq(dejonquieres(8, 0, 1), BigInt(14), "dejonquieres(8,0,1)");
        ck.eq(dejonquieres(8, 0, 2), BigInt(60), "dejonquieres(8,0,2)");
        ck.eq(dejonquieres(8, 0, 3), BigInt(80), "dejonquieres(8,0,3)");
        ck.eq(dejonquieres(6, 4, 1), BigInt(18), "dejonquieres(6,4,1)");
        ck.eq(dejonquieres(3, 0, 1), BigInt(4), "dejonquieres(3,0,1)");
        for (long long d = 1; d <= 12; ++d)
            for (long long g = 0; g <= d; ++g)
                ck.eq(dejonquieres(d, g, 0), BigInt(1),
                      "dejonquieres(" + std::to_string(d) + "," + std::to_string(g) + ",0)");
    }));

    out.push_back(run_check("6. plane-curve duality counts", 0, [](Checker& ck) {
        ck.eq(plucker_dual_degree(4, 1, 0), BigInt(10), "dual degree of a 1-nodal quartic");
        ck.eq(plucker_bitangents(4, 1, 0), BigInt(16), "bitangents of a 1-nodal quartic");
        ck.eq(plucker_flexes(3, 1, 0), BigInt(3), "flexes of a nodal cubic");
        for (long long d = 1; d <= 6; ++d)
            for (long long delta = 0; delta <= 10; ++delta)
                for (long long kappa = 0; kappa <= 10; ++kappa) {
                    BigInt g, ds, is, bs;
                    try {
                        g = plucker_genus(d, delta, kappa);
                        ds = plucker_dual_degree(d, delta, kappa);
                        is = plucker_flexes(d, delta, kappa);
                        bs = plucker_bitangents(d, delta, kappa);
                    } catch (const std::exception&) {
                        continue;  // inadmissible input
                    }
                    BigInt dual_genus = exact_div((ds - 1) * (ds - 2), 2) - bs - is;
                    ck.eq(dual_genus, g,
                          "genus consistency at (" + std::to_string(d) + "," +
                              std::to_string(delta) + "," + std::to_string(kappa) + ")");
                }
    }));

    out.push_back(run_check("7. elliptic pencil budgets", 0, [](Checker& ck) {
        ck.eq(pencil_nodal_count({12, 0, 2, {3, 2}}), BigInt(7), "budget with a tangency member");
        ck.eq(pencil_nodal_count({12, 0, 2, {3, 3}}), BigInt(6), "budget with a triple contact");
    }));

    out.push_back(run_check("8. 16_6 incidence invariants, both models", 100, [](Checker& ck) {
        IncidenceReport t = verify_incidence(build_theta_model());
        IncidenceReport g = verify_incidence(build_grid_model());
        ck.require(t.pass(), "theta model: " + (t.violations.empty() ? "" : t.violations.front()));
        ck.require(g.pass(), "grid model: " + (g.violations.empty() ? "" : g.violations.front()));
    }));

    out.push_back(run_check("9. configuration symmetry suite", 60000, [](Checker& ck) {
        Incidence16_6 theta = build_theta_model();
        PermGroup g = automorphism_group(theta);
        ck.eq(g.order(), static_cast<std::size_t>(11520), "automorphism group order");
        ck.require(is_k_transitive(g, 2), "2-transitivity on nodes");
        for (int t = 0; t < 16; ++t) {
            TropeStabilizerReport rep = trope_stabilizer_actions(theta, g, t);
            ck.eq(rep.image_on_incident.order(), static_cast<std::size_t>(720),
                  "stabilizer image on trope " + std::to_string(t));
            ck.require(rep.transitive_on_nonincident,
                       "stabilizer of trope " + std::to_string(t) + " on the other 10 nodes");
        }
        long long orbits = grid_offtrope_orbit_count(true);
        ck.require(orbits <= 2, "grid off-trope orbits <= 2");
        ck.eq(orbits, 2LL, "grid off-trope orbit count (golden)");
    }));

    out.push_back(run_check("10. triple point formula on the Kummer fibre", 1000, [](Checker& ck) {
        FibreGraph g = build_kummer_fibre();
        auto rows = check_triple_point_formula(g);
        ck.eq(rows.size(), static_cast<size_t>(128), "double curve count");
        for (const auto& r : rows)
            ck.require(r.pass, "curve " + r.curve + " lhs " + std::to_string(r.lhs));
        // Removing any single triple point must leave a nonzero residue.
        for (size_t ci = 0; ci < g.double_curves.size(); ++ci) {
            for (size_t ti = 0; ti < g.double_curves[ci].triple_points.size(); ++ti) {
                FibreGraph mutated = g;
                auto& tps = mutated.double_curves[ci].triple_points;
                tps.erase(tps.begin() + static_cast<long>(ti));
                auto mrows = check_triple_point_formula(mutated);
                ck.require(!mrows[ci].pass && mrows[ci].lhs != 0,
                           "mutation on " + g.double_curves[ci].name + " not detected");
            }
        }
    }));

    out.push_back(run_check("11. cross-module identities", 10000, [seed, jobs](Checker& ck) {
        TetraBuildOptions opts;
        opts.jobs = jobs;
        TetraConfig c = build_config(seed, opts);

        // Monoid crude limit: dual degree + triple-point plane = 21 + 15.
        long long triangle_d1 = triangle_ledger(1).target_degree;
        for (int face = 1; face <= 4; ++face) {
            ComponentLedger m = monoid_crude_limit(c, face);
            ck.eq(m.entries[0].count, triangle_d1, "monoid dual degree vs triangle total");
            long long plane_mult = m.entries[1].count * m.entries[1].multiplicity +
                                   m.entries[2].count * m.entries[2].multiplicity;
            ck.eq(plane_mult, 15LL, "triple-point plane multiplicity");
            ck.eq(m.entries[0].count + plane_mult, 36LL, "monoid total");
        }

        // Through-point audit on each face: 192 + 108 + 48 + 132 = 480.
        long long triangle_d2 = triangle_ledger(2).target_degree;
        for (int face = 0; face < 4; ++face) {
            const ProjPlane& fp = c.faces[face];
            long long off_face_pairs = 0;
            for (size_t i = 0; i < c.points.size(); ++i)
                for (size_t j = i + 1; j < c.points.size(); ++j) {
                    if (c.common_edge_of_points(c.points[i], c.points[j]) >= 0) continue;
                    if (incident(c.points[i], fp) && incident(c.points[j], fp)) continue;
                    ++off_face_pairs;
                }
            ck.eq(off_face_pairs, 192LL, "pairs with an edge off face " + std::to_string(face));

            long long vertex_combos = 0;
            for (int v = 0; v < 4; ++v)
                for (const ProjPoint& p : c.points) {
                    if (c.vertex_and_point_share_edge(v, p)) continue;
                    if (incident(p, fp) && incident(c.vertices[v], fp)) continue;
                    ++vertex_combos;
                }
            ck.eq(vertex_combos * 3, 108LL, "vertex-point combos through face " + std::to_string(face));

            long long edges_off_face = 0;
            for (int e = 0; e < 6; ++e)
                if (!(incident(c.vertices[c.edges[e].vertex_a], fp) &&
                      incident(c.vertices[c.edges[e].vertex_b], fp)))
                    ++edges_off_face;
            ck.eq(edges_off_face * 16, 48LL, "edge pencils through face " + std::to_string(face));

            ck.eq(off_face_pairs + vertex_combos * 3 + edges_off_face * 16 + triangle_d2,
                  to_int64(severi_degree(4, 2)), "through-point audit, face " + std::to_string(face));
        }
    }));

    return out;
}

}  // namespace enumera
