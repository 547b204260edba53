#include <doctest.h>

#include "enumera/formulas.hpp"

using namespace enumera;

namespace {

// Independent route for the three-node Severi degree: big-integer Horner
// evaluation of the degree-7 factor.
BigInt severi3_horner(long long k) {
    const long long coeffs[] = {1, -4, 7, -45, 114, -111, 548, -960};
    BigInt acc = 0;
    for (long long c : coeffs) acc = acc * k + c;
    return exact_div(BigInt(k) * (k - 2) * acc, 6);
}

}  // namespace

TEST_CASE("Severi degrees of a quartic") {
    CHECK(severi_degree(4, 1) == 36);
    CHECK(severi_degree(4, 2) == 480);
    CHECK(severi_degree(4, 3) == 3200);
}

TEST_CASE("Severi degree edge values and errors") {
    CHECK(severi_degree(2, 1) == 2);
    CHECK(severi_degree(2, 2) == 0);
    CHECK(severi_degree(3, 3) == severi3_horner(3));
    CHECK(severi_degree(3, 3) == 45);
    for (long long k = 2; k <= 12; ++k) CHECK(severi_degree(k, 3) == severi3_horner(k));
    CHECK_THROWS_AS(severi_degree(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(severi_degree(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(severi_degree(1, 1), std::invalid_argument);
}

TEST_CASE("smooth dual degree agrees with the one-node Severi degree") {
    for (long long k = 2; k <= 12; ++k)
        CHECK(severi_degree(k, 1) == dual_surface_degree(k, 0, 0));
}

TEST_CASE("dual surface degrees with nodes and cusps") {
    CHECK(dual_surface_degree(4, 16, 0) == 4);
    CHECK(dual_surface_degree(3, 0, 3) == 3);
    CHECK(dual_surface_degree(3, 0, 1) == 9);
    CHECK(dual_surface_degree(4, 0, 0) == 36);
    CHECK_THROWS_AS(dual_surface_degree(2, 10, 0), std::domain_error);
    CHECK_THROWS_AS(dual_surface_degree(4, -1, 0), std::invalid_argument);
}

TEST_CASE("tangency counts") {
    CHECK(dejonquieres(8, 0, 1) == 14);
    CHECK(dejonquieres(8, 0, 2) == 60);
    CHECK(dejonquieres(8, 0, 3) == 80);
    CHECK(dejonquieres(6, 4, 1) == 18);
    CHECK(dejonquieres(3, 0, 1) == 4);
    for (long long d = 1; d <= 12; ++d)
        for (long long g = 0; g <= d; ++g) CHECK(dejonquieres(d, g, 0) == 1);
    CHECK_THROWS_AS(dejonquieres(4, 0, 2), std::invalid_argument);   // 2 tau = d
    CHECK_THROWS_AS(dejonquieres(8, 8, 1), std::invalid_argument);   // d - tau - g < 0
    CHECK_THROWS_AS(dejonquieres(8, -1, 1), std::invalid_argument);
}

TEST_CASE("plane-curve dual degrees") {
    CHECK(plucker_dual_degree(4, 1, 0) == 10);
    CHECK(plucker_dual_degree(2, 0, 0) == 2);
    CHECK(plucker_dual_degree(3, 1, 0) == 4);
    CHECK_THROWS_AS(plucker_dual_degree(3, 2, 0), std::domain_error);  // genus < 0
}

TEST_CASE("flex counts") {
    CHECK(plucker_flexes(3, 1, 0) == 3);
    CHECK(plucker_flexes(3, 0, 0) == 9);  // Hessian intersection 3d(d-2)
    CHECK(plucker_flexes(2, 0, 0) == 0);
}

TEST_CASE("bitangent counts") {
    CHECK(plucker_bitangents(4, 1, 0) == 16);
    CHECK(plucker_bitangents(2, 0, 0) == 0);
    // by hand: d* = 12, flexes 24, (132 - 4 - 72) / 2
    CHECK(plucker_bitangents(4, 0, 0) == 28);
}

TEST_CASE("class-level biduality round trip") {
    for (long long d = 2; d <= 6; ++d)
        for (long long delta = 0; delta <= 10; ++delta) {
            BigInt ds, is, bs;
            try {
                ds = plucker_dual_degree(d, delta, 0);
                is = plucker_flexes(d, delta, 0);
                bs = plucker_bitangents(d, delta, 0);
            } catch (const std::exception&) {
                continue;
            }
            CHECK(ds * (ds - 1) - 2 * bs - 3 * is == d);
        }
}

TEST_CASE("genus consistency between a curve and its dual") {
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
                    continue;
                }
                CHECK(exact_div((ds - 1) * (ds - 2), 2) - bs - is == g);
            }
}

TEST_CASE("pencil budgets") {
    CHECK(pencil_nodal_count({12, 0, 2, {3, 2}}) == 7);
    CHECK(pencil_nodal_count({12, 0, 2, {3, 3}}) == 6);
    CHECK(pencil_nodal_count({0, 0, 2, {}}) == 0);
}

TEST_CASE("polar tangency correction") {
    CHECK(polar_tangency_correction(36, 4) == 28);
    CHECK(polar_tangency_correction(17, 0) == 17);
    CHECK(polar_tangency_correction(36, 18) == 0);
    CHECK_THROWS_AS(polar_tangency_correction(10, 6), std::invalid_argument);
}

TEST_CASE("branch point counts") {
    CHECK(riemann_hurwitz_branch_count(3) == 4);
    CHECK(riemann_hurwitz_branch_count(2) == 2);
    CHECK(riemann_hurwitz_branch_count(1) == 0);
    CHECK(riemann_hurwitz_branch_count(2, 2, 1) == 2);  // genus-2 double cover of elliptic
    CHECK_THROWS_AS(riemann_hurwitz_branch_count(0), std::invalid_argument);
    CHECK_THROWS_AS(riemann_hurwitz_branch_count(3, 0, 1), std::domain_error);
}
