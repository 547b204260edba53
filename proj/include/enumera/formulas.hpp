#ifndef ENUMERA_FORMULAS_HPP
#define ENUMERA_FORMULAS_HPP

#include <vector>

#include "enumera/bigint.hpp"

namespace enumera {

// Degree of the variety of delta-nodal plane sections of a general degree-k
// surface in 3-space, for delta in {1,2,3}.
BigInt severi_degree(long long k, int delta);

// Degree of the dual surface of a degree-k surface whose only singularities
// are nu ordinary nodes and kappa cusp-type double points:
// k(k-1)^2 - 2 nu - 3 kappa.
BigInt dual_surface_degree(long long k, long long nu, long long kappa);

// Number of hyperplanes tangent to a non-degenerate unramified curve of
// degree d and genus g at tau distinct points: the coefficient of
// u^tau v^(d-2tau) in (1+4u+v)^g (1+2u+v)^(d-tau-g). Requires 2 tau < d.
BigInt dejonquieres(long long d, long long g, long long tau);

// Plane-curve invariants for curves with delta nodes and kappa cusps only.
BigInt plucker_dual_degree(long long d, long long delta, long long kappa);
BigInt plucker_flexes(long long d, long long delta, long long kappa);
// Bitangent count, solved from d = d*(d*-1) - 2 delta* - 3 iota*.
BigInt plucker_bitangents(long long d, long long delta, long long kappa);

// Geometric genus (d-1)(d-2)/2 - delta - kappa; validates the input.
BigInt plucker_genus(long long d, long long delta, long long kappa);

struct PencilBudget {
    long long chi_surface = 0;
    long long chi_generic_fibre = 0;
    long long chi_base = 0;
    std::vector<long long> special_fibres;  // Euler characteristics
};

// Euler-characteristic budget of a fibred surface: the part of
// chi(S) - chi(F_gen) chi(B) not accounted for by the listed special fibres.
// Each unlisted singular fibre counts +1 when the generic fibre is elliptic.
BigInt pencil_nodal_count(const PencilBudget& b);

// Removes a multiplicity-2 excess component from a tangency count.
BigInt polar_tangency_correction(const BigInt& base, const BigInt& correction);

// Branch point count of a degree-n map between smooth curves of the given
// genera (Riemann-Hurwitz); 2n-2 for rational source and target.
BigInt riemann_hurwitz_branch_count(long long degree_n, long long genus_source = 0,
                                    long long genus_target = 0);

}  // namespace enumera

#endif
