#include "enumera/formulas.hpp"

#include <stdexcept>
#include <string>

#include "enumera/poly.hpp"

namespace enumera {

BigInt severi_degree(long long k, int delta) {
    if (k < 2) throw std::invalid_argument("severi_degree: requires k >= 2");
    BigInt K(k);
    switch (delta) {
        case 1:
            return K * (K - 1) * (K - 1);
        case 2:
            return exact_div(K * (K - 1) * (K - 2) * (K * K * K - K * K + K - 12), 2);
        case 3: {
            BigInt p = ((((((K - 4) * K + 7) * K - 45) * K + 114) * K - 111) * K + 548) * K - 960;
            return exact_div(K * (K - 2) * p, 6);
        }
        default:
            throw std::invalid_argument("severi_degree: delta must be 1, 2 or 3");
    }
}

BigInt dual_surface_degree(long long k, long long nu, long long kappa) {
    if (k < 2) throw std::invalid_argument("dual_surface_degree: requires k >= 2");
    if (nu < 0 || kappa < 0)
        throw std::invalid_argument("dual_surface_degree: negative singularity count");
    BigInt K(k);
    BigInt r = K * (K - 1) * (K - 1) - 2 * nu - 3 * kappa;
    if (r < 0)
        throw std::domain_error("dual_surface_degree: configuration out of range (negative degree)");
    return r;
}

BigInt dejonquieres(long long d, long long g, long long tau) {
    if (tau < 0 || g < 0) throw std::invalid_argument("dejonquieres: negative input");
    if (2 * tau >= d) throw std::invalid_argument("dejonquieres: requires 2 tau < d");
    if (d - tau - g < 0) throw std::invalid_argument("dejonquieres: requires d - tau - g >= 0");
    const std::vector<std::string> vars{"u", "v"};
    SparsePoly a(vars);  // 1 + 4u + v
    a.add_term({0, 0}, 1);
    a.add_term({1, 0}, 4);
    a.add_term({0, 1}, 1);
    SparsePoly b(vars);  // 1 + 2u + v
    b.add_term({0, 0}, 1);
    b.add_term({1, 0}, 2);
    b.add_term({0, 1}, 1);
    SparsePoly p = poly_mul(poly_pow(a, g), poly_pow(b, d - tau - g));
    return coefficient(p, {static_cast<int>(tau), static_cast<int>(d - 2 * tau)});
}

BigInt plucker_genus(long long d, long long delta, long long kappa) {
    if (d < 1) throw std::invalid_argument("plucker: requires d >= 1");
    if (delta < 0 || kappa < 0)
        throw std::invalid_argument("plucker: negative singularity count");
    BigInt g = exact_div(BigInt(d - 1) * (d - 2), 2) - delta - kappa;
    if (g < 0) throw std::domain_error("plucker: negative geometric genus");
    return g;
}

BigInt plucker_dual_degree(long long d, long long delta, long long kappa) {
    plucker_genus(d, delta, kappa);
    BigInt r = BigInt(d) * (d - 1) - 2 * delta - 3 * kappa;
    if (r < 0) throw std::domain_error("plucker_dual_degree: out of range");
    return r;
}

BigInt plucker_flexes(long long d, long long delta, long long kappa) {
    plucker_genus(d, delta, kappa);
    BigInt r = 3 * BigInt(d) * (d - 2) - 6 * delta - 8 * kappa;
    if (r < 0) throw std::domain_error("plucker_flexes: out of range");
    return r;
}

BigInt plucker_bitangents(long long d, long long delta, long long kappa) {
    BigInt ds = plucker_dual_degree(d, delta, kappa);
    BigInt is = plucker_flexes(d, delta, kappa);
    BigInt num = ds * (ds - 1) - 3 * is - d;
    if (num < 0 || num % 2 != 0)
        throw std::domain_error("plucker_bitangents: inconsistent input");
    return exact_div(num, 2);
}

BigInt pencil_nodal_count(const PencilBudget& b) {
    BigInt r = BigInt(b.chi_surface) - BigInt(b.chi_generic_fibre) * b.chi_base;
    for (long long s : b.special_fibres) r -= BigInt(s) - b.chi_generic_fibre;
    return r;
}

BigInt polar_tangency_correction(const BigInt& base, const BigInt& correction) {
    if (base < 2 * correction)
        throw std::invalid_argument("polar_tangency_correction: base < 2*correction");
    return base - 2 * correction;
}

BigInt riemann_hurwitz_branch_count(long long degree_n, long long genus_source,
                                    long long genus_target) {
    if (degree_n < 1) throw std::invalid_argument("riemann_hurwitz: requires degree >= 1");
    BigInt b = BigInt(2) * genus_source - 2 - BigInt(degree_n) * (2 * genus_target - 2);
    if (b < 0) throw std::domain_error("riemann_hurwitz: negative branch count");
    return b;
}

}  // namespace enumera
