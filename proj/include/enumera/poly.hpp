#ifndef ENUMERA_POLY_HPP
#define ENUMERA_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "enumera/bigint.hpp"

namespace enumera {

// Sparse multivariate polynomial with big integer coefficients, keyed by
// exponent vectors. Invariant: no stored coefficient is zero; every exponent
// vector has one non-negative entry per variable.
class SparsePoly {
public:
    using Exponents = std::vector<int>;

    explicit SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static SparsePoly constant(std::vector<std::string> vars, const BigInt& c);
    static SparsePoly monomial(std::vector<std::string> vars, Exponents exps, const BigInt& c);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    // Accumulates c on the given exponent vector, pruning a zero result.
    void add_term(const Exponents& exps, const BigInt& c);

    SparsePoly& operator+=(const SparsePoly& other);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    bool operator==(const SparsePoly& other) const {
        return vars_ == other.vars_ && terms_ == other.terms_;
    }

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<Exponents, BigInt> terms_;

    void check_exponents(const Exponents& exps) const;
};

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_pow(const SparsePoly& a, long long e);
BigInt coefficient(const SparsePoly& p, const SparsePoly::Exponents& exps);

}  // namespace enumera

#endif
