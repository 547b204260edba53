#include "enumera/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace enumera {

SparsePoly SparsePoly::constant(std::vector<std::string> vars, const BigInt& c) {
    SparsePoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

SparsePoly SparsePoly::monomial(std::vector<std::string> vars, Exponents exps, const BigInt& c) {
    SparsePoly p(std::move(vars));
    p.add_term(exps, c);
    return p;
}

void SparsePoly::check_exponents(const Exponents& exps) const {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("SparsePoly: exponent vector length mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("SparsePoly: negative exponent");
}

void SparsePoly::add_term(const Exponents& exps, const BigInt& c) {
    check_exponents(exps);
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int SparsePoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (s > d) d = s;
    }
    return d;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
    if (vars_ != other.vars_)
        throw std::invalid_argument("SparsePoly: mismatched variable lists");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.str();
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            out << "*" << vars_[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b) {
    if (a.variables() != b.variables())
        throw std::invalid_argument("poly_mul: mismatched variable lists");
    SparsePoly r(a.variables());
    SparsePoly::Exponents e(a.variables().size());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

SparsePoly poly_pow(const SparsePoly& a, long long e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    SparsePoly r = SparsePoly::constant(a.variables(), 1);
    SparsePoly base = a;
    while (e > 0) {
        if (e & 1) r = poly_mul(r, base);
        e >>= 1;
        if (e > 0) base = poly_mul(base, base);
    }
    return r;
}

BigInt coefficient(const SparsePoly& p, const SparsePoly::Exponents& exps) {
    if (exps.size() != p.variables().size())
        throw std::invalid_argument("coefficient: exponent vector length mismatch");
    auto it = p.terms().find(exps);
    return it == p.terms().end() ? BigInt(0) : it->second;
}

}  // namespace enumera
