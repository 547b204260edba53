#ifndef ENUMERA_TRIANGLE_HPP
#define ENUMERA_TRIANGLE_HPP

#include <string>
#include <vector>

#include "enumera/bigint.hpp"
#include "enumera/ledger.hpp"

namespace enumera {

// Expression tree over the formula operations and cited integer constants;
// every ledger entry re-evaluates its derivation at build time.
struct Derivation {
    enum class Kind { constant, call, product };
    Kind kind = Kind::constant;
    long long value = 0;
    std::string note;              // what a constant counts
    std::string op;                // call target in the formulas module
    std::vector<Derivation> args;  // call arguments or product factors

    static Derivation constant(long long v, std::string note = "");
    static Derivation call(std::string op, std::vector<Derivation> args);
    static Derivation product(std::vector<Derivation> factors);

    BigInt eval() const;
    std::string text() const;
};

// One component of the plane-quartics-through-twelve-points system: the
// degree of the component against general points on the plane part, its
// tacnode multiplicity, and how the degree is derived.
struct TriangleEntry {
    std::string label;
    long long p_degree = 0;
    long long multiplicity = 1;
    Derivation derivation;
};

// All components for the given delta, including those of P-degree zero.
// Throws std::logic_error if any derivation fails to reproduce its p_degree.
std::vector<TriangleEntry> triangle_entries(int delta);

// The weighted ledger (P-degree-zero components reported separately, not
// here); totals 21 / 132 / 304 for delta = 1 / 2 / 3.
ComponentLedger triangle_ledger(int delta);

}  // namespace enumera

#endif
