#ifndef ENUMERA_PERM_HPP
#define ENUMERA_PERM_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace enumera {

// A permutation of {0,...,n-1} stored as its image vector.
using Perm = std::vector<std::uint8_t>;

Perm perm_identity(int n);
bool perm_is_valid(const Perm& p);
// Applies a first, then b.
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);

// A finite permutation group cached as its full, sorted element set.
struct PermGroup {
    int degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> elements;  // sorted; contains the identity

    std::size_t order() const { return elements.size(); }
    bool contains(const Perm& p) const;

    // Closure of the generators; throws std::runtime_error past cache_limit.
    static PermGroup from_generators(int degree, std::vector<Perm> gens,
                                     std::size_t cache_limit = 100000);
    // Wraps an already-closed element set and extracts a small generating set.
    static PermGroup from_elements(int degree, std::vector<Perm> elems);
};

// Orbit of an ordered k-tuple spans all n(n-1)...(n-k+1) of them.
bool is_k_transitive(const PermGroup& g, int k);

// Number of orbits on a family of unordered triples (each given sorted).
long long triple_orbit_count(int degree, const std::vector<Perm>& gens,
                             const std::vector<std::array<int, 3>>& triples);

}  // namespace enumera

#endif
