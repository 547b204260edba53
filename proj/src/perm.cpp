#include "enumera/perm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace enumera {

Perm perm_identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
    return p;
}

bool perm_is_valid(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (std::uint8_t v : p) {
        if (v >= p.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint8_t>(i);
    return r;
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens,
                                     std::size_t cache_limit) {
    for (const Perm& g : gens)
        if (g.size() != static_cast<size_t>(degree) || !perm_is_valid(g))
            throw std::invalid_argument("PermGroup: invalid generator");
    std::set<Perm> closed;
    std::deque<Perm> queue;
    closed.insert(perm_identity(degree));
    queue.push_back(perm_identity(degree));
    while (!queue.empty()) {
        Perm cur = queue.front();
        queue.pop_front();
        for (const Perm& g : gens) {
            Perm next = perm_compose(cur, g);
            if (closed.insert(next).second) {
                if (closed.size() > cache_limit)
                    throw std::runtime_error("PermGroup: order exceeds cache limit " +
                                             std::to_string(cache_limit));
                queue.push_back(std::move(next));
            }
        }
    }
    PermGroup grp;
    grp.degree = degree;
    grp.generators = std::move(gens);
    grp.elements.assign(closed.begin(), closed.end());
    return grp;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    PermGroup grp;
    grp.degree = degree;
    grp.elements = std::move(elems);

    // Greedy generating set: add elements until the closure fills the group.
    std::set<Perm> closed{perm_identity(degree)};
    for (const Perm& e : grp.elements) {
        if (closed.count(e)) continue;
        grp.generators.push_back(e);
        std::deque<Perm> queue(closed.begin(), closed.end());
        while (!queue.empty()) {
            Perm cur = queue.front();
            queue.pop_front();
            for (const Perm& g : grp.generators) {
                Perm next = perm_compose(cur, g);
                if (closed.insert(next).second) queue.push_back(std::move(next));
            }
        }
        if (closed.size() == grp.elements.size()) break;
    }
    return grp;
}

bool is_k_transitive(const PermGroup& g, int k) {
    if (k < 1 || k > g.degree) throw std::invalid_argument("is_k_transitive: bad k");
    const std::vector<Perm>& gens = g.generators.empty() ? g.elements : g.generators;
    std::vector<int> start(k);
    for (int i = 0; i < k; ++i) start[i] = i;
    std::set<std::vector<int>> orbit{start};
    std::deque<std::vector<int>> queue{start};
    while (!queue.empty()) {
        std::vector<int> cur = queue.front();
        queue.pop_front();
        for (const Perm& p : gens) {
            std::vector<int> next(k);
            for (int i = 0; i < k; ++i) next[i] = p[cur[i]];
            if (orbit.insert(next).second) queue.push_back(std::move(next));
        }
    }
    unsigned long long want = 1;
    for (int i = 0; i < k; ++i) want *= static_cast<unsigned long long>(g.degree - i);
    return orbit.size() == want;
}

long long triple_orbit_count(int degree, const std::vector<Perm>& gens,
                             const std::vector<std::array<int, 3>>& triples) {
    for (const Perm& g : gens)
        if (g.size() != static_cast<size_t>(degree) || !perm_is_valid(g))
            throw std::invalid_argument("triple_orbit_count: invalid generator");
    std::map<std::array<int, 3>, int> index;
    for (size_t i = 0; i < triples.size(); ++i) index[triples[i]] = static_cast<int>(i);
    std::vector<bool> seen(triples.size(), false);
    long long orbits = 0;
    for (size_t s = 0; s < triples.size(); ++s) {
        if (seen[s]) continue;
        ++orbits;
        std::deque<std::array<int, 3>> queue{triples[s]};
        seen[s] = true;
        while (!queue.empty()) {
            auto cur = queue.front();
            queue.pop_front();
            for (const Perm& p : gens) {
                std::array<int, 3> next{p[cur[0]], p[cur[1]], p[cur[2]]};
                std::sort(next.begin(), next.end());
                auto it = index.find(next);
                if (it == index.end())
                    throw std::logic_error("triple_orbit_count: orbit leaves the given family");
                if (!seen[it->second]) {
                    seen[it->second] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    return orbits;
}

}  // namespace enumera
