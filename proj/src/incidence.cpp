#include "enumera/incidence.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

#include "enumera/formulas.hpp"

namespace enumera {

namespace {

void set_incident(Incidence16_6& inc, int node, int trope) {
    inc.node_tropes[node] |= static_cast<std::uint16_t>(1u << trope);
    inc.trope_nodes[trope] |= static_cast<std::uint16_t>(1u << node);
}

}  // namespace

Incidence16_6 build_theta_model() {
    Incidence16_6 inc;
    // Node 0 is the empty set; nodes 1..15 are the 2-subsets of {1..6}.
    std::vector<std::pair<int, int>> pairs;
    inc.node_labels.push_back("{}");
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) {
            pairs.emplace_back(a, b);
            inc.node_labels.push_back("{" + std::to_string(a) + "," + std::to_string(b) + "}");
        }
    // Tropes 0..5 are the 1-subsets; tropes 6..15 the 3-subsets through 1,
    // each representing the class {T, complement(T)}.
    std::vector<std::array<int, 3>> trips;
    for (int i = 1; i <= 6; ++i) inc.trope_labels.push_back("{" + std::to_string(i) + "}");
    for (int b = 2; b <= 6; ++b)
        for (int c = b + 1; c <= 6; ++c) {
            trips.push_back({1, b, c});
            inc.trope_labels.push_back("{1," + std::to_string(b) + "," + std::to_string(c) + "}~c");
        }

    for (int i = 0; i < 6; ++i) {
        set_incident(inc, 0, i);  // the empty set lies on every 1-subset trope
        for (size_t p = 0; p < pairs.size(); ++p)
            if (pairs[p].first == i + 1 || pairs[p].second == i + 1)
                set_incident(inc, static_cast<int>(p) + 1, i);
    }
    for (size_t t = 0; t < trips.size(); ++t) {
        unsigned mask = 0;
        for (int x : trips[t]) mask |= 1u << x;
        unsigned comp = 0x7E & ~mask;  // complement inside {1..6}
        for (size_t p = 0; p < pairs.size(); ++p) {
            unsigned pm = (1u << pairs[p].first) | (1u << pairs[p].second);
            if ((pm & mask) == pm || (pm & comp) == pm)
                set_incident(inc, static_cast<int>(p) + 1, static_cast<int>(t) + 6);
        }
    }
    return inc;
}

Incidence16_6 build_grid_model() {
    Incidence16_6 inc;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            inc.node_labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
            inc.trope_labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    if ((a == x && b != y) || (b == y && a != x))
                        set_incident(inc, 4 * a + b, 4 * x + y);
    return inc;
}

IncidenceReport verify_incidence(const Incidence16_6& inc) {
    IncidenceReport rep;
    for (int i = 0; i < 16; ++i) {
        if (std::popcount(inc.node_tropes[i]) != 6)
            rep.violations.push_back("node " + inc.node_labels[i] + " lies on " +
                                     std::to_string(std::popcount(inc.node_tropes[i])) +
                                     " tropes, expected 6");
        if (std::popcount(inc.trope_nodes[i]) != 6)
            rep.violations.push_back("trope " + inc.trope_labels[i] + " holds " +
                                     std::to_string(std::popcount(inc.trope_nodes[i])) +
                                     " nodes, expected 6");
    }
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j) {
            int shared_tropes = std::popcount(
                static_cast<unsigned>(inc.node_tropes[i] & inc.node_tropes[j]));
            if (shared_tropes != 2)
                rep.violations.push_back("nodes " + inc.node_labels[i] + "," +
                                         inc.node_labels[j] + " share " +
                                         std::to_string(shared_tropes) + " tropes, expected 2");
            int shared_nodes = std::popcount(
                static_cast<unsigned>(inc.trope_nodes[i] & inc.trope_nodes[j]));
            if (shared_nodes != 2)
                rep.violations.push_back("tropes " + inc.trope_labels[i] + "," +
                                         inc.trope_labels[j] + " share " +
                                         std::to_string(shared_nodes) + " nodes, expected 2");
        }
    // Consistency of the two stored directions.
    for (int n = 0; n < 16; ++n)
        for (int t = 0; t < 16; ++t)
            if (((inc.node_tropes[n] >> t) & 1u) != ((inc.trope_nodes[t] >> n) & 1u))
                rep.violations.push_back("incidence matrix not symmetric in its two encodings");
    return rep;
}

std::vector<std::array<int, 3>> offtrope_triples(const Incidence16_6& inc) {
    std::vector<std::array<int, 3>> v;
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j)
            for (int k = j + 1; k < 16; ++k)
                if ((inc.node_tropes[i] & inc.node_tropes[j] & inc.node_tropes[k]) == 0)
                    v.push_back({i, j, k});
    return v;
}

std::vector<std::array<int, 3>> ontrope_triples(const Incidence16_6& inc) {
    std::vector<std::array<int, 3>> v;
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j)
            for (int k = j + 1; k < 16; ++k)
                if ((inc.node_tropes[i] & inc.node_tropes[j] & inc.node_tropes[k]) != 0)
                    v.push_back({i, j, k});
    return v;
}

long long count_offtrope_triples(const Incidence16_6& inc) {
    return static_cast<long long>(offtrope_triples(inc).size());
}

namespace {

struct AutoSearch {
    const Incidence16_6& inc;
    unsigned long long budget;
    unsigned long long visited = 0;
    std::array<std::uint8_t, 16> img{};
    std::uint16_t used = 0;
    std::vector<Perm> found;

    explicit AutoSearch(const Incidence16_6& i, unsigned long long b) : inc(i), budget(b) {}

    void run() {
        std::array<std::uint16_t, 16> cand;
        cand.fill(0xFFFF);
        extend(0, cand);
    }

    void extend(int depth, const std::array<std::uint16_t, 16>& cand) {
        if (++visited > budget)
            throw std::runtime_error("automorphism_group: search budget exceeded");
        if (depth == 16) {
            finish();
            return;
        }
        for (int w = 0; w < 16; ++w) {
            if ((used >> w) & 1u) continue;
            std::array<std::uint16_t, 16> next = cand;
            bool ok = true;
            for (int t = 0; t < 16 && ok; ++t) {
                if ((inc.trope_nodes[t] >> depth) & 1u)
                    next[t] &= inc.node_tropes[w];
                else
                    next[t] &= static_cast<std::uint16_t>(~inc.node_tropes[w]);
                if (next[t] == 0) ok = false;
            }
            if (!ok) continue;
            img[depth] = static_cast<std::uint8_t>(w);
            used |= static_cast<std::uint16_t>(1u << w);
            extend(depth + 1, next);
            used &= static_cast<std::uint16_t>(~(1u << w));
        }
    }

    void finish() {
        // The trope map induced by the node images must be a bijection onto
        // the trope node-sets.
        std::uint16_t seen = 0;
        for (int t = 0; t < 16; ++t) {
            std::uint16_t image_mask = 0;
            for (int n = 0; n < 16; ++n)
                if ((inc.trope_nodes[t] >> n) & 1u)
                    image_mask |= static_cast<std::uint16_t>(1u << img[n]);
            int target = -1;
            for (int u = 0; u < 16; ++u)
                if (inc.trope_nodes[u] == image_mask) target = u;
            if (target < 0 || ((seen >> target) & 1u)) return;
            seen |= static_cast<std::uint16_t>(1u << target);
        }
        found.emplace_back(img.begin(), img.end());
    }
};

}  // namespace

PermGroup automorphism_group(const Incidence16_6& inc, unsigned long long search_budget) {
    AutoSearch search(inc, search_budget);
    search.run();
    return PermGroup::from_elements(16, std::move(search.found));
}

std::size_t trope_action_order(const Incidence16_6& inc, const PermGroup& g) {
    std::set<Perm> trope_perms;
    for (const Perm& p : g.elements) {
        Perm tp(16);
        for (int t = 0; t < 16; ++t) {
            std::uint16_t image_mask = 0;
            for (int n = 0; n < 16; ++n)
                if ((inc.trope_nodes[t] >> n) & 1u)
                    image_mask |= static_cast<std::uint16_t>(1u << p[n]);
            int target = -1;
            for (int u = 0; u < 16; ++u)
                if (inc.trope_nodes[u] == image_mask) target = u;
            if (target < 0)
                throw std::logic_error("trope_action_order: element does not map tropes to tropes");
            tp[t] = static_cast<std::uint8_t>(target);
        }
        trope_perms.insert(std::move(tp));
    }
    return trope_perms.size();
}

TropeStabilizerReport trope_stabilizer_actions(const Incidence16_6& inc, const PermGroup& g,
                                               int trope) {
    if (trope < 0 || trope >= 16)
        throw std::invalid_argument("trope_stabilizer_actions: bad trope index");
    const std::uint16_t mask = inc.trope_nodes[trope];
    std::vector<int> incident, others;
    for (int n = 0; n < 16; ++n) ((mask >> n) & 1u ? incident : others).push_back(n);

    std::vector<Perm> stab;
    for (const Perm& p : g.elements) {
        std::uint16_t image_mask = 0;
        for (int n : incident) image_mask |= static_cast<std::uint16_t>(1u << p[n]);
        if (image_mask == mask) stab.push_back(p);
    }

    TropeStabilizerReport rep;
    rep.stabilizer_order = stab.size();

    std::vector<Perm> image6;
    std::array<int, 16> pos{};
    for (size_t i = 0; i < incident.size(); ++i) pos[incident[i]] = static_cast<int>(i);
    for (const Perm& p : stab) {
        Perm q(6);
        for (int n : incident) q[pos[n]] = static_cast<std::uint8_t>(pos[p[n]]);
        image6.push_back(std::move(q));
    }
    rep.image_on_incident = PermGroup::from_elements(6, std::move(image6));

    std::set<int> orbit{others[0]};
    std::vector<int> queue{others[0]};
    while (!queue.empty()) {
        int cur = queue.back();
        queue.pop_back();
        for (const Perm& p : stab) {
            int next = p[cur];
            if (orbit.insert(next).second) queue.push_back(next);
        }
    }
    rep.transitive_on_nonincident = orbit.size() == others.size();
    return rep;
}

namespace {

std::vector<Perm> grid_group_generators(bool include_swap) {
    std::vector<Perm> gens;
    auto cell = [](int a, int b) { return 4 * a + b; };
    for (int i = 0; i < 3; ++i) {  // adjacent row swaps
        Perm p = perm_identity(16);
        for (int b = 0; b < 4; ++b) {
            p[cell(i, b)] = static_cast<std::uint8_t>(cell(i + 1, b));
            p[cell(i + 1, b)] = static_cast<std::uint8_t>(cell(i, b));
        }
        gens.push_back(p);
    }
    for (int i = 0; i < 3; ++i) {  // adjacent column swaps
        Perm p = perm_identity(16);
        for (int a = 0; a < 4; ++a) {
            p[cell(a, i)] = static_cast<std::uint8_t>(cell(a, i + 1));
            p[cell(a, i + 1)] = static_cast<std::uint8_t>(cell(a, i));
        }
        gens.push_back(p);
    }
    if (include_swap) {
        Perm p(16);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) p[cell(a, b)] = static_cast<std::uint8_t>(cell(b, a));
        gens.push_back(p);
    }
    return gens;
}

}  // namespace

long long grid_offtrope_orbit_count(bool include_swap) {
    Incidence16_6 grid = build_grid_model();
    return triple_orbit_count(16, grid_group_generators(include_swap), offtrope_triples(grid));
}

long long grid_ontrope_orbit_count(bool include_swap) {
    Incidence16_6 grid = build_grid_model();
    return triple_orbit_count(16, grid_group_generators(include_swap), ontrope_triples(grid));
}

ComponentLedger kummer_ledger(int delta) {
    ComponentLedger ledger;
    ledger.target_name = "Kummer degeneration, delta=" + std::to_string(delta);
    switch (delta) {
        case 1: {
            long long dual = to_int64(dual_surface_degree(4, 16, 0));
            ledger.target_degree = 36;
            ledger.entries.push_back({"dual Kummer surface", dual, 1,
                                      "dual_surface_degree(4,16,0)"});
            ledger.entries.push_back({"webs of planes through a node", 16, 2,
                                      "recorded multiplicity 2 per node"});
            break;
        }
        case 2: {
            long long pairs = to_int64(binomial(16, 2));
            ledger.target_degree = 480;
            ledger.entries.push_back({"pencils of planes through two nodes", pairs, 4,
                                      "binomial(16,2) pairs; recorded multiplicity 4"});
            break;
        }
        case 3: {
            long long offtrope = count_offtrope_triples(build_theta_model());
            long long trope_mult = to_int64(dejonquieres(8, 0, 3));
            ledger.target_degree = 3200;
            ledger.entries.push_back({"planes through three nodes on no common trope", offtrope, 8,
                                      "exhaustive triple scan; recorded multiplicity 8"});
            ledger.entries.push_back({"tangent planes of the configuration", 16, trope_mult,
                                      "multiplicity dejonquieres(8,0,3)"});
            break;
        }
        default:
            throw std::invalid_argument("kummer_ledger: delta must be 1, 2 or 3");
    }
    ledger.validate();
    return ledger;
}

std::vector<std::string> incidence_ascii(const Incidence16_6& inc) {
    std::vector<std::string> lines;
    for (int n = 0; n < 16; ++n) {
        std::string row(16, '.');
        for (int t = 0; t < 16; ++t)
            if (inc.incident(n, t)) row[t] = '1';
        lines.push_back(row);
    }
    return lines;
}

nlohmann::ordered_json incidence_json(const Incidence16_6& inc) {
    nlohmann::ordered_json j;
    j["nodes"] = inc.node_labels;
    j["tropes"] = inc.trope_labels;
    j["matrix"] = incidence_ascii(inc);
    return j;
}

}  // namespace enumera
