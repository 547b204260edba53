#ifndef ENUMERA_INCIDENCE_HPP
#define ENUMERA_INCIDENCE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "enumera/ledger.hpp"
#include "enumera/perm.hpp"

namespace enumera {

// Bipartite incidence structure of 16 nodes and 16 tropes where every node
// lies on 6 tropes, every trope holds 6 nodes, and every pair on either side
// shares exactly 2 of the other.
struct Incidence16_6 {
    std::array<std::uint16_t, 16> node_tropes{};  // tropes through each node
    std::array<std::uint16_t, 16> trope_nodes{};  // nodes on each trope
    std::vector<std::string> node_labels;
    std::vector<std::string> trope_labels;

    bool incident(int node, int trope) const {
        return (node_tropes[node] >> trope) & 1u;
    }
};

// Nodes indexed by the empty set and the 2-subsets of {1..6}; tropes by the
// 1-subsets and the 3-subsets modulo complement.
Incidence16_6 build_theta_model();

// Nodes on a 4x4 grid; the trope at (x,y) holds the other three cells of row
// x and of column y.
Incidence16_6 build_grid_model();

struct IncidenceReport {
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

// Exhaustive check of all row/column sums and pair intersections.
IncidenceReport verify_incidence(const Incidence16_6& inc);

// 3-subsets of nodes lying on no common trope.
long long count_offtrope_triples(const Incidence16_6& inc);

std::vector<std::array<int, 3>> offtrope_triples(const Incidence16_6& inc);
std::vector<std::array<int, 3>> ontrope_triples(const Incidence16_6& inc);

// Node permutations extendable to incidence-preserving trope permutations,
// found by exhaustive backtracking with per-trope candidate pruning.
PermGroup automorphism_group(const Incidence16_6& inc,
                             unsigned long long search_budget = 500000000ULL);

// Order of the induced action on tropes (node/trope self-duality check).
std::size_t trope_action_order(const Incidence16_6& inc, const PermGroup& g);

struct TropeStabilizerReport {
    std::size_t stabilizer_order = 0;
    PermGroup image_on_incident;             // action on the 6 incident nodes
    bool transitive_on_nonincident = false;  // action on the 10 others
};

TropeStabilizerReport trope_stabilizer_actions(const Incidence16_6& inc, const PermGroup& g,
                                               int trope);

// Orbit count of row permutations x column permutations (optionally extended
// by the row/column swap) on the grid model's off-trope triples.
long long grid_offtrope_orbit_count(bool include_swap);
// Same group acting on the on-trope triples, for the report.
long long grid_ontrope_orbit_count(bool include_swap);

// Component ledgers of the Kummer degeneration; totals 36 / 480 / 3200.
ComponentLedger kummer_ledger(int delta);

std::vector<std::string> incidence_ascii(const Incidence16_6& inc);
nlohmann::ordered_json incidence_json(const Incidence16_6& inc);

}  // namespace enumera

#endif
