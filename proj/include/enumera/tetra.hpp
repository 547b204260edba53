#ifndef ENUMERA_TETRA_HPP
#define ENUMERA_TETRA_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "enumera/ledger.hpp"
#include "enumera/projective.hpp"

namespace enumera {

// Edge of the coordinate tetrahedron: the line cut out by two faces, spanned
// by the two complementary vertices.
struct TetraEdge {
    int face_a, face_b;      // face indices, face_a < face_b
    int vertex_a, vertex_b;  // complementary coordinate points, vertex_a < vertex_b
};

// A double point sits on one edge; the label records on which face its
// exceptional curve lives and which face that curve meets.
struct EdgePointLabel {
    int on_face;
    int meets_face;
    int sign;  // +1 or -1, distinguishing the two curves per ordered face pair
};

struct GenericityReport {
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

// The four coordinate faces, four vertices, six edges and 24 seeded double
// points (four per edge). Immutable after construction.
struct TetraConfig {
    std::array<ProjPlane, 4> faces;
    std::array<ProjPoint, 4> vertices;
    std::array<TetraEdge, 6> edges;
    std::vector<ProjPoint> points;        // 24, grouped four per edge
    std::vector<int> point_edge;          // edge index of each point
    std::vector<EdgePointLabel> point_labels;
    std::uint64_t seed = 0;

    // Exact incidence tests (never the stored combinatorial data).
    bool point_on_edge(const ProjPoint& p, int edge) const;
    bool vertex_on_edge(int vertex, int edge) const;
    int opposite_edge(int edge) const;  // the unique edge disjoint from this one
    // -1 when the two points share no edge.
    int common_edge_of_points(const ProjPoint& p, const ProjPoint& q) const;
    bool vertex_and_point_share_edge(int vertex, const ProjPoint& p) const;
    int face_index_of_plane(const ProjPlane& pl) const;  // -1 if not a face
    bool plane_contains_edge(const ProjPlane& pl, int edge) const;
};

struct TetraBuildOptions {
    int retry_budget = 32;
    long long max_height = 1000;  // bound on |numerator| and denominator of edge parameters
    int jobs = 1;
};

// Seeds the 24 double points at deterministic pseudo-random rational
// parameters and retries with perturbed seeds until the genericity
// certificate holds. Throws std::runtime_error when the budget is exhausted.
TetraConfig build_config(std::uint64_t seed, const TetraBuildOptions& opts = {});

// Certificate behind the ledgers: no unforced collinearity or coplanarity,
// and no spanned plane through a vertex.
GenericityReport verify_genericity(const TetraConfig& c, int jobs = 1);

// Brute-force classification of the delta-nodal limit components.
ComponentLedger enumerate_ledger(const TetraConfig& c, int delta, int jobs = 1);

// Crude delta=1 ledger for the monoid degeneration attached to one face
// (face_index in 1..4).
ComponentLedger monoid_crude_limit(const TetraConfig& c, int face_index);

}  // namespace enumera

#endif
