#ifndef ENUMERA_FIBRE_HPP
#define ENUMERA_FIBRE_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace enumera {

// Blow-up record: the new exceptional basis class, and which named curves
// pass through the blown-up point with which multiplicity.
struct Blowup {
    std::string name;
    std::vector<std::pair<std::string, long long>> through;
};

// Intersection lattice of a component: a rational base (plane, smooth
// quadric, or Hirzebruch surface) extended by one (-1)-class per blow-up, or
// an opaque surface carrying recorded curve self-intersections.
struct SurfacePresentation {
    enum class Base { plane, quadric, hirzebruch, recorded };

    Base base = Base::plane;
    long long hirzebruch_n = 0;
    std::map<std::string, std::vector<long long>> curves;  // named base classes
    std::vector<Blowup> blowups;
    std::map<std::string, long long> recorded;  // name -> self-intersection

    std::size_t base_rank() const;
    std::size_t basis_size() const { return base_rank() + blowups.size(); }

    // v^T (lattice) v; the lattice is the base form plus a (-1) block.
    long long self_intersection(const std::vector<long long>& v) const;

    // Full class vector of a named curve or exceptional class.
    std::vector<long long> resolve(const std::string& name) const;
};

struct ClassRef {
    bool is_name = false;
    std::string name;
    std::vector<long long> vec;
};

struct CurveSide {
    std::string component;
    ClassRef cls;
};

struct TriplePointRef {
    std::string component;
    long long multiplicity = 1;
};

struct DoubleCurve {
    std::string name;
    CurveSide side_a, side_b;
    std::vector<TriplePointRef> triple_points;
};

struct FibreComponent {
    std::string name;
    long long multiplicity = 1;
    SurfacePresentation presentation;
};

// Labeled dual complex of a semistable central fibre.
struct FibreGraph {
    std::vector<FibreComponent> components;
    std::vector<DoubleCurve> double_curves;
    std::vector<std::string> metadata;

    const FibreComponent& component(const std::string& name) const;
    // Structural checks: distinct names, resolvable class references,
    // consistent triple-point multiplicities. Throws std::invalid_argument.
    void validate() const;

    nlohmann::ordered_json to_json() const;
    static FibreGraph from_json(const nlohmann::json& j);
};

struct TriplePointRow {
    std::string curve;
    long long lhs = 0;
    bool pass = false;
};

// Weighted triple point formula on every double curve R = Q cap Q':
// m' deg N_{R|Q} + m deg N_{R|Q'} + sum of triple-point multiplicities = 0.
std::vector<TriplePointRow> check_triple_point_formula(const FibreGraph& g);

// The 33-component semistable fibre of the Kummer degeneration: the minimal
// smooth model, sixteen blown-up quadrics over the nodes, and sixteen
// Hirzebruch surfaces over the contact conics.
FibreGraph build_kummer_fibre();

}  // namespace enumera

#endif
