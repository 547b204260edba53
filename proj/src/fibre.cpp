#include "enumera/fibre.hpp"

#include <set>
#include <stdexcept>

#include "enumera/incidence.hpp"

namespace enumera {

std::size_t SurfacePresentation::base_rank() const {
    switch (base) {
        case Base::plane: return 1;
        case Base::quadric: return 2;
        case Base::hirzebruch: return 2;
        case Base::recorded: return 0;
    }
    return 0;
}

long long SurfacePresentation::self_intersection(const std::vector<long long>& v) const {
    if (base == Base::recorded)
        throw std::invalid_argument("self_intersection: opaque presentation has no lattice");
    if (v.size() != basis_size())
        throw std::invalid_argument("self_intersection: class vector length " +
                                    std::to_string(v.size()) + " != basis size " +
                                    std::to_string(basis_size()));
    long long s = 0;
    switch (base) {
        case Base::plane:
            s = v[0] * v[0];  // <H>, H^2 = 1
            break;
        case Base::quadric:
            s = 2 * v[0] * v[1];  // <L',L''>, L'^2 = L''^2 = 0, L'.L'' = 1
            break;
        case Base::hirzebruch:
            s = 2 * v[0] * v[1] - hirzebruch_n * v[1] * v[1];  // <F,E>, E^2 = -n
            break;
        case Base::recorded:
            break;
    }
    for (std::size_t i = base_rank(); i < v.size(); ++i) s -= v[i] * v[i];
    return s;
}

std::vector<long long> SurfacePresentation::resolve(const std::string& name) const {
    if (base == Base::recorded)
        throw std::invalid_argument("resolve: opaque presentation has no class vectors");
    std::vector<long long> v(basis_size(), 0);
    auto it = curves.find(name);
    if (it != curves.end()) {
        if (it->second.size() != base_rank())
            throw std::invalid_argument("resolve: base class '" + name + "' has wrong length");
        for (std::size_t i = 0; i < base_rank(); ++i) v[i] = it->second[i];
        for (std::size_t k = 0; k < blowups.size(); ++k)
            for (const auto& [curve, mult] : blowups[k].through)
                if (curve == name) v[base_rank() + k] = -mult;
        return v;
    }
    for (std::size_t k = 0; k < blowups.size(); ++k) {
        if (blowups[k].name == name) {
            v[base_rank() + k] = 1;
            return v;
        }
    }
    throw std::invalid_argument("resolve: unknown class '" + name + "'");
}

const FibreComponent& FibreGraph::component(const std::string& name) const {
    for (const FibreComponent& c : components)
        if (c.name == name) return c;
    throw std::invalid_argument("FibreGraph: unknown component '" + name + "'");
}

namespace {

long long side_normal_degree(const FibreGraph& g, const CurveSide& side) {
    const SurfacePresentation& pres = g.component(side.component).presentation;
    if (pres.base == SurfacePresentation::Base::recorded) {
        if (!side.cls.is_name)
            throw std::invalid_argument("side on an opaque component must name a recorded curve");
        auto it = pres.recorded.find(side.cls.name);
        if (it == pres.recorded.end())
            throw std::invalid_argument("no recorded self-intersection for '" + side.cls.name +
                                        "' on " + side.component);
        return it->second;
    }
    std::vector<long long> v =
        side.cls.is_name ? pres.resolve(side.cls.name) : side.cls.vec;
    return pres.self_intersection(v);
}

}  // namespace

void FibreGraph::validate() const {
    std::set<std::string> names;
    for (const FibreComponent& c : components) {
        if (!names.insert(c.name).second)
            throw std::invalid_argument("FibreGraph: duplicate component '" + c.name + "'");
        if (c.multiplicity < 1)
            throw std::invalid_argument("FibreGraph: component '" + c.name +
                                        "' has non-positive multiplicity");
    }
    std::set<std::string> curve_names;
    for (const DoubleCurve& d : double_curves) {
        if (!curve_names.insert(d.name).second)
            throw std::invalid_argument("FibreGraph: duplicate double curve '" + d.name + "'");
        if (d.side_a.component == d.side_b.component)
            throw std::invalid_argument("FibreGraph: double curve '" + d.name +
                                        "' must join two distinct components");
        side_normal_degree(*this, d.side_a);
        side_normal_degree(*this, d.side_b);
        for (const TriplePointRef& t : d.triple_points) {
            const FibreComponent& third = component(t.component);
            if (t.component == d.side_a.component || t.component == d.side_b.component)
                throw std::invalid_argument("FibreGraph: triple point of '" + d.name +
                                            "' references a side component");
            if (t.multiplicity != third.multiplicity)
                throw std::invalid_argument("FibreGraph: triple point multiplicity mismatch on '" +
                                            d.name + "'");
        }
    }
}

std::vector<TriplePointRow> check_triple_point_formula(const FibreGraph& g) {
    std::vector<TriplePointRow> rows;
    for (const DoubleCurve& d : g.double_curves) {
        long long na = side_normal_degree(g, d.side_a);
        long long nb = side_normal_degree(g, d.side_b);
        long long ma = g.component(d.side_a.component).multiplicity;
        long long mb = g.component(d.side_b.component).multiplicity;
        long long lhs = mb * na + ma * nb;
        for (const TriplePointRef& t : d.triple_points) lhs += t.multiplicity;
        rows.push_back({d.name, lhs, lhs == 0});
    }
    return rows;
}

FibreGraph build_kummer_fibre() {
    const Incidence16_6 inc = build_theta_model();
    FibreGraph g;

    FibreComponent s0;
    s0.name = "S0";
    s0.presentation.base = SurfacePresentation::Base::recorded;
    for (int i = 0; i < 16; ++i) {
        // (-2)-curves on the minimal smooth model: the curve over node i and
        // the transform of contact conic j.
        s0.presentation.recorded["E" + std::to_string(i)] = -2;
        s0.presentation.recorded["D" + std::to_string(i)] = -2;
    }
    g.components.push_back(s0);

    for (int i = 0; i < 16; ++i) {
        FibreComponent q;
        q.name = "Q" + std::to_string(i);
        q.presentation.base = SurfacePresentation::Base::quadric;
        q.presentation.curves["E"] = {1, 1};  // the hyperplane-section curve
        for (int j = 0; j < 16; ++j)
            if (inc.incident(i, j))
                q.presentation.blowups.push_back({"G" + std::to_string(j), {{"E", 1}}});
        g.components.push_back(q);
    }
    for (int j = 0; j < 16; ++j) {
        FibreComponent w;
        w.name = "W" + std::to_string(j);
        w.presentation.base = SurfacePresentation::Base::hirzebruch;
        w.presentation.hirzebruch_n = 4;
        w.presentation.curves["F"] = {1, 0};
        w.presentation.curves["D"] = {0, 1};  // the negative section
        g.components.push_back(w);
    }

    for (int i = 0; i < 16; ++i) {
        DoubleCurve d;
        d.name = "E" + std::to_string(i);
        d.side_a = {"S0", {true, "E" + std::to_string(i), {}}};
        d.side_b = {"Q" + std::to_string(i), {true, "E", {}}};
        for (int j = 0; j < 16; ++j)
            if (inc.incident(i, j)) d.triple_points.push_back({"W" + std::to_string(j), 1});
        g.double_curves.push_back(d);
    }
    for (int j = 0; j < 16; ++j) {
        DoubleCurve d;
        d.name = "D" + std::to_string(j);
        d.side_a = {"S0", {true, "D" + std::to_string(j), {}}};
        d.side_b = {"W" + std::to_string(j), {true, "D", {}}};
        for (int i = 0; i < 16; ++i)
            if (inc.incident(i, j)) d.triple_points.push_back({"Q" + std::to_string(i), 1});
        g.double_curves.push_back(d);
    }
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            if (!inc.incident(i, j)) continue;
            DoubleCurve d;
            d.name = "G" + std::to_string(i) + "_" + std::to_string(j);
            d.side_a = {"Q" + std::to_string(i), {true, "G" + std::to_string(j), {}}};
            d.side_b = {"W" + std::to_string(j), {true, "F", {}}};
            d.triple_points.push_back({"S0", 1});
            g.double_curves.push_back(d);
        }

    g.metadata.push_back(
        "semistable central fibre of a quartic family degenerating to a 16-nodal Kummer "
        "surface, after a degree-2 base change, resolution of the 16 node points, and the "
        "blow-up of the 16 contact conics");
    g.validate();
    return g;
}

namespace {

nlohmann::ordered_json presentation_to_json(const SurfacePresentation& p) {
    nlohmann::ordered_json j;
    switch (p.base) {
        case SurfacePresentation::Base::plane: j["base"] = "plane"; break;
        case SurfacePresentation::Base::quadric: j["base"] = "quadric"; break;
        case SurfacePresentation::Base::hirzebruch:
            j["base"] = "hirzebruch";
            j["n"] = p.hirzebruch_n;
            break;
        case SurfacePresentation::Base::recorded: j["base"] = "recorded"; break;
    }
    if (p.base == SurfacePresentation::Base::recorded) {
        j["self_intersections"] = nlohmann::ordered_json::object();
        for (const auto& [name, v] : p.recorded) j["self_intersections"][name] = v;
        return j;
    }
    if (!p.curves.empty()) {
        j["curves"] = nlohmann::ordered_json::object();
        for (const auto& [name, v] : p.curves) j["curves"][name] = v;
    }
    j["blowups"] = nlohmann::ordered_json::array();
    for (const Blowup& b : p.blowups) {
        nlohmann::ordered_json jb;
        jb["name"] = b.name;
        jb["through"] = nlohmann::ordered_json::array();
        for (const auto& [curve, mult] : b.through)
            jb["through"].push_back({{"curve", curve}, {"multiplicity", mult}});
        j["blowups"].push_back(jb);
    }
    return j;
}

SurfacePresentation presentation_from_json(const nlohmann::json& j) {
    SurfacePresentation p;
    const std::string base = j.at("base").get<std::string>();
    if (base == "plane") {
        p.base = SurfacePresentation::Base::plane;
    } else if (base == "quadric") {
        p.base = SurfacePresentation::Base::quadric;
    } else if (base == "hirzebruch") {
        p.base = SurfacePresentation::Base::hirzebruch;
        p.hirzebruch_n = j.at("n").get<long long>();
        if (p.hirzebruch_n < 0)
            throw std::invalid_argument("presentation: negative Hirzebruch index");
    } else if (base == "recorded") {
        p.base = SurfacePresentation::Base::recorded;
        for (const auto& [name, v] : j.at("self_intersections").items())
            p.recorded[name] = v.get<long long>();
        return p;
    } else {
        throw std::invalid_argument("presentation: unknown base '" + base + "'");
    }
    if (j.contains("curves"))
        for (const auto& [name, v] : j.at("curves").items())
            p.curves[name] = v.get<std::vector<long long>>();
    if (j.contains("blowups"))
        for (const auto& jb : j.at("blowups")) {
            Blowup b;
            b.name = jb.at("name").get<std::string>();
            for (const auto& jt : jb.at("through"))
                b.through.emplace_back(jt.at("curve").get<std::string>(),
                                       jt.at("multiplicity").get<long long>());
            p.blowups.push_back(std::move(b));
        }
    return p;
}

nlohmann::ordered_json class_to_json(const ClassRef& c) {
    if (c.is_name) return c.name;
    return c.vec;
}

ClassRef class_from_json(const nlohmann::json& j) {
    ClassRef c;
    if (j.is_string()) {
        c.is_name = true;
        c.name = j.get<std::string>();
    } else if (j.is_array()) {
        c.vec = j.get<std::vector<long long>>();
    } else {
        throw std::invalid_argument("double curve class must be a name or a vector");
    }
    return c;
}

}  // namespace

nlohmann::ordered_json FibreGraph::to_json() const {
    nlohmann::ordered_json j;
    j["components"] = nlohmann::ordered_json::array();
    for (const FibreComponent& c : components) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["multiplicity"] = c.multiplicity;
        jc["presentation"] = presentation_to_json(c.presentation);
        j["components"].push_back(jc);
    }
    j["double_curves"] = nlohmann::ordered_json::array();
    for (const DoubleCurve& d : double_curves) {
        nlohmann::ordered_json jd;
        jd["name"] = d.name;
        jd["side_a"] = {{"component", d.side_a.component}, {"class", class_to_json(d.side_a.cls)}};
        jd["side_b"] = {{"component", d.side_b.component}, {"class", class_to_json(d.side_b.cls)}};
        jd["triple_points"] = nlohmann::ordered_json::array();
        for (const TriplePointRef& t : d.triple_points)
            jd["triple_points"].push_back(
                {{"component", t.component}, {"multiplicity", t.multiplicity}});
        j["double_curves"].push_back(jd);
    }
    j["metadata"] = metadata;
    return j;
}

FibreGraph FibreGraph::from_json(const nlohmann::json& j) {
    FibreGraph g;
    for (const auto& jc : j.at("components")) {
        FibreComponent c;
        c.name = jc.at("name").get<std::string>();
        c.multiplicity = jc.at("multiplicity").get<long long>();
        c.presentation = presentation_from_json(jc.at("presentation"));
        g.components.push_back(std::move(c));
    }
    for (const auto& jd : j.at("double_curves")) {
        DoubleCurve d;
        d.name = jd.at("name").get<std::string>();
        d.side_a.component = jd.at("side_a").at("component").get<std::string>();
        d.side_a.cls = class_from_json(jd.at("side_a").at("class"));
        d.side_b.component = jd.at("side_b").at("component").get<std::string>();
        d.side_b.cls = class_from_json(jd.at("side_b").at("class"));
        if (jd.contains("triple_points"))
            for (const auto& jt : jd.at("triple_points"))
                d.triple_points.push_back({jt.at("component").get<std::string>(),
                                           jt.at("multiplicity").get<long long>()});
        g.double_curves.push_back(std::move(d));
    }
    if (j.contains("metadata"))
        g.metadata = j.at("metadata").get<std::vector<std::string>>();
    g.validate();
    return g;
}

}  // namespace enumera
