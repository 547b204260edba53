#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "enumera/fibre.hpp"
#include "enumera/formulas.hpp"
#include "enumera/incidence.hpp"
#include "enumera/ledger.hpp"
#include "enumera/tetra.hpp"
#include "enumera/triangle.hpp"
#include "enumera/verify.hpp"

namespace py = pybind11;

namespace {

// Exact integers cross the boundary as Python ints via their decimal form.
py::int_ to_py(const enumera::BigInt& v) { return py::int_(py::str(v.str())); }

py::dict ledger_dict(const enumera::ComponentLedger& l) {
    py::dict d;
    d["target_name"] = l.target_name;
    d["target_degree"] = l.target_degree;
    py::list entries;
    for (const auto& e : l.entries) {
        py::dict je;
        je["label"] = e.label;
        je["count"] = e.count;
        je["multiplicity"] = e.multiplicity;
        je["provenance"] = e.provenance;
        entries.append(je);
    }
    d["entries"] = entries;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic enumerative counts for quartic surfaces";

    m.def("severi_degree",
          [](long long k, int delta) { return to_py(enumera::severi_degree(k, delta)); },
          py::arg("k"), py::arg("delta"));
    m.def("dual_surface_degree",
          [](long long k, long long nu, long long kappa) {
              return to_py(enumera::dual_surface_degree(k, nu, kappa));
          },
          py::arg("k"), py::arg("nu"), py::arg("kappa"));
    m.def("dejonquieres",
          [](long long d, long long g, long long tau) {
              return to_py(enumera::dejonquieres(d, g, tau));
          },
          py::arg("d"), py::arg("g"), py::arg("tau"));
    m.def("plucker_dual_degree",
          [](long long d, long long delta, long long kappa) {
              return to_py(enumera::plucker_dual_degree(d, delta, kappa));
          },
          py::arg("d"), py::arg("delta"), py::arg("kappa"));
    m.def("plucker_flexes",
          [](long long d, long long delta, long long kappa) {
              return to_py(enumera::plucker_flexes(d, delta, kappa));
          },
          py::arg("d"), py::arg("delta"), py::arg("kappa"));
    m.def("plucker_bitangents",
          [](long long d, long long delta, long long kappa) {
              return to_py(enumera::plucker_bitangents(d, delta, kappa));
          },
          py::arg("d"), py::arg("delta"), py::arg("kappa"));
    m.def("pencil_nodal_count",
          [](long long chi_surface, long long chi_generic_fibre, long long chi_base,
             std::vector<long long> special_fibres) {
              return to_py(enumera::pencil_nodal_count(
                  {chi_surface, chi_generic_fibre, chi_base, std::move(special_fibres)}));
          },
          py::arg("chi_surface"), py::arg("chi_generic_fibre"), py::arg("chi_base"),
          py::arg("special_fibres") = std::vector<long long>{});
    m.def("polar_tangency_correction",
          [](long long base, long long correction) {
              return to_py(enumera::polar_tangency_correction(base, correction));
          },
          py::arg("base"), py::arg("correction"));
    m.def("riemann_hurwitz_branch_count",
          [](long long degree_n, long long genus_source, long long genus_target) {
              return to_py(
                  enumera::riemann_hurwitz_branch_count(degree_n, genus_source, genus_target));
          },
          py::arg("degree_n"), py::arg("genus_source") = 0, py::arg("genus_target") = 0);

    m.def("tetra_ledger",
          [](int delta, std::uint64_t seed) {
              enumera::TetraConfig c = enumera::build_config(seed);
              return ledger_dict(enumera::enumerate_ledger(c, delta));
          },
          py::arg("delta"), py::arg("seed") = 0);
    m.def("tetra_monoid_ledger",
          [](int face, std::uint64_t seed) {
              enumera::TetraConfig c = enumera::build_config(seed);
              return ledger_dict(enumera::monoid_crude_limit(c, face));
          },
          py::arg("face"), py::arg("seed") = 0);
    m.def("triangle_ledger",
          [](int delta) { return ledger_dict(enumera::triangle_ledger(delta)); },
          py::arg("delta"));
    m.def("kummer_ledger", [](int delta) { return ledger_dict(enumera::kummer_ledger(delta)); },
          py::arg("delta"));

    m.def("verify_incidence",
          [](const std::string& model) {
              enumera::Incidence16_6 inc = model == "grid" ? enumera::build_grid_model()
                                                           : enumera::build_theta_model();
              return enumera::verify_incidence(inc).violations;
          },
          py::arg("model") = "theta");
    m.def("count_offtrope_triples", [](const std::string& model) {
        enumera::Incidence16_6 inc =
            model == "grid" ? enumera::build_grid_model() : enumera::build_theta_model();
        return enumera::count_offtrope_triples(inc);
    }, py::arg("model") = "theta");
    m.def("automorphism_group_order", [](const std::string& model) {
        enumera::Incidence16_6 inc =
            model == "grid" ? enumera::build_grid_model() : enumera::build_theta_model();
        return static_cast<long long>(enumera::automorphism_group(inc).order());
    }, py::arg("model") = "theta");
    m.def("grid_offtrope_orbit_count", &enumera::grid_offtrope_orbit_count,
          py::arg("include_swap") = true);

    m.def("kummer_fibre_json",
          []() { return enumera::build_kummer_fibre().to_json().dump(2); });
    m.def("check_triple_point_formula",
          [](const std::string& fibre_json) {
              enumera::FibreGraph g =
                  enumera::FibreGraph::from_json(nlohmann::json::parse(fibre_json));
              py::list rows;
              for (const auto& r : enumera::check_triple_point_formula(g)) {
                  py::dict row;
                  row["curve"] = r.curve;
                  row["lhs"] = r.lhs;
                  row["pass"] = r.pass;
                  rows.append(row);
              }
              return rows;
          },
          py::arg("fibre_json"));

    m.def("run_acceptance_checks",
          [](std::uint64_t seed, int jobs) {
              py::list rows;
              for (const auto& r : enumera::run_acceptance_checks(seed, jobs)) {
                  py::dict row;
                  row["name"] = r.name;
                  row["pass"] = r.pass;
                  row["detail"] = r.detail;
                  row["elapsed_ms"] = r.elapsed_ms;
                  rows.append(row);
              }
              return rows;
          },
          py::arg("seed") = 0, py::arg("jobs") = 1);

#ifdef VERSION_INFO
#define ENUMERA_STR_(x) #x
#define ENUMERA_STR(x) ENUMERA_STR_(x)
    m.attr("__version__") = ENUMERA_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
