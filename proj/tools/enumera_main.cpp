#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "enumera/fibre.hpp"
#include "enumera/formulas.hpp"
#include "enumera/incidence.hpp"
#include "enumera/ledger.hpp"
#include "enumera/tetra.hpp"
#include "enumera/triangle.hpp"
#include "enumera/verify.hpp"

namespace {

using enumera::BigInt;
using nlohmann::ordered_json;

struct Options {
    std::string format = "json";
    int jobs = 1;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

// Exit codes: 0 pass, 1 verification failure, 2 usage error.
struct Report {
    std::string command;
    bool pass = true;
    std::uint64_t seed = 0;
    std::vector<enumera::ComponentLedger> tables;
    std::vector<std::string> violations;
    ordered_json extra = ordered_json::object();

    int emit(const Options& opt, std::chrono::steady_clock::time_point start) const {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (opt.format == "tsv") {
            std::cout << "command\t" << command << "\n";
            std::cout << "status\t" << (pass ? "pass" : "fail") << "\n";
            std::cout << "seed\t" << seed << "\n";
            for (const auto& [key, value] : extra.items())
                std::cout << key << "\t" << (value.is_string() ? value.get<std::string>() : value.dump())
                          << "\n";
            for (const auto& t : tables) std::cout << t.to_tsv();
            for (const auto& v : violations) std::cout << "violation\t" << v << "\n";
        } else {
            ordered_json j;
            j["command"] = command;
            j["status"] = pass ? "pass" : "fail";
            j["seed"] = seed;
            for (const auto& [key, value] : extra.items()) j[key] = value;
            j["tables"] = ordered_json::array();
            for (const auto& t : tables) j["tables"].push_back(t.to_json());
            j["violations"] = violations;
            std::cout << j.dump(2) << "\n";
        }
        std::cerr << command << ": " << ms << " ms\n";
        return pass ? 0 : 1;
    }
};

ordered_json bigint_json(const BigInt& v) {
    static const BigInt kSafe = (BigInt(1) << 53);
    if (v < kSafe && v > -kSafe) return ordered_json(enumera::to_int64(v));
    return ordered_json(v.str());
}

std::uint64_t resolve_seed(const Options& opt) {
    if (opt.seed_given) return opt.seed;
    if (const char* env = std::getenv("ENUMERA_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic cross-checks for enumerative counts on quartic surfaces"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker threads for the partitioned scans")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for the tetrahedron configuration")
        ->each([&opt](const std::string&) { opt.seed_given = true; });

    // formulas table
    auto* formulas_cmd = app.add_subcommand("formulas", "classical degree formulas");
    auto* formulas_table = formulas_cmd->add_subcommand("table", "Severi degree table");
    long long k_min = 2, k_max = 6;
    formulas_table->add_option("--k-min", k_min, "smallest surface degree")->capture_default_str();
    formulas_table->add_option("--k-max", k_max, "largest surface degree")->capture_default_str();

    // dejonquieres
    auto* dj_cmd = app.add_subcommand("dejonquieres", "tangency count of a space curve");
    long long dj_d = 0, dj_g = 0, dj_tau = 0;
    dj_cmd->add_option("--d", dj_d, "curve degree")->required();
    dj_cmd->add_option("--g", dj_g, "curve genus")->required();
    dj_cmd->add_option("--tau", dj_tau, "tangency count")->required();

    // plucker
    auto* pl_cmd = app.add_subcommand("plucker", "plane-curve invariants");
    long long pl_d = 0, pl_delta = 0, pl_kappa = 0;
    pl_cmd->add_option("--d", pl_d, "curve degree")->required();
    pl_cmd->add_option("--delta", pl_delta, "node count")->required();
    pl_cmd->add_option("--kappa", pl_kappa, "cusp count")->required();

    // tetra
    auto* tetra_cmd = app.add_subcommand("tetra", "tetrahedron degeneration");
    auto* tetra_ledger = tetra_cmd->add_subcommand("ledger", "limit component ledger");
    int tetra_delta = 1;
    tetra_ledger->add_option("--delta", tetra_delta, "node count")->check(CLI::Range(1, 3))->required();
    auto* tetra_monoid = tetra_cmd->add_subcommand("monoid", "crude monoid limit for one face");
    int monoid_face = 1;
    tetra_monoid->add_option("--face", monoid_face, "face index")->check(CLI::Range(1, 4))->required();

    // triangle
    auto* tri_cmd = app.add_subcommand("triangle", "quartics through twelve points on a triangle");
    auto* tri_ledger = tri_cmd->add_subcommand("ledger", "component ledger with derivations");
    int tri_delta = 1;
    tri_ledger->add_option("--delta", tri_delta, "node count")->check(CLI::Range(1, 3))->required();

    // kummer
    auto* kum_cmd = app.add_subcommand("kummer", "Kummer degeneration and 16_6 configuration");
    auto* kum_ledger = kum_cmd->add_subcommand("ledger", "limit component ledger");
    int kum_delta = 1;
    kum_ledger->add_option("--delta", kum_delta, "node count")->check(CLI::Range(1, 3))->required();
    auto* kum_inc = kum_cmd->add_subcommand("incidence", "incidence structure");
    std::string kum_model = "theta";
    bool kum_verify = false;
    kum_inc->add_option("--model", kum_model, "model")->check(CLI::IsMember({"theta", "grid"}));
    kum_inc->add_flag("--verify", kum_verify, "run the exhaustive invariant checks");
    auto* kum_group = kum_cmd->add_subcommand("group", "automorphism group checks");
    std::string group_model = "theta";
    std::string group_check;
    kum_group->add_option("--model", group_model, "model")->check(CLI::IsMember({"theta", "grid"}));
    kum_group->add_option("--check", group_check, "which property to check")
        ->check(CLI::IsMember({"order", "2transitive", "trope-s6", "offtrope-orbits"}))
        ->required();

    // fibre
    auto* fibre_cmd = app.add_subcommand("fibre", "triple point formula checker");
    auto* fibre_check = fibre_cmd->add_subcommand("check", "check a semistable fibre");
    std::string fibre_file;
    std::string fibre_builtin = "kummer";
    auto* fibre_file_opt = fibre_check->add_option("--file", fibre_file, "fibre graph JSON file");
    fibre_check->add_option("--builtin", fibre_builtin, "bundled dataset")
        ->check(CLI::IsMember({"kummer"}))
        ->excludes(fibre_file_opt);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    auto* verify_all = verify_cmd->add_subcommand("all", "run every acceptance check");

    // Let --format, --jobs and --seed appear after the subcommand too.
    for (CLI::App* sub :
         {formulas_cmd, formulas_table, dj_cmd, pl_cmd, tetra_cmd, tetra_ledger, tetra_monoid,
          tri_cmd, tri_ledger, kum_cmd, kum_ledger, kum_inc, kum_group, fibre_cmd, fibre_check,
          verify_cmd, verify_all})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.seed = resolve_seed(opt);

    try {
        if (formulas_table->parsed()) {
            rep.command = "formulas table";
            if (k_min < 2 || k_max < k_min || k_max - k_min > 10000) {
                std::cerr << "formulas table: need 2 <= k-min <= k-max, span <= 10000\n";
                return 2;
            }
            ordered_json rows = ordered_json::array();
            for (long long k = k_min; k <= k_max; ++k) {
                ordered_json row;
                row["k"] = k;
                row["d1"] = bigint_json(enumera::severi_degree(k, 1));
                row["d2"] = bigint_json(enumera::severi_degree(k, 2));
                row["d3"] = bigint_json(enumera::severi_degree(k, 3));
                rows.push_back(row);
            }
            rep.extra["severi_degrees"] = rows;
        } else if (dj_cmd->parsed()) {
            rep.command = "dejonquieres";
            rep.extra["d"] = dj_d;
            rep.extra["g"] = dj_g;
            rep.extra["tau"] = dj_tau;
            rep.extra["value"] = bigint_json(enumera::dejonquieres(dj_d, dj_g, dj_tau));
        } else if (pl_cmd->parsed()) {
            rep.command = "plucker";
            rep.extra["d"] = pl_d;
            rep.extra["delta"] = pl_delta;
            rep.extra["kappa"] = pl_kappa;
            rep.extra["genus"] = bigint_json(enumera::plucker_genus(pl_d, pl_delta, pl_kappa));
            rep.extra["dual_degree"] =
                bigint_json(enumera::plucker_dual_degree(pl_d, pl_delta, pl_kappa));
            rep.extra["flexes"] = bigint_json(enumera::plucker_flexes(pl_d, pl_delta, pl_kappa));
            rep.extra["bitangents"] =
                bigint_json(enumera::plucker_bitangents(pl_d, pl_delta, pl_kappa));
        } else if (tetra_ledger->parsed()) {
            rep.command = "tetra ledger";
            enumera::TetraBuildOptions bopts;
            bopts.jobs = opt.jobs;
            enumera::TetraConfig c = enumera::build_config(rep.seed, bopts);
            rep.tables.push_back(enumera::enumerate_ledger(c, tetra_delta, opt.jobs));
        } else if (tetra_monoid->parsed()) {
            rep.command = "tetra monoid";
            enumera::TetraBuildOptions bopts;
            bopts.jobs = opt.jobs;
            enumera::TetraConfig c = enumera::build_config(rep.seed, bopts);
            rep.tables.push_back(enumera::monoid_crude_limit(c, monoid_face));
        } else if (tri_ledger->parsed()) {
            rep.command = "triangle ledger";
            rep.tables.push_back(enumera::triangle_ledger(tri_delta));
            ordered_json zeros = ordered_json::array();
            for (const auto& e : enumera::triangle_entries(tri_delta))
                if (e.p_degree == 0) {
                    ordered_json z;
                    z["label"] = e.label;
                    z["p_degree"] = 0;
                    z["multiplicity"] = e.multiplicity;
                    zeros.push_back(z);
                }
            rep.extra["zero_degree_components"] = zeros;
        } else if (kum_ledger->parsed()) {
            rep.command = "kummer ledger";
            rep.tables.push_back(enumera::kummer_ledger(kum_delta));
        } else if (kum_inc->parsed()) {
            rep.command = "kummer incidence";
            enumera::Incidence16_6 inc = kum_model == "grid" ? enumera::build_grid_model()
                                                             : enumera::build_theta_model();
            rep.extra["model"] = kum_model;
            rep.extra["incidence"] = enumera::incidence_json(inc);
            if (kum_verify) {
                enumera::IncidenceReport r = enumera::verify_incidence(inc);
                rep.violations = r.violations;
                rep.pass = r.pass();
            }
        } else if (kum_group->parsed()) {
            rep.command = "kummer group";
            enumera::Incidence16_6 inc = group_model == "grid" ? enumera::build_grid_model()
                                                               : enumera::build_theta_model();
            rep.extra["model"] = group_model;
            rep.extra["check"] = group_check;
            if (group_check == "order") {
                enumera::PermGroup g = enumera::automorphism_group(inc);
                rep.extra["order"] = static_cast<long long>(g.order());
                rep.extra["trope_action_order"] =
                    static_cast<long long>(enumera::trope_action_order(inc, g));
                if (g.order() != 11520)
                    rep.violations.push_back("automorphism group order != 11520");
            } else if (group_check == "2transitive") {
                enumera::PermGroup g = enumera::automorphism_group(inc);
                if (!enumera::is_k_transitive(g, 2))
                    rep.violations.push_back("group is not 2-transitive on nodes");
                rep.extra["two_transitive"] = enumera::is_k_transitive(g, 2);
            } else if (group_check == "trope-s6") {
                enumera::PermGroup g = enumera::automorphism_group(inc);
                ordered_json rows = ordered_json::array();
                for (int t = 0; t < 16; ++t) {
                    enumera::TropeStabilizerReport r =
                        enumera::trope_stabilizer_actions(inc, g, t);
                    ordered_json row;
                    row["trope"] = inc.trope_labels[t];
                    row["stabilizer_order"] = static_cast<long long>(r.stabilizer_order);
                    row["image_order_on_incident"] =
                        static_cast<long long>(r.image_on_incident.order());
                    row["transitive_on_nonincident"] = r.transitive_on_nonincident;
                    rows.push_back(row);
                    if (r.image_on_incident.order() != 720)
                        rep.violations.push_back("trope " + inc.trope_labels[t] +
                                                 ": image order != 720");
                    if (!r.transitive_on_nonincident)
                        rep.violations.push_back("trope " + inc.trope_labels[t] +
                                                 ": not transitive on the other 10 nodes");
                }
                rep.extra["tropes"] = rows;
            } else {  // offtrope-orbits
                long long with_swap = enumera::grid_offtrope_orbit_count(true);
                long long without_swap = enumera::grid_offtrope_orbit_count(false);
                rep.extra["offtrope_orbits_with_swap"] = with_swap;
                rep.extra["offtrope_orbits_without_swap"] = without_swap;
                rep.extra["ontrope_orbits_with_swap"] = enumera::grid_ontrope_orbit_count(true);
                if (with_swap > 2)
                    rep.violations.push_back("off-trope orbit count with swap exceeds 2");
            }
            rep.pass = rep.violations.empty();
        } else if (fibre_check->parsed()) {
            rep.command = "fibre check";
            enumera::FibreGraph g;
            if (!fibre_file.empty()) {
                std::ifstream in(fibre_file);
                if (!in) {
                    std::cerr << "fibre check: cannot open " << fibre_file << "\n";
                    return 2;
                }
                nlohmann::json j;
                in >> j;
                g = enumera::FibreGraph::from_json(j);
                rep.extra["source"] = fibre_file;
            } else {
                g = enumera::build_kummer_fibre();
                rep.extra["source"] = "builtin:" + fibre_builtin;
            }
            auto rows = enumera::check_triple_point_formula(g);
            ordered_json jr = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json row;
                row["curve"] = r.curve;
                row["lhs"] = r.lhs;
                row["pass"] = r.pass;
                jr.push_back(row);
                if (!r.pass)
                    rep.violations.push_back("curve " + r.curve + ": lhs = " +
                                             std::to_string(r.lhs));
            }
            rep.extra["curves_checked"] = static_cast<long long>(rows.size());
            rep.extra["results"] = jr;
            rep.pass = rep.violations.empty();
        } else if (verify_all->parsed()) {
            rep.command = "verify all";
            ordered_json checks = ordered_json::array();
            for (const enumera::CheckResult& r :
                 enumera::run_acceptance_checks(rep.seed, opt.jobs)) {
                ordered_json row;
                row["name"] = r.name;
                row["status"] = r.pass ? "pass" : "fail";
                checks.push_back(row);
                if (!r.pass) rep.violations.push_back(r.name + ": " + r.detail);
                std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.elapsed_ms
                          << " ms)\n";
            }
            rep.extra["checks"] = checks;
            rep.pass = rep.violations.empty();
        } else {
            std::cerr << app.help() << "\n";
            return 2;
        }
    } catch (const std::exception& e) {
        rep.violations.push_back(e.what());
        rep.pass = false;
        rep.emit(opt, start);
        return 1;
    }

    return rep.emit(opt, start);
}
