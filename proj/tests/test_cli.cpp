#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("ENUMERA_CLI_BIN");
    REQUIRE_MESSAGE(p != nullptr, "ENUMERA_CLI_BIN must point at the CLI binary");
    return p;
}

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json parse(const RunResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("formulas table") {
    RunResult r = run("formulas table --k-min 2 --k-max 2");
    CHECK(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j["status"] == "pass");
    CHECK(j["severi_degrees"][0]["k"] == 2);
    CHECK(j["severi_degrees"][0]["d1"] == 2);
}

TEST_CASE("dejonquieres value") {
    RunResult r = run("dejonquieres --d 8 --g 0 --tau 3");
    CHECK(r.exit_code == 0);
    CHECK(parse(r)["value"] == 80);
}

TEST_CASE("plucker values") {
    RunResult r = run("plucker --d 4 --delta 1 --kappa 0");
    CHECK(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j["dual_degree"] == 10);
    CHECK(j["bitangents"] == 16);
}

TEST_CASE("tetra ledger totals 3200 at delta 3") {
    RunResult r = run("tetra ledger --delta 3");
    CHECK(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j["seed"] == 0);
    CHECK(j["tables"][0]["target_degree"] == 3200);
    CHECK(j["tables"][0]["entries"][0]["count"] == 1024);
}

TEST_CASE("tetra monoid ledger") {
    RunResult r = run("tetra monoid --face 2");
    CHECK(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j["tables"][0]["target_degree"] == 36);
    CHECK(j["tables"][0]["entries"][0]["count"] == 21);
}

TEST_CASE("triangle ledger with zero components") {
    RunResult r = run("triangle ledger --delta 2");
    CHECK(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j["tables"][0]["target_degree"] == 132);
    CHECK(j["zero_degree_components"].size() == 1);
}

TEST_CASE("kummer ledger entries at delta 3") {
    RunResult r = run("kummer ledger --delta 3");
    CHECK(r.exit_code == 0);
    auto j = parse(r);
    auto& entries = j["tables"][0]["entries"];
    CHECK(entries[0]["count"] == 240);
    CHECK(entries[0]["multiplicity"] == 8);
    CHECK(entries[1]["count"] == 16);
    CHECK(entries[1]["multiplicity"] == 80);
}

TEST_CASE("kummer incidence verification") {
    for (const std::string model : {"theta", "grid"}) {
        RunResult r = run("kummer incidence --model " + model + " --verify");
        CHECK(r.exit_code == 0);
        auto j = parse(r);
        CHECK(j["status"] == "pass");
        CHECK(j["incidence"]["matrix"].size() == 16);
    }
}

TEST_CASE("kummer group orbit check") {
    RunResult r = run("kummer group --model theta --check offtrope-orbits");
    CHECK(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j["offtrope_orbits_with_swap"] == 2);
}

TEST_CASE("fibre check on the builtin dataset") {
    RunResult r = run("fibre check --builtin kummer");
    CHECK(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j["curves_checked"] == 128);
    CHECK(j["status"] == "pass");
}

TEST_CASE("fibre check on the bundled dataset file, then corrupted") {
    const char* srcdir = std::getenv("ENUMERA_SOURCE_DIR");
    REQUIRE(srcdir != nullptr);
    std::string dataset = std::string(srcdir) + "/data/kummer_fibre.json";

    RunResult good = run("fibre check --file " + dataset);
    CHECK(good.exit_code == 0);
    CHECK(parse(good)["status"] == "pass");

    std::ifstream in(dataset);
    REQUIRE(in.good());
    nlohmann::json fibre;
    in >> fibre;
    fibre["double_curves"][0]["triple_points"].erase(0);
    std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
    std::string path = dir + "/enumera_corrupt_fibre.json";
    std::ofstream out(path);
    out << fibre.dump();
    out.close();

    RunResult bad = run("fibre check --file " + path);
    CHECK(bad.exit_code == 1);
    CHECK(parse(bad)["status"] == "fail");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("bogus").exit_code == 2);
    CHECK(run("tetra").exit_code == 2);
    CHECK(run("tetra ledger --delta 9").exit_code == 2);
    CHECK(run("formulas table --k-min 1 --k-max 3").exit_code == 2);
    CHECK(run("fibre check --file /nonexistent.json").exit_code == 2);
    CHECK(run("fibre check --file x.json --builtin kummer").exit_code == 2);
}

TEST_CASE("values past 2^53 are emitted as decimal strings") {
    RunResult r = run("formulas table --k-min 200 --k-max 200");
    CHECK(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j["severi_degrees"][0]["d3"].is_string());
    CHECK(j["severi_degrees"][0]["d1"] == 200 * 199 * 199);
}

TEST_CASE("output bytes are deterministic") {
    RunResult a = run("triangle ledger --delta 2");
    RunResult b = run("triangle ledger --delta 2");
    CHECK(a.out == b.out);
    RunResult c = run("tetra ledger --delta 2 --seed 5");
    RunResult d = run("tetra ledger --delta 2 --seed 5");
    CHECK(c.out == d.out);
}

TEST_CASE("partitioned scans do not change the output") {
    RunResult one = run("tetra ledger --delta 3");
    RunResult four = run("tetra ledger --delta 3 --jobs 4");
    CHECK(one.out == four.out);
}

TEST_CASE("golden outputs") {
    const char* srcdir = std::getenv("ENUMERA_SOURCE_DIR");
    REQUIRE(srcdir != nullptr);
    auto golden = [&](const std::string& name) {
        std::ifstream in(std::string(srcdir) + "/tests/golden/" + name);
        REQUIRE(in.good());
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    };
    CHECK(run("tetra ledger --delta 3").out == golden("tetra_ledger_delta3.json"));
    CHECK(run("kummer ledger --delta 3").out == golden("kummer_ledger_delta3.json"));
    CHECK(run("triangle ledger --delta 2").out == golden("triangle_ledger_delta2.json"));
    CHECK(run("tetra monoid --face 1").out == golden("tetra_monoid_face1.json"));
    CHECK(run("verify all").out == golden("verify_all.json"));
}

TEST_CASE("tsv format") {
    RunResult r = run("--format tsv triangle ledger --delta 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("TOTAL\t21") != std::string::npos);
}

TEST_CASE("seed can come from the environment") {
    RunResult r = run("tetra ledger --delta 1 --seed 7");
    auto j = parse(r);
    CHECK(j["seed"] == 7);

    std::string cmd = "ENUMERA_SEED=9 " + cli_path() + " tetra ledger --delta 1 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(nlohmann::json::parse(out)["seed"] == 9);
}
