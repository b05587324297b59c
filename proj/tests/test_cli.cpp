#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "support/schema_check.hpp"
#include "support/subprocess.hpp"

using nlohmann::json;

namespace {

std::string cli() { return SDIRAC_CLI_PATH; }

testsupport::RunResult run_cli(const std::string& args) {
    return testsupport::run(cli() + " " + args);
}

void check_schema(const json& value, const std::string& schema_name) {
    const auto violations = testsupport::check_against_schema_file(
        value, std::string(SDIRAC_SCHEMA_DIR) + "/" + schema_name);
    std::string joined;
    for (const auto& v : violations) joined += v + "; ";
    CHECK_MESSAGE(violations.empty(), joined);
}

} // namespace

TEST_CASE("cli: verify-algebra passes and honors the negative control") {
    const auto res = run_cli("verify-algebra");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    check_schema(j, "verify_algebra.schema.json");
    CHECK(j.at("all_pass").get<bool>());
    CHECK(j.at("checks").size() >= 12);
    for (const auto& check : j.at("checks")) CHECK(check.at("pass").get<bool>());

    const auto neg = run_cli("verify-algebra --negative-control 2>/dev/null");
    REQUIRE(neg.exit_code == 1);
    const json nj = json::parse(neg.output);
    CHECK(nj.at("negative_control").get<bool>());
    CHECK_FALSE(nj.at("all_pass").get<bool>());
}

TEST_CASE("cli: dispersion presets") {
    const auto res = run_cli("--preset paperV-speed");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    check_schema(j, "dispersion.schema.json");
    CHECK(j.at("regime").get<std::string>() == "propagating");
    CHECK(j.at("e_plus_ev")[0].get<double>() ==
          doctest::Approx(15.919798993705919).epsilon(1e-12));
    CHECK(std::abs(j.at("u_s").get<double>() - 1.005) <= 5e-4);

    const auto msq = run_cli("--preset paperI-msq");
    REQUIRE(msq.exit_code == 0);
    const json mj = json::parse(msq.output);
    CHECK(mj.at("invariant_ev2").get<double>() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("cli: dispersion speed input and argument exclusivity") {
    const auto res = run_cli("dispersion --m_s-ev 1.6 --u_s 1.005");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    CHECK(j.at("u_s").get<double>() == doctest::Approx(1.005).epsilon(1e-9));
    CHECK(j.at("p_ev").get<double>() > j.at("m_s_ev").get<double>());

    CHECK(run_cli("dispersion --m_s-ev 1.6 --p-ev 16 --u_s 1.005 2>/dev/null").exit_code == 2);
    CHECK(run_cli("dispersion --m_s-ev 1.6 2>/dev/null").exit_code == 2);
}

TEST_CASE("cli: evanescent dispersion classifies and signals exit 2") {
    const auto res = run_cli("dispersion --m_s-ev 1 --p-ev 0.5 2>/dev/null");
    REQUIRE(res.exit_code == 2);
    const json j = json::parse(res.output);
    check_schema(j, "dispersion.schema.json");
    CHECK(j.at("regime").get<std::string>() == "evanescent");
    CHECK(j.at("e_plus_ev")[0].get<double>() == 0.0);
    CHECK(j.at("e_plus_ev")[1].get<double>() ==
          doctest::Approx(0.8660254037844386).epsilon(1e-12));
    CHECK_FALSE(j.contains("u_s"));

    const auto merged = run_cli("dispersion --m_s-ev 1 --p-ev 0.5 2>&1 >/dev/null");
    CHECK(merged.output.find("evanescent regime") != std::string::npos);
}

TEST_CASE("cli: infinite-speed limits preset") {
    const auto res = run_cli("--preset paperII-elimit");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    check_schema(j, "limits.schema.json");

    const double e_plus = j.at("plus").at("e_inf").get<double>();
    const double e_minus = j.at("minus").at("e_inf").get<double>();
    // n parallel to +v carries negative asymptotic energy; the magnitude
    // sits near m_s v = 1e-3 eV and flipping n negates everything exactly.
    CHECK(e_plus < 0.0);
    CHECK(std::abs(e_plus) == doctest::Approx(1.0000005000003749e-3).epsilon(1e-12));
    CHECK(std::abs(e_plus) >= 0.5e-3);
    CHECK(std::abs(e_plus) <= 2.0e-3);
    CHECK(e_minus == -e_plus);
    for (int i = 0; i < 3; ++i) {
        CHECK(j.at("minus").at("p_inf")[i].get<double>() ==
              -j.at("plus").at("p_inf")[i].get<double>());
    }
    CHECK(j.at("plus").at("p_inf")[2].get<double>() ==
          doctest::Approx(1.0000005000003749).epsilon(1e-12));
}

TEST_CASE("cli: bispinor preset and species selection") {
    const auto res = run_cli("--preset paperV-bispinor");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    check_schema(j, "bispinor.schema.json");
    CHECK(j.at("a_component").get<double>() ==
          doctest::Approx(0.90453403373329087).epsilon(1e-12));
    CHECK(j.at("normalization").get<double>() ==
          doctest::Approx(2.3452078799117148).epsilon(1e-12));
    REQUIRE(j.at("solutions").size() == 4);
    CHECK(j.at("solutions")[1].at("rho").get<double>() ==
          doctest::Approx(-9.9498743710662012).epsilon(1e-12));
    CHECK(j.at("physical").at("helicity").get<int>() == 1);
    CHECK(j.at("physical").at("rho").get<double>() > 0.0);
    CHECK(j.at("physical").at("energy_ev").get<double>() > 0.0);

    const auto nu = run_cli("bispinor --m_s-ev 1.6 --p-ev 16 --species nu");
    REQUIRE(nu.exit_code == 0);
    const json nj = json::parse(nu.output);
    CHECK(nj.at("physical").at("helicity").get<int>() == -1);
    CHECK(nj.at("physical").at("species").get<std::string>() == "neutrino");
    CHECK(nj.at("physical").at("rho").get<double>() > 0.0);
}

TEST_CASE("cli: boost maps") {
    // Absolute-simultaneity map on the worked event.
    const auto ggt = run_cli("boost --event 1,0,0,0.5 --v 0,0,0.6 --map ggt");
    REQUIRE(ggt.exit_code == 0);
    const json gj = json::parse(ggt.output);
    check_schema(gj, "boost.schema.json");
    CHECK(gj.at("output").at("t").get<double>() == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(gj.at("output").at("r")[2].get<double>() == doctest::Approx(-0.125).epsilon(1e-12));
    CHECK(gj.at("round_trip_error").get<double>() <= 1e-12);

    // Standard map: the quadratic interval is invariant.
    const auto lt = run_cli("boost --event 1,0,0,0.5 --v 0,0,0.6 --map lt");
    REQUIRE(lt.exit_code == 0);
    const json lj = json::parse(lt.output);
    check_schema(lj, "boost.schema.json");
    CHECK(lj.at("interval_before_ev2").get<double>() == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(lj.at("interval_after_ev2").get<double>() == doctest::Approx(0.75).epsilon(1e-10));

    // Momentum through the dual map, then reduced to the standard energy.
    const auto gm = run_cli("boost --momentum 2,0,0,1 --v 0,0,0.6 --map ggt");
    REQUIRE(gm.exit_code == 0);
    const json gmj = json::parse(gm.output);
    check_schema(gmj, "boost.schema.json");
    CHECK(gmj.at("output").at("energy_ev").get<double>() == doctest::Approx(1.6).epsilon(1e-12));
    CHECK(gmj.at("output").at("p_ev")[2].get<double>() == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(gmj.at("sr_energy_ev").get<double>() == doctest::Approx(1.75).epsilon(1e-12));

    const auto lm = run_cli("boost --momentum 2,0,0,1 --v 0,0,0.6 --map lt");
    REQUIRE(lm.exit_code == 0);
    const json lmj = json::parse(lm.output);
    CHECK(lmj.at("output").at("energy_ev").get<double>() == doctest::Approx(1.75).epsilon(1e-12));
    CHECK(lmj.at("invariant_before_ev2").get<double>() == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(lmj.at("invariant_after_ev2").get<double>() == doctest::Approx(-3.0).epsilon(1e-10));

    CHECK(run_cli("boost --event 1,0,0,0.5 --momentum 2,0,0,1 --v 0,0,0.6 2>/dev/null").exit_code ==
          2);
    CHECK(run_cli("boost --event 1,0,0,0.5 --v 0,0,1.5 2>/dev/null").exit_code == 2);
}

TEST_CASE("cli: evolve conserves charge and validates against the schema") {
    const auto res = run_cli("evolve --steps 50 --dt 0.01 --report-every 10");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    check_schema(j, "evolve.schema.json");
    REQUIRE(j.at("rows").size() >= 2);
    const double q0 = j.at("rows")[0].at("Q").get<double>();
    for (const auto& row : j.at("rows")) {
        CHECK(std::abs(row.at("Q").get<double>() - q0) <= 1e-10 * std::abs(q0));
    }
    CHECK(j.at("final").at("Q").get<double>() ==
          doctest::Approx(j.at("rows").back().at("Q").get<double>()));
    CHECK(j.at("config").at("integrator").get<std::string>() == "spectral");
    CHECK(j.at("config").at("mode").get<int>() == 8);
}

TEST_CASE("cli: packet evolve reports a superluminal centroid speed") {
    const auto res = run_cli(
        "evolve --init packet --k0 10 --width 1 --grid 256 --dz 0.125 "
        "--steps 100 --dt 0.05 --report-every 10");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    check_schema(j, "evolve.schema.json");
    const double v = j.at("final").at("mean_centroid_speed").get<double>();
    CHECK(v > 1.0);
    CHECK(std::abs(v - 10.0 / std::sqrt(99.0)) <= 0.01);
    CHECK(j.at("config").at("evanescent_fraction").get<double>() < 1e-6);
}

TEST_CASE("cli: evanescent policies through the command line") {
    const auto project = run_cli(
        "evolve --init random --seed 7 --m_s-ev 2 --grid 128 --dz 0.25 "
        "--steps 10 --dt 0.01 --evanescent project");
    REQUIRE(project.exit_code == 0);
    const json pj = json::parse(project.output);
    for (const auto& row : pj.at("rows")) {
        CHECK(row.at("max_evanescent_amp").get<double>() <= 1e-12);
    }

    const auto fail = run_cli(
        "evolve --init uniform --m_s-ev 2 --steps 1 --evanescent fail 2>/dev/null");
    CHECK(fail.exit_code == 3);
}

TEST_CASE("cli: rk4 integrator is selectable and needs a stable step") {
    const auto ok = run_cli("evolve --integrator rk4 --steps 20 --dt 0.01 --report-every 20");
    REQUIRE(ok.exit_code == 0);
    CHECK(json::parse(ok.output).at("config").at("integrator").get<std::string>() == "rk4");

    // Default dz is 1/16, so dt = 0.5 violates the courant bound.
    CHECK(run_cli("evolve --integrator rk4 --steps 1 --dt 0.5 2>/dev/null").exit_code == 2);
}

TEST_CASE("cli: fixed seed gives byte-identical output") {
    const std::string cmd =
        "evolve --init random --seed 42 --m_s-ev 2 --grid 64 --dz 0.25 --steps 5 --dt 0.01";
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(json::parse(a.output).at("config").at("seed").get<std::uint64_t>() == 42u);

    const auto c = run_cli(
        "evolve --init random --seed 43 --m_s-ev 2 --grid 64 --dz 0.25 --steps 5 --dt 0.01");
    REQUIRE(c.exit_code == 0);
    CHECK(a.output != c.output);
}

TEST_CASE("cli: snapshot file round trip") {
    const std::string path = "/tmp/sdirac_cli_snapshot.json";
    std::remove(path.c_str());
    const auto res = run_cli("evolve --steps 5 --dt 0.01 --snapshot-out " + path);
    REQUIRE(res.exit_code == 0);
    CHECK(json::parse(res.output).at("snapshot_path").get<std::string>() == path);

    std::ifstream file(path);
    REQUIRE(file.good());
    std::stringstream buffer;
    buffer << file.rdbuf();
    const json snap = json::parse(buffer.str());
    CHECK(snap.at("grid").at("n_points").get<int>() == 256);
    CHECK(snap.at("components").size() == 4);
    CHECK(snap.at("representation").get<std::string>() == "dirac");
    CHECK(snap.at("time").get<double>() == doctest::Approx(0.05).epsilon(1e-12));
    std::remove(path.c_str());
}

TEST_CASE("cli: output formats") {
    const auto human = run_cli("--format human --preset paperV-speed");
    REQUIRE(human.exit_code == 0);
    CHECK(human.output.find("u_s") != std::string::npos);
    CHECK(human.output.find('{') == std::string::npos);

    const auto csv = run_cli("--format csv --preset paperV-speed");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output.rfind("key,value", 0) == 0);
    CHECK(csv.output.find("u_s,") != std::string::npos);

    // The evolve CSV is the report table itself.
    const auto table = run_cli("--format csv evolve --steps 5 --dt 0.01 --report-every 5");
    REQUIRE(table.exit_code == 0);
    CHECK(table.output.rfind("step,time,Q,norm,continuity_residual,max_evanescent_amp,"
                             "centroid,centroid_speed",
                             0) == 0);

    // Environment default, overridden by the explicit flag.
    const auto env_csv = testsupport::run("SDIRAC_FORMAT=csv " + cli() + " --preset paperV-speed");
    REQUIRE(env_csv.exit_code == 0);
    CHECK(env_csv.output.rfind("key,value", 0) == 0);
    const auto env_override = testsupport::run(
        "SDIRAC_FORMAT=csv " + cli() + " --format json --preset paperV-speed");
    REQUIRE(env_override.exit_code == 0);
    CHECK(env_override.output.rfind("{", 0) == 0);

    CHECK(run_cli("--format bogus verify-algebra 2>/dev/null").exit_code == 2);
    CHECK(testsupport::run("SDIRAC_FORMAT=bogus " + cli() + " verify-algebra 2>/dev/null")
              .exit_code == 2);
}

TEST_CASE("cli: argument errors all land on exit 2") {
    CHECK(run_cli("2>/dev/null").exit_code == 2);
    CHECK(run_cli("frobnicate 2>/dev/null").exit_code == 2);
    CHECK(run_cli("--preset no-such-preset 2>/dev/null").exit_code == 2);
    CHECK(run_cli("dispersion --m_s-ev 1.6 --p-ev banana 2>/dev/null").exit_code == 2);
    CHECK(run_cli("limits --m_s-ev 1 --v 0,0 --n 0,0,1 2>/dev/null").exit_code == 2);
    CHECK(run_cli("evolve --init nosuch --steps 1 2>/dev/null").exit_code == 2);
    CHECK(run_cli("evolve --branch 7 --steps 1 2>/dev/null").exit_code == 2);
    CHECK(run_cli("boost --v 0,0,0.5 --map teleport 2>/dev/null").exit_code == 2);
}
