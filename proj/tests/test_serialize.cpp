#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdirac/errors.hpp"
#include "sdirac/evolution.hpp"
#include "sdirac/kinematics.hpp"
#include "sdirac/planewave.hpp"
#include "sdirac/serialize.hpp"
#include "sdirac/spinor_algebra.hpp"

using namespace sdirac;
using nlohmann::json;

TEST_CASE("scalar encodings") {
    const json z = to_json(c64(1.5, -2.25));
    CHECK(z.is_array());
    CHECK(z.size() == 2);
    CHECK(z[0].get<double>() == 1.5);
    CHECK(z[1].get<double>() == -2.25);

    const json v = to_json(ThreeVector{0.1, 0.2, 0.3});
    CHECK(v.size() == 3);
    CHECK(v[2].get<double>() == 0.3);

    // Doubles survive a dump/parse round trip bit for bit.
    const double awkward = 0.1 + 0.2;
    const json round_tripped = json::parse(json(awkward).dump());
    CHECK(round_tripped.get<double>() == awkward);
}

TEST_CASE("algebra and dispersion reports") {
    const json a = to_json(verify_algebra(build_basis()));
    CHECK(a.at("all_pass").get<bool>());
    REQUIRE(a.at("checks").is_array());
    CHECK(a.at("checks").size() >= 12);
    for (const auto& check : a.at("checks")) {
        CHECK(check.at("identity").is_string());
        CHECK(check.at("max_deviation").is_number());
        CHECK(check.at("pass").is_boolean());
    }

    const json d = to_json(dispersion_energy(16.0, 1.6));
    CHECK(d.at("regime").get<std::string>() == "propagating");
    CHECK(d.at("e_plus_ev")[0].get<double>() == doctest::Approx(15.919798993705919));
    CHECK(d.at("e_plus_ev")[1].get<double>() == 0.0);
    const json ev = to_json(dispersion_energy(0.5, 1.0));
    CHECK(ev.at("regime").get<std::string>() == "evanescent");
    CHECK(ev.at("e_plus_ev")[0].get<double>() == 0.0);
    CHECK(ev.at("e_plus_ev")[1].get<double>() > 0.0);
}

TEST_CASE("plane-wave solution serialization") {
    const json j = to_json(physical_selection(16.0, 1.6, Species::antineutrino));
    CHECK(j.at("p_ev").get<double>() == 16.0);
    CHECK(j.at("m_s_ev").get<double>() == 1.6);
    CHECK(j.at("helicity").get<int>() == 1);
    CHECK(j.at("energy_sign").get<int>() == 1);
    CHECK(j.at("species").get<std::string>() == "antineutrino");
    CHECK(j.at("components").size() == 4);
    CHECK(j.at("components")[0].size() == 2);
    CHECK(j.at("j").size() == 3);
    CHECK(j.at("rho").get<double>() > 0.0);
    CHECK(j.at("scalar").is_number());
    CHECK(j.at("pseudoscalar").is_number());
    CHECK(j.at("a_component").get<double>() == doctest::Approx(0.90453403373329087));
}

TEST_CASE("report rows serialize with the documented keys") {
    ReportRow row{};
    row.step = 3;
    row.time = 0.25;
    row.charge = 47.5;
    row.norm = 16.0;
    row.continuity_residual = 1e-12;
    row.max_evanescent_amp = 2e-16;
    row.centroid = 8.0;
    row.centroid_speed = 1.005;
    const json j = to_json(row);
    CHECK(j.at("step").get<int>() == 3);
    CHECK(j.at("Q").get<double>() == 47.5);
    CHECK(j.at("centroid_speed").get<double>() == 1.005);

    EvolutionReport report;
    report.rows.push_back(row);
    report.rows.push_back(row);
    const json arr = to_json(report);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 2);
    CHECK(arr[1].at("Q").get<double>() == 47.5);
}

TEST_CASE("report csv layout") {
    CHECK(std::string(EvolutionReport::csv_header()) ==
          "step,time,Q,norm,continuity_residual,max_evanescent_amp,centroid,centroid_speed");

    EvolutionReport report;
    ReportRow row{};
    row.step = 10;
    row.time = 0.1;
    row.charge = 47.651009713110509;
    row.norm = 16.0;
    row.continuity_residual = 3.5e-12;
    row.max_evanescent_amp = 0.0;
    row.centroid = 8.5;
    row.centroid_speed = 1.0050378;
    report.rows.push_back(row);

    std::ostringstream out;
    report.write_csv(out);
    std::istringstream in(out.str());
    std::string header, line, extra;
    REQUIRE(std::getline(in, header));
    REQUIRE(std::getline(in, line));
    CHECK_FALSE(std::getline(in, extra));
    CHECK(header == EvolutionReport::csv_header());

    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 8);
    CHECK(std::stoi(fields[0]) == 10);
    CHECK(std::stod(fields[2]) == doctest::Approx(row.charge).epsilon(1e-14));
    CHECK(std::stod(fields[4]) == doctest::Approx(row.continuity_residual).epsilon(1e-14));
    CHECK(std::stod(fields[7]) == doctest::Approx(row.centroid_speed).epsilon(1e-14));
}

TEST_CASE("snapshot round trip is exact") {
    const Grid1D g(64, 0.25);
    FieldState original = to_weyl_state(init_random(g, 1.5, -1, 77u));
    original.time = 0.625;

    const json j = json::parse(snapshot_json(original).dump());
    const FieldState restored = state_from_snapshot(j);

    CHECK(restored.grid == original.grid);
    CHECK(restored.time == original.time);
    CHECK(restored.m_s == original.m_s);
    CHECK(restored.momentum_sign == original.momentum_sign);
    CHECK(restored.representation == original.representation);
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < g.n_points(); ++i)
            CHECK(restored.values[c][i] == original.values[c][i]);
}

TEST_CASE("snapshot validation rejects malformed input") {
    const Grid1D g(8, 1.0);
    const FieldState s = init_random(g, 1.0, +1, 1u);
    json good = snapshot_json(s);

    json bad_rep = good;
    bad_rep["representation"] = "majorana";
    CHECK_THROWS_AS((void)state_from_snapshot(bad_rep), DomainError);

    json missing = good;
    missing.erase("time");
    CHECK_THROWS((void)state_from_snapshot(missing));

    json short_components = good;
    short_components["components"].erase(3);
    CHECK_THROWS_AS((void)state_from_snapshot(short_components), DomainError);

    json ragged = good;
    ragged["components"][2]["re"].erase(0);
    CHECK_THROWS_AS((void)state_from_snapshot(ragged), DomainError);

    json bad_grid = good;
    bad_grid["grid"]["n_points"] = 6;
    CHECK_THROWS_AS((void)state_from_snapshot(bad_grid), DomainError);
}

TEST_CASE("grid serialization") {
    const json j = to_json(Grid1D(128, 0.125));
    CHECK(j.at("n_points").get<int>() == 128);
    CHECK(j.at("dz").get<double>() == 0.125);
}
