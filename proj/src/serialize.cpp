#include "sdirac/serialize.hpp"

#include "sdirac/errors.hpp"

namespace sdirac {

using nlohmann::json;

json to_json(const ThreeVector& v) { return json::array({v.x, v.y, v.z}); }

json to_json(c64 z) { return json::array({z.real(), z.imag()}); }

json to_json(const AlgebraReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"identity", c.identity},
                          {"max_deviation", c.max_deviation},
                          {"pass", c.pass}});
    return {{"all_pass", report.all_pass()}, {"checks", checks}};
}

namespace {
const char* regime_name(DispersionRegime r) {
    switch (r) {
        case DispersionRegime::propagating: return "propagating";
        case DispersionRegime::threshold: return "threshold";
        default: return "evanescent";
    }
}
} // namespace

json to_json(const DispersionResult& result) {
    return {{"regime", regime_name(result.regime)},
            {"e_plus_ev", to_json(result.e_plus)},
            {"e_minus_ev", to_json(result.e_minus)}};
}

json to_json(const PlaneWaveSolution& sol) {
    json components = json::array();
    for (const auto& c : sol.bispinor.c) components.push_back(to_json(c));
    const DensityCurrent dc = density_current(sol.bispinor);
    const BilinearValues bl = bilinears(sol.bispinor);
    return {{"p_ev", sol.p},
            {"m_s_ev", sol.m_s},
            {"energy_ev", sol.energy},
            {"helicity", sol.helicity},
            {"energy_sign", sol.energy_sign},
            {"species", species_name(sol.species)},
            {"a_component", sol.a_component},
            {"normalization", sol.normalization},
            {"components", components},
            {"rho", dc.rho},
            {"j", to_json(dc.j)},
            {"scalar", bl.scalar},
            {"pseudoscalar", bl.pseudoscalar}};
}

json to_json(const ReportRow& row) {
    return {{"step", row.step},
            {"time", row.time},
            {"Q", row.charge},
            {"norm", row.norm},
            {"continuity_residual", row.continuity_residual},
            {"max_evanescent_amp", row.max_evanescent_amp},
            {"centroid", row.centroid},
            {"centroid_speed", row.centroid_speed}};
}

json to_json(const EvolutionReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) rows.push_back(to_json(r));
    return rows;
}

json to_json(const Grid1D& grid) {
    return {{"n_points", grid.n_points()}, {"dz", grid.dz()}};
}

json snapshot_json(const FieldState& state) {
    json components = json::array();
    for (const auto& comp : state.values) {
        json re = json::array();
        json im = json::array();
        for (const auto& v : comp) {
            re.push_back(v.real());
            im.push_back(v.imag());
        }
        components.push_back({{"re", re}, {"im", im}});
    }
    return {{"grid", to_json(state.grid)},
            {"time", state.time},
            {"m_s_ev", state.m_s},
            {"momentum_sign", state.momentum_sign},
            {"representation", representation_name(state.representation)},
            {"components", components}};
}

FieldState state_from_snapshot(const nlohmann::json& j) {
    const Grid1D grid(j.at("grid").at("n_points").get<int>(),
                      j.at("grid").at("dz").get<double>());
    const std::string rep = j.at("representation").get<std::string>();
    if (rep != "dirac" && rep != "weyl")
        throw DomainError("state_from_snapshot: unknown representation " + rep);

    FieldState st;
    st.grid = grid;
    st.time = j.at("time").get<double>();
    st.m_s = j.at("m_s_ev").get<double>();
    st.momentum_sign = j.at("momentum_sign").get<int>();
    st.representation = rep == "dirac" ? Representation::dirac : Representation::weyl;

    const auto& components = j.at("components");
    if (components.size() != 4) throw DomainError("state_from_snapshot: need 4 components");
    for (int c = 0; c < 4; ++c) {
        const auto& re = components[c].at("re");
        const auto& im = components[c].at("im");
        if (re.size() != static_cast<std::size_t>(grid.n_points()) || im.size() != re.size())
            throw DomainError("state_from_snapshot: component length mismatch");
        st.values[c].resize(re.size());
        for (std::size_t i = 0; i < re.size(); ++i)
            st.values[c][i] = c64(re[i].get<double>(), im[i].get<double>());
    }
    return st;
}

} // namespace sdirac
