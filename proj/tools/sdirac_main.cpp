#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sdirac/errors.hpp"
#include "sdirac/evolution.hpp"
#include "sdirac/kinematics.hpp"
#include "sdirac/planewave.hpp"
#include "sdirac/serialize.hpp"
#include "sdirac/spinor_algebra.hpp"

// Exit codes are a stable contract: 0 success, 1 verification failure,
// 2 domain/regime error (including argument errors), 3 numerical blowup.

namespace {

using nlohmann::json;
using namespace sdirac;

enum class OutFormat { json, csv, human };

OutFormat parse_format(const std::string& name) {
    if (name == "json") return OutFormat::json;
    if (name == "csv") return OutFormat::csv;
    if (name == "human") return OutFormat::human;
    throw DomainError("unknown output format '" + name + "' (expected json, csv or human)");
}

double parse_double(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw DomainError(what + ": '" + text + "' is not a number");
    }
    if (used != text.size()) throw DomainError(what + ": '" + text + "' is not a number");
    return value;
}

std::vector<double> parse_tuple(const std::string& text, std::size_t count, const std::string& what) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) values.push_back(parse_double(item, what));
    if (values.size() != count)
        throw DomainError(what + ": expected " + std::to_string(count) + " comma-separated values, got '" +
                          text + "'");
    return values;
}

ThreeVector parse_vec3(const std::string& text, const std::string& what) {
    auto v = parse_tuple(text, 3, what);
    return {v[0], v[1], v[2]};
}

// --- output formatting ----------------------------------------------------

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

// Machine-readable result of one subcommand. The JSON value is the single
// source of truth; csv and human output are formatting layers over it. A
// subcommand with a natural table (evolve) supplies it as csv_table.
struct Output {
    json value;
    std::optional<std::string> csv_table;
    std::optional<std::string> human_summary;
};

void print_output(const Output& out, OutFormat format) {
    switch (format) {
    case OutFormat::json:
        std::cout << out.value.dump(2) << '\n';
        return;
    case OutFormat::csv: {
        if (out.csv_table) {
            std::cout << *out.csv_table;
            return;
        }
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(out.value, "", rows);
        std::cout << "key,value\n";
        for (const auto& [key, value] : rows) std::cout << key << ',' << value << '\n';
        return;
    }
    case OutFormat::human: {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(out.value, "", rows);
        std::size_t width = 0;
        for (const auto& [key, value] : rows) width = std::max(width, key.size());
        for (const auto& [key, value] : rows)
            std::cout << key << std::string(width - key.size(), ' ') << "  " << value << '\n';
        if (out.human_summary) std::cout << *out.human_summary;
        return;
    }
    }
}

// --- subcommands ------------------------------------------------------------

int cmd_verify_algebra(bool negative_control, Output& out) {
    MatrixBasis basis = build_basis();
    // The control swaps in the Hermitian Dirac mass matrix, which violates
    // every beta_s identity and must be reported as a failure.
    if (negative_control) basis.beta_s = basis.beta;
    AlgebraReport report = verify_algebra(basis);
    out.value = to_json(report);
    out.value["negative_control"] = negative_control;
    return report.all_pass() ? 0 : 1;
}

int cmd_dispersion(double m_s_ev, std::optional<double> p_ev, std::optional<double> u_s, Output& out) {
    double p = 0.0;
    if (p_ev) {
        p = *p_ev;
    } else {
        p = spacelike_momentum_from_speed(*u_s, {0.0, 0.0, 1.0}, m_s_ev).momentum().norm();
    }
    DispersionResult result = dispersion_energy(p, m_s_ev);
    out.value = to_json(result);
    out.value["m_s_ev"] = m_s_ev;
    out.value["p_ev"] = p;
    const c64 invariant = c64(p * p) - result.e_plus * result.e_plus;
    out.value["invariant_ev2"] = invariant.real();
    if (result.regime != DispersionRegime::propagating) {
        const char* name = result.regime == DispersionRegime::threshold ? "threshold" : "evanescent";
        std::fprintf(stderr, "sdirac: %s regime: |p| = %g eV does not exceed m_s = %g eV\n", name, p,
                     m_s_ev);
        return 2;
    }
    out.value["u_s"] = p / result.e_plus.real();
    return 0;
}

int cmd_limits(double m_s_ev, const ThreeVector& v, const ThreeVector& n, Output& out) {
    BoostVelocity boost(v);
    AsymptoticLimits plus = asymptotic_limits(n, boost, m_s_ev);
    AsymptoticLimits minus = asymptotic_limits(-n, boost, m_s_ev);
    out.value = json{{"m_s_ev", m_s_ev},
                     {"v", to_json(v)},
                     {"n", to_json(n)},
                     {"plus", {{"p_inf", to_json(plus.p_inf)}, {"e_inf", plus.e_inf}}},
                     {"minus", {{"p_inf", to_json(minus.p_inf)}, {"e_inf", minus.e_inf}}}};
    return 0;
}

int cmd_bispinor(double m_s_ev, double p_ev, const std::string& species_text, Output& out) {
    Species species = species_from_name(species_text);
    auto basis = bispinor_basis(p_ev, m_s_ev);
    PlaneWaveSolution physical = physical_selection(p_ev, m_s_ev, species);
    json solutions = json::array();
    for (const auto& solution : basis) solutions.push_back(to_json(solution));
    out.value = json{{"m_s_ev", m_s_ev},
                     {"p_ev", p_ev},
                     {"a_component", basis[0].a_component},
                     {"normalization", basis[0].normalization},
                     {"solutions", solutions},
                     {"physical", to_json(physical)}};
    return 0;
}

json event_json(const Event& e) {
    return {{"t", e.t}, {"r", to_json(e.r)}, {"frame", e.frame_tag}};
}

int cmd_boost(std::optional<std::string> event_text, std::optional<std::string> momentum_text,
              const ThreeVector& v, const std::string& map, Output& out) {
    BoostVelocity boost(v);
    out.value = json{{"map", map}, {"v", to_json(v)}};
    if (event_text) {
        auto c = parse_tuple(*event_text, 4, "--event");
        Event input{c[0], {c[1], c[2], c[3]}, kPreferredFrame};
        Event output = map == "ggt" ? ggt_boost(input, boost) : lorentz_boost(input, boost);
        Event back = map == "ggt" ? ggt_boost_inverse(output, boost)
                                  : lorentz_boost({output.t, output.r, kPreferredFrame}, BoostVelocity(-v));
        const double round_trip =
            std::max(std::abs(back.t - input.t), (back.r - input.r).norm());
        out.value["input"] = event_json(input);
        out.value["output"] = event_json(output);
        out.value["round_trip_error"] = round_trip;
        if (map == "lt") {
            // Interval to the frame origin event, which maps to itself.
            const Event origin{0.0, {0.0, 0.0, 0.0}, kPreferredFrame};
            out.value["interval_before_ev2"] = interval(input, origin).value;
            out.value["interval_after_ev2"] =
                interval(output, {0.0, {0.0, 0.0, 0.0}, output.frame_tag}).value;
        }
    } else {
        auto c = parse_tuple(*momentum_text, 4, "--momentum");
        const double energy = c[0];
        const ThreeVector p{c[1], c[2], c[3]};
        out.value["input"] = json{{"energy_ev", energy}, {"p_ev", to_json(p)}};
        if (map == "ggt") {
            GgtMomentum mapped = ggt_boost_momentum(energy, p, boost);
            out.value["output"] = json{{"energy_ev", mapped.energy}, {"p_ev", to_json(mapped.p)}};
            out.value["sr_energy_ev"] = ggt_momentum_to_sr_energy(mapped, boost);
        } else {
            // A four-momentum transforms like the coordinates under the
            // standard map, so the event boost applies verbatim.
            Event mapped = lorentz_boost({energy, p, kPreferredFrame}, boost);
            out.value["output"] = json{{"energy_ev", mapped.t}, {"p_ev", to_json(mapped.r)}};
            out.value["invariant_before_ev2"] = p.norm_sq() - energy * energy;
            out.value["invariant_after_ev2"] = mapped.r.norm_sq() - mapped.t * mapped.t;
        }
    }
    return 0;
}

struct EvolveArgs {
    double m_s_ev = 1.0;
    int grid = 256;
    double dz = 0.0625;
    double dt = 1e-3;
    int steps = 1000;
    std::string init = "plane";
    int mode = 8;
    int branch = 1;
    double k0 = 10.0;
    double width = 1.0;
    std::string species = "antineutrino";
    std::string integrator = "spectral";
    std::string evanescent = "warn";
    double amplitude_cap = kDefaultAmplitudeCap;
    int report_every = 10;
    std::uint64_t seed = 0;
    std::string snapshot_out;
};

int cmd_evolve(const EvolveArgs& a, Output& out) {
    Grid1D grid(a.grid, a.dz);
    const int sign = momentum_sign_of(species_from_name(a.species));
    FieldState initial;
    double evanescent_fraction = -1.0;
    if (a.init == "plane") {
        initial = init_plane_wave(grid, a.mode, a.branch, a.m_s_ev, sign);
    } else if (a.init == "packet") {
        PacketInit packet = init_gaussian_packet(grid, a.k0, a.width, a.branch, a.m_s_ev, sign);
        initial = packet.state;
        evanescent_fraction = packet.evanescent_fraction;
    } else if (a.init == "uniform") {
        // Spatially constant (k = 0) spinor with unit indefinite density.
        const double r = 1.0 / std::sqrt(2.0);
        initial = init_mode_spinor(grid, 0, {c64(r), c64(0.0), c64(r), c64(0.0)}, a.m_s_ev, sign);
    } else if (a.init == "random") {
        initial = init_random(grid, a.m_s_ev, sign, a.seed);
    } else {
        throw DomainError("unknown --init '" + a.init + "' (expected plane, packet, uniform or random)");
    }

    EvolveOptions options;
    options.dt = a.dt;
    options.steps = a.steps;
    if (a.integrator == "spectral") {
        options.integrator = Integrator::spectral;
    } else if (a.integrator == "rk4") {
        options.integrator = Integrator::rk4;
    } else {
        throw DomainError("unknown --integrator '" + a.integrator + "' (expected spectral or rk4)");
    }
    if (a.evanescent == "warn") {
        options.policy = EvanescentPolicy::warn;
    } else if (a.evanescent == "project") {
        options.policy = EvanescentPolicy::project;
    } else if (a.evanescent == "fail") {
        options.policy = EvanescentPolicy::fail;
    } else {
        throw DomainError("unknown --evanescent '" + a.evanescent + "' (expected warn, project or fail)");
    }
    options.amplitude_cap = a.amplitude_cap;
    options.report_every = a.report_every;

    EvolveResult result = evolve(initial, options);

    json config{{"m_s_ev", a.m_s_ev},     {"grid", to_json(grid)},
                {"dt", a.dt},             {"steps", a.steps},
                {"init", a.init},         {"species", a.species},
                {"integrator", a.integrator}, {"evanescent_policy", a.evanescent},
                {"amplitude_cap", a.amplitude_cap}, {"report_every", a.report_every}};
    if (a.init == "plane") {
        config["mode"] = a.mode;
        config["branch"] = a.branch;
    } else if (a.init == "packet") {
        config["k0"] = a.k0;
        config["width"] = a.width;
        config["branch"] = a.branch;
        config["evanescent_fraction"] = evanescent_fraction;
    } else if (a.init == "random") {
        config["seed"] = a.seed;
    }

    const FieldState& final_state = result.final_state;
    json final_values{{"time", final_state.time},
                      {"Q", charge(final_state)},
                      {"norm", total_norm(final_state)},
                      {"centroid", centroid(final_state)},
                      {"mean_centroid_speed", result.report.mean_centroid_speed(grid.length())}};

    out.value = json{{"config", config}, {"rows", to_json(result.report)}, {"final", final_values}};

    if (!a.snapshot_out.empty()) {
        std::ofstream file(a.snapshot_out);
        if (!file) throw DomainError("cannot open snapshot file '" + a.snapshot_out + "'");
        file << snapshot_json(final_state).dump(2) << '\n';
        out.value["snapshot_path"] = a.snapshot_out;
    }

    std::ostringstream table;
    result.report.write_csv(table);
    out.csv_table = table.str();

    std::ostringstream summary;
    summary << "\nreport rows: " << result.report.rows.size() << " (every " << a.report_every
            << " steps)\n";
    out.human_summary = summary.str();
    return 0;
}

// --- dispatch ---------------------------------------------------------------

// Named reproduction scenarios; each expands to a full argument list so the
// same code path runs as for hand-written flags.
const std::map<std::string, std::vector<std::string>> kPresets = {
    {"paperV-speed", {"dispersion", "--m_s-ev", "1.6", "--p-ev", "16"}},
    {"paperII-elimit", {"limits", "--m_s-ev", "1", "--v", "0,0,0.001", "--n", "0,0,1"}},
    {"paperV-bispinor", {"bispinor", "--m_s-ev", "1.6", "--p-ev", "16", "--species", "antineutrino"}},
    {"paperI-msq", {"dispersion", "--m_s-ev", "1.7320508075688772", "--p-ev", "16"}},
};

int run(std::vector<std::string> args) {
    // Expand --preset before regular parsing. Presets never nest.
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string name;
        std::size_t consumed = 0;
        if (args[i] == "--preset") {
            if (i + 1 >= args.size()) {
                std::fprintf(stderr, "sdirac: --preset requires a name\n");
                return 2;
            }
            name = args[i + 1];
            consumed = 2;
        } else if (args[i].rfind("--preset=", 0) == 0) {
            name = args[i].substr(9);
            consumed = 1;
        } else {
            continue;
        }
        auto preset = kPresets.find(name);
        if (preset == kPresets.end()) {
            std::fprintf(stderr, "sdirac: unknown preset '%s'\n", name.c_str());
            return 2;
        }
        std::vector<std::string> expanded = preset->second;
        expanded.insert(expanded.end(), args.begin(), args.begin() + i);
        expanded.insert(expanded.end(), args.begin() + i + consumed, args.end());
        return run(std::move(expanded));
    }

    std::string format_text = "json";
    if (const char* env = std::getenv("SDIRAC_FORMAT")) format_text = env;

    CLI::App app{"spacelike-fermion toolkit: dispersion, bispinors, boosts and 1+1D evolution"};
    app.require_subcommand(0, 1);
    auto add_format = [&format_text](CLI::App* cmd) {
        cmd->add_option("--format", format_text, "output format: json, csv or human");
    };
    add_format(&app);

    bool negative_control = false;
    CLI::App* verify = app.add_subcommand("verify-algebra", "check the matrix identities of the equation");
    verify->add_flag("--negative-control", negative_control,
                     "swap in the Hermitian mass matrix; must fail");
    add_format(verify);

    double m_s_ev = 1.0;
    std::optional<double> p_ev;
    std::optional<double> u_s;
    CLI::App* dispersion = app.add_subcommand("dispersion", "energy and speed of a momentum eigenstate");
    dispersion->add_option("--m_s-ev", m_s_ev, "mass parameter in eV")->required();
    auto* p_opt = dispersion->add_option("--p-ev", p_ev, "momentum magnitude in eV");
    auto* u_opt = dispersion->add_option("--u_s", u_s, "speed in units of c (> 1)");
    p_opt->excludes(u_opt);
    add_format(dispersion);

    std::string v_text = "0,0,0";
    std::string n_text = "0,0,1";
    CLI::App* limits = app.add_subcommand("limits", "infinite-speed momentum and energy limits");
    limits->add_option("--m_s-ev", m_s_ev, "mass parameter in eV")->required();
    limits->add_option("--v", v_text, "frame velocity vx,vy,vz in units of c")->required();
    limits->add_option("--n", n_text, "direction of motion nx,ny,nz")->required();
    add_format(limits);

    std::string species_text = "antineutrino";
    double bis_p_ev = 0.0;
    CLI::App* bispinor = app.add_subcommand("bispinor", "closed-form plane-wave bispinors and bilinears");
    bispinor->add_option("--m_s-ev", m_s_ev, "mass parameter in eV")->required();
    bispinor->add_option("--p-ev", bis_p_ev, "momentum magnitude in eV")->required();
    bispinor->add_option("--species", species_text, "antineutrino (nubar) or neutrino (nu)");
    add_format(bispinor);

    std::optional<std::string> event_text;
    std::optional<std::string> momentum_text;
    std::string map_text = "ggt";
    CLI::App* boost = app.add_subcommand("boost", "transform an event or four-momentum between frames");
    auto* ev_opt = boost->add_option("--event", event_text, "event t,x,y,z in the preferred frame");
    auto* mom_opt = boost->add_option("--momentum", momentum_text, "four-momentum E,px,py,pz in eV");
    ev_opt->excludes(mom_opt);
    boost->add_option("--v", v_text, "frame velocity vx,vy,vz in units of c")->required();
    boost->add_option("--map", map_text, "coordinate map: ggt or lt")
        ->check(CLI::IsMember({"ggt", "lt"}));
    add_format(boost);

    EvolveArgs ev;
    CLI::App* evolve_cmd = app.add_subcommand("evolve", "integrate the 1+1D lattice equation");
    evolve_cmd->add_option("--m_s-ev", ev.m_s_ev, "mass parameter in eV");
    evolve_cmd->add_option("--grid", ev.grid, "lattice points (power of two)");
    evolve_cmd->add_option("--dz", ev.dz, "lattice spacing");
    evolve_cmd->add_option("--dt", ev.dt, "time step");
    evolve_cmd->add_option("--steps", ev.steps, "number of steps");
    evolve_cmd->add_option("--init", ev.init, "initial state: plane, packet, uniform or random");
    evolve_cmd->add_option("--mode", ev.mode, "plane-wave mode index (signed)");
    evolve_cmd->add_option("--branch", ev.branch, "dispersion branch 1..4");
    evolve_cmd->add_option("--k0", ev.k0, "packet center wavenumber");
    evolve_cmd->add_option("--width", ev.width, "packet spatial width");
    evolve_cmd->add_option("--species", ev.species, "antineutrino (nubar) or neutrino (nu)");
    evolve_cmd->add_option("--integrator", ev.integrator, "spectral or rk4");
    evolve_cmd->add_option("--evanescent", ev.evanescent, "evanescent-mode policy: warn, project or fail");
    evolve_cmd->add_option("--amplitude-cap", ev.amplitude_cap, "blowup threshold on mode amplitudes");
    evolve_cmd->add_option("--report-every", ev.report_every, "steps between report rows");
    evolve_cmd->add_option("--seed", ev.seed, "random-init seed");
    evolve_cmd->add_option("--snapshot-out", ev.snapshot_out, "write final-state snapshot JSON here");
    add_format(evolve_cmd);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Output out;
        int code = 0;
        if (verify->parsed()) {
            code = cmd_verify_algebra(negative_control, out);
        } else if (dispersion->parsed()) {
            if (p_ev.has_value() == u_s.has_value())
                throw DomainError("dispersion needs exactly one of --p-ev and --u_s");
            code = cmd_dispersion(m_s_ev, p_ev, u_s, out);
        } else if (limits->parsed()) {
            code = cmd_limits(m_s_ev, parse_vec3(v_text, "--v"), parse_vec3(n_text, "--n"), out);
        } else if (bispinor->parsed()) {
            code = cmd_bispinor(m_s_ev, bis_p_ev, species_text, out);
        } else if (boost->parsed()) {
            if (event_text.has_value() == momentum_text.has_value())
                throw DomainError("boost needs exactly one of --event and --momentum");
            code = cmd_boost(event_text, momentum_text, parse_vec3(v_text, "--v"), map_text, out);
        } else if (evolve_cmd->parsed()) {
            code = cmd_evolve(ev, out);
        } else {
            std::cout << app.help();
            return 2;
        }
        print_output(out, parse_format(format_text));
        return code;
    } catch (const BlowupError& e) {
        std::fprintf(stderr, "sdirac: blowup: %s\n", e.what());
        return 3;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "sdirac: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "sdirac: %s\n", e.what());
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args));
}
