#pragma once

#include "json.hpp"
#include "sdirac/evolution.hpp"
#include "sdirac/kinematics.hpp"
#include "sdirac/planewave.hpp"
#include "sdirac/spinor_algebra.hpp"

// JSON encodings for the machine-readable CLI output and state snapshots.
// Complex numbers are [re, im] pairs; doubles keep round-trip precision.

namespace sdirac {

nlohmann::json to_json(const ThreeVector& v);
nlohmann::json to_json(c64 z);
nlohmann::json to_json(const AlgebraReport& report);
nlohmann::json to_json(const DispersionResult& result);
nlohmann::json to_json(const PlaneWaveSolution& sol);
nlohmann::json to_json(const ReportRow& row);
nlohmann::json to_json(const EvolutionReport& report);
nlohmann::json to_json(const Grid1D& grid);

// Full field snapshot: grid metadata plus per-component re/im arrays.
nlohmann::json snapshot_json(const FieldState& state);
FieldState state_from_snapshot(const nlohmann::json& j);

} // namespace sdirac
