#pragma once

// Conversion constants between the internal natural units (hbar = c = 1,
// energies in eV) and laboratory units. CODATA 2018 values.

namespace sdirac::units {

inline constexpr double hbar_ev_s = 6.582119569e-16;  // hbar in eV s
inline constexpr double hbar_c_ev_nm = 197.3269804;   // hbar c in eV nm
inline constexpr double c_m_per_s = 299792458.0;

// One natural length unit (hbar c / 1 eV) in meters.
inline constexpr double natural_length_m = hbar_c_ev_nm * 1e-9;
// One natural time unit (hbar / 1 eV) in seconds.
inline constexpr double natural_time_s = hbar_ev_s;

} // namespace sdirac::units
