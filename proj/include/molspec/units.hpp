#pragma once

// Physical constants and the handful of unit conversions used throughout.
// All internal computation is done in (eV, Angstrom, amu); conversions happen
// only at ingestion and reporting boundaries.

namespace molspec::units {

struct PhysicalConstants {
  double hbar_c;            // eV*Angstrom
  double amu_c2;            // eV
  double wavenumber_per_ev; // cm^-1 per eV
  double speed_of_light;    // cm/s
};

// CODATA-2018 values, frozen in source.
inline constexpr PhysicalConstants codata2018{
    1973.269804,     // hbar*c
    9.3149410242e8,  // amu * c^2
    8065.543937,     // 1 eV in cm^-1
    2.99792458e10,
};

// hbar^2/(2 mu) in eV*Angstrom^2 for a reduced mass in amu.
// Throws std::domain_error for mu <= 0.
double hbar2_over_2mu(double mu_amu);

double wavenumber_to_ev(double wavenumber_cm1);
double ev_to_wavenumber(double energy_ev);

} // namespace molspec::units
