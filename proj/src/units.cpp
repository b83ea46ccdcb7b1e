#include "molspec/units.hpp"

#include <stdexcept>

namespace molspec::units {

double hbar2_over_2mu(double mu_amu) {
  if (mu_amu <= 0)
    throw std::domain_error("hbar2_over_2mu: reduced mass must be positive");
  return codata2018.hbar_c * codata2018.hbar_c /
         (2.0 * mu_amu * codata2018.amu_c2);
}

double wavenumber_to_ev(double wavenumber_cm1) {
  return wavenumber_cm1 / codata2018.wavenumber_per_ev;
}

double ev_to_wavenumber(double energy_ev) {
  return energy_ev * codata2018.wavenumber_per_ev;
}

} // namespace molspec::units
