#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace molspec {

// Spectroscopic record for one diatomic molecule.
struct MoleculeParams {
  std::string name;
  double De = 0;       // electronic dissociation energy, eV
  double re = 0;       // equilibrium internuclear distance, Angstrom
  double omega_e = 0;  // harmonic vibrational parameter, cm^-1
  double mu = 0;       // reduced mass, amu
  std::optional<double> a; // Morse width, 1/Angstrom; derived when absent
  std::string source;

  // Morse width actually used in energy formulas: the supplied value when
  // present, otherwise the derived one.
  double width() const;
};

struct CatalogDiagnostic {
  std::string molecule;
  std::string message;
};

struct Catalog {
  std::vector<MoleculeParams> molecules;
  std::vector<CatalogDiagnostic> warnings;

  const MoleculeParams* find(std::string_view name) const;
  const MoleculeParams& at(std::string_view name) const; // throws if missing
};

enum class CatalogFormat { csv, json };

class CatalogError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Parses and validates a catalog. Rows violating positivity invariants are
// rejected with a row-level diagnostic in the exception message; a is derived
// via morse_width when the column is empty. Duplicate names are an error.
Catalog load_catalog(std::istream& in, CatalogFormat format);
Catalog load_catalog(std::string_view text, CatalogFormat format);

// The ten bundled molecules; loaded once, immutable afterwards.
const Catalog& builtin_catalog();

// Raw CSV text of the bundled catalog (used for report metadata hashing).
std::string_view builtin_catalog_csv();

std::string serialize_catalog_csv(const Catalog& cat);

// Rotational constant B_e = hbar/(4 pi c mu re^2) in cm^-1.
double rotational_constant(const MoleculeParams& p);

// Morse width a = omega_e / (2 re sqrt(B_e De)), all energies in cm^-1,
// result in 1/Angstrom. Ignores the stored a.
double morse_width(const MoleculeParams& p);

// Chemical dissociation energy D0 = De - hbar omega_e / 2, in eV.
double chemical_dissociation(const MoleculeParams& p);

} // namespace molspec
