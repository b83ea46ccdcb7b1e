#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "molspec/radial.hpp"

namespace molspec {

enum class ReportFormat { table, csv, json };

struct ReportRow {
  std::string molecule;
  PotentialKind potential;
  int n;
  int ntilde;
  int m;
  double A;
  double B;
  double e_theta;
  double ell_tilde;
  double energy_ev;
  double aux_coeff;              // C_nm (Morse) or D_nm (Kratzer)
  std::optional<double> n_max;   // Morse only
  std::optional<int> bound_count;
};

struct SpectrumReport {
  std::string catalog_hash;      // FNV-1a 64 of the catalog CSV, hex
  std::string constants_version; // e.g. "codata2018"
  std::string timestamp;         // ISO 8601 UTC
  std::vector<ReportRow> rows;
  std::vector<std::string> diagnostics;
};

// Energies and derived reals are rendered with 6 significant digits; the
// emit -> parse -> emit cycle is byte-identical for csv and json.
void write_report(std::ostream& out, const SpectrumReport& rep, ReportFormat fmt);
std::string report_to_string(const SpectrumReport& rep, ReportFormat fmt);

SpectrumReport parse_report_csv(std::string_view text);
SpectrumReport parse_report_json(std::string_view text);

// 6-significant-digit rendering used for all report reals.
std::string format_sig6(double v);

std::string fnv1a_hex(std::string_view data);

// Reference value for one published-table cell.
struct ReferenceCell {
  std::string molecule;
  int n, ntilde, m;
  double A, B;
  PotentialKind potential;
  double energy_ev;
  bool suspected_typo;
};

std::vector<ReferenceCell> load_reference_table(std::string_view csv);
const std::vector<ReferenceCell>& builtin_reference_table();

} // namespace molspec
