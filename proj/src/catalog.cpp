#include "molspec/catalog.hpp"

#include <cmath>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "molspec/units.hpp"
#include "molspec/bundled_data.hpp"

namespace molspec {

namespace {

// Plain-decimal parse, no locale separators.
double parse_number(std::string_view s, int row, const char* field) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw CatalogError("catalog row " + std::to_string(row) + ": field '" +
                       field + "' is not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(trim(line.substr(start)));
      break;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

void validate_and_finish(MoleculeParams& p, int row, Catalog& cat) {
  auto positive = [&](double v, const char* field) {
    if (!(v > 0) || !std::isfinite(v))
      throw CatalogError("catalog row " + std::to_string(row) + " (" + p.name +
                         "): field '" + field + "' must be positive");
  };
  if (p.name.empty())
    throw CatalogError("catalog row " + std::to_string(row) + ": empty name");
  positive(p.De, "De_eV");
  positive(p.re, "re_angstrom");
  positive(p.omega_e, "omega_e_cm1");
  positive(p.mu, "mu_amu");
  if (p.a && !(*p.a > 0))
    throw CatalogError("catalog row " + std::to_string(row) + " (" + p.name +
                       "): field 'a_inv_angstrom' must be positive");
  if (cat.find(p.name))
    throw CatalogError("duplicate molecule name '" + p.name + "' at row " +
                       std::to_string(row));

  double derived = morse_width(p);
  if (p.a) {
    double rel = std::abs(*p.a - derived) / derived;
    if (rel > 0.005)
      cat.warnings.push_back({p.name, "supplied Morse width differs from the "
                                      "derived value by " +
                                          std::to_string(rel * 100) + "%"});
  } else {
    p.a = derived;
  }
  double alpha = *p.a * p.re;
  if (alpha <= 1.5)
    cat.warnings.push_back({p.name, "a*re = " + std::to_string(alpha) +
                                        " <= 1.5: Pekeris expansion unreliable"});
  if (chemical_dissociation(p) <= 0)
    cat.warnings.push_back({p.name, "chemical dissociation energy D0 <= 0"});
  cat.molecules.push_back(p);
}

Catalog load_csv(std::string_view text) {
  Catalog cat;
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    if (!line.empty()) lines.push_back(line);
    pos = nl + 1;
  }
  if (lines.empty()) return cat;

  auto header = split_csv(lines[0]);
  const std::vector<std::string_view> expected = {
      "name", "De_eV", "re_angstrom", "omega_e_cm1",
      "mu_amu", "a_inv_angstrom", "source"};
  if (header.size() < 5)
    throw CatalogError("catalog header must name at least the five required columns");
  for (size_t i = 0; i < header.size() && i < expected.size(); ++i)
    if (header[i] != expected[i])
      throw CatalogError("catalog header column " + std::to_string(i + 1) +
                         " must be '" + std::string(expected[i]) + "', got '" +
                         std::string(header[i]) + "'");

  for (size_t li = 1; li < lines.size(); ++li) {
    auto f = split_csv(lines[li]);
    int row = static_cast<int>(li);
    if (f.size() < 5)
      throw CatalogError("catalog row " + std::to_string(row) +
                         ": expected at least 5 fields, got " +
                         std::to_string(f.size()));
    MoleculeParams p;
    p.name = std::string(f[0]);
    p.De = parse_number(f[1], row, "De_eV");
    p.re = parse_number(f[2], row, "re_angstrom");
    p.omega_e = parse_number(f[3], row, "omega_e_cm1");
    p.mu = parse_number(f[4], row, "mu_amu");
    if (f.size() > 5 && !f[5].empty())
      p.a = parse_number(f[5], row, "a_inv_angstrom");
    if (f.size() > 6) p.source = std::string(f[6]);
    validate_and_finish(p, row, cat);
  }
  return cat;
}

Catalog load_json(std::string_view text) {
  Catalog cat;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CatalogError(std::string("catalog JSON parse error: ") + e.what());
  }
  if (j.is_null()) return cat;
  if (!j.is_array()) throw CatalogError("catalog JSON must be an array of objects");
  int row = 0;
  for (const auto& obj : j) {
    ++row;
    if (!obj.is_object())
      throw CatalogError("catalog JSON entry " + std::to_string(row) +
                         " is not an object");
    MoleculeParams p;
    try {
      p.name = obj.at("name").get<std::string>();
      p.De = obj.at("De_eV").get<double>();
      p.re = obj.at("re_angstrom").get<double>();
      p.omega_e = obj.at("omega_e_cm1").get<double>();
      p.mu = obj.at("mu_amu").get<double>();
      if (obj.contains("a_inv_angstrom") && !obj["a_inv_angstrom"].is_null())
        p.a = obj["a_inv_angstrom"].get<double>();
      if (obj.contains("source") && !obj["source"].is_null())
        p.source = obj["source"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw CatalogError("catalog JSON entry " + std::to_string(row) + ": " +
                         e.what());
    }
    validate_and_finish(p, row, cat);
  }
  return cat;
}

} // namespace

double MoleculeParams::width() const { return a ? *a : morse_width(*this); }

const MoleculeParams* Catalog::find(std::string_view name) const {
  for (const auto& m : molecules)
    if (m.name == name) return &m;
  return nullptr;
}

const MoleculeParams& Catalog::at(std::string_view name) const {
  const MoleculeParams* p = find(name);
  if (!p) throw CatalogError("unknown molecule '" + std::string(name) + "'");
  return *p;
}

Catalog load_catalog(std::string_view text, CatalogFormat format) {
  return format == CatalogFormat::csv ? load_csv(text) : load_json(text);
}

Catalog load_catalog(std::istream& in, CatalogFormat format) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_catalog(std::string_view(ss.str()), format);
}

std::string_view builtin_catalog_csv() { return bundled::kCatalogCsv; }

const Catalog& builtin_catalog() {
  static const Catalog cat = load_catalog(builtin_catalog_csv(), CatalogFormat::csv);
  return cat;
}

std::string serialize_catalog_csv(const Catalog& cat) {
  std::ostringstream out;
  out << "name,De_eV,re_angstrom,omega_e_cm1,mu_amu,a_inv_angstrom,source\n";
  out.precision(17);
  for (const auto& m : cat.molecules) {
    out << m.name << ',' << m.De << ',' << m.re << ',' << m.omega_e << ','
        << m.mu << ',';
    if (m.a) out << *m.a;
    out << ',' << m.source << '\n';
  }
  return out.str();
}

double rotational_constant(const MoleculeParams& p) {
  // hbar^2/(2 mu re^2) expressed in cm^-1.
  return units::ev_to_wavenumber(units::hbar2_over_2mu(p.mu) / (p.re * p.re));
}

double morse_width(const MoleculeParams& p) {
  double be = rotational_constant(p);               // cm^-1
  double de = units::ev_to_wavenumber(p.De);        // cm^-1
  return p.omega_e / (2.0 * p.re * std::sqrt(be * de));
}

double chemical_dissociation(const MoleculeParams& p) {
  return p.De - 0.5 * units::wavenumber_to_ev(p.omega_e);
}

} // namespace molspec
