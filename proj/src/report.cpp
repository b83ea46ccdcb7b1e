#include "molspec/report.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "molspec/bundled_data.hpp"

namespace molspec {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kind_name(PotentialKind k) {
  return k == PotentialKind::morse ? "morse" : "kratzer";
}

PotentialKind kind_from(std::string_view s) {
  if (s == "morse") return PotentialKind::morse;
  if (s == "kratzer") return PotentialKind::kratzer;
  throw std::invalid_argument("unknown potential kind '" + std::string(s) + "'");
}

// Round through the 6-significant-digit decimal representation so that JSON
// number emission is stable under parse/re-emit.
double round_sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return std::strtod(buf, nullptr);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, ',')) out.push_back(cur);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double to_double(const std::string& s) {
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

} // namespace

std::string format_sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string report_to_string(const SpectrumReport& rep, ReportFormat fmt) {
  std::ostringstream out;
  write_report(out, rep, fmt);
  return out.str();
}

void write_report(std::ostream& out, const SpectrumReport& rep, ReportFormat fmt) {
  switch (fmt) {
  case ReportFormat::csv: {
    out << "# catalog_hash=" << rep.catalog_hash
        << " constants=" << rep.constants_version
        << " timestamp=" << rep.timestamp << "\n";
    out << "molecule,potential,n,ntilde,m,A,B,e_theta,ell_tilde,energy_ev,"
           "aux_coeff,n_max,bound_count\n";
    for (const auto& r : rep.rows) {
      out << r.molecule << ',' << kind_name(r.potential) << ',' << r.n << ','
          << r.ntilde << ',' << r.m << ',' << format_sig6(r.A) << ','
          << format_sig6(r.B) << ',' << format_sig6(r.e_theta) << ','
          << format_sig6(r.ell_tilde) << ',' << format_sig6(r.energy_ev) << ','
          << format_sig6(r.aux_coeff) << ',';
      if (r.n_max) out << format_sig6(*r.n_max);
      out << ',';
      if (r.bound_count) out << *r.bound_count;
      out << '\n';
    }
    for (const auto& d : rep.diagnostics) out << "# warning: " << d << "\n";
    break;
  }
  case ReportFormat::json: {
    ordered_json j;
    j["metadata"] = {{"catalog_hash", rep.catalog_hash},
                     {"constants_version", rep.constants_version},
                     {"timestamp", rep.timestamp}};
    j["rows"] = ordered_json::array();
    for (const auto& r : rep.rows) {
      ordered_json row;
      row["molecule"] = r.molecule;
      row["potential"] = kind_name(r.potential);
      row["n"] = r.n;
      row["ntilde"] = r.ntilde;
      row["m"] = r.m;
      row["A"] = round_sig6(r.A);
      row["B"] = round_sig6(r.B);
      row["e_theta"] = round_sig6(r.e_theta);
      row["ell_tilde"] = round_sig6(r.ell_tilde);
      row["energy_ev"] = round_sig6(r.energy_ev);
      ordered_json aux;
      aux[r.potential == PotentialKind::morse ? "c_nm" : "d_nm"] =
          round_sig6(r.aux_coeff);
      if (r.n_max) aux["n_max"] = round_sig6(*r.n_max);
      if (r.bound_count) aux["bound_count"] = *r.bound_count;
      row["aux"] = std::move(aux);
      j["rows"].push_back(std::move(row));
    }
    j["diagnostics"] = rep.diagnostics;
    out << j.dump(2) << '\n';
    break;
  }
  case ReportFormat::table: {
    out << "molecule potential    n ntilde  m      A      B     e_theta"
           "   ell_tilde    energy_ev\n";
    for (const auto& r : rep.rows) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-8s %-9s %4d %6d %2d %6s %6s %11s %11s %12s\n",
                    r.molecule.c_str(), kind_name(r.potential), r.n, r.ntilde,
                    r.m, format_sig6(r.A).c_str(), format_sig6(r.B).c_str(),
                    format_sig6(r.e_theta).c_str(),
                    format_sig6(r.ell_tilde).c_str(),
                    format_sig6(r.energy_ev).c_str());
      out << buf;
    }
    for (const auto& d : rep.diagnostics) out << "warning: " << d << "\n";
    break;
  }
  }
}

SpectrumReport parse_report_csv(std::string_view text) {
  SpectrumReport rep;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.rfind("# warning: ", 0) == 0) {
        rep.diagnostics.push_back(line.substr(11));
      } else {
        std::istringstream meta(line.substr(1));
        std::string tok;
        while (meta >> tok) {
          auto eq = tok.find('=');
          if (eq == std::string::npos) continue;
          auto key = tok.substr(0, eq), val = tok.substr(eq + 1);
          if (key == "catalog_hash") rep.catalog_hash = val;
          else if (key == "constants") rep.constants_version = val;
          else if (key == "timestamp") rep.timestamp = val;
        }
      }
      continue;
    }
    if (!header_seen) { header_seen = true; continue; }
    auto f = split_line(line);
    if (f.size() < 13)
      throw std::invalid_argument("report CSV row has " +
                                  std::to_string(f.size()) + " fields");
    ReportRow r;
    r.molecule = f[0];
    r.potential = kind_from(f[1]);
    r.n = std::stoi(f[2]);
    r.ntilde = std::stoi(f[3]);
    r.m = std::stoi(f[4]);
    r.A = to_double(f[5]);
    r.B = to_double(f[6]);
    r.e_theta = to_double(f[7]);
    r.ell_tilde = to_double(f[8]);
    r.energy_ev = to_double(f[9]);
    r.aux_coeff = to_double(f[10]);
    if (!f[11].empty()) r.n_max = to_double(f[11]);
    if (!f[12].empty()) r.bound_count = std::stoi(f[12]);
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

SpectrumReport parse_report_json(std::string_view text) {
  SpectrumReport rep;
  ordered_json j = ordered_json::parse(text);
  const auto& meta = j.at("metadata");
  rep.catalog_hash = meta.at("catalog_hash").get<std::string>();
  rep.constants_version = meta.at("constants_version").get<std::string>();
  rep.timestamp = meta.at("timestamp").get<std::string>();
  for (const auto& row : j.at("rows")) {
    ReportRow r;
    r.molecule = row.at("molecule").get<std::string>();
    r.potential = kind_from(row.at("potential").get<std::string>());
    r.n = row.at("n").get<int>();
    r.ntilde = row.at("ntilde").get<int>();
    r.m = row.at("m").get<int>();
    r.A = row.at("A").get<double>();
    r.B = row.at("B").get<double>();
    r.e_theta = row.at("e_theta").get<double>();
    r.ell_tilde = row.at("ell_tilde").get<double>();
    r.energy_ev = row.at("energy_ev").get<double>();
    const auto& aux = row.at("aux");
    r.aux_coeff = aux.contains("c_nm") ? aux["c_nm"].get<double>()
                                       : aux.at("d_nm").get<double>();
    if (aux.contains("n_max")) r.n_max = aux["n_max"].get<double>();
    if (aux.contains("bound_count")) r.bound_count = aux["bound_count"].get<int>();
    rep.rows.push_back(std::move(r));
  }
  if (j.contains("diagnostics"))
    rep.diagnostics = j["diagnostics"].get<std::vector<std::string>>();
  return rep;
}

std::vector<ReferenceCell> load_reference_table(std::string_view csv) {
  std::vector<ReferenceCell> cells;
  std::istringstream in{std::string(csv)};
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!header_seen) { header_seen = true; continue; }
    auto f = split_line(line);
    if (f.size() != 9)
      throw std::invalid_argument("reference table row has " +
                                  std::to_string(f.size()) + " fields");
    ReferenceCell c;
    c.molecule = f[0];
    c.n = std::stoi(f[1]);
    c.ntilde = std::stoi(f[2]);
    c.m = std::stoi(f[3]);
    c.A = to_double(f[4]);
    c.B = to_double(f[5]);
    c.potential = kind_from(f[6]);
    c.energy_ev = to_double(f[7]);
    if (f[8] != "ok" && f[8] != "suspected_typo")
      throw std::invalid_argument("reference table flag '" + f[8] + "'");
    c.suspected_typo = (f[8] == "suspected_typo");
    cells.push_back(std::move(c));
  }
  return cells;
}

const std::vector<ReferenceCell>& builtin_reference_table() {
  static const std::vector<ReferenceCell> table =
      load_reference_table(bundled::kReferenceCsv);
  return table;
}

} // namespace molspec
