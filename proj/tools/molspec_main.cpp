#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "molspec/catalog.hpp"
#include "molspec/oracle.hpp"
#include "molspec/radial.hpp"
#include "molspec/report.hpp"
#include "molspec/units.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComparisonFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct IntRange {
  int lo = 0, hi = 0;
};

// "a..b" inclusive, or a single value.
IntRange parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      size_t pos = 0;
      int v = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    size_t p1 = 0, p2 = 0;
    std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    int lo = std::stoi(a, &p1), hi = std::stoi(b, &p2);
    if (p1 != a.size() || p2 != b.size() || hi < lo)
      throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "invalid range syntax '" + s +
                                            "' (expected N or N..M)");
  }
}

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

molspec::Catalog load_selected_catalog(const std::string& path) {
  if (path.empty()) return molspec::builtin_catalog();
  std::ifstream in(path);
  if (!in) throw molspec::CatalogError("cannot open catalog file '" + path + "'");
  auto fmt = path.size() > 5 && path.substr(path.size() - 5) == ".json"
                 ? molspec::CatalogFormat::json
                 : molspec::CatalogFormat::csv;
  return molspec::load_catalog(in, fmt);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot open output file '" + output_path + "'");
  out << text;
}

molspec::ReportFormat parse_format(const std::string& s) {
  if (s == "table") return molspec::ReportFormat::table;
  if (s == "csv") return molspec::ReportFormat::csv;
  if (s == "json") return molspec::ReportFormat::json;
  throw CLI::ValidationError("format", "unknown format '" + s + "'");
}

int run_levels(const molspec::Catalog& cat, const std::string& molecule,
               const std::string& potential, IntRange nr, IntRange ntr,
               IntRange mr, double A, double B, const std::string& parity,
               molspec::ReportFormat fmt, const std::string& output) {
  const molspec::MoleculeParams& p = cat.at(molecule);

  std::vector<molspec::PotentialKind> kinds;
  if (potential == "morse" || potential == "both")
    kinds.push_back(molspec::PotentialKind::morse);
  if (potential == "kratzer" || potential == "both")
    kinds.push_back(molspec::PotentialKind::kratzer);
  if (kinds.empty())
    throw CLI::ValidationError("potential", "unknown potential '" + potential + "'");

  molspec::SpectrumReport rep;
  rep.catalog_hash = molspec::fnv1a_hex(molspec::serialize_catalog_csv(cat));
  rep.constants_version = "codata2018";
  rep.timestamp = utc_timestamp();
  for (const auto& w : cat.warnings)
    rep.diagnostics.push_back(w.molecule + ": " + w.message);

  for (auto kind : kinds) {
    for (int n = nr.lo; n <= nr.hi; ++n) {
      for (int nt = ntr.lo; nt <= ntr.hi; ++nt) {
        for (int m = mr.lo; m <= mr.hi; ++m) {
          molspec::AngularChannel ch{nt, m, A, B,
                                     parity == "odd" ? molspec::Parity::odd
                                                     : molspec::Parity::even};
          if (B > 0 && parity == "odd")
            rep.diagnostics.push_back("parity flag ignored for B > 0");
          auto sol = molspec::angular_eigenvalue(ch);
          molspec::ReportRow row;
          row.molecule = p.name;
          row.potential = kind;
          row.n = n;
          row.ntilde = nt;
          row.m = m;
          row.A = A;
          row.B = B;
          row.e_theta = sol.e_theta;
          row.ell_tilde = sol.ell_tilde;
          if (kind == molspec::PotentialKind::morse) {
            auto bound = molspec::morse_nmax(p, sol);
            if (n > std::floor(bound.n_max)) {
              std::ostringstream d;
              d << p.name << " morse n=" << n << " ntilde=" << nt << " m=" << m
                << ": unbound (n_max=" << molspec::format_sig6(bound.n_max)
                << "), skipped";
              rep.diagnostics.push_back(d.str());
              continue;
            }
            row.energy_ev = molspec::morse_energy_ev(p, n, sol.e_theta);
            row.aux_coeff = molspec::morse_c_coefficient(p, sol.e_theta);
            row.n_max = bound.n_max;
            row.bound_count = bound.bound_count;
          } else {
            row.energy_ev = molspec::kratzer_energy_ev(p, n, sol.e_theta);
            row.aux_coeff = molspec::kratzer_d_coefficient(p, sol.e_theta);
          }
          rep.rows.push_back(std::move(row));
        }
      }
    }
  }
  emit(molspec::report_to_string(rep, fmt), output);
  return kExitOk;
}

int run_table2(const molspec::Catalog& cat, const std::string& molecule,
               double tol, const std::string& output) {
  const auto& ref = molspec::builtin_reference_table();
  if (ref.empty()) {
    std::cerr << "error: bundled reference table missing\n";
    return kExitNumeric;
  }
  std::ostringstream out;
  int compared = 0, failed = 0, flagged = 0;
  double max_delta = 0;
  out << "molecule potential    n ntilde  m  A  B   reference    computed"
         "       delta  status\n";
  for (const auto& c : ref) {
    if (!molecule.empty() && c.molecule != molecule) continue;
    const auto& p = cat.at(c.molecule);
    molspec::AngularChannel ch{c.ntilde, c.m, c.A, c.B, molspec::Parity::even};
    double e_theta = molspec::angular_eigenvalue(ch).e_theta;
    double computed = c.potential == molspec::PotentialKind::morse
                          ? molspec::morse_energy_ev(p, c.n, e_theta)
                          : molspec::kratzer_energy_ev(p, c.n, e_theta);
    double delta = computed - c.energy_ev;
    const char* status;
    if (c.suspected_typo) {
      ++flagged;
      status = "SUSPECTED_TYPO";
    } else {
      ++compared;
      max_delta = std::max(max_delta, std::abs(delta));
      if (std::abs(delta) > tol) {
        ++failed;
        status = "FAIL";
      } else {
        status = "ok";
      }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%-8s %-9s %4d %6d %2d %2g %2g %11.5f %11.5f %11.2e  %s\n",
                  c.molecule.c_str(),
                  c.potential == molspec::PotentialKind::morse ? "morse" : "kratzer",
                  c.n, c.ntilde, c.m, c.A, c.B, c.energy_ev, computed, delta,
                  status);
    out << buf;
  }
  out << "compared " << compared << " cells (" << flagged
      << " flagged cells reported, excluded from pass/fail), tolerance "
      << molspec::format_sig6(tol) << " eV\n";
  out << "max |delta| over compared cells: " << molspec::format_sig6(max_delta)
      << " eV\n";
  out << (failed == 0 ? "PASS" : "FAIL") << " (" << failed
      << " cells over tolerance)\n";
  emit(out.str(), output);
  return failed == 0 ? kExitOk : kExitComparisonFailed;
}

struct VerifyCheck {
  std::string name;
  double delta;
  double tolerance;
  double order;
  bool pass;
};

bool order_ok(double order) { return order >= 1.5 && order <= 2.5; }

int run_verify(const molspec::Catalog& cat, const std::string& suite,
               const std::string& molecule, int grid_points, bool as_json,
               const std::string& output) {
  std::vector<VerifyCheck> checks;
  bool convergence_failure = false;

  auto record = [&](std::string name, double delta, double tol,
                    const molspec::OracleResult& res) {
    if (!order_ok(res.convergence_order)) convergence_failure = true;
    checks.push_back({std::move(name), delta, tol, res.convergence_order,
                      std::abs(delta) <= tol});
  };

  std::vector<const molspec::MoleculeParams*> mols;
  for (const auto& m : cat.molecules)
    if (molecule.empty() || m.name == molecule) mols.push_back(&m);
  if (mols.empty()) throw molspec::CatalogError("unknown molecule '" + molecule + "'");

  if (suite == "angular" || suite == "all") {
    int pts = grid_points > 0 ? grid_points : 2048;
    for (double A : {1.0, 9.0}) {
      for (double B : {1.0, 9.0}) {
        for (int m = 0; m <= 2; ++m) {
          auto grid = molspec::default_angular_grid(B, pts);
          auto res = molspec::solve_angular_fd(A, B, m, grid, 4);
          for (int nt = 0; nt <= 3; ++nt) {
            double exact =
                molspec::angular_eigenvalue({nt, m, A, B}).e_theta;
            double rel = (res.eigenvalues[nt] - exact) / exact;
            std::ostringstream name;
            name << "angular A=" << A << " B=" << B << " m=" << m
                 << " ntilde=" << nt;
            record(name.str(), rel, 1e-3, res);
          }
        }
      }
    }
  }

  if (suite == "kratzer" || suite == "all") {
    int pts = grid_points > 0 ? grid_points : 8192;
    struct Chan { int nt, m; double A, B; };
    for (const auto* p : mols) {
      for (Chan ch : {Chan{0, 0, 1, 9}, Chan{3, 2, 1, 1}}) {
        double e_theta =
            molspec::angular_eigenvalue({ch.nt, ch.m, ch.A, ch.B}).e_theta;
        double kappa = molspec::units::hbar2_over_2mu(p->mu);
        double De = p->De, re = p->re;
        auto V = [=](double r) {
          double y = (r - re) / r;
          return -De + De * y * y + kappa * e_theta / (r * r);
        };
        auto grid = molspec::default_kratzer_grid(re, pts);
        auto res = molspec::solve_radial_fd(V, p->mu, grid, 5);
        for (int n = 0; n <= 4; ++n) {
          double exact = molspec::kratzer_energy_ev(*p, n, e_theta);
          std::ostringstream name;
          name << "kratzer " << p->name << " ch(" << ch.nt << "," << ch.m << ","
               << ch.A << "," << ch.B << ") n=" << n;
          record(name.str(), res.eigenvalues[n] - exact, 1e-3, res);
        }
      }
    }
  }

  if (suite == "morse-pekeris" || suite == "all") {
    int pts = grid_points > 0 ? grid_points : 4096;
    for (const auto* p : mols) {
      double e_theta = molspec::angular_eigenvalue({0, 0, 1.0, 9.0}).e_theta;
      double kappa = molspec::units::hbar2_over_2mu(p->mu);
      double De = p->De, re = p->re, a = p->width();
      auto pk = molspec::pekeris_coefficients(a * re);
      auto V = [=](double r) {
        double e1 = std::exp(-a * (r - re));
        double centrifugal = kappa * e_theta / (re * re) *
                             (pk.d0 + pk.d1 * e1 + pk.d2 * e1 * e1);
        return De * (e1 * e1 - 2.0 * e1) + centrifugal;
      };
      auto grid = molspec::default_morse_grid(re, a, pts);
      auto res = molspec::solve_radial_fd(V, p->mu, grid, 4);
      for (int n = 0; n <= 3; ++n) {
        double exact = molspec::morse_energy_ev(*p, n, e_theta);
        std::ostringstream name;
        name << "morse-pekeris " << p->name << " n=" << n;
        record(name.str(), res.eigenvalues[n] - exact, 1e-3, res);
      }
    }
  }

  if (checks.empty())
    throw CLI::ValidationError("suite", "unknown suite '" + suite + "'");

  int failures = 0;
  double max_abs = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++failures;
    max_abs = std::max(max_abs, std::abs(c.delta));
  }

  std::ostringstream out;
  if (as_json) {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"name", c.name},
                             {"delta", c.delta},
                             {"tolerance", c.tolerance},
                             {"order", c.order},
                             {"pass", c.pass}});
    j["convergence_failure"] = convergence_failure;
    j["failures"] = failures;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      char buf[200];
      std::snprintf(buf, sizeof buf, "%-52s delta=%10.3e tol=%8.1e order=%5.2f %s\n",
                    c.name.c_str(), c.delta, c.tolerance, c.order,
                    c.pass ? "ok" : "FAIL");
      out << buf;
    }
    out << "max |delta| = " << molspec::format_sig6(max_abs) << "\n";
    if (convergence_failure)
      out << "FAIL: oracle convergence order outside [1.5, 2.5] "
             "(grid under-resolved)\n";
    else
      out << (failures == 0 ? "PASS" : "FAIL") << " (" << failures
          << " checks over tolerance)\n";
  }
  emit(out.str(), output);
  if (convergence_failure) return kExitNumeric;
  return failures == 0 ? kExitOk : kExitComparisonFailed;
}

int run_catalog(const molspec::Catalog& cat, bool validate_only) {
  if (validate_only) {
    for (const auto& w : cat.warnings)
      std::cout << "warning: " << w.molecule << ": " << w.message << "\n";
    std::cout << "catalog valid: " << cat.molecules.size() << " molecules, "
              << cat.warnings.size() << " warnings\n";
    return kExitOk;
  }
  std::printf("%-8s %8s %8s %10s %10s %10s %8s %8s\n", "name", "De_eV", "re_A",
              "omega_cm1", "mu_amu", "a_invA", "Be_cm1", "D0_eV");
  for (const auto& m : cat.molecules) {
    std::printf("%-8s %8.4g %8.4g %10.6g %10.6f %10.6g %8.4f %8.4f\n",
                m.name.c_str(), m.De, m.re, m.omega_e, m.mu, m.width(),
                molspec::rotational_constant(m),
                molspec::chemical_dissociation(m));
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound-state spectra of diatomic molecules for Morse and "
               "Kratzer potentials with a ring-shaped angular potential"};
  app.require_subcommand(1);

  std::string catalog_path, format = "table", output;
  app.add_option("--catalog", catalog_path, "catalog file (csv or json)");
  app.add_option("--format", format, "output format: table|csv|json");
  app.add_option("--output", output, "write output to a file");

  auto* cat_cmd = app.add_subcommand("catalog", "catalog management");
  bool cat_list = false, cat_validate = false;
  cat_cmd->add_subcommand("list", "list molecules with derived quantities")
      ->callback([&] { cat_list = true; });
  cat_cmd->add_subcommand("validate", "validate the catalog and print warnings")
      ->callback([&] { cat_validate = true; });
  cat_cmd->require_subcommand(1);

  auto* levels = app.add_subcommand("levels", "compute energy levels");
  std::string molecule, potential = "both", n_range = "0", nt_range = "0",
              m_range = "0", parity = "even";
  double A = 0, B = 0;
  levels->add_option("--molecule", molecule, "molecule name")->required();
  levels->add_option("--potential", potential, "morse|kratzer|both");
  levels->add_option("--n", n_range, "vibrational quantum number(s), N or N..M");
  levels->add_option("--ntilde", nt_range, "oscillation quanta, N or N..M");
  levels->add_option("--m", m_range, "magnetic quantum number(s), N or N..M");
  levels->add_option("--A", A, "angular strength A");
  levels->add_option("--B", B, "angular strength B");
  levels->add_option("--parity", parity, "even|odd (consulted only for B=0)");

  auto* table2 = app.add_subcommand(
      "table2", "recompute the published energy table and compare");
  std::string t2_molecule;
  double tol = 1e-3;
  table2->add_option("--tol", tol, "comparison tolerance in eV");
  table2->add_option("--molecule", t2_molecule, "restrict to one molecule");

  auto* verify = app.add_subcommand(
      "verify", "cross-check closed forms against the finite-difference oracle");
  std::string suite = "all", v_molecule;
  int grid_points = 0;
  bool v_json = false;
  verify->add_option("--suite", suite, "angular|kratzer|morse-pekeris|all");
  verify->add_option("--molecule", v_molecule, "restrict to one molecule");
  verify->add_option("--grid-points", grid_points, "override oracle grid size");
  verify->add_flag("--json", v_json, "machine-readable JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    molspec::Catalog cat = load_selected_catalog(catalog_path);
    if (*cat_cmd) return run_catalog(cat, cat_validate && !cat_list);
    if (*levels)
      return run_levels(cat, molecule, potential, parse_range(n_range),
                        parse_range(nt_range), parse_range(m_range), A, B,
                        parity, parse_format(format), output);
    if (*table2) return run_table2(cat, t2_molecule, tol, output);
    if (*verify)
      return run_verify(cat, suite, v_molecule, grid_points, v_json, output);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const molspec::CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
