#include <doctest.h>

#include <cmath>
#include <sstream>

#include "molspec/report.hpp"

using namespace molspec;

namespace {

SpectrumReport sample_report() {
  SpectrumReport rep;
  rep.catalog_hash = "deadbeef01234567";
  rep.constants_version = "codata2018";
  rep.timestamp = "2026-01-02T03:04:05Z";
  rep.rows.push_back({"ScH", PotentialKind::morse, 0, 0, 0, 1.0, 9.0,
                      25.165525060596433, 4.541381265149109,
                      -2.136974719866359, 21.273923, 19.74660982626462, 20});
  rep.rows.push_back({"CuLi", PotentialKind::kratzer, 3, 2, 1, 9.0, 1.0,
                      59.40376933358186, 7.2235852642138845, -1.58042,
                      413.72, std::nullopt, std::nullopt});
  rep.diagnostics.push_back("warning: something advisory");
  return rep;
}

} // namespace

TEST_CASE("format_sig6") {
  CHECK(format_sig6(-2.136974719866359) == "-2.13697");
  CHECK(format_sig6(0.0) == "0");
  CHECK(format_sig6(25.165525060596433) == "25.1655");
  CHECK(format_sig6(1234567.0) == "1.23457e+06");
  CHECK(format_sig6(1e-7) == "1e-07");
  CHECK(format_sig6(-0.000123456) == "-0.000123456");
}

TEST_CASE("fnv1a_hex") {
  // FNV-1a 64-bit test vectors.
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("csv emit -> parse -> emit is byte identical") {
  auto rep = sample_report();
  std::string first = report_to_string(rep, ReportFormat::csv);
  SpectrumReport parsed = parse_report_csv(first);
  CHECK(parsed.catalog_hash == rep.catalog_hash);
  CHECK(parsed.constants_version == rep.constants_version);
  CHECK(parsed.timestamp == rep.timestamp);
  REQUIRE(parsed.rows.size() == rep.rows.size());
  CHECK(parsed.rows[0].molecule == "ScH");
  CHECK(parsed.rows[0].potential == PotentialKind::morse);
  CHECK(parsed.rows[1].potential == PotentialKind::kratzer);
  CHECK_FALSE(parsed.rows[1].n_max.has_value());
  REQUIRE(parsed.rows[0].n_max.has_value());
  std::string second = report_to_string(parsed, ReportFormat::csv);
  CHECK(second == first);
}

TEST_CASE("json emit -> parse -> emit is byte identical") {
  auto rep = sample_report();
  std::string first = report_to_string(rep, ReportFormat::json);
  SpectrumReport parsed = parse_report_json(first);
  REQUIRE(parsed.rows.size() == rep.rows.size());
  CHECK(parsed.rows[0].energy_ev ==
        doctest::Approx(-2.13697).epsilon(1e-10));
  std::string second = report_to_string(parsed, ReportFormat::json);
  CHECK(second == first);
}

TEST_CASE("table format renders every row") {
  auto rep = sample_report();
  std::string text = report_to_string(rep, ReportFormat::table);
  CHECK(text.find("ScH") != std::string::npos);
  CHECK(text.find("CuLi") != std::string::npos);
  CHECK(text.find("-2.13697") != std::string::npos);
}

TEST_CASE("write_report streams the same bytes as report_to_string") {
  auto rep = sample_report();
  std::ostringstream os;
  write_report(os, rep, ReportFormat::csv);
  CHECK(os.str() == report_to_string(rep, ReportFormat::csv));
}

TEST_CASE("builtin reference table shape") {
  const auto& table = builtin_reference_table();
  CHECK(table.size() == 360);
  int flagged = 0, morse = 0, kratzer = 0;
  for (const auto& cell : table) {
    if (cell.suspected_typo) ++flagged;
    (cell.potential == PotentialKind::morse ? morse : kratzer)++;
    CHECK(cell.energy_ev < 0);
    CHECK(cell.n >= 0);
    CHECK(cell.ntilde >= 0);
    CHECK((cell.A == 1.0 || cell.A == 9.0));
    CHECK((cell.B == 1.0 || cell.B == 9.0));
  }
  CHECK(flagged == 2);
  CHECK(morse == 180);
  CHECK(kratzer == 180);
}

TEST_CASE("reference table flagged cells") {
  int seen = 0;
  for (const auto& cell : builtin_reference_table()) {
    if (!cell.suspected_typo) continue;
    ++seen;
    CHECK(cell.potential == PotentialKind::kratzer);
    CHECK((cell.molecule == "VH" || cell.molecule == "CrH"));
  }
  CHECK(seen == 2);
}

TEST_CASE("reference table parser rejects malformed rows") {
  CHECK_THROWS(load_reference_table(
      "molecule,n,ntilde,m,A,B,potential,energy_ev,flag\n"
      "ScH,0,0,0,1,9,morse,not_a_number,\n"));
  CHECK_THROWS(load_reference_table(
      "molecule,n,ntilde,m,A,B,potential,energy_ev,flag\n"
      "ScH,0,0,0,1,9,lennard_jones,-2.1,\n"));
}
