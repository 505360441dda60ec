#include "qstat/report_io.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace qstat {

std::string format_double(double x) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), x);
  if (result.ec != std::errc{}) throw std::logic_error("double formatting failed");
  return std::string(buffer, result.ptr);
}

nlohmann::json to_json(const QPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(c.str());
  return coeffs;
}

nlohmann::json to_json(const ResidueDistribution& d) {
  nlohmann::json counts = nlohmann::json::array();
  for (const BigInt& c : d.counts) counts.push_back(c.str());
  return nlohmann::json{{"m", d.modulus}, {"counts", counts}, {"total", d.total.str()}};
}

nlohmann::json to_json(const ConvergenceReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ConvergenceRow& row : report.rows) {
    rows.push_back(nlohmann::json{{"n", row.n},
                                  {"deviation_exact", row.deviation.str()},
                                  {"deviation_float", row.deviation_float},
                                  {"filter_magnitudes", row.filter_magnitudes}});
  }
  return nlohmann::json{{"family", std::string(family_name(report.family))},
                        {"statistic", std::string(statistic_name(report.statistic))},
                        {"m", report.modulus},
                        {"rows", rows}};
}

nlohmann::json to_json(const BoundCheckVerdict& verdict) {
  nlohmann::json per_j = nlohmann::json::array();
  for (const BoundCheckEntry& entry : verdict.per_j) {
    per_j.push_back(nlohmann::json{{"j", entry.j},
                                   {"value", entry.value},
                                   {"bound", entry.bound},
                                   {"margin", entry.margin}});
  }
  return nlohmann::json{{"params",
                         nlohmann::json{{"n", verdict.n},
                                        {"m", verdict.modulus},
                                        {"c", verdict.c},
                                        {"k", verdict.k_factor}}},
                        {"per_j", per_j},
                        {"pass", verdict.pass}};
}

void write_csv(std::ostream& out, const ConvergenceReport& report) {
  out << "family,statistic,m,n,deviation_exact,deviation_float";
  for (int j = 1; j < report.modulus; ++j) out << ",j" << j << "_magnitude";
  out << "\n";
  for (const ConvergenceRow& row : report.rows) {
    out << family_name(report.family) << "," << statistic_name(report.statistic) << ","
        << report.modulus << "," << row.n << "," << row.deviation.str() << ","
        << format_double(row.deviation_float);
    for (double magnitude : row.filter_magnitudes) out << "," << format_double(magnitude);
    out << "\n";
  }
}

}  // namespace qstat
