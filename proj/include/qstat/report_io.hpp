#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qstat/analysis.hpp"
#include "qstat/residue.hpp"

namespace qstat {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

/// JSON array of decimal coefficient strings, lowest exponent first.
nlohmann::json to_json(const QPolynomial& p);

/// {"m": int, "counts": [decimal strings], "total": decimal string}
nlohmann::json to_json(const ResidueDistribution& d);

nlohmann::json to_json(const ConvergenceReport& report);

/// {"params": {...}, "per_j": [{"j", "value", "bound", "margin"}], "pass"}
nlohmann::json to_json(const BoundCheckVerdict& verdict);

/// CSV with header
/// family,statistic,m,n,deviation_exact,deviation_float,j1_magnitude,...
void write_csv(std::ostream& out, const ConvergenceReport& report);

}  // namespace qstat
