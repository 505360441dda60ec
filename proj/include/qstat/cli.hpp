#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qstat/families.hpp"

namespace qstat::cli {

// Largest size accepted on the closed-form polynomial path. Keeps a single
// command in the seconds range; the libraries themselves carry no such cap.
inline constexpr unsigned kMaxFormulaN = 300;

/// Parsed and validated invocation. All behavior is carried by flags; there
/// is no environment or persistent state.
struct RunConfig {
  std::string command;
  Family family = Family::Permutations;
  Statistic statistic = Statistic::MajorIndex;
  std::optional<unsigned> n;                          // gf, dist
  std::optional<std::pair<unsigned, unsigned>> n_range;  // converge, bounds
  std::vector<int> m_values;
  std::string format = "text";  // text | csv | json
  std::string out_path;         // empty: standard output
  bool with_oracle = false;
  unsigned max_n = 0;  // verify, threshold
  unsigned threads = 1;
};

/// Parses argv, dispatches, writes results to `out` (or the --out path) and
/// diagnostics to `err`. Exit codes: 0 success, 1 verification failure,
/// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qstat::cli
