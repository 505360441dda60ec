#pragma once

#include <string_view>

#include "qstat/qpoly.hpp"

namespace qstat {

/// Combinatorial families with a closed-form generating function for their
/// canonical statistic.
enum class Family {
  Permutations,
  Derangements,
  SignedPermutations,
  SignedDerangements,
  CatalanWords,
};

enum class Statistic {
  MajorIndex,
  FlagMajorIndex,
};

/// Canonical names: "perm", "derangement", "signed_perm",
/// "signed_derangement", "catalan".
std::string_view family_name(Family f);
/// Canonical names: "maj", "fmaj".
std::string_view statistic_name(Statistic s);

/// Lookups by canonical name; throw std::invalid_argument on unknown names.
Family family_from_name(std::string_view name);
Statistic statistic_from_name(std::string_view name);

/// maj for plain words, fmaj for signed families.
Statistic default_statistic(Family f);
bool statistic_applies(Statistic s, Family f);

/// Closed-form generating function of the family's canonical statistic at
/// size n. This is the formula path: no enumeration, so n may be large.
QPolynomial closed_form_gf(Family f, unsigned n);

}  // namespace qstat
