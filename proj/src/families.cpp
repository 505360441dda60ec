#include "qstat/families.hpp"

#include <stdexcept>
#include <string>

namespace qstat {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Permutations: return "perm";
    case Family::Derangements: return "derangement";
    case Family::SignedPermutations: return "signed_perm";
    case Family::SignedDerangements: return "signed_derangement";
    case Family::CatalanWords: return "catalan";
  }
  throw std::logic_error("unreachable family");
}

std::string_view statistic_name(Statistic s) {
  switch (s) {
    case Statistic::MajorIndex: return "maj";
    case Statistic::FlagMajorIndex: return "fmaj";
  }
  throw std::logic_error("unreachable statistic");
}

Family family_from_name(std::string_view name) {
  if (name == "perm") return Family::Permutations;
  if (name == "derangement") return Family::Derangements;
  if (name == "signed_perm") return Family::SignedPermutations;
  if (name == "signed_derangement") return Family::SignedDerangements;
  if (name == "catalan") return Family::CatalanWords;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

Statistic statistic_from_name(std::string_view name) {
  if (name == "maj") return Statistic::MajorIndex;
  if (name == "fmaj") return Statistic::FlagMajorIndex;
  throw std::invalid_argument("unknown statistic: " + std::string(name));
}

Statistic default_statistic(Family f) {
  switch (f) {
    case Family::SignedPermutations:
    case Family::SignedDerangements:
      return Statistic::FlagMajorIndex;
    default:
      return Statistic::MajorIndex;
  }
}

bool statistic_applies(Statistic s, Family f) {
  return s == default_statistic(f);
}

QPolynomial closed_form_gf(Family f, unsigned n) {
  switch (f) {
    case Family::Permutations: return maj_gf_permutations(n);
    case Family::Derangements: return q_derangement(n);
    case Family::SignedPermutations: return fmaj_gf_signed_permutations(n);
    case Family::SignedDerangements: return q_derangement_type_b(n);
    case Family::CatalanWords: return q_catalan(n);
  }
  throw std::logic_error("unreachable family");
}

}  // namespace qstat
