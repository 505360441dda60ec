#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qstat/families.hpp"
#include "qstat/qpoly.hpp"

namespace qstat {

/// A rearrangement of 1..n.
struct Permutation {
  std::vector<int> values;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Position i holds +/-sigma(i) for an underlying permutation sigma of [n];
/// the absolute values form a permutation. Entries compare in the standard
/// integer order, -n < ... < -1 < 1 < ... < n.
struct SignedPermutation {
  std::vector<int> values;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// 2n bits with n zeros and n ones, no prefix holding more ones than zeros.
struct CatalanWord {
  std::vector<int> bits;
  friend bool operator==(const CatalanWord&, const CatalanWord&) = default;
};

// Full enumeration is refused above these sizes; each full sweep stays in the
// seconds range on commodity hardware.
inline constexpr unsigned kMaxPermutationN = 9;
inline constexpr unsigned kMaxSignedN = 6;
inline constexpr unsigned kMaxCatalanN = 14;

unsigned enumeration_cap(Family f);

/// Major index: sum of the 1-based positions i with word[i] > word[i+1].
long long major_index(std::span<const int> word);

int negative_entry_count(const SignedPermutation& sp);

/// Flag major index: 2 * maj (standard integer order on the signed word)
/// plus the number of negative entries.
long long flag_major_index(const SignedPermutation& sp);

Permutation inverse(const Permutation& p);

// Visitors stream every member exactly once in lexicographic order on the
// value sequence. They throw std::invalid_argument above the family cap.
void for_each_permutation(unsigned n, const std::function<void(const Permutation&)>& fn);
void for_each_derangement(unsigned n, const std::function<void(const Permutation&)>& fn);
void for_each_signed_permutation(unsigned n,
                                 const std::function<void(const SignedPermutation&)>& fn);
void for_each_signed_derangement(unsigned n,
                                 const std::function<void(const SignedPermutation&)>& fn);
void for_each_catalan_word(unsigned n, const std::function<void(const CatalanWord&)>& fn);

std::vector<Permutation> enumerate_permutations(unsigned n);
std::vector<Permutation> enumerate_derangements(unsigned n);
std::vector<SignedPermutation> enumerate_signed_permutations(unsigned n);
std::vector<SignedPermutation> enumerate_signed_derangements(unsigned n);
std::vector<CatalanWord> enumerate_catalan_words(unsigned n);

/// Generating function of a statistic over a family, by exhaustive count.
/// With threads > 1 the stream is partitioned by first element and the
/// partial polynomials are merged in partition order, so the result is
/// identical for every thread count.
QPolynomial gf_from_oracle(Statistic stat, Family family, unsigned n, unsigned threads = 1);

/// Entry (i, j) counts permutations of [n] with maj == i (mod k) and
/// maj of the inverse == j (mod l). Requires 1 <= k, l <= n within the
/// enumeration cap.
std::vector<std::vector<long long>> joint_maj_distribution(unsigned n, unsigned k, unsigned l);

}  // namespace qstat
