#include "qstat/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qstat/parallel.hpp"

namespace qstat {

namespace {

using WordFn = std::function<void(const std::vector<int>&)>;

void check_cap(Family f, unsigned n) {
  const unsigned cap = enumeration_cap(f);
  if (n > cap)
    throw std::invalid_argument("enumeration of " + std::string(family_name(f)) +
                                " supports n <= " + std::to_string(cap) + ", got n = " +
                                std::to_string(n));
}

bool is_derangement(const std::vector<int>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == static_cast<int>(i) + 1) return false;
  }
  return true;
}

// Permutations with a fixed first value, suffix in lexicographic order.
void visit_perm_partition(unsigned n, bool skip_fixed_points, unsigned part, const WordFn& fn) {
  if (n == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  if (skip_fixed_points && part == 0) return;  // first value 1 is a fixed point
  std::vector<int> v(n);
  v[0] = static_cast<int>(part) + 1;
  int next = 1;
  for (unsigned i = 1; i < n; ++i) {
    if (next == v[0]) ++next;
    v[i] = next++;
  }
  do {
    if (!skip_fixed_points || is_derangement(v)) fn(v);
  } while (std::next_permutation(v.begin() + 1, v.end()));
}

// Signed words: candidate values in the order -n..-1, 1..n.
int signed_value_at(unsigned n, unsigned c) {
  return c < n ? -static_cast<int>(n - c) : static_cast<int>(c - n + 1);
}

void signed_rec(unsigned n, bool skip_fixed_points, std::vector<int>& word,
                std::vector<char>& used, const WordFn& fn) {
  const unsigned pos = static_cast<unsigned>(word.size());
  if (pos == n) {
    fn(word);
    return;
  }
  for (unsigned c = 0; c < 2 * n; ++c) {
    const int v = signed_value_at(n, c);
    const unsigned a = static_cast<unsigned>(std::abs(v));
    if (used[a]) continue;
    if (skip_fixed_points && v == static_cast<int>(pos) + 1) continue;
    used[a] = 1;
    word.push_back(v);
    signed_rec(n, skip_fixed_points, word, used, fn);
    word.pop_back();
    used[a] = 0;
  }
}

void visit_signed_partition(unsigned n, bool skip_fixed_points, unsigned part, const WordFn& fn) {
  if (n == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  const int first = signed_value_at(n, part);
  if (skip_fixed_points && first == 1) return;
  std::vector<int> word;
  word.reserve(n);
  std::vector<char> used(n + 1, 0);
  word.push_back(first);
  used[static_cast<unsigned>(std::abs(first))] = 1;
  signed_rec(n, skip_fixed_points, word, used, fn);
}

void catalan_rec(unsigned n, std::vector<int>& bits, unsigned zeros, unsigned ones,
                 const WordFn& fn) {
  if (bits.size() == 2 * static_cast<std::size_t>(n)) {
    fn(bits);
    return;
  }
  if (zeros < n) {
    bits.push_back(0);
    catalan_rec(n, bits, zeros + 1, ones, fn);
    bits.pop_back();
  }
  if (ones < zeros) {
    bits.push_back(1);
    catalan_rec(n, bits, zeros, ones + 1, fn);
    bits.pop_back();
  }
}

// Partitions fix the second bit (the first bit of a nonempty word is 0).
void visit_catalan_partition(unsigned n, unsigned part, const WordFn& fn) {
  if (n == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  std::vector<int> bits;
  bits.reserve(2 * n);
  bits.push_back(0);
  unsigned zeros = 1;
  unsigned ones = 0;
  if (part == 0) {
    if (n < 2) return;  // "00" cannot complete a word with one zero
    bits.push_back(0);
    ++zeros;
  } else {
    bits.push_back(1);
    ++ones;
  }
  catalan_rec(n, bits, zeros, ones, fn);
}

unsigned partition_count(Family f, unsigned n) {
  if (n == 0) return 1;
  switch (f) {
    case Family::Permutations:
    case Family::Derangements:
      return n;
    case Family::SignedPermutations:
    case Family::SignedDerangements:
      return 2 * n;
    case Family::CatalanWords:
      return 2;
  }
  throw std::logic_error("unreachable family");
}

void visit_partition(Family f, unsigned n, unsigned part, const WordFn& fn) {
  switch (f) {
    case Family::Permutations: return visit_perm_partition(n, false, part, fn);
    case Family::Derangements: return visit_perm_partition(n, true, part, fn);
    case Family::SignedPermutations: return visit_signed_partition(n, false, part, fn);
    case Family::SignedDerangements: return visit_signed_partition(n, true, part, fn);
    case Family::CatalanWords: return visit_catalan_partition(n, part, fn);
  }
  throw std::logic_error("unreachable family");
}

void visit_all(Family f, unsigned n, const WordFn& fn) {
  check_cap(f, n);
  const unsigned parts = partition_count(f, n);
  for (unsigned p = 0; p < parts; ++p) visit_partition(f, n, p, fn);
}

long long statistic_value(Statistic stat, const std::vector<int>& word) {
  const long long maj = major_index(word);
  if (stat == Statistic::MajorIndex) return maj;
  long long negatives = 0;
  for (int v : word) negatives += v < 0;
  return 2 * maj + negatives;
}

}  // namespace

unsigned enumeration_cap(Family f) {
  switch (f) {
    case Family::Permutations:
    case Family::Derangements:
      return kMaxPermutationN;
    case Family::SignedPermutations:
    case Family::SignedDerangements:
      return kMaxSignedN;
    case Family::CatalanWords:
      return kMaxCatalanN;
  }
  throw std::logic_error("unreachable family");
}

long long major_index(std::span<const int> word) {
  long long sum = 0;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i - 1] > word[i]) sum += static_cast<long long>(i);
  }
  return sum;
}

int negative_entry_count(const SignedPermutation& sp) {
  int negatives = 0;
  for (int v : sp.values) negatives += v < 0;
  return negatives;
}

long long flag_major_index(const SignedPermutation& sp) {
  return 2 * major_index(sp.values) + negative_entry_count(sp);
}

Permutation inverse(const Permutation& p) {
  Permutation inv;
  inv.values.resize(p.values.size());
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    inv.values[static_cast<std::size_t>(p.values[i]) - 1] = static_cast<int>(i) + 1;
  }
  return inv;
}

void for_each_permutation(unsigned n, const std::function<void(const Permutation&)>& fn) {
  Permutation p;
  visit_all(Family::Permutations, n, [&](const std::vector<int>& w) {
    p.values = w;
    fn(p);
  });
}

void for_each_derangement(unsigned n, const std::function<void(const Permutation&)>& fn) {
  Permutation p;
  visit_all(Family::Derangements, n, [&](const std::vector<int>& w) {
    p.values = w;
    fn(p);
  });
}

void for_each_signed_permutation(unsigned n,
                                 const std::function<void(const SignedPermutation&)>& fn) {
  SignedPermutation sp;
  visit_all(Family::SignedPermutations, n, [&](const std::vector<int>& w) {
    sp.values = w;
    fn(sp);
  });
}

void for_each_signed_derangement(unsigned n,
                                 const std::function<void(const SignedPermutation&)>& fn) {
  SignedPermutation sp;
  visit_all(Family::SignedDerangements, n, [&](const std::vector<int>& w) {
    sp.values = w;
    fn(sp);
  });
}

void for_each_catalan_word(unsigned n, const std::function<void(const CatalanWord&)>& fn) {
  CatalanWord cw;
  visit_all(Family::CatalanWords, n, [&](const std::vector<int>& w) {
    cw.bits = w;
    fn(cw);
  });
}

std::vector<Permutation> enumerate_permutations(unsigned n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<Permutation> enumerate_derangements(unsigned n) {
  std::vector<Permutation> out;
  for_each_derangement(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<SignedPermutation> enumerate_signed_permutations(unsigned n) {
  std::vector<SignedPermutation> out;
  for_each_signed_permutation(n, [&](const SignedPermutation& sp) { out.push_back(sp); });
  return out;
}

std::vector<SignedPermutation> enumerate_signed_derangements(unsigned n) {
  std::vector<SignedPermutation> out;
  for_each_signed_derangement(n, [&](const SignedPermutation& sp) { out.push_back(sp); });
  return out;
}

std::vector<CatalanWord> enumerate_catalan_words(unsigned n) {
  std::vector<CatalanWord> out;
  for_each_catalan_word(n, [&](const CatalanWord& cw) { out.push_back(cw); });
  return out;
}

QPolynomial gf_from_oracle(Statistic stat, Family family, unsigned n, unsigned threads) {
  if (!statistic_applies(stat, family))
    throw std::invalid_argument(std::string("statistic ") + std::string(statistic_name(stat)) +
                                " does not apply to family " + std::string(family_name(family)));
  check_cap(family, n);
  const unsigned parts = partition_count(family, n);
  std::vector<std::vector<long long>> partial(parts);
  parallel_for_index(parts, threads, [&](std::size_t p) {
    auto& counts = partial[p];
    visit_partition(family, n, static_cast<unsigned>(p), [&](const std::vector<int>& w) {
      const auto value = static_cast<std::size_t>(statistic_value(stat, w));
      if (value >= counts.size()) counts.resize(value + 1, 0);
      ++counts[value];
    });
  });
  // merge in partition order; integer addition makes the result
  // schedule-independent
  std::size_t width = 0;
  for (const auto& counts : partial) width = std::max(width, counts.size());
  std::vector<BigInt> merged(width);
  for (const auto& counts : partial) {
    for (std::size_t k = 0; k < counts.size(); ++k) merged[k] += counts[k];
  }
  return QPolynomial(std::move(merged));
}

std::vector<std::vector<long long>> joint_maj_distribution(unsigned n, unsigned k, unsigned l) {
  check_cap(Family::Permutations, n);
  if (k < 1 || k > n || l < 1 || l > n)
    throw std::invalid_argument("joint distribution requires 1 <= k, l <= n");
  std::vector<std::vector<long long>> matrix(k, std::vector<long long>(l, 0));
  std::vector<int> inv;
  visit_all(Family::Permutations, n, [&](const std::vector<int>& w) {
    inv.assign(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      inv[static_cast<std::size_t>(w[i]) - 1] = static_cast<int>(i) + 1;
    }
    matrix[major_index(w) % k][major_index(inv) % l] += 1;
  });
  return matrix;
}

}  // namespace qstat
