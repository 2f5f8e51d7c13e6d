#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ambig/rational.hpp"

namespace ambig::vansums {

// A unit root is stored as its phase in turns, reduced into [0, 1).
Rat normalize_phase(const Rat& turns);

// One vanishing sum of unit roots, kept as a sorted phase multiset.
struct MinimalVanishingSum {
  std::vector<Rat> phases;
};

bool operator==(const MinimalVanishingSum& a, const MinimalVanishingSum& b);
bool operator<(const MinimalVanishingSum& a, const MinimalVanishingSum& b);

// Rotates the multiset so that some term lands at phase 0 and the sorted
// phase vector is lexicographically smallest among all such rotations.
std::vector<Rat> canonical_rotation(std::vector<Rat> phases);

// Exact test of sum_i exp(2*pi*j*phases[i]) == 0, performed over the tensor
// integral basis of the cyclotomic field of the phases' common denominator.
// Floating point is never consulted.
bool is_vanishing(const std::vector<Rat>& phases);

// True iff no proper nonempty sub-multiset vanishes. A certainly-nonzero
// numeric prefilter skips exact work per subset; every near-zero subset sum
// is confirmed exactly, so the verdict itself is exact.
bool is_minimal(const std::vector<Rat>& phases);

// Partitions of n into parts >= 2 with no part equal to 4 (no vanishing sum
// of one root exists, and none of four roots is minimal), listed in ascending
// lexicographic order of the non-increasing part tuples.
std::vector<std::vector<int>> restricted_partitions(int n);

// Every minimal sum whose length appears in the partition has all roots of
// order dividing the product of the primes <= max part; returns that product.
long mann_bound(const std::vector<int>& partition);

// Exhaustive reference search (intended for tests): every canonical minimal
// sum of the given length over roots of order dividing order_bound. Throws
// when the pruned search would exceed node_budget visited nodes.
std::vector<MinimalVanishingSum> brute_force_minimal_sums(
    int length, int order_bound, std::uint64_t node_budget = 400000000ULL);

// Rotation-inequivalent minimal vanishing sums, by length. The built-in data
// covers lengths up to 12; AMBIG_CATALOG may point to a replacement file with
// the same format (one record per line: length, then the phases as reduced
// fractions of a turn).
class Catalog {
 public:
  static const Catalog& instance();
  static Catalog from_file(const std::string& path);
  static Catalog from_text(const std::string& text);

  // Empty for lengths 1 and 4; throws "catalog exhausted" past max_length().
  const std::vector<MinimalVanishingSum>& of_length(int length) const;
  int max_length() const { return max_length_; }

  std::string to_text() const;

 private:
  std::map<int, std::vector<MinimalVanishingSum>> by_length_;
  int max_length_ = 0;
};

}  // namespace ambig::vansums
