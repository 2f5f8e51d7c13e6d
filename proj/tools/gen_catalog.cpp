// Regenerates the minimal-vanishing-sum catalog.
//
// Every minimal vanishing sum of n <= 12 unit roots has root orders dividing
// 2*3*5*7*11, and all such sums arise from the prime sums R_p (all p-th
// roots of unity) by repeatedly replacing a term eta with the q - 1 terms
// eta + 1/2 + k/q (k = 1..q-1, q an odd prime), which preserves the total.
// This tool closes the seeds under that replacement up to the length cap,
// keeps the sums that pass the exact minimality test, and prints one record
// per line: the length followed by the phases in canonical rotation.
//
// Usage: gen_catalog [max_length]   (default 12)

#include <cstdio>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ambig/rational.hpp"
#include "ambig/vansums.hpp"

namespace vs = ambig::vansums;
using ambig::Rat;
using ambig::mod1;
using ambig::rat;
using ambig::rat_str;

int main(int argc, char** argv) {
  int max_length = 12;
  if (argc > 1) max_length = std::atoi(argv[1]);
  if (max_length < 2 || max_length > 16) {
    std::fprintf(stderr, "gen_catalog: max length must lie in [2, 16]\n");
    return 2;
  }

  std::set<std::vector<Rat>> seen;
  std::deque<std::vector<Rat>> queue;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    if (p > max_length) continue;
    std::vector<Rat> sum;
    for (long k = 0; k < p; ++k) sum.push_back(rat(k, p));
    if (seen.insert(sum).second) queue.push_back(sum);
  }

  const long replacement_primes[] = {3, 5, 7, 11, 13};
  while (!queue.empty()) {
    std::vector<Rat> cur = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < cur.size(); ++i) {
      if (i && cur[i] == cur[i - 1]) continue;  // identical terms expand identically
      for (long q : replacement_primes) {
        size_t new_len = cur.size() - 1 + static_cast<size_t>(q - 1);
        if (new_len > static_cast<size_t>(max_length)) continue;
        std::vector<Rat> next;
        next.reserve(new_len);
        for (size_t j = 0; j < cur.size(); ++j)
          if (j != i) next.push_back(cur[j]);
        for (long k = 1; k < q; ++k) next.push_back(mod1(cur[i] + rat(1, 2) + rat(k, q)));
        std::vector<Rat> canon = vs::canonical_rotation(next);
        if (seen.insert(canon).second) queue.push_back(canon);
      }
    }
    if (seen.size() > 2000000) {
      std::fprintf(stderr, "gen_catalog: state explosion, aborting\n");
      return 1;
    }
  }

  std::map<int, std::set<std::vector<Rat>>> catalog;
  for (const auto& sum : seen) {
    if (!vs::is_vanishing(sum)) {
      std::fprintf(stderr, "gen_catalog: internal error, non-vanishing state reached\n");
      return 1;
    }
    if (vs::is_minimal(sum)) catalog[static_cast<int>(sum.size())].insert(sum);
  }

  std::printf("# Minimal vanishing sums of unit roots, by length, up to rotation.\n");
  std::printf("# Record: <length> <phase>... with phases in turns, canonical rotation.\n");
  std::printf("# Generated by tools/gen_catalog (replacement closure, max length %d).\n",
              max_length);
  for (const auto& [len, sums] : catalog)
    for (const auto& sum : sums) {
      std::string line = std::to_string(len);
      for (const auto& ph : sum) line += " " + rat_str(ph);
      std::printf("%s\n", line.c_str());
    }
  std::fprintf(stderr, "gen_catalog: %zu reachable states", seen.size());
  for (const auto& [len, sums] : catalog)
    std::fprintf(stderr, ", %zu of length %d", sums.size(), len);
  std::fprintf(stderr, "\n");
  return 0;
}
