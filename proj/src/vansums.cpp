#include "ambig/vansums.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ambig::vansums {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

struct PrimePowerFactor {
  long prime;
  long power;         // prime^a
  long phi;           // (prime - 1) * prime^(a-1)
  long radical_step;  // prime^(a-1)
};

std::vector<PrimePowerFactor> factorize(long n) {
  std::vector<PrimePowerFactor> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    long pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
    }
    out.push_back({p, pk, pk / p * (p - 1), pk / p});
  }
  if (n > 1) out.push_back({n, n, n - 1, 1});
  return out;
}

// zeta^e over the power basis {1, zeta, ..., zeta^(phi-1)} of the order
// prime^a cyclotomic field: a unit vector when e < phi, otherwise the
// negated remaining terms of the cyclotomic relation sum_j x^(j*p^(a-1)) = 0.
void expand_prime_power(long e, const PrimePowerFactor& f,
                        std::vector<std::pair<long, int>>& out) {
  out.clear();
  if (e < f.phi) {
    out.emplace_back(e, 1);
    return;
  }
  long r = e - f.phi;  // e < p^a, so r < p^(a-1)
  for (long j = 0; j + 1 < f.prime; ++j) out.emplace_back(r + j * f.radical_step, -1);
}

}  // namespace

Rat normalize_phase(const Rat& turns) { return mod1(turns); }

bool operator==(const MinimalVanishingSum& a, const MinimalVanishingSum& b) {
  return a.phases == b.phases;
}

bool operator<(const MinimalVanishingSum& a, const MinimalVanishingSum& b) {
  return a.phases < b.phases;
}

std::vector<Rat> canonical_rotation(std::vector<Rat> phases) {
  for (auto& p : phases) p = mod1(p);
  std::sort(phases.begin(), phases.end());
  if (phases.empty()) return phases;
  std::vector<Rat> best;
  Rat last(-1);
  for (const auto& anchor : phases) {
    if (anchor == last) continue;
    last = anchor;
    std::vector<Rat> cand(phases.size());
    for (size_t i = 0; i < phases.size(); ++i) cand[i] = mod1(phases[i] - anchor);
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

bool is_vanishing(const std::vector<Rat>& phases) {
  if (phases.empty()) return true;
  std::vector<Rat> norm(phases.size());
  for (size_t i = 0; i < phases.size(); ++i) norm[i] = mod1(phases[i]);
  long order = static_cast<long>(common_denominator(norm));
  auto factors = factorize(order);
  long basis = 1;
  for (const auto& f : factors) {
    if (basis > 2000000 / std::max(f.phi, 1L))
      throw std::invalid_argument("vanishing test: cyclotomic order too large");
    basis *= f.phi;
  }
  std::vector<long long> coeff(static_cast<size_t>(basis), 0);
  std::vector<std::pair<long, int>> part;
  std::vector<std::pair<long, int>> acc, next;
  for (const auto& ph : norm) {
    long e = rat_to_long(ph * order);
    acc.assign(1, {0, 1});
    long stride = 1;
    for (const auto& f : factors) {
      expand_prime_power(e % f.power, f, part);
      next.clear();
      for (const auto& [idx, sg] : acc)
        for (const auto& [pidx, psg] : part) next.emplace_back(idx + stride * pidx, sg * psg);
      acc.swap(next);
      stride *= f.phi;
    }
    for (const auto& [idx, sg] : acc) coeff[static_cast<size_t>(idx)] += sg;
  }
  return std::all_of(coeff.begin(), coeff.end(), [](long long c) { return c == 0; });
}

bool is_minimal(const std::vector<Rat>& phases) {
  int n = static_cast<int>(phases.size());
  if (n <= 1) return true;
  if (n > 20) throw std::invalid_argument("minimality test limited to 20 terms");
  std::vector<std::complex<double>> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = std::polar(1.0, kTau * rat_to_double(phases[i]));
  const unsigned full = (1u << n) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    if (std::popcount(mask) < 2) continue;  // one unit root never vanishes
    std::complex<double> s{0.0, 0.0};
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s += roots[i];
    // |s| >= 1e-6 is certainly nonzero (rounding error here is ~1e-14);
    // anything smaller gets the exact verdict.
    if (std::abs(s) > 1e-6) continue;
    std::vector<Rat> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(phases[i]);
    if (is_vanishing(subset)) return false;
  }
  return true;
}

namespace {

void gen_partitions(int remaining, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    std::vector<int> parts(cur.rbegin(), cur.rend());  // list parts ascending
    out.push_back(std::move(parts));
    return;
  }
  for (int f = 2; f <= std::min(maxpart, remaining); ++f) {
    if (f == 4) continue;
    if (remaining - f == 1) continue;  // a leftover of 1 can never be a part
    cur.push_back(f);
    gen_partitions(remaining - f, f, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> restricted_partitions(int n) {
  if (n < 0) throw std::invalid_argument("restricted_partitions: negative n");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

long mann_bound(const std::vector<int>& partition) {
  if (partition.empty()) throw std::invalid_argument("mann_bound: empty partition");
  int maxpart = *std::max_element(partition.begin(), partition.end());
  long bound = 1;
  for (int p = 2; p <= maxpart; ++p) {
    bool prime = p >= 2;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime) bound *= p;
  }
  return bound;
}

std::vector<MinimalVanishingSum> brute_force_minimal_sums(int length, int order_bound,
                                                          std::uint64_t node_budget) {
  if (length < 1 || length > 7)
    throw std::invalid_argument("minimal-sum oracle supports lengths 1 through 7");
  if (order_bound < 1 || order_bound > 210)
    throw std::invalid_argument("minimal-sum oracle supports order bounds up to 210");
  if (length == 1) return {};
  std::set<std::vector<Rat>> found;
  std::vector<std::complex<double>> roots(order_bound);
  for (int k = 0; k < order_bound; ++k)
    roots[k] = std::polar(1.0, kTau * k / order_bound);
  std::vector<int> pick(static_cast<size_t>(length), 0);
  std::uint64_t nodes = 0;

  auto rec = [&](auto&& self, int depth, std::complex<double> sum) -> void {
    if (++nodes > node_budget)
      throw std::runtime_error("minimal-sum oracle budget exceeded; reduce length or order bound");
    int remaining = length - depth;
    double mag = std::abs(sum);
    if (mag > remaining + 1e-9) return;             // cannot return to zero
    if (remaining == 1 && mag < 1.0 - 1e-9) return;  // one root cannot cancel this
    if (depth == length) {
      if (mag > 1e-9) return;
      std::vector<Rat> phases(static_cast<size_t>(length));
      for (int i = 0; i < length; ++i) phases[static_cast<size_t>(i)] = rat(pick[static_cast<size_t>(i)], order_bound);
      if (!is_vanishing(phases) || !is_minimal(phases)) return;
      found.insert(canonical_rotation(phases));
      return;
    }
    for (int k = pick[static_cast<size_t>(depth - 1)]; k < order_bound; ++k) {
      pick[static_cast<size_t>(depth)] = k;
      self(self, depth + 1, sum + roots[static_cast<size_t>(k)]);
    }
  };
  // pick[0] = 0 anchors the rotation class; every class has such a member.
  rec(rec, 1, roots[0]);

  std::vector<MinimalVanishingSum> out;
  out.reserve(found.size());
  for (auto& phases : found) out.push_back({phases});
  return out;
}

extern const char kEmbeddedCatalogText[];

const Catalog& Catalog::instance() {
  static const Catalog cat = [] {
    if (const char* path = std::getenv("AMBIG_CATALOG")) return from_file(path);
    return from_text(kEmbeddedCatalogText);
  }();
  return cat;
}

Catalog Catalog::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("catalog: cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

Catalog Catalog::from_text(const std::string& text) {
  Catalog cat;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto where = [&] { return " on catalog line " + std::to_string(lineno); };
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    int len = 0;
    try {
      size_t used = 0;
      len = std::stoi(toks[0], &used);
      if (used != toks[0].size()) throw std::invalid_argument(toks[0]);
    } catch (const std::exception&) {
      throw std::runtime_error("catalog: bad record length '" + toks[0] + "'" + where());
    }
    if (len < 1 || len > 64)
      throw std::runtime_error("catalog: record length out of range" + where());
    if (toks.size() != static_cast<size_t>(len) + 1)
      throw std::runtime_error("catalog: expected " + std::to_string(len) + " phases" + where());
    MinimalVanishingSum sum;
    for (size_t i = 1; i < toks.size(); ++i) {
      Rat ph;
      try {
        ph = parse_rat(toks[i]);
      } catch (const std::exception&) {
        throw std::runtime_error("catalog: bad phase '" + toks[i] + "'" + where());
      }
      if (ph < 0 || ph >= 1)
        throw std::runtime_error("catalog: phase '" + toks[i] + "' outside [0, 1)" + where());
      sum.phases.push_back(ph);
    }
    std::sort(sum.phases.begin(), sum.phases.end());
    cat.by_length_[len].push_back(std::move(sum));
  }
  if (cat.by_length_.empty()) throw std::runtime_error("catalog: no records found");
  for (auto& [len, sums] : cat.by_length_) {
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    cat.max_length_ = std::max(cat.max_length_, len);
  }
  return cat;
}

const std::vector<MinimalVanishingSum>& Catalog::of_length(int length) const {
  static const std::vector<MinimalVanishingSum> kEmpty;
  if (length < 1) throw std::invalid_argument("catalog: length must be positive");
  if (length > max_length_)
    throw std::runtime_error("catalog exhausted: no data for sums of length " +
                             std::to_string(length) +
                             "; extend the catalog file (AMBIG_CATALOG) to cover it");
  auto it = by_length_.find(length);
  return it == by_length_.end() ? kEmpty : it->second;
}

std::string Catalog::to_text() const {
  std::ostringstream out;
  for (const auto& [len, sums] : by_length_)
    for (const auto& sum : sums) {
      out << len;
      for (const auto& ph : sum.phases) out << ' ' << rat_str(ph);
      out << '\n';
    }
  return out.str();
}

}  // namespace ambig::vansums
