// Search engine behind the ambiguity catalog. Every weight row of the array
// receives one rotated root of a minimal vanishing sum; the integer lift of
// each assignment gives an exact linear system whose solution family, clipped
// to the angle window and rotation boxes, is an ambiguity class.

#include "ambig/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "json.hpp"

#include "ambig/tableaux.hpp"
#include "ambig/vansums.hpp"

namespace ambig::enumeration {
namespace {

using linsolve::AffineFamily;
using linsolve::Ineq;
using linsolve::LinearSystem;

Rat rat_ceil(const Rat& v) { return -rat_floor(-v); }

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void append_rat_list(std::ostringstream& os, const std::vector<Rat>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << rat_str(v[i]);
  }
}

std::string interval_text(const ParamInterval& iv) {
  std::ostringstream os;
  os << (iv.lo_open ? '(' : '[') << rat_str(iv.lo) << ',' << rat_str(iv.hi)
     << (iv.hi_open ? ')' : ']');
  return os.str();
}

bool all_zero(const std::vector<Rat>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool ineq_less(const Ineq& a, const Ineq& b) {
  if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
  if (a.bound != b.bound) return a.bound < b.bound;
  return a.strict && !b.strict;
}

// Minimal sorted facet list for a full-dimensional region: normalized
// coefficients, one inequality per hyperplane, nothing redundant. The caller
// has already established feasibility, so trivial rows can be dropped.
std::vector<Ineq> canonical_facets(std::vector<Ineq> dom, int dim) {
  std::vector<Ineq> kept;
  kept.reserve(dom.size());
  for (auto& q : dom) {
    if (all_zero(q.coeffs)) continue;
    kept.push_back(linsolve::normalized(std::move(q)));
  }
  std::sort(kept.begin(), kept.end(), ineq_less);
  std::vector<Ineq> tight;
  for (auto& q : kept) {
    // sorted so the tightest version of a hyperplane comes first
    if (!tight.empty() && tight.back().coeffs == q.coeffs) continue;
    tight.push_back(std::move(q));
  }
  return linsolve::irredundant(std::move(tight), dim);
}

// Union of intervals. Touching pieces join only when at least one side is
// closed at the shared endpoint, so punctures survive.
std::vector<ParamInterval> merge_intervals(std::vector<ParamInterval> ivs) {
  std::sort(ivs.begin(), ivs.end(),
            [](const ParamInterval& a, const ParamInterval& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              if (a.lo_open != b.lo_open) return !a.lo_open;
              if (a.hi != b.hi) return a.hi < b.hi;
              return !a.hi_open && b.hi_open;
            });
  std::vector<ParamInterval> out;
  for (auto& iv : ivs) {
    if (!out.empty()) {
      ParamInterval& c = out.back();
      bool joins = iv.lo < c.hi || (iv.lo == c.hi && !(iv.lo_open && c.hi_open));
      if (joins) {
        if (iv.hi > c.hi) {
          c.hi = iv.hi;
          c.hi_open = iv.hi_open;
        } else if (iv.hi == c.hi) {
          c.hi_open = c.hi_open && iv.hi_open;
        }
        continue;
      }
    }
    out.push_back(iv);
  }
  return out;
}

struct LineForm {
  std::vector<Rat> consts;
  std::vector<Rat> slopes;
  std::vector<ParamInterval> intervals;
};

// Order-free identity of a one-parameter family: the multiset of its
// (slope, const) coordinate functions.
std::string line_profile_key(const std::vector<Rat>& consts,
                             const std::vector<Rat>& slopes) {
  std::vector<std::pair<Rat, Rat>> pairs;
  pairs.reserve(consts.size());
  for (std::size_t i = 0; i < consts.size(); ++i)
    pairs.emplace_back(slopes[i], consts[i]);
  std::sort(pairs.begin(), pairs.end());
  std::ostringstream os;
  os << "L|" << pairs.size();
  for (const auto& p : pairs)
    os << '|' << rat_str(p.first) << ';' << rat_str(p.second);
  return os.str();
}

std::string point_key(const std::vector<Rat>& pt) {
  std::ostringstream os;
  os << "P|" << pt.size() << '|';
  append_rat_list(os, pt);
  return os.str();
}

// Rows displayed in ascending order of their value at the midpoint of the
// first interval; interiors are collision-free so the order is strict.
AmbiguityClass materialize_line(LineForm lf) {
  const Rat mid = (lf.intervals.front().lo + lf.intervals.front().hi) / 2;
  const int M = static_cast<int>(lf.consts.size());
  std::vector<int> order(M);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Rat va = lf.consts[a] + lf.slopes[a] * mid;
    const Rat vb = lf.consts[b] + lf.slopes[b] * mid;
    if (va != vb) return va < vb;
    if (lf.slopes[a] != lf.slopes[b]) return lf.slopes[a] < lf.slopes[b];
    return lf.consts[a] < lf.consts[b];
  });
  AmbiguityClass cls;
  cls.phi_const.resize(M);
  cls.phi_dir.assign(1, std::vector<Rat>(M));
  for (int r = 0; r < M; ++r) {
    cls.phi_const[r] = lf.consts[order[r]];
    cls.phi_dir[0][r] = lf.slopes[order[r]];
  }
  cls.parameter_domains.assign(1, std::move(lf.intervals));
  return cls;
}

// One affine line of angle vectors over a parameter interval. The parameter
// is re-anchored to the value of the lexicographically least (slope, const)
// row with nonzero slope, so the same geometric line always reappears with
// the same coordinates; the domain is split at the finitely many parameter
// values where two coordinates collide.
AmbiguityClass line_class(std::vector<Rat> consts, std::vector<Rat> slopes,
                          const Rat& lo, const Rat& hi, bool lo_open,
                          bool hi_open) {
  const int M = static_cast<int>(consts.size());
  int anchor = -1;
  for (int m = 0; m < M; ++m) {
    if (slopes[m] == 0) continue;
    if (anchor < 0 ||
        std::pair(slopes[m], consts[m]) < std::pair(slopes[anchor], consts[anchor]))
      anchor = m;
  }
  const Rat ca = consts[anchor];
  const Rat da = slopes[anchor];
  for (int m = 0; m < M; ++m) {
    slopes[m] /= da;
    consts[m] -= slopes[m] * ca;
  }
  Rat slo = ca + da * lo;
  Rat shi = ca + da * hi;
  if (da < 0) {
    std::swap(slo, shi);
    std::swap(lo_open, hi_open);
  }
  // A profile invariant under s -> rho - s covers the same angle sets twice;
  // fold the domain onto the lower side of the fixed point. At most one such
  // reflection exists: composing two would give a translation, which no
  // finite profile admits.
  std::optional<Rat> rho;
  {
    std::vector<std::pair<Rat, Rat>> prof;
    prof.reserve(M);
    for (int m = 0; m < M; ++m) prof.emplace_back(slopes[m], consts[m]);
    std::sort(prof.begin(), prof.end());
    for (int m = 0; m < M && !rho; ++m) {
      if (slopes[m] != -1) continue;
      const Rat cand = consts[m];
      std::vector<std::pair<Rat, Rat>> img;
      img.reserve(M);
      for (int i = 0; i < M; ++i)
        img.emplace_back(-slopes[i], consts[i] + slopes[i] * cand);
      std::sort(img.begin(), img.end());
      if (img == prof) rho = cand;
    }
  }
  if (rho) {
    const Rat mid = *rho / 2;
    if (slo >= mid) {
      const Rat nlo = *rho - shi;
      const Rat nhi = *rho - slo;
      slo = nlo;
      shi = nhi;
      std::swap(lo_open, hi_open);
    } else if (shi > mid) {
      const Rat rlo = *rho - shi;
      if (rlo < slo) {
        slo = rlo;
        lo_open = hi_open;
      } else if (rlo == slo) {
        lo_open = lo_open && hi_open;
      }
      // the fixed point is a collision of the unit row with its mirror, so
      // the endpoint is opened by the cut pass below
      shi = mid;
      hi_open = false;
    }
  }
  std::vector<Rat> cuts;
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j) {
      if (slopes[i] == slopes[j]) {
        if (consts[i] == consts[j])
          throw std::invalid_argument(
              "two coordinates of the family are identical");
        continue;
      }
      Rat s = (consts[j] - consts[i]) / (slopes[i] - slopes[j]);
      if (s < slo || s > shi) continue;
      if (s == slo) {
        lo_open = true;
        continue;
      }
      if (s == shi) {
        hi_open = true;
        continue;
      }
      cuts.push_back(std::move(s));
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<ParamInterval> pieces;
  Rat a = slo;
  bool ao = lo_open;
  for (const Rat& c : cuts) {
    pieces.push_back(ParamInterval{a, c, ao, true});
    a = c;
    ao = true;
  }
  pieces.push_back(ParamInterval{a, shi, ao, hi_open});
  return materialize_line(
      LineForm{std::move(consts), std::move(slopes), std::move(pieces)});
}

// Extends a line class by another stretch of the same line (equal profile);
// interval lists union, display order follows the merged domain.
void glue_line(AmbiguityClass& ex, const AmbiguityClass& inc) {
  auto ivs = ex.parameter_domains.at(0);
  const auto& add = inc.parameter_domains.at(0);
  ivs.insert(ivs.end(), add.begin(), add.end());
  LineForm lf{ex.phi_const, ex.phi_dir[0], merge_intervals(std::move(ivs))};
  AmbiguityClass glued = materialize_line(std::move(lf));
  ex.phi_const = std::move(glued.phi_const);
  ex.phi_dir = std::move(glued.phi_dir);
  ex.parameter_domains = std::move(glued.parameter_domains);
}

std::string glue_key(const AmbiguityClass& cls) {
  if (cls.param_count() == 1)
    return line_profile_key(cls.phi_const, cls.phi_dir[0]);
  return canonical_key(cls);
}

void merge_into(std::vector<AmbiguityClass>& list,
                std::map<std::string, std::size_t>& index, AmbiguityClass cls) {
  std::string key = glue_key(cls);
  auto it = index.find(key);
  if (it == index.end()) {
    index.emplace(std::move(key), list.size());
    list.push_back(std::move(cls));
    return;
  }
  AmbiguityClass& ex = list[it->second];
  for (auto& pv : cls.provenance) ex.provenance.push_back(std::move(pv));
  if (ex.param_count() == 1) glue_line(ex, cls);
}

bool in_intervals(const std::vector<ParamInterval>& ivs, const Rat& s) {
  for (const auto& iv : ivs) {
    if (s < iv.lo || (s == iv.lo && iv.lo_open)) continue;
    if (s > iv.hi || (s == iv.hi && iv.hi_open)) continue;
    return true;
  }
  return false;
}

const std::array<Rat, 5>& sample_ladder() {
  static const std::array<Rat, 5> l = {rat(1, 2), rat(1, 4), rat(3, 4),
                                       rat(1, 8), rat(7, 8)};
  return l;
}

std::string describe_config(const Configuration& cfg) {
  std::ostringstream os;
  os << "parts ";
  for (std::size_t i = 0; i < cfg.parts.size(); ++i)
    os << (i ? "+" : "") << cfg.parts[i];
  auto ints = [&os](const char* name, const auto& v) {
    os << ' ' << name << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << v[i];
    }
    os << ']';
  };
  ints("sum", cfg.sum_index);
  ints("block", cfg.block_of_slot);
  ints("root", cfg.root_of_slot);
  ints("x", cfg.x);
  ints("z", cfg.z);
  return os.str();
}

[[noreturn]] void fail_verification(const AmbiguityClass& cls,
                                    const std::vector<Rat>& phi,
                                    const core::AmbiguityVerdict& v) {
  std::ostringstream os;
  os << "class verification failed: angles (turns)";
  for (const auto& x : phi) os << ' ' << rat_str(x);
  os << "; status="
     << (v.status == core::CheckStatus::kOk ? "ok" : "trivial-repeat")
     << " ambiguous=" << (v.ambiguous ? "yes" : "no")
     << " smallest_sv=" << v.smallest_sv << " rank=" << v.rank;
  if (!cls.provenance.empty())
    os << "; from " << describe_config(cls.provenance.front());
  throw VerificationError(os.str());
}

// Exact rational sample angles spread over the class domain: the single
// point for a discrete class, five parameter values per line, and five
// slices through the first parameter of a higher-dimensional region.
std::vector<std::vector<Rat>> class_sample_points(const AmbiguityClass& cls) {
  const int M = static_cast<int>(cls.phi_const.size());
  const int K = cls.param_count();
  std::vector<std::vector<Rat>> out;
  if (K == 0) {
    out.push_back(cls.phi_const);
    return out;
  }
  if (K == 1) {
    const auto& ivs = cls.parameter_domains.at(0);
    std::vector<Rat> ss;
    for (const Rat& f : sample_ladder()) {
      for (const auto& iv : ivs) {
        ss.push_back(iv.lo + (iv.hi - iv.lo) * f);
        if (ss.size() == 5) break;
      }
      if (ss.size() == 5) break;
    }
    for (const Rat& s : ss) {
      std::vector<Rat> phi(M);
      for (int m = 0; m < M; ++m)
        phi[m] = cls.phi_const[m] + cls.phi_dir[0][m] * s;
      out.push_back(std::move(phi));
    }
    return out;
  }
  auto rng = linsolve::coordinate_range(cls.domain, K, 0);
  if (!rng)
    throw VerificationError("class verification failed: empty parameter domain");
  for (const Rat& f : sample_ladder()) {
    const Rat v = rng->lo + (rng->hi - rng->lo) * f;
    std::vector<Ineq> slice;
    slice.reserve(cls.domain.size());
    for (const auto& q : cls.domain) {
      Ineq t;
      t.coeffs.assign(q.coeffs.begin() + 1, q.coeffs.end());
      t.bound = q.bound - q.coeffs[0] * v;
      t.strict = q.strict;
      slice.push_back(std::move(t));
    }
    auto pt = linsolve::sample_point(slice, K - 1);
    if (!pt)
      throw VerificationError(
          "class verification failed: parameter slice is empty");
    std::vector<Rat> s;
    s.reserve(K);
    s.push_back(v);
    s.insert(s.end(), pt->begin(), pt->end());
    std::vector<Rat> phi(M);
    for (int m = 0; m < M; ++m) {
      Rat acc = cls.phi_const[m];
      for (int k = 0; k < K; ++k) acc += cls.phi_dir[k][m] * s[k];
      phi[m] = std::move(acc);
    }
    out.push_back(std::move(phi));
  }
  return out;
}

void verify_class(const core::LinearArray& array, AmbiguityClass& cls) {
  for (const auto& phi : class_sample_points(cls)) {
    std::vector<double> rad(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i)
      rad[i] = 2.0 * std::numbers::pi * rat_to_double(phi[i]);
    const auto v = core::is_ambiguous(array, rad);
    if (v.status != core::CheckStatus::kOk || !v.ambiguous)
      fail_verification(cls, phi, v);
  }
  cls.verified = true;
}

// Rotations mapping a sum's phase set to itself act on the phase indices;
// for each index this records the least index in its orbit. Seeding a block
// with a non-representative first root only reproduces a rotated copy.
std::vector<std::vector<int>> orbit_mins(
    const std::vector<vansums::MinimalVanishingSum>& entries) {
  std::vector<std::vector<int>> result(entries.size());
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const auto& ph = entries[e].phases;
    const int L = static_cast<int>(ph.size());
    auto& om = result[e];
    om.resize(L);
    std::iota(om.begin(), om.end(), 0);
    for (int j = 1; j < L; ++j) {
      const Rat rho = mod1(ph[0] - ph[j]);
      std::vector<Rat> rot(L);
      for (int i = 0; i < L; ++i) rot[i] = mod1(ph[i] + rho);
      std::vector<Rat> sorted = rot;
      std::sort(sorted.begin(), sorted.end());
      if (!std::equal(sorted.begin(), sorted.end(), ph.begin())) continue;
      for (int i = 0; i < L; ++i) {
        const int img = static_cast<int>(
            std::lower_bound(ph.begin(), ph.end(), rot[i]) - ph.begin());
        if (img < om[i]) om[i] = img;
      }
    }
  }
  return result;
}

int validated_row_count(const core::LinearArray& array,
                        const std::vector<int>& parts) {
  if (array.positions.size() < 2)
    throw std::invalid_argument("array needs at least two sensors");
  if (parts.empty()) throw std::invalid_argument("empty partition");
  long long total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 2)
      throw std::invalid_argument("partition parts must be at least 2");
    if (i && parts[i] < parts[i - 1])
      throw std::invalid_argument("partition parts must be ascending");
    total += parts[i];
  }
  const auto lambda = tableaux::shape_of(array.positions);
  const std::uint64_t n =
      tableaux::ssyt_count(lambda, static_cast<int>(array.positions.size()));
  if (static_cast<std::uint64_t>(total) != n)
    throw std::invalid_argument(
        "partition does not sum to the number of weight rows");
  return static_cast<int>(n);
}

class Searcher {
 public:
  Searcher(const core::LinearArray& array, const std::vector<int>& parts,
           const Budget& budget, const Options& options)
      : array_(array),
        parts_(parts),
        budget_(budget),
        opt_(options),
        M_(static_cast<int>(array.positions.size())),
        B_(static_cast<int>(parts.size())),
        half_d_(array.baseline / 2),
        sys_(static_cast<int>(array.positions.size()) - 1 +
             static_cast<int>(parts.size())) {
    N_ = 0;
    for (int p : parts_) N_ += p;
    nvars_ = M_ - 1 + B_;
    alpha_ = tableaux::weight_matrix(tableaux::shape_of(array_.positions), M_);
    if (opt_.chain_order.empty()) {
      chain_.resize(M_);
      std::iota(chain_.begin(), chain_.end(), 0);
    } else {
      chain_ = opt_.chain_order;
      if (static_cast<int>(chain_.size()) != M_ || chain_[0] != 0)
        throw std::invalid_argument(
            "chain order must list every sensor once, starting at sensor 0");
      std::vector<bool> seen(M_, false);
      for (int c : chain_) {
        if (c < 0 || c >= M_ || seen[c])
          throw std::invalid_argument(
              "chain order must be a permutation of the sensors");
        seen[c] = true;
      }
    }
    box_lo_.assign(nvars_, Rat(0));
    box_hi_.assign(nvars_, Rat(0));
    for (int m = 1; m < M_; ++m) {
      box_lo_[m - 1] = -half_d_;
      box_hi_[m - 1] = half_d_;
    }
    for (int b = 0; b < B_; ++b) {
      box_lo_[M_ - 1 + b] = 0;
      box_hi_[M_ - 1 + b] = 1;
    }
    unit_.assign(nvars_, std::vector<Rat>(nvars_, Rat(0)));
    for (int j = 0; j < nvars_; ++j) unit_[j][j] = 1;
    build_raw_cons();
    const auto& cat = vansums::Catalog::instance();
    sums_.resize(B_);
    orbit_min_.resize(B_);
    for (int b = 0; b < B_; ++b) {
      sums_[b] = &cat.of_length(parts_[b]);
      orbit_min_[b] = orbit_mins(*sums_[b]);
    }
    sum_choice_.assign(B_, -1);
    slots_in_block_.assign(B_, 0);
    block_of_slot_.assign(N_, -1);
    root_of_slot_.assign(N_, -1);
    c_of_slot_.assign(N_, 0);
    root_used_.resize(B_);
    for (int b = 0; b < B_; ++b) root_used_[b].assign(parts_[b], false);
  }

  PartitionReport run() {
    const auto t0 = std::chrono::steady_clock::now();
    if (budget_.max_seconds > 0)
      deadline_ = t0 + std::chrono::duration_cast<
                           std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(budget_.max_seconds));
    dfs(0);
    PartitionReport rep;
    rep.parts = parts_;
    rep.config_count = config_count_;
    if (opt_.prune) {
      // distinguishing the blocks multiplies each run of equal parts by its
      // number of orderings
      long long mult = 1;
      int runlen = 1;
      for (int b = 1; b <= B_; ++b) {
        if (b < B_ && parts_[b] == parts_[b - 1]) {
          ++runlen;
          continue;
        }
        mult *= factorial(runlen);
        runlen = 1;
      }
      rep.config_count_ordered = config_count_ * mult;
    } else {
      rep.config_count_ordered = config_count_;
    }
    rep.complete = !aborted_;
    rep.nodes = nodes_;
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    rep.classes = std::move(classes_);
    return rep;
  }

 private:
  const std::vector<Rat>& block_phases(int b) const {
    return (*sums_[b])[sum_choice_[b]].phases;
  }

  void build_raw_cons() {
    // strictly ascending chain above the pinned bottom angle -d/2
    {
      RawCon rc{std::vector<Rat>(nvars_, Rat(0)), half_d_, true};
      rc.a[chain_[1] - 1] = -1;
      raw_cons_.push_back(std::move(rc));
    }
    for (int i = 2; i < M_; ++i) {
      RawCon rc{std::vector<Rat>(nvars_, Rat(0)), Rat(0), true};
      rc.a[chain_[i - 1] - 1] += 1;
      rc.a[chain_[i] - 1] -= 1;
      raw_cons_.push_back(std::move(rc));
    }
    {
      // top of the window; the edge aliases the pinned bottom root exactly
      // when the aperture spans a whole number of half wavelengths
      const bool integral = array_.baseline.get_den() == 1;
      RawCon rc{std::vector<Rat>(nvars_, Rat(0)), half_d_, integral};
      rc.a[chain_[M_ - 1] - 1] = 1;
      raw_cons_.push_back(std::move(rc));
    }
    for (int b = 0; b < B_; ++b) {
      RawCon lo{std::vector<Rat>(nvars_, Rat(0)), Rat(0), false};
      lo.a[M_ - 1 + b] = -1;
      raw_cons_.push_back(std::move(lo));
      RawCon hi{std::vector<Rat>(nvars_, Rat(0)), Rat(1), true};
      hi.a[M_ - 1 + b] = 1;
      raw_cons_.push_back(std::move(hi));
    }
  }

  bool tick() {
    ++nodes_;
    if (budget_.max_nodes > 0 && nodes_ > budget_.max_nodes) {
      aborted_ = true;
      return false;
    }
    if (budget_.max_seconds > 0 && (nodes_ & 1023u) == 0 &&
        std::chrono::steady_clock::now() >= deadline_) {
      aborted_ = true;
      return false;
    }
    return true;
  }

  void range_over_box(const std::vector<Rat>& coef, const Rat& cst, Rat& lo,
                      Rat& hi) const {
    lo = cst;
    hi = cst;
    for (int j = 0; j < nvars_; ++j) {
      const Rat& w = coef[j];
      if (w > 0) {
        lo += w * box_lo_[j];
        hi += w * box_hi_[j];
      } else if (w < 0) {
        lo += w * box_hi_[j];
        hi += w * box_lo_[j];
      }
    }
  }

  void raw_range(int var, Rat& lo, Rat& hi) {
    sys_.reduce(unit_[var], Rat(0), red_coef_, red_const_);
    range_over_box(red_coef_, red_const_, lo, hi);
  }

  // Cheap relaxation check after a new pivot: every variable's box interval
  // and a running maximum along the chain must stay consistent.
  bool interval_prune() {
    Rat lo, hi;
    for (int b = 0; b < B_; ++b) {
      raw_range(M_ - 1 + b, lo, hi);
      if (lo > 1 || hi < 0) return true;
    }
    Rat run = -half_d_;
    for (int i = 1; i < M_; ++i) {
      raw_range(chain_[i] - 1, lo, hi);
      if (lo > half_d_ || hi < -half_d_) return true;
      if (hi > half_d_) hi = half_d_;
      if (run > hi) return true;
      if (lo > run) run = lo;
    }
    return false;
  }

  void dfs(int slot) {
    if (aborted_) return;
    if (slot == N_) {
      process_leaf();
      return;
    }
    for (int b = 0; b < B_; ++b) {
      if (slots_in_block_[b] == parts_[b]) continue;
      if (slots_in_block_[b] == 0) {
        // fresh block; under pruning, equal-sized blocks enter in order
        if (opt_.prune && b > 0 && parts_[b - 1] == parts_[b] &&
            slots_in_block_[b - 1] == 0)
          continue;
        const int nsums = static_cast<int>(sums_[b]->size());
        for (int s = 0; s < nsums && !aborted_; ++s) {
          sum_choice_[b] = s;
          try_roots(slot, b, true);
        }
        sum_choice_[b] = -1;
      } else {
        try_roots(slot, b, false);
      }
      if (aborted_) return;
    }
  }

  void try_roots(int slot, int b, bool fresh) {
    const auto& ph = block_phases(b);
    const int L = parts_[b];
    for (int r = 0; r < L && !aborted_; ++r) {
      if (root_used_[b][r]) continue;
      if (fresh && opt_.root_orbit_prune &&
          orbit_min_[b][sum_choice_[b]][r] != r)
        continue;
      block_of_slot_[slot] = b;
      root_of_slot_[slot] = r;
      root_used_[b][r] = true;
      ++slots_in_block_[b];
      place_c(slot, b, ph[r]);
      --slots_in_block_[b];
      root_used_[b][r] = false;
      block_of_slot_[slot] = -1;
      root_of_slot_[slot] = -1;
    }
  }

  // The slot's equation, up to the integer lift c: a . vars = base + c.
  // The feasible c range is read off the box hull of the reduced functional.
  void place_c(int slot, int b, const Rat& q) {
    std::vector<Rat> a(nvars_, Rat(0));
    const auto& w = alpha_[slot];
    for (int m = 1; m < M_; ++m)
      if (w[m] != 0) a[m - 1] = Rat(w[m]);
    a[M_ - 1 + b] = -1;
    const Rat base = q + half_d_ * Rat(w[0]);
    sys_.reduce(a, Rat(0), red_coef_, red_const_);
    Rat lo, hi;
    range_over_box(red_coef_, red_const_, lo, hi);
    const long clo = rat_to_long(rat_ceil(lo - base));
    const long chi = rat_to_long(rat_floor(hi - base));
    for (long c = clo; c <= chi; ++c) {
      if (!tick()) return;
      const auto mk = sys_.mark();
      const auto res = sys_.add_equation(a, base + Rat(c));
      if (res != LinearSystem::AddResult::kInconsistent) {
        // a redundant equation leaves the system unchanged: nothing new to prune
        const bool pruned =
            res == LinearSystem::AddResult::kNewPivot && interval_prune();
        if (!pruned) {
          c_of_slot_[slot] = c;
          dfs(slot + 1);
        }
      }
      sys_.rollback(mk);
      if (aborted_) return;
    }
  }

  // Counts the rotation cells of the leaf: per block, the feasible arcs of
  // its rotation between consecutive carry thresholds 1 - q. Each combination
  // is one distinct lift tuple (x, z); the first found supplies the
  // representative.
  long long count_cells(const AffineFamily& fam, const std::vector<Ineq>& dom,
                        int K, std::vector<int>& z_first) {
    std::vector<std::vector<int>> slots_of(B_);
    for (int l = 0; l < N_; ++l) slots_of[block_of_slot_[l]].push_back(l);
    std::vector<Rat> vconst(B_);
    std::vector<std::vector<Rat>> vcoef(B_, std::vector<Rat>(K));
    for (int b = 0; b < B_; ++b) {
      vconst[b] = fam.origin[M_ - 1 + b];
      for (int k = 0; k < K; ++k) vcoef[b][k] = fam.directions[k][M_ - 1 + b];
    }
    std::vector<std::vector<Rat>> cuts(B_);
    for (int b = 0; b < B_; ++b) {
      for (const Rat& q : block_phases(b))
        if (q != 0) cuts[b].push_back(1 - q);
      std::sort(cuts[b].begin(), cuts[b].end());
    }
    long long count = 0;
    std::vector<Ineq> work = dom;
    std::vector<int> z(N_, 0);
    std::function<void(int)> rec = [&](int b) {
      if (b == B_) {
        if (count == 0) z_first = z;
        ++count;
        return;
      }
      Rat prev(0);
      for (std::size_t ci = 0; ci <= cuts[b].size(); ++ci) {
        const Rat lo = prev;
        const Rat hi = ci < cuts[b].size() ? cuts[b][ci] : Rat(1);
        prev = hi;
        const std::size_t mark = work.size();
        if (lo != 0) {
          Ineq q;
          q.coeffs.resize(K);
          for (int k = 0; k < K; ++k) q.coeffs[k] = -vcoef[b][k];
          q.bound = vconst[b] - lo;
          q.strict = false;
          work.push_back(std::move(q));
        }
        if (hi != 1) {
          Ineq q;
          q.coeffs = vcoef[b];
          q.bound = hi - vconst[b];
          q.strict = true;
          work.push_back(std::move(q));
        }
        if (linsolve::feasible(work, K)) {
          for (int l : slots_of[b]) {
            const Rat& ql = block_phases(b)[root_of_slot_[l]];
            z[l] = (ql != 0 && lo >= 1 - ql) ? 1 : 0;
          }
          rec(b + 1);
        }
        work.resize(mark);
      }
    };
    rec(0);
    return count;
  }

  void process_leaf() {
    AffineFamily fam = sys_.solve();
    int K = fam.dim();
    std::vector<Ineq> dom;
    dom.reserve(raw_cons_.size());
    for (const auto& con : raw_cons_) {
      sys_.reduce(con.a, Rat(0), red_coef_, red_const_);
      Ineq q;
      q.coeffs.resize(K);
      bool zero = true;
      for (int k = 0; k < K; ++k) {
        q.coeffs[k] = red_coef_[fam.free_vars[k]];
        if (q.coeffs[k] != 0) zero = false;
      }
      Rat bound = con.b - red_const_;
      if (zero) {
        if (con.strict ? bound > 0 : bound >= 0) continue;
        return;
      }
      q.bound = std::move(bound);
      q.strict = con.strict;
      dom.push_back(std::move(q));
    }
    if (!linsolve::feasible(dom, K)) return;
    // fold implicit equalities into the family so the domain becomes
    // full-dimensional in its parameters
    while (K > 0) {
      const auto eqs = linsolve::implicit_equalities(dom, K);
      if (eqs.empty()) break;
      LinearSystem psys(K);
      bool progressed = false;
      for (const auto& e : eqs)
        if (psys.add_equation(e.coeffs, e.bound) ==
            LinearSystem::AddResult::kNewPivot)
          progressed = true;
      if (!progressed) break;
      const AffineFamily inner = psys.solve();
      const int K2 = inner.dim();
      AffineFamily nf;
      nf.origin = fam.at(inner.origin);
      nf.directions.reserve(K2);
      for (const auto& idir : inner.directions) {
        std::vector<Rat> dir(nvars_, Rat(0));
        for (int k = 0; k < K; ++k) {
          if (idir[k] == 0) continue;
          for (int j = 0; j < nvars_; ++j)
            dir[j] += idir[k] * fam.directions[k][j];
        }
        nf.directions.push_back(std::move(dir));
      }
      std::vector<Ineq> nd;
      nd.reserve(dom.size());
      for (const auto& q : dom) {
        Ineq t;
        t.coeffs.assign(K2, Rat(0));
        Rat shift(0);
        for (int k = 0; k < K; ++k) {
          if (q.coeffs[k] == 0) continue;
          shift += q.coeffs[k] * inner.origin[k];
          for (int i = 0; i < K2; ++i)
            t.coeffs[i] += q.coeffs[k] * inner.directions[i][k];
        }
        Rat bound = q.bound - shift;
        if (all_zero(t.coeffs)) {
          if (q.strict ? bound > 0 : bound >= 0) continue;
          return;
        }
        t.bound = std::move(bound);
        t.strict = q.strict;
        nd.push_back(std::move(t));
      }
      fam = std::move(nf);
      dom = std::move(nd);
      K = K2;
    }
    dom = canonical_facets(std::move(dom), K);
    std::vector<int> z_first;
    const long long cells = count_cells(fam, dom, K, z_first);
    if (cells == 0) return;
    config_count_ += cells;
    Configuration rep;
    rep.parts = parts_;
    rep.sum_index = sum_choice_;
    rep.block_of_slot = block_of_slot_;
    rep.root_of_slot = root_of_slot_;
    rep.z = std::move(z_first);
    rep.x.resize(N_);
    for (int l = 0; l < N_; ++l) rep.x[l] = c_of_slot_[l] + rep.z[l];
    std::vector<Rat> pc(M_);
    pc[0] = -half_d_;
    for (int m = 1; m < M_; ++m) pc[m] = fam.origin[m - 1];
    std::vector<std::vector<Rat>> pd(K, std::vector<Rat>(M_, Rat(0)));
    for (int k = 0; k < K; ++k)
      for (int m = 1; m < M_; ++m) pd[k][m] = fam.directions[k][m - 1];
    if (K >= 2) {
      // canonical row order: ascending angle anywhere inside the cell
      const auto pt = linsolve::sample_point(dom, K);
      if (pt) {
        std::vector<Rat> val(M_);
        for (int m = 0; m < M_; ++m) {
          Rat acc = pc[m];
          for (int k = 0; k < K; ++k) acc += pd[k][m] * (*pt)[k];
          val[m] = std::move(acc);
        }
        std::vector<int> ord(M_);
        std::iota(ord.begin(), ord.end(), 0);
        std::sort(ord.begin(), ord.end(),
                  [&](int x, int y) { return val[x] < val[y]; });
        std::vector<Rat> pc2(M_);
        std::vector<std::vector<Rat>> pd2(K, std::vector<Rat>(M_));
        for (int m = 0; m < M_; ++m) {
          pc2[m] = pc[ord[m]];
          for (int k = 0; k < K; ++k) pd2[k][m] = pd[k][ord[m]];
        }
        pc = std::move(pc2);
        pd = std::move(pd2);
      }
    }
    AmbiguityClass cls = class_from_family(std::move(pc), std::move(pd), dom);
    cls.provenance.push_back(std::move(rep));
    merge_into(classes_, class_index_, std::move(cls));
  }

  struct RawCon {
    std::vector<Rat> a;
    Rat b;
    bool strict;
  };

  const core::LinearArray& array_;
  std::vector<int> parts_;
  Budget budget_;
  Options opt_;
  int M_;
  int B_;
  Rat half_d_;
  LinearSystem sys_;
  int N_ = 0;
  int nvars_ = 0;
  tableaux::WeightMatrix alpha_;
  std::vector<int> chain_;
  std::vector<Rat> box_lo_, box_hi_;
  std::vector<std::vector<Rat>> unit_;
  std::vector<RawCon> raw_cons_;
  std::vector<const std::vector<vansums::MinimalVanishingSum>*> sums_;
  std::vector<std::vector<std::vector<int>>> orbit_min_;
  std::vector<int> sum_choice_, slots_in_block_, block_of_slot_, root_of_slot_;
  std::vector<long> c_of_slot_;
  std::vector<std::vector<bool>> root_used_;
  std::vector<AmbiguityClass> classes_;
  std::map<std::string, std::size_t> class_index_;
  long long config_count_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point deadline_{};
  std::vector<Rat> red_coef_;
  Rat red_const_;
};

}  // namespace

std::string canonical_key(const AmbiguityClass& cls) {
  const int K = cls.param_count();
  if (K == 0) return point_key(cls.phi_const);
  if (K == 1) {
    std::ostringstream os;
    os << line_profile_key(cls.phi_const, cls.phi_dir[0]);
    for (const auto& iv : cls.parameter_domains.at(0))
      os << '|' << interval_text(iv);
    return os.str();
  }
  std::ostringstream os;
  os << "F|" << cls.phi_const.size() << '|' << K << '|';
  append_rat_list(os, cls.phi_const);
  for (const auto& row : cls.phi_dir) {
    os << '|';
    append_rat_list(os, row);
  }
  for (const auto& q : cls.domain) {
    os << '|';
    append_rat_list(os, q.coeffs);
    os << (q.strict ? "<" : "<=") << rat_str(q.bound);
  }
  return os.str();
}

bool class_contains(const AmbiguityClass& cls, const std::vector<Rat>& phi) {
  const int M = static_cast<int>(cls.phi_const.size());
  if (static_cast<int>(phi.size()) != M) return false;
  std::vector<Rat> p = phi;
  std::sort(p.begin(), p.end());
  const int K = cls.param_count();
  if (K == 0) return p == cls.phi_const;
  if (K == 1) {
    const auto& c = cls.phi_const;
    const auto& d = cls.phi_dir[0];
    int ref = -1;
    for (int m = 0; m < M; ++m)
      if (d[m] != 0) {
        ref = m;
        break;
      }
    if (ref < 0) return false;
    for (int i = 0; i < M; ++i) {
      const Rat s = (p[i] - c[ref]) / d[ref];
      if (!in_intervals(cls.parameter_domains.at(0), s)) continue;
      std::vector<Rat> at(M);
      for (int m = 0; m < M; ++m) at[m] = c[m] + d[m] * s;
      std::sort(at.begin(), at.end());
      if (at == p) return true;
    }
    return false;
  }
  // pivot coordinates are the parameters; rows ascend over the domain
  std::vector<Rat> s(K);
  for (int i = 0; i < K; ++i) {
    int piv = -1;
    for (int m = 0; m < M; ++m)
      if (cls.phi_dir[i][m] != 0) {
        piv = m;
        break;
      }
    if (piv < 0) return false;
    s[i] = p[piv] - cls.phi_const[piv];
  }
  for (int m = 0; m < M; ++m) {
    Rat v = cls.phi_const[m];
    for (int i = 0; i < K; ++i) v += cls.phi_dir[i][m] * s[i];
    if (v != p[m]) return false;
  }
  for (const auto& q : cls.domain) {
    Rat lhs(0);
    for (int i = 0; i < K; ++i) lhs += q.coeffs[i] * s[i];
    if (q.strict ? !(lhs < q.bound) : !(lhs <= q.bound)) return false;
  }
  return true;
}

AmbiguityClass class_from_family(std::vector<Rat> phi_const,
                                 std::vector<std::vector<Rat>> phi_dir,
                                 std::vector<linsolve::Ineq> domain) {
  const int M = static_cast<int>(phi_const.size());
  const int K = static_cast<int>(phi_dir.size());
  if (M < 1) throw std::invalid_argument("empty angle vector");
  for (const auto& row : phi_dir)
    if (static_cast<int>(row.size()) != M)
      throw std::invalid_argument("direction row size mismatch");
  if (K == 0) {
    std::sort(phi_const.begin(), phi_const.end());
    for (int m = 1; m < M; ++m)
      if (phi_const[m] == phi_const[m - 1])
        throw std::invalid_argument(
            "two coordinates of the family are identical");
    AmbiguityClass cls;
    cls.phi_const = std::move(phi_const);
    return cls;
  }
  if (K == 1) {
    if (all_zero(phi_dir[0]))
      throw std::invalid_argument("direction row is zero");
    const auto rng = linsolve::coordinate_range(domain, 1, 0);
    if (!rng) throw std::invalid_argument("empty parameter domain");
    if (rng->lo_unbounded || rng->hi_unbounded)
      throw std::invalid_argument("parameter domain is unbounded");
    if (rng->lo == rng->hi) {
      if (rng->lo_strict || rng->hi_strict)
        throw std::invalid_argument("empty parameter domain");
      std::vector<Rat> pt(M);
      for (int m = 0; m < M; ++m)
        pt[m] = phi_const[m] + phi_dir[0][m] * rng->lo;
      return class_from_family(std::move(pt), {}, {});
    }
    return line_class(std::move(phi_const), std::move(phi_dir[0]), rng->lo,
                      rng->hi, rng->lo_strict, rng->hi_strict);
  }
  if (!linsolve::feasible(domain, K))
    throw std::invalid_argument("empty parameter domain");
  if (!linsolve::implicit_equalities(domain, K).empty())
    throw std::invalid_argument("parameter domain is not full-dimensional");
  // reduced row echelon over the greedy leftmost pivot columns
  auto W = phi_dir;
  std::vector<int> piv;
  int row = 0;
  for (int m = 0; m < M && row < K; ++m) {
    int sel = -1;
    for (int i = row; i < K; ++i)
      if (W[i][m] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(W[row], W[sel]);
    const Rat lead = W[row][m];
    for (auto& x : W[row]) x /= lead;
    for (int i = 0; i < K; ++i) {
      if (i == row || W[i][m] == 0) continue;
      const Rat f = W[i][m];
      for (int t = 0; t < M; ++t) W[i][t] -= f * W[row][t];
    }
    piv.push_back(m);
    ++row;
  }
  if (row < K)
    throw std::invalid_argument("direction rows are linearly dependent");
  // invert the pivot minor of the original rows to pull the domain along
  std::vector<std::vector<Rat>> aug(K, std::vector<Rat>(2 * K, Rat(0)));
  for (int i = 0; i < K; ++i) {
    for (int k = 0; k < K; ++k) aug[i][k] = phi_dir[k][piv[i]];
    aug[i][K + i] = 1;
  }
  for (int col = 0; col < K; ++col) {
    int sel = -1;
    for (int r = col; r < K; ++r)
      if (aug[r][col] != 0) {
        sel = r;
        break;
      }
    std::swap(aug[col], aug[sel]);
    const Rat lead = aug[col][col];
    for (auto& x : aug[col]) x /= lead;
    for (int r = 0; r < K; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const Rat f = aug[r][col];
      for (int t = 0; t < 2 * K; ++t) aug[r][t] -= f * aug[col][t];
    }
  }
  std::vector<Rat> cP(K);
  for (int i = 0; i < K; ++i) cP[i] = phi_const[piv[i]];
  std::vector<Rat> cstar(M);
  for (int m = 0; m < M; ++m) {
    Rat acc = phi_const[m];
    for (int i = 0; i < K; ++i) acc -= cP[i] * W[i][m];
    cstar[m] = std::move(acc);
  }
  std::vector<Ineq> dom2;
  dom2.reserve(domain.size());
  for (const auto& q : domain) {
    Ineq t;
    t.coeffs.assign(K, Rat(0));
    for (int i = 0; i < K; ++i) {
      Rat acc(0);
      for (int k = 0; k < K; ++k) acc += aug[k][K + i] * q.coeffs[k];
      t.coeffs[i] = std::move(acc);
    }
    Rat b = q.bound;
    for (int i = 0; i < K; ++i) b += t.coeffs[i] * cP[i];
    t.bound = std::move(b);
    t.strict = q.strict;
    dom2.push_back(std::move(t));
  }
  AmbiguityClass cls;
  cls.phi_const = std::move(cstar);
  cls.phi_dir = std::move(W);
  cls.domain = canonical_facets(std::move(dom2), K);
  cls.parameter_domains.resize(K);
  for (int i = 0; i < K; ++i) {
    const auto r = linsolve::coordinate_range(cls.domain, K, i);
    if (!r) throw std::invalid_argument("empty parameter domain");
    if (r->lo_unbounded || r->hi_unbounded)
      throw std::invalid_argument("parameter domain is unbounded");
    cls.parameter_domains[i] = {
        ParamInterval{r->lo, r->hi, r->lo_strict, r->hi_strict}};
  }
  return cls;
}

AmbiguityClass canonicalize(const AmbiguityClass& cls) {
  const int K = cls.param_count();
  AmbiguityClass out;
  if (K == 0) {
    out = class_from_family(cls.phi_const, {}, {});
  } else if (K == 1) {
    const auto& ivs = cls.parameter_domains.at(0);
    if (ivs.empty()) throw std::invalid_argument("empty parameter domain");
    std::optional<AmbiguityClass> acc;
    for (const auto& iv : ivs) {
      std::vector<Ineq> dom;
      dom.push_back(Ineq{{Rat(-1)}, -iv.lo, iv.lo_open});
      dom.push_back(Ineq{{Rat(1)}, iv.hi, iv.hi_open});
      AmbiguityClass piece =
          class_from_family(cls.phi_const, cls.phi_dir, std::move(dom));
      if (piece.param_count() != 1)
        throw std::invalid_argument("degenerate interval in parameter domain");
      if (!acc)
        acc = std::move(piece);
      else
        glue_line(*acc, piece);
    }
    out = std::move(*acc);
  } else {
    out = class_from_family(cls.phi_const, cls.phi_dir, cls.domain);
  }
  out.provenance = cls.provenance;
  out.verified = cls.verified;
  out.subsumed = cls.subsumed;
  return out;
}

std::optional<FeasibleSolution> solve_linear_feasibility(
    const core::LinearArray& array, const Configuration& config) {
  const int M = static_cast<int>(array.positions.size());
  const int B = static_cast<int>(config.parts.size());
  const int N = validated_row_count(array, config.parts);
  if (static_cast<int>(config.block_of_slot.size()) != N ||
      static_cast<int>(config.root_of_slot.size()) != N ||
      static_cast<int>(config.x.size()) != N ||
      static_cast<int>(config.z.size()) != N ||
      static_cast<int>(config.sum_index.size()) != B)
    throw std::invalid_argument("configuration sizes do not match");
  const auto alpha =
      tableaux::weight_matrix(tableaux::shape_of(array.positions), M);
  const auto& cat = vansums::Catalog::instance();
  const int nvars = M - 1 + B;
  const Rat half_d = array.baseline / 2;
  LinearSystem sys(nvars);
  std::vector<std::vector<Rat>> arcs;  // extra inequalities pinning each z
  for (int l = 0; l < N; ++l) {
    const int b = config.block_of_slot[l];
    if (b < 0 || b >= B) throw std::invalid_argument("block index out of range");
    const auto& entries = cat.of_length(config.parts[b]);
    const int si = config.sum_index[b];
    if (si < 0 || si >= static_cast<int>(entries.size()))
      throw std::invalid_argument("sum index out of range");
    const auto& ph = entries[si].phases;
    const int r = config.root_of_slot[l];
    if (r < 0 || r >= static_cast<int>(ph.size()))
      throw std::invalid_argument("root index out of range");
    if (config.z[l] != 0 && config.z[l] != 1)
      throw std::invalid_argument("z entries must be binary");
    if (ph[r] == 0 && config.z[l] == 1) return std::nullopt;
    std::vector<Rat> a(nvars, Rat(0));
    for (int m = 1; m < M; ++m)
      if (alpha[l][m] != 0) a[m - 1] = Rat(alpha[l][m]);
    a[M - 1 + b] = -1;
    const Rat rhs =
        ph[r] + half_d * Rat(alpha[l][0]) + Rat(config.x[l] - config.z[l]);
    if (sys.add_equation(std::move(a), rhs) ==
        LinearSystem::AddResult::kInconsistent)
      return std::nullopt;
  }
  const AffineFamily fam = sys.solve();
  const int K = fam.dim();
  // window, ordering, rotation boxes, and the carry arcs selected by z
  struct Raw {
    std::vector<Rat> a;
    Rat b;
    bool strict;
  };
  std::vector<Raw> raw;
  {
    Raw rc{std::vector<Rat>(nvars, Rat(0)), half_d, true};
    rc.a[0] = -1;
    raw.push_back(std::move(rc));
  }
  for (int i = 2; i < M; ++i) {
    Raw rc{std::vector<Rat>(nvars, Rat(0)), Rat(0), true};
    rc.a[i - 2] += 1;
    rc.a[i - 1] -= 1;
    raw.push_back(std::move(rc));
  }
  {
    Raw rc{std::vector<Rat>(nvars, Rat(0)), half_d,
           array.baseline.get_den() == 1};
    rc.a[M - 2] = 1;
    raw.push_back(std::move(rc));
  }
  for (int b = 0; b < B; ++b) {
    Raw lo{std::vector<Rat>(nvars, Rat(0)), Rat(0), false};
    lo.a[M - 1 + b] = -1;
    raw.push_back(std::move(lo));
    Raw hi{std::vector<Rat>(nvars, Rat(0)), Rat(1), true};
    hi.a[M - 1 + b] = 1;
    raw.push_back(std::move(hi));
  }
  for (int l = 0; l < N; ++l) {
    const int b = config.block_of_slot[l];
    const auto& ph =
        cat.of_length(config.parts[b])[config.sum_index[b]].phases;
    const Rat& q = ph[config.root_of_slot[l]];
    if (q == 0) continue;
    Raw rc{std::vector<Rat>(nvars, Rat(0)), Rat(0), false};
    if (config.z[l] == 1) {
      rc.a[M - 1 + b] = -1;  // v >= 1 - q
      rc.b = q - 1;
      rc.strict = false;
    } else {
      rc.a[M - 1 + b] = 1;  // v < 1 - q
      rc.b = 1 - q;
      rc.strict = true;
    }
    raw.push_back(std::move(rc));
  }
  std::vector<Ineq> dom;
  dom.reserve(raw.size());
  std::vector<Rat> rc_coef;
  Rat rc_const;
  for (const auto& con : raw) {
    sys.reduce(con.a, Rat(0), rc_coef, rc_const);
    Ineq q;
    q.coeffs.resize(K);
    bool zero = true;
    for (int k = 0; k < K; ++k) {
      q.coeffs[k] = rc_coef[fam.free_vars[k]];
      if (q.coeffs[k] != 0) zero = false;
    }
    Rat bound = con.b - rc_const;
    if (zero) {
      if (con.strict ? bound > 0 : bound >= 0) continue;
      return std::nullopt;
    }
    q.bound = std::move(bound);
    q.strict = con.strict;
    dom.push_back(std::move(q));
  }
  if (!linsolve::feasible(dom, K)) return std::nullopt;
  return FeasibleSolution{fam, std::move(dom)};
}

PartitionReport enumerate_partition(const core::LinearArray& array,
                                    const std::vector<int>& parts,
                                    const Budget& budget,
                                    const Options& options) {
  validated_row_count(array, parts);
  Searcher s(array, parts, budget, options);
  return s.run();
}

EnumerationReport enumerate_all(const core::LinearArray& array,
                                const Budget& budget, const Options& options) {
  EnumerationReport rep;
  rep.array = array;
  if (array.positions.empty()) throw std::invalid_argument("empty array");
  const int M = static_cast<int>(array.positions.size());
  const std::uint64_t n =
      tableaux::ssyt_count(tableaux::shape_of(array.positions), M);
  if (n > 64)
    throw std::invalid_argument("weight row count too large to enumerate");
  rep.N = static_cast<int>(n);
  if (n < 2) return rep;
  const auto parts_list =
      vansums::restricted_partitions(static_cast<int>(n));
  rep.partitions.resize(parts_list.size());
  vansums::Catalog::instance();  // shared setup before any worker threads
  const int jobs = std::max(
      1, std::min(options.jobs, static_cast<int>(parts_list.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < parts_list.size(); ++i)
      rep.partitions[i] =
          enumerate_partition(array, parts_list[i], budget, options);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(parts_list.size());
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&]() {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= parts_list.size()) return;
          try {
            rep.partitions[i] =
                enumerate_partition(array, parts_list[i], budget, options);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::map<std::string, std::size_t> index;
  for (const auto& pr : rep.partitions)
    for (const auto& cls : pr.classes) merge_into(rep.merged_classes, index, cls);
  auto mark_subsumed = [&rep](AmbiguityClass& d) {
    if (!d.discrete()) return;
    for (const auto& p : rep.merged_classes) {
      if (p.discrete()) continue;
      if (class_contains(p, d.phi_const)) {
        d.subsumed = true;
        return;
      }
    }
  };
  for (auto& cls : rep.merged_classes) mark_subsumed(cls);
  for (auto& pr : rep.partitions)
    for (auto& cls : pr.classes) mark_subsumed(cls);
  verify_classes(array, rep);
  return rep;
}

std::vector<std::vector<Rat>> uniform_ambiguities(
    const core::LinearArray& array) {
  if (array.baseline != 1)
    throw std::invalid_argument(
        "uniform grid ambiguities require a unit baseline");
  const int M = static_cast<int>(array.positions.size());
  std::set<std::vector<Rat>> seen;
  std::set<long> spacings;
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j) {
      const long s = std::labs(array.positions[j] - array.positions[i]);
      if (s > M - 1) spacings.insert(s);
    }
  for (const long s : spacings) {
    // every M-point subset of the s-point uniform grid on the circle
    std::vector<long> pick(M);
    std::iota(pick.begin(), pick.end(), 0L);
    for (;;) {
      std::vector<Rat> phi(M);
      for (int i = 0; i < M; ++i) phi[i] = rat(-1, 2) + rat(pick[i], s);
      seen.insert(std::move(phi));
      int i = M - 1;
      while (i >= 0 && pick[i] == s - M + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < M; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {seen.begin(), seen.end()};
}

bool check_uniform_coverage(const core::LinearArray& array,
                            const EnumerationReport& report) {
  for (const auto& u : uniform_ambiguities(array)) {
    std::vector<Rat> shifted(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
      shifted[i] = u[i] - u[0] - rat(1, 2);
    bool covered = false;
    for (const auto& cls : report.merged_classes)
      if (class_contains(cls, shifted)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

std::vector<Configuration> symmetry_reduced_search(
    const core::LinearArray& array, const std::vector<int>& parts) {
  const int N = validated_row_count(array, parts);
  const int B = static_cast<int>(parts.size());
  const auto& cat = vansums::Catalog::instance();
  std::vector<const std::vector<vansums::MinimalVanishingSum>*> sums(B);
  std::vector<std::vector<std::vector<int>>> om(B);
  for (int b = 0; b < B; ++b) {
    sums[b] = &cat.of_length(parts[b]);
    om[b] = orbit_mins(*sums[b]);
  }
  std::vector<Configuration> out;
  std::vector<int> sum_choice(B, -1), in_block(B, 0), bos(N, -1), ros(N, -1);
  std::vector<std::vector<bool>> used(B);
  for (int b = 0; b < B; ++b) used[b].assign(parts[b], false);
  std::function<void(int)> rec = [&](int slot) {
    if (slot == N) {
      Configuration cfg;
      cfg.parts = parts;
      cfg.sum_index = sum_choice;
      cfg.block_of_slot = bos;
      cfg.root_of_slot = ros;
      out.push_back(std::move(cfg));
      return;
    }
    for (int b = 0; b < B; ++b) {
      if (in_block[b] == parts[b]) continue;
      const bool fresh = in_block[b] == 0;
      if (fresh && b > 0 && parts[b - 1] == parts[b] && in_block[b - 1] == 0)
        continue;
      const int nsums = fresh ? static_cast<int>(sums[b]->size()) : 1;
      for (int si = 0; si < nsums; ++si) {
        if (fresh) sum_choice[b] = si;
        for (int r = 0; r < parts[b]; ++r) {
          if (used[b][r]) continue;
          if (fresh && om[b][sum_choice[b]][r] != r) continue;
          bos[slot] = b;
          ros[slot] = r;
          used[b][r] = true;
          ++in_block[b];
          rec(slot + 1);
          --in_block[b];
          used[b][r] = false;
          bos[slot] = -1;
          ros[slot] = -1;
        }
        if (fresh) sum_choice[b] = -1;
      }
    }
  };
  rec(0);
  return out;
}

void verify_classes(const core::LinearArray& array, EnumerationReport& report) {
  for (auto& pr : report.partitions)
    for (auto& cls : pr.classes) verify_class(array, cls);
  for (auto& cls : report.merged_classes) verify_class(array, cls);
}

std::string report_json(const EnumerationReport& report) {
  using json = nlohmann::ordered_json;
  auto class_json = [](const AmbiguityClass& cls) {
    json c;
    c["kind"] = cls.discrete() ? "discrete" : "parametric";
    json rows = json::array();
    const int M = static_cast<int>(cls.phi_const.size());
    for (int m = 0; m < M; ++m) {
      json row = json::array();
      row.push_back(rat_str(cls.phi_const[m]));
      for (const auto& dir : cls.phi_dir) row.push_back(rat_str(dir[m]));
      rows.push_back(std::move(row));
    }
    c["phi_turns_affine"] = std::move(rows);
    json doms = json::array();
    for (const auto& ivs : cls.parameter_domains) {
      json one = json::array();
      for (const auto& iv : ivs) {
        json o;
        o["lo"] = rat_str(iv.lo);
        o["hi"] = rat_str(iv.hi);
        o["lo_open"] = iv.lo_open;
        o["hi_open"] = iv.hi_open;
        one.push_back(std::move(o));
      }
      doms.push_back(std::move(one));
    }
    c["parameter_domains"] = std::move(doms);
    c["verified"] = cls.verified;
    return c;
  };
  json j;
  j["array"] = report.array.positions;
  j["baseline"] = rat_str(report.array.baseline);
  j["N"] = report.N;
  json parts = json::array();
  for (const auto& pr : report.partitions) {
    json p;
    p["parts"] = pr.parts;
    p["config_count"] = pr.config_count;
    p["complete"] = pr.complete;
    json cl = json::array();
    for (const auto& cls : pr.classes) cl.push_back(class_json(cls));
    p["classes"] = std::move(cl);
    parts.push_back(std::move(p));
  }
  j["partitions"] = std::move(parts);
  json merged = json::array();
  for (const auto& cls : report.merged_classes)
    merged.push_back(class_json(cls));
  j["merged_classes"] = std::move(merged);
  return j.dump(2) + "\n";
}

}  // namespace ambig::enumeration
