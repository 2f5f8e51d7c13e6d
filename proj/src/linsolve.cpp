#include "ambig/linsolve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ambig::linsolve {

namespace {

bool is_zero_vec(const std::vector<Rat>& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

}  // namespace

Ineq normalized(Ineq q) {
  // Scale by the positive rational that makes the coefficients a primitive
  // integer vector; the inequality direction is preserved.
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& c : q.coeffs) {
    if (c == 0) continue;
    mpz_class n = abs(c.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  }
  if (num_gcd == 0) return q;  // all-zero row, nothing to scale
  Rat scale(den_lcm, num_gcd);
  for (auto& c : q.coeffs) {
    c *= scale;
    c.canonicalize();
  }
  q.bound *= scale;
  q.bound.canonicalize();
  return q;
}

std::vector<Rat> AffineFamily::at(const std::vector<Rat>& params) const {
  if (static_cast<int>(params.size()) != dim())
    throw std::invalid_argument("parameter count does not match family");
  std::vector<Rat> p = origin;
  for (std::size_t k = 0; k < directions.size(); ++k)
    for (std::size_t i = 0; i < p.size(); ++i)
      p[i] += params[k] * directions[k][i];
  return p;
}

LinearSystem::LinearSystem(int nvars) : nvars_(nvars), pivot_row_(nvars, -1) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
}

LinearSystem::AddResult LinearSystem::add_equation(std::vector<Rat> coeffs,
                                                   Rat rhs) {
  if (static_cast<int>(coeffs.size()) != nvars_)
    throw std::invalid_argument("equation width does not match system");
  for (const auto& row : rows_) {
    const Rat& f = coeffs[row.pivot];
    if (f == 0) continue;
    Rat factor = f;  // row pivot is 1
    for (int j = row.pivot; j < nvars_; ++j)
      if (row.coeffs[j] != 0) coeffs[j] -= factor * row.coeffs[j];
    rhs -= factor * row.rhs;
  }
  int pivot = -1;
  for (int j = 0; j < nvars_; ++j)
    if (coeffs[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return rhs == 0 ? AddResult::kRedundant : AddResult::kInconsistent;
  Rat inv = 1 / coeffs[pivot];
  for (int j = pivot; j < nvars_; ++j)
    if (coeffs[j] != 0) coeffs[j] *= inv;
  rhs *= inv;
  pivot_row_[pivot] = rank();
  rows_.push_back(Row{std::move(coeffs), std::move(rhs), pivot});
  return AddResult::kNewPivot;
}

void LinearSystem::rollback(Mark m) {
  if (m.rows < 0 || m.rows > rank())
    throw std::invalid_argument("mark does not belong to this system");
  while (rank() > m.rows) {
    pivot_row_[rows_.back().pivot] = -1;
    rows_.pop_back();
  }
}

void LinearSystem::reduce(const std::vector<Rat>& coeffs, const Rat& constant,
                          std::vector<Rat>& out_coeffs,
                          Rat& out_constant) const {
  out_coeffs = coeffs;
  out_constant = constant;
  // Later rows may reintroduce earlier pivot columns (no back-substitution
  // on insert), so sweep until fixed; each pass clears at least one pivot.
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (const auto& row : rows_) {
      const Rat f = out_coeffs[row.pivot];
      if (f == 0) continue;
      for (int j = row.pivot; j < nvars_; ++j)
        if (row.coeffs[j] != 0) out_coeffs[j] -= f * row.coeffs[j];
      out_constant += f * row.rhs;
      dirty = true;
    }
  }
}

AffineFamily LinearSystem::solve() const {
  // Full reduction on a copy: back-substitute bottom-up so each pivot row
  // mentions only free variables besides its pivot.
  std::vector<Row> rref = rows_;
  for (int i = static_cast<int>(rref.size()) - 1; i >= 0; --i) {
    for (int k = 0; k < i; ++k) {
      const Rat f = rref[k].coeffs[rref[i].pivot];
      if (f == 0) continue;
      for (int j = 0; j < nvars_; ++j)
        if (rref[i].coeffs[j] != 0)
          rref[k].coeffs[j] -= f * rref[i].coeffs[j];
      rref[k].rhs -= f * rref[i].rhs;
    }
  }
  AffineFamily fam;
  fam.origin.assign(nvars_, Rat(0));
  for (const auto& row : rref) fam.origin[row.pivot] = row.rhs;
  for (int j = 0; j < nvars_; ++j) {
    if (pivot_row_[j] >= 0) continue;
    std::vector<Rat> dir(nvars_, Rat(0));
    dir[j] = 1;
    for (const auto& row : rref) dir[row.pivot] = -row.coeffs[j];
    fam.free_vars.push_back(j);
    fam.directions.push_back(std::move(dir));
  }
  return fam;
}

namespace {

// Trivial rows (no variables) either contradict or can be dropped.
// Returns false on contradiction.
bool sift_trivial(std::vector<Ineq>& system) {
  std::vector<Ineq> kept;
  kept.reserve(system.size());
  for (auto& q : system) {
    if (is_zero_vec(q.coeffs)) {
      if (q.strict ? !(0 < q.bound) : !(0 <= q.bound)) return false;
    } else {
      kept.push_back(std::move(q));
    }
  }
  system = std::move(kept);
  return true;
}

// Keep only the tightest inequality per coefficient vector.
void dedupe(std::vector<Ineq>& system) {
  std::map<std::vector<Rat>, std::size_t> best;
  std::vector<Ineq> kept;
  for (auto& q : system) {
    q = normalized(std::move(q));
    auto it = best.find(q.coeffs);
    if (it == best.end()) {
      best.emplace(q.coeffs, kept.size());
      kept.push_back(std::move(q));
      continue;
    }
    Ineq& held = kept[it->second];
    if (q.bound < held.bound ||
        (q.bound == held.bound && q.strict && !held.strict))
      held = std::move(q);
  }
  system = std::move(kept);
}

int pick_elimination_var(const std::vector<Ineq>& system, int dim,
                         const std::vector<bool>& gone) {
  int best = -1;
  long best_cost = -1;
  for (int v = 0; v < dim; ++v) {
    if (gone[v]) continue;
    long pos = 0, neg = 0, uses = 0;
    for (const auto& q : system) {
      if (q.coeffs[v] > 0) ++pos;
      if (q.coeffs[v] < 0) ++neg;
    }
    uses = pos + neg;
    long cost = pos * neg - uses;  // favors variables that vanish cheaply
    if (best < 0 || cost < best_cost) {
      best = v;
      best_cost = cost;
    }
  }
  return best;
}

// One Fourier-Motzkin step; false on detected contradiction.
bool eliminate_var(std::vector<Ineq>& system, int var) {
  std::vector<Ineq> zero, upper, lower;
  for (auto& q : system) {
    const Rat& c = q.coeffs[var];
    if (c == 0)
      zero.push_back(std::move(q));
    else if (c > 0)
      upper.push_back(std::move(q));
    else
      lower.push_back(std::move(q));
  }
  for (const auto& lo : lower)
    for (const auto& up : upper) {
      Ineq mix;
      mix.strict = lo.strict || up.strict;
      const Rat a = up.coeffs[var];   // > 0
      const Rat b = -lo.coeffs[var];  // > 0
      mix.coeffs.resize(lo.coeffs.size());
      for (std::size_t j = 0; j < mix.coeffs.size(); ++j)
        mix.coeffs[j] = b * up.coeffs[j] + a * lo.coeffs[j];
      mix.bound = b * up.bound + a * lo.bound;
      zero.push_back(std::move(mix));
    }
  system = std::move(zero);
  if (!sift_trivial(system)) return false;
  dedupe(system);
  return true;
}

}  // namespace

bool feasible(std::vector<Ineq> system, int dim) {
  for (const auto& q : system)
    if (static_cast<int>(q.coeffs.size()) != dim)
      throw std::invalid_argument("inequality width does not match dimension");
  if (!sift_trivial(system)) return false;
  dedupe(system);
  std::vector<bool> gone(dim, false);
  for (int step = 0; step < dim; ++step) {
    int var = pick_elimination_var(system, dim, gone);
    if (var < 0) break;
    gone[var] = true;
    if (!eliminate_var(system, var)) return false;
  }
  return true;
}

namespace {

struct Bound {
  Rat value;
  bool strict;
  bool present = false;
};

// Tightest lower/upper bounds on `var` once all other coordinates are fixed.
void bounds_at(const std::vector<Ineq>& system, int var,
               const std::vector<Rat>& point, Bound& lo, Bound& hi) {
  lo = Bound{};
  hi = Bound{};
  for (const auto& q : system) {
    const Rat& c = q.coeffs[var];
    if (c == 0) continue;
    Rat rest = q.bound;
    for (std::size_t j = 0; j < q.coeffs.size(); ++j)
      if (static_cast<int>(j) != var && q.coeffs[j] != 0)
        rest -= q.coeffs[j] * point[j];
    Rat limit = rest / c;
    if (c > 0) {
      if (!hi.present || limit < hi.value ||
          (limit == hi.value && q.strict && !hi.strict))
        hi = Bound{limit, q.strict, true};
    } else {
      if (!lo.present || limit > lo.value ||
          (limit == lo.value && q.strict && !lo.strict))
        lo = Bound{limit, q.strict, true};
    }
  }
}

}  // namespace

std::optional<std::vector<Rat>> sample_point(const std::vector<Ineq>& system,
                                             int dim) {
  // Record the system before each elimination, then walk back assigning one
  // coordinate at a time from its residual interval.
  std::vector<std::vector<Ineq>> stages;
  std::vector<int> order;
  std::vector<Ineq> work = system;
  if (!sift_trivial(work)) return std::nullopt;
  dedupe(work);
  std::vector<bool> gone(dim, false);
  for (int step = 0; step < dim; ++step) {
    int var = pick_elimination_var(work, dim, gone);
    if (var < 0) break;
    gone[var] = true;
    stages.push_back(work);
    order.push_back(var);
    if (!eliminate_var(work, var)) return std::nullopt;
  }
  std::vector<Rat> point(dim, Rat(0));
  for (int s = static_cast<int>(order.size()) - 1; s >= 0; --s) {
    Bound lo, hi;
    bounds_at(stages[s], order[s], point, lo, hi);
    Rat value;
    if (lo.present && hi.present) {
      if (lo.value > hi.value) return std::nullopt;
      if (lo.value == hi.value) {
        if (lo.strict || hi.strict) return std::nullopt;
        value = lo.value;
      } else {
        value = (lo.value + hi.value) / 2;
      }
    } else if (lo.present) {
      value = lo.value + 1;
    } else if (hi.present) {
      value = hi.value - 1;
    } else {
      value = 0;
    }
    point[order[s]] = value;
  }
  return point;
}

std::optional<Interval> coordinate_range(const std::vector<Ineq>& system,
                                         int dim, int var) {
  if (var < 0 || var >= dim)
    throw std::invalid_argument("coordinate index out of range");
  std::vector<Ineq> work = system;
  if (!sift_trivial(work)) return std::nullopt;
  dedupe(work);
  std::vector<bool> gone(dim, false);
  gone[var] = true;  // never eliminated
  for (int step = 0; step + 1 < dim; ++step) {
    int v = pick_elimination_var(work, dim, gone);
    if (v < 0) break;
    gone[v] = true;
    if (!eliminate_var(work, v)) return std::nullopt;
  }
  Interval iv;
  iv.lo_unbounded = iv.hi_unbounded = true;
  Bound lo, hi;
  std::vector<Rat> origin(dim, Rat(0));
  bounds_at(work, var, origin, lo, hi);
  if (lo.present) {
    iv.lo = lo.value;
    iv.lo_strict = lo.strict;
    iv.lo_unbounded = false;
  }
  if (hi.present) {
    iv.hi = hi.value;
    iv.hi_strict = hi.strict;
    iv.hi_unbounded = false;
  }
  if (!iv.lo_unbounded && !iv.hi_unbounded) {
    if (iv.lo > iv.hi) return std::nullopt;
    if (iv.lo == iv.hi && (iv.lo_strict || iv.hi_strict)) return std::nullopt;
  }
  return iv;
}

namespace {

Ineq negation(const Ineq& q) {
  // not (a.x <= b)  <=>  -a.x < -b ; not (a.x < b)  <=>  -a.x <= -b
  Ineq r;
  r.coeffs.reserve(q.coeffs.size());
  for (const auto& c : q.coeffs) r.coeffs.push_back(-c);
  r.bound = -q.bound;
  r.strict = !q.strict;
  return r;
}

}  // namespace

std::vector<Ineq> irredundant(std::vector<Ineq> system, int dim) {
  dedupe(system);
  for (std::size_t i = 0; i < system.size();) {
    std::vector<Ineq> probe;
    probe.reserve(system.size());
    for (std::size_t j = 0; j < system.size(); ++j)
      if (j != i) probe.push_back(system[j]);
    probe.push_back(negation(system[i]));
    if (!feasible(std::move(probe), dim))
      system.erase(system.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return system;
}

std::vector<Ineq> implicit_equalities(const std::vector<Ineq>& system,
                                      int dim) {
  std::vector<Ineq> found;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (system[i].strict) continue;
    std::vector<Ineq> probe = system;
    probe[i].strict = true;
    if (!feasible(std::move(probe), dim)) found.push_back(system[i]);
  }
  return found;
}

}  // namespace ambig::linsolve
