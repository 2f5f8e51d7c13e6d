#pragma once

// Exact rational linear algebra for the ambiguity search: an incremental
// Gaussian echelon with rollback (the backtracker adds and retracts one
// equation per slot), affine solution families, and Fourier-Motzkin
// elimination that keeps strict and weak inequalities apart so open
// parameter domains survive exactly.

#include <optional>
#include <vector>

#include "ambig/rational.hpp"

namespace ambig::linsolve {

// a . x  (op)  b  over rationals; op is < when strict, <= otherwise.
struct Ineq {
  std::vector<Rat> coeffs;
  Rat bound;
  bool strict = false;
};

Ineq normalized(Ineq q);  // primitive integer coefficients, same direction

// Affine solution set of a consistent linear system: all points
// origin + sum_k t_k * directions[k]. free_vars names the original variable
// driving each parameter (its coefficient in that direction is 1).
struct AffineFamily {
  std::vector<Rat> origin;
  std::vector<std::vector<Rat>> directions;
  std::vector<int> free_vars;

  int dim() const { return static_cast<int>(directions.size()); }
  std::vector<Rat> at(const std::vector<Rat>& params) const;
};

// Row echelon over Q, built one equation at a time. Rows added after a mark
// can be dropped again in O(1) per row; earlier rows are never mutated, so
// rollback is exact.
class LinearSystem {
 public:
  enum class AddResult { kNewPivot, kRedundant, kInconsistent };
  struct Mark {
    int rows = 0;
  };

  explicit LinearSystem(int nvars);

  int nvars() const { return nvars_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  AddResult add_equation(std::vector<Rat> coeffs, Rat rhs);

  Mark mark() const { return Mark{rank()}; }
  void rollback(Mark m);

  // Rewrites a . x + c using the pivot rows: the result mentions only
  // pivot-free variables. Returns (reduced coefficients, reduced constant).
  void reduce(const std::vector<Rat>& coeffs, const Rat& constant,
              std::vector<Rat>& out_coeffs, Rat& out_constant) const;

  AffineFamily solve() const;

 private:
  struct Row {
    std::vector<Rat> coeffs;
    Rat rhs;
    int pivot;
  };
  int nvars_;
  std::vector<Row> rows_;
  std::vector<int> pivot_row_;  // column -> row index, -1 if free
};

// Fourier-Motzkin over the full system. All functions treat the conjunction
// of the inequalities; variables are indexed 0..dim-1. Eliminating a variable
// pairs every lower bound with every upper bound; a derived inequality is
// strict when either parent is.
bool feasible(std::vector<Ineq> system, int dim);

// A point satisfying every inequality, strictly where required.
std::optional<std::vector<Rat>> sample_point(const std::vector<Ineq>& system,
                                             int dim);

struct Interval {
  Rat lo, hi;
  bool lo_strict = false, hi_strict = false;
  bool lo_unbounded = false, hi_unbounded = false;
};

// Exact range of coordinate `var` over the solution set; nullopt when the
// system is infeasible.
std::optional<Interval> coordinate_range(const std::vector<Ineq>& system,
                                         int dim, int var);

// Drops inequalities implied by the rest. The result describes the same set.
std::vector<Ineq> irredundant(std::vector<Ineq> system, int dim);

// Weak inequalities that hold with equality everywhere on the solution set.
// Pre: system is feasible.
std::vector<Ineq> implicit_equalities(const std::vector<Ineq>& system,
                                      int dim);

}  // namespace ambig::linsolve
