#pragma once

// Ambiguity enumeration: searches, per restricted partition, all ways to
// assign rotated minimal vanishing sums to the weight rows of an array,
// solves the induced linear systems over the electrical angles exactly,
// and reports the feasible solution sets as canonical ambiguity classes.
// Angles are handled in turns (units of a full circle) throughout.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ambig/array_core.hpp"
#include "ambig/linsolve.hpp"
#include "ambig/rational.hpp"

namespace ambig::enumeration {

using core::LinearArray;

// One fully fixed integer choice of the search: block lengths, one catalog
// sum per block, a bijection of the chosen roots onto the weight rows, and
// the integer unknowns. A configuration counts as a solution when at least
// one assignment of the continuous variables satisfies it.
struct Configuration {
  std::vector<int> parts;          // ascending block lengths
  std::vector<int> sum_index;      // per block: catalog index for its length
  std::vector<int> block_of_slot;  // per weight row
  std::vector<int> root_of_slot;   // per weight row: root within the block
  std::vector<long> x;             // per weight row
  std::vector<int> z;              // per weight row, 0 or 1
};

struct ParamInterval {
  Rat lo, hi;
  bool lo_open = true, hi_open = true;
};

// Canonical ambiguity class, phi(t) = phi_const + sum_k t_k * phi_dir[k],
// all M coordinates in turns. Zero parameters: a single angle vector, kept
// ascending. One parameter: a line family in canonical parameterization
// (primitive integer slopes, fixed orientation and shift); pieces describing
// one underlying set of angle multisets are glued, so parameter_domains[0]
// may hold several intervals whose open endpoints mark angle collisions.
// Two or more parameters: row-reduced directions with each parameter equal
// to one pivot coordinate, coordinates ascending over the whole domain;
// parameter_domains then holds per-parameter ranges (projections) and
// `domain` the exact facet list.
struct AmbiguityClass {
  std::vector<Rat> phi_const;                 // size M, presentation order
  std::vector<std::vector<Rat>> phi_dir;      // K x M
  std::vector<std::vector<ParamInterval>> parameter_domains;  // size K
  std::vector<linsolve::Ineq> domain;  // exact domain when K >= 2
  std::vector<Configuration> provenance;
  bool verified = false;
  bool subsumed = false;

  int param_count() const { return static_cast<int>(phi_dir.size()); }
  bool discrete() const { return phi_dir.empty(); }
};

// Total order + equality for canonical classes; equal keys mean equal
// solution sets (for one-parameter classes, equal up to reparameterization
// and coordinate sorting).
std::string canonical_key(const AmbiguityClass& cls);

// Exact membership: does the ascending angle vector (turns) lie in the class?
bool class_contains(const AmbiguityClass& cls, const std::vector<Rat>& phi);

// Builds the canonical class holding the given affine family (angles in
// turns; domain over its parameters). Families with one parameter may be
// given unsorted; they are split into sorted pieces at coordinate collisions
// and glued back canonically. Families with two or more parameters must
// already be sorted over their domain.
AmbiguityClass class_from_family(std::vector<Rat> phi_const,
                                 std::vector<std::vector<Rat>> phi_dir,
                                 std::vector<linsolve::Ineq> domain);

struct Budget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double max_seconds = 0.0;     // 0 = unlimited
};

struct Options {
  // Canonical first-use order for interchangeable blocks of equal length.
  // On: each unordered configuration is counted once. Off: block positions
  // are distinguishable and the raw ordered count is enumerated.
  bool prune = true;
  // Additionally quotient the rotation stabilizer of each chosen sum (a sum
  // invariant under some rotation admits several labelings of one solution):
  // keeps class sets intact but changes configuration counts.
  bool root_orbit_prune = false;
  int jobs = 1;  // worker threads across partitions in enumerate_all
  // Testing hook: enumerate with the strict ordering imposed on a permuted
  // coordinate chain instead of the natural one (identity when empty).
  // Element i gives the 0-based sensor whose angle sits at chain position i;
  // position 0 must stay sensor 0 (its angle is pinned).
  std::vector<int> chain_order;
};

struct PartitionReport {
  std::vector<int> parts;
  // Number of enumerated configurations under the active pruning options;
  // config_count_ordered multiplies back the relabelings of interchangeable
  // equal-length blocks that the canonical first-use order quotients.
  long long config_count = 0;
  long long config_count_ordered = 0;
  bool complete = true;
  std::vector<AmbiguityClass> classes;
  std::uint64_t nodes = 0;
  double wall_seconds = 0.0;
};

struct EnumerationReport {
  LinearArray array;
  int N = 0;
  std::vector<PartitionReport> partitions;
  std::vector<AmbiguityClass> merged_classes;
};

// Thrown when a sampled member of an emitted class fails the numeric rank
// check: a soundness failure that must never be reported as a result.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

struct FeasibleSolution {
  linsolve::AffineFamily family;       // over (phi_2..phi_M, v_1..v_B)
  std::vector<linsolve::Ineq> domain;  // over the family parameters
};

// Exact feasibility for one fully fixed configuration.
std::optional<FeasibleSolution> solve_linear_feasibility(
    const LinearArray& array, const Configuration& config);

PartitionReport enumerate_partition(const LinearArray& array,
                                    const std::vector<int>& parts,
                                    const Budget& budget = {},
                                    const Options& options = {});

EnumerationReport enumerate_all(const LinearArray& array,
                                const Budget& budget = {},
                                const Options& options = {});

// Equally spaced angle vectors guaranteed ambiguous by pair spacings wider
// than M-1 baselines; every M-subvector is emitted, in turns, ascending.
std::vector<std::vector<Rat>> uniform_ambiguities(const LinearArray& array);

// True iff every uniform ambiguity, rotated so its first angle is -d/2,
// belongs to some merged class of the report.
bool check_uniform_coverage(const LinearArray& array,
                            const EnumerationReport& report);

// Renormalizes a class to its canonical representation (idempotent).
AmbiguityClass canonicalize(const AmbiguityClass& cls);

// Assignment skeletons (block and root per slot, sum per block; integer
// slacks left empty) surviving the symmetry pruning: canonical first-use
// order for equal-length blocks plus rotation-stabilizer quotients within
// each sum. Every ambiguity class is reachable from some surviving skeleton.
std::vector<Configuration> symmetry_reduced_search(const LinearArray& array,
                                                   const std::vector<int>& parts);

// Samples interior members of every class and checks them against the
// numeric rank test; sets the verified flags. Throws VerificationError with
// a diagnostic dump if any sample fails.
void verify_classes(const LinearArray& array, EnumerationReport& report);

// Deterministic JSON rendering of a report.
std::string report_json(const EnumerationReport& report);

}  // namespace ambig::enumeration
