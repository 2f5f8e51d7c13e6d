#pragma once

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

#include "ambig/array_core.hpp"
#include "ambig/rational.hpp"

namespace ambig::symmetric {

// An array recentred so that its sensor multiset is its own mirror image
// about the origin. Integer arrays always centre on a half-integer shift,
// so the centred positions live in (1/2)Z; they are kept exact.
struct SymmetricArray {
  std::vector<Rat> positions;  // centred, ascending, positions[i] = -positions[M-1-i]
  Rat shift;                   // original position = centred position + shift
  Rat baseline = Rat(1);       // carried over from the source array
  double norm = 0.0;           // Euclidean norm of the baseline-scaled positions
  double manifold_length = 0.0;  // 2*pi*norm
};

// Centres the array on its centroid and checks mirror symmetry by verifying
// that every odd power sum of the centred positions vanishes (orders
// 1, 3, ..., 2M-1 determine the multiset). Returns nullopt when the array is
// not symmetric about any shift.
std::optional<SymmetricArray> detect_symmetry(const core::LinearArray& array);

// Arc length along the unit-speed steering curve: s = pi*norm*(1 - cos(theta)),
// theta in [0, pi]. Throws std::domain_error outside that range or for
// norm <= 0.
double arc_length(double theta, double norm);

// Inverse of arc_length on s in [0, 2*pi*norm].
double theta_of(double s, double norm);

struct CharacteristicPoint {
  double s = 0.0;    // arc length in [0, manifold_length]
  int order = 0;     // derivative order n >= 1
  double theta = 0.0;  // theta_of(s, norm)
};

// The order-n alignment function whose zeros are the characteristic points:
// the real part of (-j)^n * sum_k rho_k^n exp(-j r_k s / norm) with
// rho_k = r_k / norm, which reduces to a single cosine sum (n even) or sine
// sum (n odd) with sign depending on n mod 4.
double characteristic_condition(const SymmetricArray& array, int order, double s);

// All zeros of characteristic_condition over s in [0, manifold_length], found
// by a uniform scan with `resolution` intervals, sign-change bracketing and
// bisection to 1e-10 in s. Endpoint zeros (s = 0, pi*norm, manifold_length)
// are detected by direct evaluation and reported exactly. A scan too coarse
// for the oscillation of the condition can miss interior roots of even
// multiplicity; this is a documented limitation, not a detected error.
std::vector<CharacteristicPoint> characteristic_points(const SymmetricArray& array,
                                                       int order,
                                                       int resolution = 10000);

// The nonnegative half of a symmetric array: ceil(M/2) sensors, keeping the
// origin sensor when M is odd. Half-integer centred positions are scaled to
// integers by doubling positions and halving the baseline, which leaves the
// physical geometry unchanged.
core::LinearArray reduced_array(const SymmetricArray& array);

// Real part of the reduced-array steering matrix: entry (k, i) =
// cos(pi * baseline * r_k * cos(theta_i)).
Eigen::MatrixXd real_part_steering(const core::LinearArray& reduced,
                                   const std::vector<double>& thetas);

// Tests, for ceil(M/2) distinct DoAs in the open interval (0, pi/2), the two
// sides of the real-part reduction:
//   lhs = the real reduced matrix Re[A(theta_1..theta_h)] is rank deficient;
//   rhs = the full complex steering matrix at the mirror-completed angle
//         vector (theta_1..theta_h, pi-theta_h..pi-theta_1) is rank deficient.
// For even M the two are provably equivalent; for odd M the mirrored vector
// has M+1 angles and rhs requires every M-subset to be rank deficient (this
// direction is checked empirically, with no proof in the source material).
// Throws std::domain_error for angles outside (0, pi/2) and
// std::invalid_argument for a wrong count or duplicate angles.
std::pair<bool, bool> real_part_ambiguity_equivalence(const SymmetricArray& array,
                                                      const std::vector<double>& thetas,
                                                      double tol = core::default_tol());

// For arrays whose reduced half has exactly two sensors: sweeps the v1 grid
// and, for each grid angle, returns every v2 in [0, pi/2] (boundary included)
// with det Re[A(v1, v2)] = 0 and v2 != v1, found by scan + bisection. Grid
// angles with no root contribute no pairs. Throws std::domain_error for grid
// angles outside (0, pi/2).
std::vector<std::pair<double, double>> symmetric_ambiguity_family(
    const SymmetricArray& array, const std::vector<double>& v1_grid);

}  // namespace ambig::symmetric
