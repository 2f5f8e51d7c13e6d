#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "ambig/rational.hpp"

namespace ambig::core {

// Sensor positions in units of the baseline distance d (in half-wavelengths),
// strictly increasing integers. d = baseline in (0, 1].
struct LinearArray {
  std::vector<long> positions;
  Rat baseline = Rat(1);
};

LinearArray make_array(std::vector<long> positions, const Rat& baseline = Rat(1));

// Phi = -pi d cos(theta), theta in [0, pi].
double electrical_angle(double theta, const Rat& baseline);
// Inverse of the above on [-pi d, pi d].
double doa_of(double phi, const Rat& baseline);

// a(phi)_m = exp(j phi r_m).
Eigen::VectorXcd steering_vector(const LinearArray& array, double phi);
Eigen::MatrixXcd steering_matrix(const LinearArray& array,
                                 const std::vector<double>& phis);

// det [ z_k^{r_i} ]_{i,k} for M exponents and M points.
std::complex<double> generalized_vandermonde_det(
    const std::vector<long>& exponents,
    const std::vector<std::complex<double>>& z);

// prod_{i<k} (z_k - z_i).
std::complex<double> classical_vandermonde_det(
    const std::vector<std::complex<double>>& z);

// Rank decision threshold: smallest singular value relative to the largest.
// Default 1e-8, overridable through the AMBIG_TOL environment variable.
double default_tol();

enum class CheckStatus { kOk, kTrivialRepeat };

struct AmbiguityVerdict {
  CheckStatus status = CheckStatus::kOk;
  bool ambiguous = false;
  double smallest_sv = 0.0;
  double largest_sv = 0.0;
  int rank = 0;
};

// True ambiguity = steering matrix of L <= M pairwise distinct electrical
// angles is rank deficient. Repeated angles are reported as kTrivialRepeat
// rather than counted as ambiguities.
AmbiguityVerdict is_ambiguous(const LinearArray& array,
                              const std::vector<double>& phis,
                              double tol = default_tol());

int rank_of_subset(const LinearArray& array, const std::vector<double>& phis,
                   double tol = default_tol());

}  // namespace ambig::core
