#include "ambig/array_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace ambig::core {

namespace {
constexpr double kPi = std::numbers::pi;
}

LinearArray make_array(std::vector<long> positions, const Rat& baseline) {
  if (positions.empty()) throw std::invalid_argument("empty array");
  std::sort(positions.begin(), positions.end());
  for (size_t i = 1; i < positions.size(); ++i)
    if (positions[i] == positions[i - 1])
      throw std::invalid_argument("duplicate sensor position");
  if (baseline <= 0 || baseline > 1)
    throw std::invalid_argument("baseline must lie in (0, 1]");
  return LinearArray{std::move(positions), baseline};
}

double electrical_angle(double theta, const Rat& baseline) {
  if (theta < 0.0 || theta > kPi) throw std::invalid_argument("theta outside [0, pi]");
  return -kPi * rat_to_double(baseline) * std::cos(theta);
}

double doa_of(double phi, const Rat& baseline) {
  double d = rat_to_double(baseline);
  double c = -phi / (kPi * d);
  if (c < -1.0 - 1e-12 || c > 1.0 + 1e-12)
    throw std::invalid_argument("phi outside [-pi d, pi d]");
  return std::acos(std::clamp(c, -1.0, 1.0));
}

Eigen::VectorXcd steering_vector(const LinearArray& array, double phi) {
  Eigen::VectorXcd a(array.positions.size());
  for (size_t m = 0; m < array.positions.size(); ++m)
    a[static_cast<Eigen::Index>(m)] =
        std::polar(1.0, phi * static_cast<double>(array.positions[m]));
  return a;
}

Eigen::MatrixXcd steering_matrix(const LinearArray& array,
                                 const std::vector<double>& phis) {
  Eigen::MatrixXcd A(array.positions.size(), phis.size());
  for (size_t l = 0; l < phis.size(); ++l)
    A.col(static_cast<Eigen::Index>(l)) = steering_vector(array, phis[l]);
  return A;
}

std::complex<double> generalized_vandermonde_det(
    const std::vector<long>& exponents,
    const std::vector<std::complex<double>>& z) {
  if (exponents.size() != z.size()) throw std::invalid_argument("size mismatch");
  const Eigen::Index n = static_cast<Eigen::Index>(z.size());
  Eigen::MatrixXcd V(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k)
      V(i, k) = std::pow(z[static_cast<size_t>(k)],
                         static_cast<double>(exponents[static_cast<size_t>(i)]));
  return V.determinant();
}

std::complex<double> classical_vandermonde_det(
    const std::vector<std::complex<double>>& z) {
  std::complex<double> p = 1.0;
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t k = i + 1; k < z.size(); ++k) p *= z[k] - z[i];
  return p;
}

double default_tol() {
  static const double tol = [] {
    if (const char* s = std::getenv("AMBIG_TOL")) {
      char* end = nullptr;
      double v = std::strtod(s, &end);
      if (end != s && v > 0.0) return v;
    }
    return 1e-8;
  }();
  return tol;
}

AmbiguityVerdict is_ambiguous(const LinearArray& array,
                              const std::vector<double>& phis, double tol) {
  const size_t M = array.positions.size();
  if (phis.empty() || phis.size() > M)
    throw std::invalid_argument("need 1 <= L <= M electrical angles");
  AmbiguityVerdict v;
  std::vector<double> sorted = phis;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (std::abs(sorted[i] - sorted[i - 1]) < 1e-12) {
      v.status = CheckStatus::kTrivialRepeat;
      return v;
    }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(steering_matrix(array, phis));
  const auto& s = svd.singularValues();
  v.largest_sv = s(0);
  v.smallest_sv = s(s.size() - 1);
  v.rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * v.largest_sv) ++v.rank;
  v.ambiguous = v.rank < static_cast<int>(phis.size());
  return v;
}

int rank_of_subset(const LinearArray& array, const std::vector<double>& phis,
                   double tol) {
  if (phis.empty()) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(steering_matrix(array, phis));
  const auto& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++rank;
  return rank;
}

}  // namespace ambig::core
