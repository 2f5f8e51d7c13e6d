#include "ambig/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace ambig::symmetric {

namespace {

constexpr double kPi = std::numbers::pi;

double ipow(double base, int n) {
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= base;
  return p;
}

// Baseline-scaled sensor positions as doubles.
std::vector<double> scaled_positions(const SymmetricArray& array) {
  std::vector<double> eff(array.positions.size());
  for (size_t k = 0; k < eff.size(); ++k)
    eff[k] = rat_to_double(array.positions[k] * array.baseline);
  return eff;
}

// Complex steering matrix from centred positions; entry (k, i) =
// exp(-j * pi * eff_k * cos(theta_i)). Rank is unaffected by the centring
// shift (it rescales columns by unimodular factors).
Eigen::MatrixXcd centred_steering(const std::vector<double>& eff,
                                  const std::vector<double>& thetas) {
  Eigen::MatrixXcd A(static_cast<Eigen::Index>(eff.size()),
                     static_cast<Eigen::Index>(thetas.size()));
  for (size_t i = 0; i < thetas.size(); ++i) {
    const double c = std::cos(thetas[i]);
    for (size_t k = 0; k < eff.size(); ++k)
      A(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) =
          std::polar(1.0, -kPi * eff[k] * c);
  }
  return A;
}

template <typename Matrix>
bool rank_deficient(const Matrix& A, double tol) {
  Eigen::JacobiSVD<Matrix> svd(A);
  const auto& s = svd.singularValues();
  const Eigen::Index full = std::min(A.rows(), A.cols());
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++rank;
  return rank < full;
}

}  // namespace

std::optional<SymmetricArray> detect_symmetry(const core::LinearArray& array) {
  const size_t M = array.positions.size();
  Rat sum(0);
  for (long p : array.positions) sum += p;
  const Rat shift = sum / static_cast<long>(M);

  std::vector<Rat> centred(M);
  for (size_t i = 0; i < M; ++i) centred[i] = Rat(array.positions[i]) - shift;

  // Odd power sums of a multiset symmetric about 0 all vanish, and power sums
  // up to 2M-1 pin the multiset, so their vanishing is also sufficient.
  for (size_t n = 1; n < 2 * M; n += 2) {
    Rat ps(0);
    for (const Rat& c : centred) {
      Rat t(1);
      for (size_t i = 0; i < n; ++i) t *= c;
      ps += t;
    }
    if (ps != 0) return std::nullopt;
  }

  SymmetricArray out;
  out.positions = std::move(centred);
  out.shift = shift;
  out.baseline = array.baseline;
  Rat sq(0);
  for (const Rat& c : out.positions) {
    const Rat e = c * array.baseline;
    sq += e * e;
  }
  out.norm = std::sqrt(rat_to_double(sq));
  out.manifold_length = 2.0 * kPi * out.norm;
  return out;
}

double arc_length(double theta, double norm) {
  if (!(norm > 0.0)) throw std::domain_error("norm must be positive");
  if (!(theta >= 0.0 && theta <= kPi))
    throw std::domain_error("theta outside [0, pi]");
  return kPi * norm * (1.0 - std::cos(theta));
}

double theta_of(double s, double norm) {
  if (!(norm > 0.0)) throw std::domain_error("norm must be positive");
  if (!(s >= 0.0 && s <= 2.0 * kPi * norm))
    throw std::domain_error("arc length outside [0, 2*pi*norm]");
  return std::acos(std::clamp(1.0 - s / (kPi * norm), -1.0, 1.0));
}

double characteristic_condition(const SymmetricArray& array, int order, double s) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (!(array.norm > 0.0)) throw std::domain_error("degenerate array norm");
  const std::vector<double> eff = scaled_positions(array);
  double acc = 0.0;
  const bool odd = order % 2 != 0;
  for (double e : eff) {
    const double rho = e / array.norm;
    const double arg = e * s / array.norm;
    acc += ipow(rho, order) * (odd ? std::sin(arg) : std::cos(arg));
  }
  switch (order % 4) {
    case 0: return acc;
    case 1: return -acc;
    case 2: return -acc;
    default: return acc;
  }
}

std::vector<CharacteristicPoint> characteristic_points(const SymmetricArray& array,
                                                       int order, int resolution) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
  const double L = array.manifold_length;
  const auto f = [&](double s) { return characteristic_condition(array, order, s); };

  // Scale for judging "numerically zero" at candidate exact roots.
  double amp = 0.0;
  for (int i = 0; i <= resolution; ++i)
    amp = std::max(amp, std::abs(f(L * i / resolution)));
  const double zero_eps = 1e-9 * std::max(1.0, amp);
  const double merge_eps = 1e-7 * std::max(1.0, L);

  std::vector<double> roots;
  const auto push_root = [&](double s) {
    for (double r : roots)
      if (std::abs(r - s) <= merge_eps) return;
    roots.push_back(s);
  };

  // Exact boundary/midpoint zeros first, so bisection near-duplicates merge
  // into them rather than the other way round.
  for (double cand : {0.0, kPi * array.norm, L})
    if (std::abs(f(cand)) <= zero_eps) push_root(cand);

  for (int i = 0; i < resolution; ++i) {
    double a = L * i / resolution;
    double b = L * (i + 1) / resolution;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) {
      push_root(a);
      continue;
    }
    if (fa * fb >= 0.0) continue;
    while (b - a > 1e-10) {
      const double m = 0.5 * (a + b);
      const double fm = f(m);
      if (fm == 0.0) {
        a = b = m;
        break;
      }
      (fa * fm < 0.0 ? b : a) = m;
      if (fa * fm >= 0.0) fa = fm;
    }
    push_root(0.5 * (a + b));
  }

  std::sort(roots.begin(), roots.end());
  std::vector<CharacteristicPoint> out;
  out.reserve(roots.size());
  for (double s : roots)
    out.push_back({s, order, theta_of(std::clamp(s, 0.0, L), array.norm)});
  return out;
}

core::LinearArray reduced_array(const SymmetricArray& array) {
  std::vector<Rat> half;
  for (const Rat& p : array.positions)
    if (p >= 0) half.push_back(p);

  bool integral = true;
  for (const Rat& p : half)
    if (p.get_den() != 1) integral = false;

  std::vector<long> positions;
  positions.reserve(half.size());
  Rat baseline = array.baseline;
  if (!integral) {
    // Centred positions live in (1/2)Z; doubling them and halving the
    // baseline keeps every physical sensor location fixed.
    baseline /= 2;
    for (Rat& p : half) p *= 2;
  }
  for (const Rat& p : half) positions.push_back(rat_to_long(p));
  return core::make_array(std::move(positions), baseline);
}

Eigen::MatrixXd real_part_steering(const core::LinearArray& reduced,
                                   const std::vector<double>& thetas) {
  const double d = rat_to_double(reduced.baseline);
  Eigen::MatrixXd A(static_cast<Eigen::Index>(reduced.positions.size()),
                    static_cast<Eigen::Index>(thetas.size()));
  for (size_t i = 0; i < thetas.size(); ++i) {
    const double c = std::cos(thetas[i]);
    for (size_t k = 0; k < reduced.positions.size(); ++k)
      A(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) =
          std::cos(kPi * d * static_cast<double>(reduced.positions[k]) * c);
  }
  return A;
}

std::pair<bool, bool> real_part_ambiguity_equivalence(const SymmetricArray& array,
                                                      const std::vector<double>& thetas,
                                                      double tol) {
  const size_t M = array.positions.size();
  const size_t h = (M + 1) / 2;
  if (thetas.size() != h)
    throw std::invalid_argument("need ceil(M/2) direction angles");
  for (double t : thetas)
    if (!(t > 0.0 && t < kPi / 2.0))
      throw std::domain_error("angles must lie strictly inside (0, pi/2)");
  for (size_t i = 0; i < h; ++i)
    for (size_t j = i + 1; j < h; ++j)
      if (std::abs(thetas[i] - thetas[j]) < 1e-12)
        throw std::invalid_argument("direction angles must be distinct");

  const bool lhs = rank_deficient(
      Eigen::MatrixXd(real_part_steering(reduced_array(array), thetas)), tol);

  std::vector<double> mirrored = thetas;
  for (size_t i = 0; i < h; ++i) mirrored.push_back(kPi - thetas[h - 1 - i]);

  const std::vector<double> eff = scaled_positions(array);
  bool rhs;
  if (M % 2 == 0) {
    rhs = rank_deficient(centred_steering(eff, mirrored), tol);
  } else {
    // Odd M: the mirrored vector has M+1 angles; every M-subset must lose rank.
    rhs = true;
    for (size_t skip = 0; skip < mirrored.size() && rhs; ++skip) {
      std::vector<double> subset;
      for (size_t i = 0; i < mirrored.size(); ++i)
        if (i != skip) subset.push_back(mirrored[i]);
      rhs = rank_deficient(centred_steering(eff, subset), tol);
    }
  }
  return {lhs, rhs};
}

std::vector<std::pair<double, double>> symmetric_ambiguity_family(
    const SymmetricArray& array, const std::vector<double>& v1_grid) {
  const core::LinearArray reduced = reduced_array(array);
  if (reduced.positions.size() != 2)
    throw std::invalid_argument("family sweep needs a two-sensor reduced array");
  const double d = rat_to_double(reduced.baseline);
  const double r0 = static_cast<double>(reduced.positions[0]);
  const double r1 = static_cast<double>(reduced.positions[1]);

  std::vector<std::pair<double, double>> pairs;
  const int kScan = 4000;
  const double hi = kPi / 2.0;

  for (double v1 : v1_grid) {
    if (!(v1 > 0.0 && v1 < hi))
      throw std::domain_error("grid angles must lie strictly inside (0, pi/2)");
    const double c1 = std::cos(v1);
    const double a0 = std::cos(kPi * d * r0 * c1);
    const double a1 = std::cos(kPi * d * r1 * c1);
    const auto g = [&](double v2) {
      const double c2 = std::cos(v2);
      return a0 * std::cos(kPi * d * r1 * c2) - a1 * std::cos(kPi * d * r0 * c2);
    };

    double amp = 0.0;
    for (int i = 0; i <= kScan; ++i)
      amp = std::max(amp, std::abs(g(hi * i / kScan)));
    const double zero_eps = 1e-9 * std::max(1.0, amp);

    std::vector<double> roots;
    const auto push_root = [&](double v2) {
      if (std::abs(v2 - v1) <= 1e-7) return;  // equal angles are no ambiguity
      for (double r : roots)
        if (std::abs(r - v2) <= 1e-9) return;
      roots.push_back(v2);
    };

    // Boundary roots only touch zero (even multiplicity), so test directly.
    if (std::abs(g(0.0)) <= zero_eps) push_root(0.0);
    if (std::abs(g(hi)) <= zero_eps) push_root(hi);

    for (int i = 0; i < kScan; ++i) {
      double a = hi * i / kScan;
      double b = hi * (i + 1) / kScan;
      double ga = g(a), gb = g(b);
      if (ga == 0.0) {
        push_root(a);
        continue;
      }
      if (ga * gb >= 0.0) continue;
      while (b - a > 1e-12) {
        const double m = 0.5 * (a + b);
        const double gm = g(m);
        if (gm == 0.0) {
          a = b = m;
          break;
        }
        (ga * gm < 0.0 ? b : a) = m;
        if (ga * gm >= 0.0) ga = gm;
      }
      push_root(0.5 * (a + b));
    }

    std::sort(roots.begin(), roots.end());
    for (double v2 : roots) pairs.emplace_back(v1, v2);
  }
  return pairs;
}

}  // namespace ambig::symmetric
