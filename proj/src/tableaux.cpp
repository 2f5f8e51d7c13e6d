#include "ambig/tableaux.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ambig::tableaux {

Shape shape_of(const std::vector<long>& positions) {
  Shape lambda(positions.size());
  for (size_t i = 0; i < positions.size(); ++i) {
    lambda[i] = positions[i] - static_cast<long>(i);
    if (lambda[i] < 0)
      throw std::invalid_argument("positions must be strictly increasing and non-negative");
    if (i > 0 && lambda[i] < lambda[i - 1])
      throw std::invalid_argument("positions must be strictly increasing");
  }
  return lambda;
}

namespace {

void check_shape(const Shape& lambda, int M) {
  if (M <= 0 || lambda.size() != static_cast<size_t>(M))
    throw std::invalid_argument("shape length must equal M");
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw std::invalid_argument("negative part");
    if (i > 0 && lambda[i] < lambda[i - 1])
      throw std::invalid_argument("shape must be sorted non-decreasingly");
  }
}

// Row lengths top-down: the parts reversed, zero rows removed.
std::vector<long> row_lengths(const Shape& lambda) {
  std::vector<long> rows(lambda.rbegin(), lambda.rend());
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return rows;
}

void fill(const std::vector<long>& rows, int M, size_t r, size_t c,
          Tableau& work, std::vector<Tableau>& out) {
  if (r == rows.size()) {
    out.push_back(work);
    return;
  }
  if (c == static_cast<size_t>(rows[r])) {
    fill(rows, M, r + 1, 0, work, out);
    return;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, work.rows[r][c - 1]);                    // weak along row
  if (r > 0 && c < work.rows[r - 1].size())
    lo = std::max(lo, work.rows[r - 1][c] + 1);                         // strict down column
  for (int v = lo; v <= M; ++v) {
    work.rows[r][c] = v;
    fill(rows, M, r, c + 1, work, out);
  }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Shape& lambda, int M) {
  check_shape(lambda, M);
  std::vector<long> rows = row_lengths(lambda);
  Tableau work;
  for (long len : rows) work.rows.emplace_back(len, 0);
  std::vector<Tableau> out;
  fill(rows, M, 0, 0, work, out);
  return out;
}

std::uint64_t ssyt_count(const Shape& lambda, int M) {
  return enumerate_ssyt(lambda, M).size();
}

std::vector<long> weight_of(const Tableau& t, int M) {
  std::vector<long> w(M, 0);
  for (const auto& row : t.rows)
    for (int v : row) {
      if (v < 1 || v > M) throw std::invalid_argument("entry out of range");
      ++w[v - 1];
    }
  return w;
}

WeightMatrix weight_matrix(const Shape& lambda, int M) {
  WeightMatrix alpha;
  for (const Tableau& t : enumerate_ssyt(lambda, M)) alpha.push_back(weight_of(t, M));
  return alpha;
}

std::complex<double> schur_eval(const WeightMatrix& alpha,
                                const std::vector<std::complex<double>>& z) {
  std::complex<double> sum = 0.0;
  for (const auto& row : alpha) {
    if (row.size() != z.size()) throw std::invalid_argument("weight/z size mismatch");
    std::complex<double> term = 1.0;
    for (size_t m = 0; m < row.size(); ++m)
      term *= std::pow(z[m], static_cast<double>(row[m]));
    sum += term;
  }
  return sum;
}

std::vector<int> permute_weight_rows(const WeightMatrix& alpha,
                                     const std::vector<int>& tau) {
  const int M = static_cast<int>(tau.size());
  std::vector<int> tau_inv(M, -1);
  for (int m = 0; m < M; ++m) {
    if (tau[m] < 0 || tau[m] >= M || tau_inv[tau[m]] != -1)
      throw std::invalid_argument("tau is not a permutation");
    tau_inv[tau[m]] = m;
  }
  // Queue up the rows carrying each weight vector, then consume them in order
  // as the permuted vectors come looking for a partner.
  std::map<std::vector<long>, std::vector<int>> buckets;
  for (size_t l = 0; l < alpha.size(); ++l) buckets[alpha[l]].push_back(static_cast<int>(l));
  std::vector<int> gamma(alpha.size(), -1);
  for (size_t l = 0; l < alpha.size(); ++l) {
    if (alpha[l].size() != static_cast<size_t>(M))
      throw std::invalid_argument("weight width mismatch");
    std::vector<long> permuted(M);
    for (int m = 0; m < M; ++m) permuted[m] = alpha[l][tau_inv[m]];
    auto it = buckets.find(permuted);
    if (it == buckets.end() || it->second.empty())
      throw std::invalid_argument("weight multiset not permutation-closed");
    gamma[l] = it->second.front();
    it->second.erase(it->second.begin());
  }
  return gamma;
}

}  // namespace ambig::tableaux
