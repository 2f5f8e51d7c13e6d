#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace ambig::tableaux {

// Shape is kept sorted non-decreasingly, one part per sensor; part i fills row
// M-i+1 of the left-justified diagram, so top-down row lengths are the parts
// reversed. Zero parts are allowed (empty rows).
using Shape = std::vector<long>;

// Shape attached to integer positions r (strictly increasing): lambda_i = r_i - (i-1).
Shape shape_of(const std::vector<long>& positions);

// Rows top-down (non-increasing lengths, zero rows dropped), 1-based entries.
struct Tableau {
  std::vector<std::vector<int>> rows;
};

// All semistandard fillings with entries in {1..M}: weakly increasing along
// rows, strictly increasing down columns. Deterministic output, ascending in
// the lexicographic order of the row-major flattened entries.
std::vector<Tableau> enumerate_ssyt(const Shape& lambda, int M);

std::uint64_t ssyt_count(const Shape& lambda, int M);

// Occurrence counts of each entry value; length M.
std::vector<long> weight_of(const Tableau& t, int M);

// Row l is weight_of(enumerate_ssyt(...)[l]). N x M.
using WeightMatrix = std::vector<std::vector<long>>;
WeightMatrix weight_matrix(const Shape& lambda, int M);

// Sum over rows of prod_m z_m^{alpha[row][m]}.
std::complex<double> schur_eval(const WeightMatrix& alpha,
                                const std::vector<std::complex<double>>& z);

// Given a permutation tau of {0..M-1} acting on entry values, returns the row
// permutation gamma with alpha[gamma[l]][m] == alpha[l][tau^{-1}[m]] for all l,
// m. Exists for every tau because the weight multiset is symmetric; ties are
// resolved by first-come order so the result is deterministic. Throws if the
// input matrix does not admit the permutation.
std::vector<int> permute_weight_rows(const WeightMatrix& alpha,
                                     const std::vector<int>& tau);

}  // namespace ambig::tableaux
