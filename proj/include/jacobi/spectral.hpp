#pragma once

#include <jacobi/types.hpp>

#include <vector>

namespace jacobi {

/// Spectrum and numerical rank of a symmetric positive semidefinite Gram
/// matrix: singular values above rel_eps * sigma_max count towards the rank,
/// a certified lower bound on the dimension of the spanned space.
struct GramAnalysis {
  Mat gram;
  std::vector<double> spectrum;  // descending
  int rank = 0;
};

GramAnalysis analyze_gram(Mat gram, double rel_eps);

}  // namespace jacobi
