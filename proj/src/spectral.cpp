#include <jacobi/spectral.hpp>

#include <algorithm>

namespace jacobi {

GramAnalysis analyze_gram(Mat gram, double rel_eps) {
  GramAnalysis out;
  // symmetrize away quadrature roundoff
  out.gram = 0.5 * (gram + gram.transpose());

  Eigen::SelfAdjointEigenSolver<Mat> es(out.gram);
  const int n = static_cast<int>(out.gram.rows());
  out.spectrum.resize(n);
  for (int i = 0; i < n; ++i) out.spectrum[i] = es.eigenvalues()[n - 1 - i];

  const double top = out.spectrum.empty() ? 0.0 : out.spectrum.front();
  if (top <= 0.0) {
    out.rank = 0;
    return out;
  }
  out.rank = static_cast<int>(std::count_if(
      out.spectrum.begin(), out.spectrum.end(),
      [&](double s) { return s > rel_eps * top; }));
  return out;
}

}  // namespace jacobi
