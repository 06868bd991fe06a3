#include "rigid/random.hpp"

namespace rigid::random {

Mat gaussian(Eigen::Index rows, Eigen::Index cols, Field field, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Mat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = nd(rng);
      const double im = field == Field::Complex ? nd(rng) : 0.0;
      m(i, j) = cplx(re, im);
    }
  return m;
}

Vec gaussian_vector(Eigen::Index n, Field field, std::mt19937_64& rng) {
  return gaussian(n, 1, field, rng).col(0);
}

Mat unitary(int n, Field field, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Mat> qr(gaussian(n, n, field, rng));
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR();
  // Fix column phases so the distribution is Haar.
  for (int j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Mat skew_hermitian(int n, double norm, std::mt19937_64& rng) {
  Mat g = gaussian(n, n, Field::Complex, rng);
  Mat x = (g - g.adjoint()) / 2.0;
  const double s = matnum::spectral_norm(x);
  return s > 0 ? Mat(x * (norm / s)) : x;
}

double uniform(double lo, double hi, std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace rigid::random
