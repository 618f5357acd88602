#ifndef NIREL_MATRIX_CORE_HPP
#define NIREL_MATRIX_CORE_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "nirel/errors.hpp"

namespace nirel {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matd = Mat<double>;
using Vecd = Vec<double>;

/// Comparison threshold: |a_ij - b_ij| <= abs_eps + rel_eps * max(||a||, ||b||).
struct Tolerance {
  double abs_eps = 1e-10;
  double rel_eps = 1e-10;

  static Tolerance make(double abs_eps, double rel_eps) {
    if (!(abs_eps >= 0.0) || !(rel_eps >= 0.0))
      throw UsageError("tolerance components must be non-negative");
    if (abs_eps == 0.0 && rel_eps == 0.0)
      throw UsageError("tolerance must have a positive component");
    return Tolerance{abs_eps, rel_eps};
  }
  static Tolerance absolute(double eps) { return make(eps, 0.0); }
};

inline constexpr Tolerance kDefaultTolerance{1e-10, 1e-10};

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw UsageError(std::string(what) + ": expected a non-empty square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

template <typename DA, typename DB>
void require_same_dim(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                      const char* what) {
  require_square(a, what);
  require_square(b, what);
  if (a.rows() != b.rows())
    throw UsageError(std::string(what) + ": dimension mismatch " + std::to_string(a.rows()) +
                     " vs " + std::to_string(b.rows()));
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  return a.array().isFinite().all();
}

/// Builds a dim x dim matrix from row-major entries.
template <typename Scalar = double>
Mat<Scalar> make_mat(Eigen::Index dim, std::span<const Scalar> entries) {
  if (dim <= 0) throw UsageError("make_mat: dim must be positive");
  if (static_cast<Eigen::Index>(entries.size()) != dim * dim)
    throw UsageError("make_mat: expected " + std::to_string(dim * dim) + " entries, got " +
                     std::to_string(entries.size()));
  Mat<Scalar> out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) out(i, j) = entries[i * dim + j];
  if (!all_finite(out)) throw UsageError("make_mat: entries must be finite");
  return out;
}

/// Induced infinity norm (max absolute row sum).
template <typename Derived>
typename Derived::RealScalar inf_norm(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0;
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

template <typename DA, typename DB>
typename DA::RealScalar max_abs_diff(const Eigen::MatrixBase<DA>& a,
                                     const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw UsageError("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0;
  return (a - b).cwiseAbs().maxCoeff();
}

template <typename Scalar>
Mat<Scalar> mat_mul(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  require_same_dim(a, b, "mat_mul");
  return a * b;
}

template <typename DA, typename DB>
bool mat_close(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
               const Tolerance& tol = kDefaultTolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw UsageError("mat_close: dimension mismatch");
  using Real = typename DA::RealScalar;
  const Real scale = std::max(inf_norm(a), inf_norm(b));
  return max_abs_diff(a, b) <= Real(tol.abs_eps) + Real(tol.rel_eps) * scale;
}

/// Residual-to-threshold ratio used by membership reports: <= 1 means "close".
template <typename DA, typename DB>
double closeness_ratio(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                       const Tolerance& tol) {
  const double scale = static_cast<double>(std::max(inf_norm(a), inf_norm(b)));
  const double diff = static_cast<double>(max_abs_diff(a, b));
  return diff / (tol.abs_eps + tol.rel_eps * scale);
}

template <typename Scalar>
Scalar determinant(const Mat<Scalar>& a) {
  require_square(a, "determinant");
  return a.partialPivLu().determinant();
}

/// Partial-pivot LU inverse. Singular when some pivot is below 1e-13 * ||a||_inf.
template <typename Scalar>
Mat<Scalar> inverse(const Mat<Scalar>& a) {
  require_square(a, "inverse");
  const Eigen::PartialPivLU<Mat<Scalar>> lu(a);
  const Scalar threshold = Scalar(1e-13) * inf_norm(a);
  const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
  if (!(pivots.minCoeff() > threshold))
    throw NumericError("inverse: matrix is singular to working precision");
  return lu.inverse();
}

/// exp(x) by scaling and squaring of the truncated Taylor series.
/// The series stops once a term's norm drops below eps * 1e-2.
template <typename Scalar>
Mat<Scalar> mat_exp(const Mat<Scalar>& x, double eps = 1e-12) {
  require_square(x, "mat_exp");
  if (!all_finite(x)) throw UsageError("mat_exp: non-finite input");
  if (!(eps > 0.0)) throw UsageError("mat_exp: eps must be positive");
  constexpr int kMaxTerms = 200;

  const Scalar norm = inf_norm(x);
  int squarings = 0;
  if (norm > Scalar(0.5))
    squarings = static_cast<int>(std::ceil(std::log2(static_cast<double>(norm) / 0.5)));
  const Mat<Scalar> y = x / std::ldexp(Scalar(1), squarings);

  const Eigen::Index d = x.rows();
  Mat<Scalar> sum = Mat<Scalar>::Identity(d, d);
  Mat<Scalar> term = Mat<Scalar>::Identity(d, d);
  const Scalar stop = Scalar(eps * 1e-2);
  bool converged = false;
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = term * y / Scalar(k);
    sum += term;
    if (inf_norm(term) < stop) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericError("mat_exp: series did not converge");
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// Principal square root by the Denman-Beavers iteration.
template <typename Scalar>
Mat<Scalar> mat_sqrt(const Mat<Scalar>& a, double eps = 1e-14) {
  require_square(a, "mat_sqrt");
  const Eigen::Index d = a.rows();
  Mat<Scalar> y = a;
  Mat<Scalar> z = Mat<Scalar>::Identity(d, d);
  for (int it = 0; it < 100; ++it) {
    const Mat<Scalar> y_inv = inverse(y);
    const Mat<Scalar> z_inv = inverse(z);
    const Mat<Scalar> y_next = (y + z_inv) / Scalar(2);
    z = (z + y_inv) / Scalar(2);
    const Scalar change = inf_norm(Mat<Scalar>(y_next - y));
    y = y_next;
    if (change <= Scalar(eps) * std::max(Scalar(1), inf_norm(y))) return y;
  }
  throw NumericError("mat_sqrt: iteration did not converge");
}

/// Principal logarithm by inverse scaling and squaring. Requires no
/// eigenvalues on the closed negative real axis.
template <typename Scalar>
Mat<Scalar> mat_log(const Mat<Scalar>& a, double eps = 1e-12) {
  require_square(a, "mat_log");
  if (!all_finite(a)) throw UsageError("mat_log: non-finite input");
  const Eigen::Index d = a.rows();
  const Mat<Scalar> id = Mat<Scalar>::Identity(d, d);

  Mat<Scalar> r = a;
  int roots = 0;
  while (inf_norm(Mat<Scalar>(r - id)) > Scalar(0.25)) {
    if (++roots > 60) throw NumericError("mat_log: too many square roots");
    r = mat_sqrt(r);
  }

  // log(I + x) = x - x^2/2 + x^3/3 - ...
  const Mat<Scalar> x = r - id;
  Mat<Scalar> power = x;
  Mat<Scalar> sum = x;
  const Scalar stop = Scalar(eps * 1e-2);
  bool converged = inf_norm(x) < stop;
  for (int k = 2; k <= 400 && !converged; ++k) {
    power = power * x;
    const Mat<Scalar> term = power / Scalar(k);
    if (k % 2 == 0)
      sum -= term;
    else
      sum += term;
    converged = inf_norm(term) < stop;
  }
  if (!converged) throw NumericError("mat_log: series did not converge");
  return std::ldexp(Scalar(1), roots) * sum;
}

/// Block-diagonal embedding helper used by several realizations.
template <typename Scalar>
Mat<Scalar> block_diag(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> out = Mat<Scalar>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace nirel

#endif  // NIREL_MATRIX_CORE_HPP
