#include "gw/float_linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>

namespace gw {

namespace {

Eigen::MatrixXd to_eigen(const Matrix<double>& a, std::size_t extra_cols = 0) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(a.rows()),
                                            static_cast<Eigen::Index>(a.cols() + extra_cols));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a(r, c);
  }
  return m;
}

std::size_t count_above(const Eigen::VectorXd& sv, double threshold) {
  return static_cast<std::size_t>((sv.array() > threshold).count());
}

double threshold_for(const Eigen::VectorXd& sv, double tol) {
  const double smax = sv.size() > 0 ? sv.maxCoeff() : 0.0;
  return std::max(tol * smax, tol);
}

}  // namespace

FloatAugmentedRank svd_solve(const Matrix<double>& a, const std::vector<double>& b, double tol) {
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidInput, "rhs length does not match row count");
  FloatAugmentedRank out;
  Eigen::MatrixXd ab = to_eigen(a, 1);
  for (std::size_t r = 0; r < b.size(); ++r) ab(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(a.cols())) = b[r];

  Eigen::JacobiSVD<Eigen::MatrixXd> svd_ab(ab);
  const double threshold = threshold_for(svd_ab.singularValues(), tol);
  out.rank_ab = count_above(svd_ab.singularValues(), threshold);

  if (a.cols() == 0) {
    out.rank_a = 0;
  } else {
    const Eigen::MatrixXd am = ab.leftCols(static_cast<Eigen::Index>(a.cols()));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd_a(am, Eigen::ComputeThinU | Eigen::ComputeThinV);
    out.rank_a = count_above(svd_a.singularValues(), threshold);
    if (out.rank_a == out.rank_ab) {
      svd_a.setThreshold(threshold / std::max(svd_a.singularValues().maxCoeff(), threshold));
      const Eigen::VectorXd x = svd_a.solve(ab.col(static_cast<Eigen::Index>(a.cols())));
      out.solution = std::vector<double>(x.data(), x.data() + x.size());
    }
    return out;
  }
  if (out.rank_a == out.rank_ab) out.solution = std::vector<double>{};
  return out;
}

std::size_t svd_rank(const Matrix<double>& a, double tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a));
  return count_above(svd.singularValues(), threshold_for(svd.singularValues(), tol));
}

std::vector<double> min_norm_solve(const Matrix<double>& j, const std::vector<double>& r, double rel_tol) {
  Eigen::MatrixXd m = to_eigen(j);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = r[i];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(rel_tol);
  const Eigen::VectorXd x = svd.solve(rhs);
  return std::vector<double>(x.data(), x.data() + x.size());
}

}  // namespace gw
