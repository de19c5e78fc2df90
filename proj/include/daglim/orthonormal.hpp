#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <random>

#include "daglim/matcat.hpp"

namespace daglim {

inline Eigen::MatrixXcd to_eigen(const Morphism<Cnum>& f) {
  Eigen::MatrixXcd m(f.rows(), f.cols());
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c) m(r, c) = f.at(r, c).v;
  return m;
}

inline Morphism<Cnum> from_eigen(Space dom, Space cod, const Eigen::MatrixXcd& m) {
  Morphism<Cnum> f(std::move(dom), std::move(cod));
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c) f.at(r, c) = Cnum{m(r, c)};
  return f;
}

/// Rank cutoff rule: a singular value counts as zero when it is at most
/// eps times the largest singular value, or eps itself when every singular
/// value is already tiny.
inline double rank_cutoff(const Eigen::VectorXd& sv, double eps) {
  double top = sv.size() > 0 ? sv(0) : 0.0;
  return eps * (top > eps ? top : 1.0);
}

/// Orthonormal basis of the nullspace of A, as the columns of the result.
inline Eigen::MatrixXcd nullspace(const Eigen::MatrixXcd& a, double eps) {
  const Eigen::Index n = a.cols();
  if (n == 0) return Eigen::MatrixXcd(0, 0);
  if (a.rows() == 0) return Eigen::MatrixXcd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cutoff = rank_cutoff(sv, eps);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

/// Orthonormal basis of the column span of A.
inline Eigen::MatrixXcd orthonormal_range(const Eigen::MatrixXcd& a, double eps) {
  if (a.cols() == 0 || a.rows() == 0) return Eigen::MatrixXcd(a.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullU);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cutoff = rank_cutoff(sv, eps);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

/// Haar-style random unitary from a QR factorization of a complex Ginibre
/// sample, with the R diagonal phases normalized away.
inline Eigen::MatrixXcd random_unitary(int k, std::mt19937_64& rng) {
  if (k == 0) return Eigen::MatrixXcd(0, 0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) g(r, c) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < k; ++i) {
    std::complex<double> d = r(i, i);
    q.col(i) *= (std::abs(d) > 0) ? d / std::abs(d) : 1.0;
  }
  return q;
}

}  // namespace daglim
