#include "entroqubit/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace entroqubit {

void check_dimension(int d) {
  if (d < kMinDim || d > kMaxDim) {
    throw std::invalid_argument("dimension " + std::to_string(d) +
                                " outside supported range [" +
                                std::to_string(kMinDim) + ", " +
                                std::to_string(kMaxDim) + "]");
  }
}

ProbVector::ProbVector(Eigen::VectorXd entries, const Tolerances& tol)
    : entries_(std::move(entries)) {
  check_dimension(static_cast<int>(entries_.size()));
  normalized_ = std::abs(entries_.sum() - 1.0) <= tol.sum;
  positive_ = (entries_.array() >= -tol.pos).all();
}

ProbVector ProbVector::uniform(int d) {
  check_dimension(d);
  return ProbVector(Eigen::VectorXd::Constant(d, 1.0 / d));
}

ProbVector ProbVector::basis(int d, int i) {
  check_dimension(d);
  if (i < 0 || i >= d) throw std::invalid_argument("basis index out of range");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
  v(i) = 1.0;
  return ProbVector(std::move(v));
}

double bistochastic_residual(const Eigen::MatrixXd& m) {
  double worst = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    worst = std::max(worst, std::abs(m.row(i).sum() - 1.0));
  for (int j = 0; j < m.cols(); ++j)
    worst = std::max(worst, std::abs(m.col(j).sum() - 1.0));
  return worst;
}

double orthogonality_residual(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd gram = m * m.transpose();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  return (gram - id).cwiseAbs().maxCoeff();
}

bool is_quasi_bistochastic(const Eigen::MatrixXd& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  return bistochastic_residual(m) <= tol.sum;
}

bool is_orthogonal(const Eigen::MatrixXd& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  return orthogonality_residual(m) <= tol.orth;
}

QuasiBistochasticMatrix::QuasiBistochasticMatrix(Eigen::MatrixXd entries,
                                                 const Tolerances& tol)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw std::invalid_argument("matrix not square");
  check_dimension(static_cast<int>(entries_.rows()));
  if (bistochastic_residual(entries_) > tol.sum)
    throw std::invalid_argument("row/column sums deviate from 1");
}

bool QuasiBistochasticMatrix::orthogonal(const Tolerances& tol) const {
  return orthogonality_residual(entries_) <= tol.orth;
}

QuasiBistochasticMatrix QuasiBistochasticMatrix::transposed() const {
  return QuasiBistochasticMatrix(entries_.transpose());
}

ProbVector apply(const QuasiBistochasticMatrix& s, const ProbVector& p,
                 const Tolerances& tol) {
  if (s.dim() != p.dim())
    throw std::invalid_argument("matrix/vector dimension mismatch");
  return ProbVector(s.entries() * p.entries(), tol);
}

PermutationMatrix::PermutationMatrix(std::vector<int> image)
    : image_(std::move(image)) {
  const int d = static_cast<int>(image_.size());
  check_dimension(d);
  std::vector<bool> seen(d, false);
  for (int v : image_) {
    if (v < 0 || v >= d || seen[v])
      throw std::invalid_argument("not a permutation of {0..d-1}");
    seen[v] = true;
  }
}

PermutationMatrix PermutationMatrix::identity(int d) {
  check_dimension(d);
  std::vector<int> image(d);
  for (int i = 0; i < d; ++i) image[i] = i;
  return PermutationMatrix(std::move(image));
}

PermutationMatrix PermutationMatrix::cycle(int d) {
  check_dimension(d);
  std::vector<int> image(d);
  for (int i = 0; i < d; ++i) image[i] = (i + 1) % d;
  return PermutationMatrix(std::move(image));
}

PermutationMatrix PermutationMatrix::swap_last_two(int d) {
  check_dimension(d);
  std::vector<int> image(d);
  for (int i = 0; i < d; ++i) image[i] = i;
  std::swap(image[d - 2], image[d - 1]);
  return PermutationMatrix(std::move(image));
}

Eigen::MatrixXd PermutationMatrix::matrix() const {
  const int d = dim();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int j = 0; j < d; ++j) m(image_[j], j) = 1.0;
  return m;
}

QuasiBistochasticMatrix PermutationMatrix::as_quasi_bistochastic() const {
  return QuasiBistochasticMatrix(matrix());
}

PermutationMatrix PermutationMatrix::composed_with(
    const PermutationMatrix& other) const {
  if (dim() != other.dim())
    throw std::invalid_argument("permutation dimension mismatch");
  std::vector<int> image(dim());
  for (int j = 0; j < dim(); ++j) image[j] = image_[other.image_[j]];
  return PermutationMatrix(std::move(image));
}

PermutationMatrix PermutationMatrix::power(int k) const {
  PermutationMatrix base = *this;
  if (k < 0) {
    std::vector<int> inverse(image_.size());
    for (int j = 0; j < dim(); ++j) inverse[image_[j]] = j;
    base = PermutationMatrix(std::move(inverse));
    k = -k;
  }
  PermutationMatrix result = identity(dim());
  for (int i = 0; i < k; ++i) result = base.composed_with(result);
  return result;
}

}  // namespace entroqubit
