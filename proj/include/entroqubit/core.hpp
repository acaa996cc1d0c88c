// Small fixed-dimension probability vectors, quasi-bistochastic matrices and
// permutation matrices, plus the validity predicates every other module builds on.
#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace entroqubit {

// Numerical tolerances used across the library. Defaults are tuned for
// double precision at dimensions d <= 16.
struct Tolerances {
  double sum = 1e-12;   // row/column/normalization sums
  double orth = 1e-10;  // ||M M^T - I||_max
  double pos = 1e-12;   // allowed slack below zero for "positive" entries
  double ent = 1e-9;    // entropy-conservation deviation
};

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 16;

// Thrown when a numerical result contradicts a structural classification that
// should hold for every valid input (a falsification surface, not a user error).
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument unless kMinDim <= d <= kMaxDim.
void check_dimension(int d);

// A length-d real vector treated as a (quasi-)probability distribution.
// `normalized` and `positive` are computed once at construction; entries are
// immutable afterwards.
class ProbVector {
 public:
  explicit ProbVector(Eigen::VectorXd entries, const Tolerances& tol = {});

  int dim() const { return static_cast<int>(entries_.size()); }
  const Eigen::VectorXd& entries() const { return entries_; }
  double operator[](int i) const { return entries_(i); }
  double sum() const { return entries_.sum(); }

  bool normalized() const { return normalized_; }
  bool positive() const { return positive_; }

  static ProbVector uniform(int d);
  static ProbVector basis(int d, int i);

 private:
  Eigen::VectorXd entries_;
  bool normalized_;
  bool positive_;
};

// max deviation of any row or column sum from 1
double bistochastic_residual(const Eigen::MatrixXd& m);
// ||M M^T - I||_max
double orthogonality_residual(const Eigen::MatrixXd& m);

bool is_quasi_bistochastic(const Eigen::MatrixXd& m, const Tolerances& tol = {});
bool is_orthogonal(const Eigen::MatrixXd& m, const Tolerances& tol = {});

// A real d x d matrix with unit row and column sums. Entries may be negative.
// Construction rejects matrices whose sums are off beyond tol.sum.
class QuasiBistochasticMatrix {
 public:
  explicit QuasiBistochasticMatrix(Eigen::MatrixXd entries,
                                   const Tolerances& tol = {});

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }

  bool orthogonal(const Tolerances& tol = {}) const;
  double determinant() const { return entries_.determinant(); }
  QuasiBistochasticMatrix transposed() const;

 private:
  Eigen::MatrixXd entries_;
};

// Evolve p by S (states are columns, dynamics acts on the left).
// Flags on the result are recomputed; unit column sums keep the total intact.
ProbVector apply(const QuasiBistochasticMatrix& s, const ProbVector& p,
                 const Tolerances& tol = {});

// Permutation of {0..d-1} stored as an index map j -> image[j].
// As a matrix, column j has its 1 in row image[j], so the mass at vertex j
// moves to vertex image[j] under apply().
class PermutationMatrix {
 public:
  explicit PermutationMatrix(std::vector<int> image);

  static PermutationMatrix identity(int d);
  // the one-step lattice hop i -> i+1 (mod d); for d=3 this is the 123->312 cycle
  static PermutationMatrix cycle(int d);
  // transposition of the last two indices; for d=3 this is 123->132
  static PermutationMatrix swap_last_two(int d);

  int dim() const { return static_cast<int>(image_.size()); }
  int image_of(int j) const { return image_[j]; }

  Eigen::MatrixXd matrix() const;
  QuasiBistochasticMatrix as_quasi_bistochastic() const;

  // (this o other): apply `other` first
  PermutationMatrix composed_with(const PermutationMatrix& other) const;
  PermutationMatrix power(int k) const;

 private:
  std::vector<int> image_;
};

}  // namespace entroqubit
