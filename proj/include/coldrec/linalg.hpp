#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coldrec/matrix.hpp"

namespace coldrec {

// --- dense products ------------------------------------------------------

Matrix matmul(const Matrix& a, const Matrix& b);     // a(p,k) * b(k,q)
Matrix matmul_nt(const Matrix& a, const Matrix& b);  // a(p,k) * b(q,k)^T
Matrix matmul_tn(const Matrix& a, const Matrix& b);  // a(k,p)^T * b(k,q)
Matrix gram(const Matrix& x);                        // x^T x

std::vector<double> matvec(const Matrix& a, std::span<const double> x);    // a * x
std::vector<double> matvec_t(const Matrix& a, std::span<const double> x);  // a^T * x

double frobenius_sq(const Matrix& a);
double max_abs(const Matrix& a);

// --- factorizations ------------------------------------------------------

// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
// Throws numeric_error when a pivot is not strictly positive.
class Cholesky {
 public:
  explicit Cholesky(const Matrix& spd);
  // Solves (L L^T) x = rhs for one right-hand side, in place.
  void solve_in_place(std::span<double> rhs) const;
  // Solves for a matrix of right-hand sides; returns X with spd * X = rhs.
  Matrix solve(const Matrix& rhs) const;

 private:
  Matrix l_;
};

struct RidgeProblem {
  Matrix x;       // p x q design
  Matrix y;       // p x t targets
  double lambda;  // >= 0
};

// Minimizer of |Y - X W|_F^2 + lambda |W|_F^2 via the normal equations,
// solved with a Cholesky factorization of (X^T X + lambda I).
Matrix ridge_solve(const RidgeProblem& problem);

struct Moments {
  std::vector<double> mu;  // column means
  Matrix sigma;            // covariance, 1/n normalization
};

// Column mean vector and 1/n-normalized covariance of a sample matrix.
Moments sample_moments(const Matrix& r);

// Correlation matrix; indices with zero variance get 0 off-diagonal and 1 on
// the diagonal.
Matrix correlation_from_cov(const Moments& moments);

struct EigenSym {
  std::vector<double> values;  // ascending
  Matrix vectors;              // orthonormal, eigenvector j in column j
};

// Cyclic Jacobi eigendecomposition of a symmetric matrix. The input must be
// symmetric within 1e-10 relative to its magnitude.
EigenSym sym_eig(const Matrix& g);

// Centers rows, projects onto the top `dims` principal components, then
// scales each row to unit Euclidean norm (zero rows stay zero).
Matrix pca_project(const Matrix& x, std::size_t dims);

}  // namespace coldrec
