#include "coldrec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coldrec/errors.hpp"
#include "coldrec/kernels/kernels.hpp"
#include "coldrec/parallel.hpp"

namespace coldrec {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw data_error(msg);
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matmul: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  parallel_for(a.rows(), [&](std::size_t i) {
    double* ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik != 0.0) kernels::axpy(aik, b.row(k), ci, b.cols());
    }
  });
  return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), "matmul_nt: inner dimensions differ");
  Matrix c(a.rows(), b.rows());
  parallel_for(a.rows(), [&](std::size_t i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      c(i, j) = kernels::dot(a.row(i), b.row(j), a.cols());
    }
  });
  return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "matmul_tn: inner dimensions differ");
  Matrix c(a.cols(), b.cols());
  // Accumulate rank-1 contributions row by row; single-threaded on purpose,
  // every sample row touches the whole output.
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const double* ar = a.row(r);
    const double* br = b.row(r);
    for (std::size_t i = 0; i < a.cols(); ++i) {
      if (ar[i] != 0.0) kernels::axpy(ar[i], br, c.row(i), b.cols());
    }
  }
  return c;
}

Matrix gram(const Matrix& x) {
  const std::size_t q = x.cols();
  Matrix g(q, q);
  // Upper triangle via suffix axpy per sample row, mirrored afterwards.
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const double* xr = x.row(r);
    for (std::size_t i = 0; i < q; ++i) {
      if (xr[i] != 0.0) kernels::axpy(xr[i], xr + i, g.row(i) + i, q - i);
    }
  }
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i);
  return g;
}

std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
  require(a.cols() == x.size(), "matvec: dimension mismatch");
  std::vector<double> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = kernels::dot(a.row(i), x.data(), a.cols());
  return y;
}

std::vector<double> matvec_t(const Matrix& a, std::span<const double> x) {
  require(a.rows() == x.size(), "matvec_t: dimension mismatch");
  std::vector<double> y(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] != 0.0) kernels::axpy(x[i], a.row(i), y.data(), a.cols());
  }
  return y;
}

double frobenius_sq(const Matrix& a) { return kernels::sumsq(a.data().data(), a.data().size()); }

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

Cholesky::Cholesky(const Matrix& spd) : l_(spd.rows(), spd.cols()) {
  require(spd.rows() == spd.cols(), "cholesky: matrix must be square");
  const std::size_t n = spd.rows();
  for (std::size_t j = 0; j < n; ++j) {
    double d = spd(j, j) - kernels::sumsq(l_.row(j), j);
    if (!(d > 0.0)) {
      throw numeric_error(
          "cholesky: matrix is not positive definite (singular system; use a positive "
          "regularization)");
    }
    const double ljj = std::sqrt(d);
    l_(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      l_(i, j) = (spd(i, j) - kernels::dot(l_.row(i), l_.row(j), j)) / ljj;
    }
  }
}

void Cholesky::solve_in_place(std::span<double> rhs) const {
  const std::size_t n = l_.rows();
  require(rhs.size() == n, "cholesky solve: dimension mismatch");
  // L z = rhs
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = (rhs[i] - kernels::dot(l_.row(i), rhs.data(), i)) / l_(i, i);
  }
  // L^T x = z
  for (std::size_t ii = n; ii-- > 0;) {
    double acc = rhs[ii];
    for (std::size_t k = ii + 1; k < n; ++k) acc -= l_(k, ii) * rhs[k];
    rhs[ii] = acc / l_(ii, ii);
  }
}

Matrix Cholesky::solve(const Matrix& rhs) const {
  require(rhs.rows() == l_.rows(), "cholesky solve: dimension mismatch");
  Matrix x(rhs.rows(), rhs.cols());
  parallel_for(rhs.cols(), [&](std::size_t j) {
    std::vector<double> col(rhs.rows());
    for (std::size_t i = 0; i < rhs.rows(); ++i) col[i] = rhs(i, j);
    solve_in_place(col);
    for (std::size_t i = 0; i < rhs.rows(); ++i) x(i, j) = col[i];
  });
  return x;
}

Matrix ridge_solve(const RidgeProblem& problem) {
  require(problem.lambda >= 0.0, "ridge_solve: lambda must be nonnegative");
  require(problem.x.rows() == problem.y.rows(), "ridge_solve: X and Y row counts differ");
  Matrix g = gram(problem.x);
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) += problem.lambda;
  Matrix b = matmul_tn(problem.x, problem.y);
  return Cholesky(g).solve(b);
}

Moments sample_moments(const Matrix& r) {
  const std::size_t n = r.rows();
  const std::size_t m = r.cols();
  require(n >= 1, "sample_moments: need at least one row");
  Moments out;
  out.mu.assign(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) kernels::axpy(1.0, r.row(i), out.mu.data(), m);
  for (double& v : out.mu) v /= static_cast<double>(n);
  // sigma = R^T R / n - mu mu^T
  out.sigma = gram(r);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out.sigma(i, j) = out.sigma(i, j) / static_cast<double>(n) - out.mu[i] * out.mu[j];
    }
  }
  // Rounding can leave a tiny negative variance on constant columns.
  for (std::size_t i = 0; i < m; ++i) out.sigma(i, i) = std::max(out.sigma(i, i), 0.0);
  return out;
}

Matrix correlation_from_cov(const Moments& moments) {
  const std::size_t m = moments.sigma.rows();
  Matrix corr(m, m);
  std::vector<double> sd(m);
  for (std::size_t i = 0; i < m; ++i) sd[i] = std::sqrt(moments.sigma(i, i));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) {
        corr(i, j) = 1.0;
      } else if (sd[i] > 0.0 && sd[j] > 0.0) {
        corr(i, j) = moments.sigma(i, j) / (sd[i] * sd[j]);
      } else {
        corr(i, j) = 0.0;
      }
    }
  }
  return corr;
}

EigenSym sym_eig(const Matrix& g) {
  require(g.rows() == g.cols(), "sym_eig: matrix must be square");
  const std::size_t n = g.rows();
  const double scale = std::max(1.0, max_abs(g));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(g(i, j) - g(j, i)) > 1e-10 * scale)
        throw data_error("sym_eig: input is not symmetric");

  Matrix a = g;
  // Symmetrize exactly so rotations preserve symmetry bit for bit.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = v;
      a(j, i) = v;
    }
  Matrix v = Matrix::identity(n);

  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= 1e-14 * scale) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  // Sort ascending, carrying columns along; fix each eigenvector's sign so
  // the output does not depend on rotation order.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  EigenSym out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.values[j] = a(src, src);
    std::size_t pivot = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(v(i, src)) > best) {
        best = std::abs(v(i, src));
        pivot = i;
      }
    }
    const double sign = v(pivot, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = sign * v(i, src);
  }
  return out;
}

Matrix pca_project(const Matrix& x, std::size_t dims) {
  const std::size_t rows = x.rows();
  const std::size_t cols = x.cols();
  if (dims < 1 || dims > std::min(rows, cols))
    throw data_error("pca_project: dims out of range");

  Matrix centered = x;
  std::vector<double> mean(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) kernels::axpy(1.0, x.row(i), mean.data(), cols);
  for (double& v : mean) v /= static_cast<double>(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    double* r = centered.row(i);
    for (std::size_t j = 0; j < cols; ++j) r[j] -= mean[j];
  }

  Matrix cov = gram(centered);
  for (double& v : cov.data()) v /= static_cast<double>(rows);
  EigenSym eig = sym_eig(cov);

  // Top `dims` components, largest eigenvalue first.
  Matrix basis(cols, dims);
  for (std::size_t d = 0; d < dims; ++d) {
    const std::size_t src = cols - 1 - d;
    for (std::size_t i = 0; i < cols; ++i) basis(i, d) = eig.vectors(i, src);
  }

  Matrix projected = matmul(centered, basis);
  for (std::size_t i = 0; i < rows; ++i) {
    double* r = projected.row(i);
    const double norm = std::sqrt(kernels::sumsq(r, dims));
    if (norm > 0.0)
      for (std::size_t j = 0; j < dims; ++j) r[j] /= norm;
  }
  return projected;
}

}  // namespace coldrec
