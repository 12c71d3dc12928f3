// Copyright 2026 The rqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rqi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rqi {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols();
  const Eigen::Index br = b.rows(), bc = b.cols();
  constexpr auto kMax = std::numeric_limits<Eigen::Index>::max();
  if ((br != 0 && ar > kMax / br) || (bc != 0 && ac > kMax / bc)) {
    throw ValidationError("kron: result dimension overflows");
  }
  ComplexMatrix out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i) {
    for (Eigen::Index j = 0; j < ac; ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace_env(const ComplexMatrix& t, int n) {
  if (n < 1) throw ValidationError("partial_trace_env: n must be positive");
  const Eigen::Index dim = static_cast<Eigen::Index>(n) * n;
  if (t.rows() != t.cols()) {
    throw ValidationError("partial_trace_env: matrix is not square");
  }
  if (t.rows() != dim) {
    std::ostringstream msg;
    msg << "partial_trace_env: expected " << dim << "x" << dim << " for n="
        << n << ", got " << t.rows() << "x" << t.cols();
    throw ValidationError(msg.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int s = 0; s < n; ++s) {
    for (int sp = 0; sp < n; ++sp) {
      Complex acc = 0.0;
      for (int e = 0; e < n; ++e) acc += t(s * n + e, sp * n + e);
      out(s, sp) = acc;
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

Complex trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("trace: matrix is not square");
  return a.trace();
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ValidationError("matmul: inner dimensions differ");
  }
  return a * b;
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("max_abs_diff: dimension mismatch");
  }
  return max_abs(a - b);
}

ComplexMatrix matrix_unit(int n, int r, int s) {
  ComplexMatrix l = ComplexMatrix::Zero(n, n);
  l(r, s) = 1.0;
  return l;
}

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    const Complex z = a.data()[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool is_unitary(const ComplexMatrix& u, double tol, std::string* diagnostic) {
  if (u.rows() != u.cols()) {
    if (diagnostic) *diagnostic = "matrix is not square";
    return false;
  }
  const double dev =
      max_abs(u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols()));
  if (dev > tol) {
    if (diagnostic) {
      std::ostringstream msg;
      msg << "max |UU* - I| = " << dev << " exceeds " << tol;
      *diagnostic = msg.str();
    }
    return false;
  }
  return true;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& q) {
  const ComplexMatrix h = 0.5 * (q + q.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigen-solver failed");
  }
  return solver.eigenvalues();
}

double min_hermitian_eigenvalue(const ComplexMatrix& q) {
  return hermitian_eigenvalues(q).minCoeff();
}

bool is_density(const ComplexMatrix& q, double tol, std::string* diagnostic) {
  auto fail = [&](const std::string& why) {
    if (diagnostic) *diagnostic = why;
    return false;
  };
  if (q.rows() != q.cols() || q.rows() == 0) return fail("matrix is not square");
  if (!all_finite(q)) return fail("non-finite entries");
  const double asym = max_abs(q - q.adjoint());
  if (asym > tol) {
    std::ostringstream msg;
    msg << "not Hermitian: max |Q - Q*| = " << asym;
    return fail(msg.str());
  }
  const double lo = min_hermitian_eigenvalue(q);
  if (lo < -tol) {
    std::ostringstream msg;
    msg << "negative eigenvalue " << lo;
    return fail(msg.str());
  }
  const double tr_dev = std::abs(q.trace() - Complex(1.0, 0.0));
  if (tr_dev > tol) {
    std::ostringstream msg;
    msg << "trace deviates from 1 by " << tr_dev;
    return fail(msg.str());
  }
  return true;
}

ComplexMatrix random_complex(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Column-major fill keeps the draw order independent of Eigen internals.
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix haar_unitary(int n, Rng& rng) {
  if (n < 1) throw ValidationError("haar_unitary: n must be positive");
  const ComplexMatrix g = random_complex(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mod = std::abs(r(j, j));
    // Zero diagonal has probability zero; leave the column untouched then.
    if (mod > 0.0) q.col(j) *= r(j, j) / mod;
  }
  return q;
}

ComplexMatrix haar_unitary(int n, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(n, rng);
}

ComplexMatrix random_density(int n, Rng& rng) {
  const ComplexMatrix g = random_complex(n, n, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

ComplexVector vec(const ComplexMatrix& a) {
  ComplexVector v(a.size());
  const Eigen::Index cols = a.cols();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < cols; ++k) v(i * cols + k) = a(i, k);
  }
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, int n) {
  if (v.size() != static_cast<Eigen::Index>(n) * n) {
    throw ValidationError("unvec: vector length is not n^2");
  }
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) a(i, k) = v(i * n + k);
  }
  return a;
}

double RankPolicy::threshold(Eigen::Index rows, Eigen::Index cols,
                             double sigma_max) const {
  if (absolute_tol) return *absolute_tol;
  return static_cast<double>(std::max(rows, cols)) *
         std::numeric_limits<double>::epsilon() * std::max(sigma_max, scale_floor);
}

RankResult rank_and_nullspace(const ComplexMatrix& m, const RankPolicy& policy) {
  if (m.rows() != m.cols()) {
    throw ValidationError("rank_and_nullspace: matrix is not square");
  }
  if (!all_finite(m)) {
    throw NumericalError("rank_and_nullspace: non-finite input");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("rank_and_nullspace: SVD did not converge");
  }
  RankResult out;
  out.singular_values = svd.singularValues();
  const double smax =
      out.singular_values.size() > 0 ? out.singular_values(0) : 0.0;
  out.threshold = policy.threshold(m.rows(), m.cols(), smax);
  int rank = 0;
  for (Eigen::Index k = 0; k < out.singular_values.size(); ++k) {
    if (out.singular_values(k) > out.threshold) ++rank;
  }
  out.rank = rank;
  out.kernel = svd.matrixV().rightCols(m.cols() - rank);
  return out;
}

}  // namespace rqi
