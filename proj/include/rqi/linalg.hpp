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

#ifndef RQI_LINALG_HPP
#define RQI_LINALG_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rqi {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Seeded generator passed explicitly to every sampling routine.
using Rng = std::mt19937_64;

// Error categories. The CLI maps them onto exit codes 2, 3 and 4.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/*
 * Index convention.
 *
 * The product basis of V (x) V is ordered with the second (environment)
 * factor fastest: e_s (x) e_e sits at position s * n + e (zero based).
 * Under this ordering kron() is the standard Kronecker product and
 * partial_trace_env() sums the diagonal of every n x n block.
 */

/// Standard Kronecker product, (A (x) B)(a*rB + b, c*cB + d) = A(a,c) B(b,d).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace over the second factor of an n^2 x n^2 matrix.
ComplexMatrix partial_trace_env(const ComplexMatrix& t, int n);

ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entry modulus.
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix unit L_rs: one at (r, s), zero elsewhere.
ComplexMatrix matrix_unit(int n, int r, int s);

bool all_finite(const ComplexMatrix& a);

bool is_unitary(const ComplexMatrix& u, double tol,
                std::string* diagnostic = nullptr);

/// Hermitian within tol, eigenvalues >= -tol and |Tr Q - 1| <= tol.
bool is_density(const ComplexMatrix& q, double tol,
                std::string* diagnostic = nullptr);

/// Eigenvalues of the Hermitian part (Q + Q*)/2, ascending.
RealVector hermitian_eigenvalues(const ComplexMatrix& q);
double min_hermitian_eigenvalue(const ComplexMatrix& q);

/// Haar-distributed unitary: complex Ginibre matrix, QR, phase fix of R's
/// diagonal.
ComplexMatrix haar_unitary(int n, Rng& rng);
ComplexMatrix haar_unitary(int n, std::uint64_t seed);

/// Random density matrix G G* / Tr(G G*) with G complex Ginibre.
ComplexMatrix random_density(int n, Rng& rng);
ComplexMatrix random_complex(int rows, int cols, Rng& rng);

/// Row-major flattening (i, k) -> i * n + k.
ComplexVector vec(const ComplexMatrix& a);
ComplexMatrix unvec(const ComplexVector& v, int n);

/// Numerical rank policy. Without an absolute tolerance the threshold is
/// max(rows, cols) * eps * max(sigma_max, scale_floor). The floor lets a
/// caller account for rounding that is set by a larger matrix than the one
/// being ranked, as for M - I when M has norm at least one.
struct RankPolicy {
  std::optional<double> absolute_tol;
  double scale_floor = 0.0;

  double threshold(Eigen::Index rows, Eigen::Index cols,
                   double sigma_max) const;
};

struct RankResult {
  int rank = 0;
  double threshold = 0.0;
  RealVector singular_values;  // descending
  /// Orthonormal basis of the numerical nullspace, one vector per column.
  ComplexMatrix kernel;

  int kernel_dim() const { return static_cast<int>(kernel.cols()); }
};

RankResult rank_and_nullspace(const ComplexMatrix& m,
                              const RankPolicy& policy = {});

}  // namespace rqi

#endif  // RQI_LINALG_HPP
