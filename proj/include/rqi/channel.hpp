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

#ifndef RQI_CHANNEL_HPP
#define RQI_CHANNEL_HPP

#include <optional>
#include <vector>

#include "rqi/linalg.hpp"

namespace rqi {

/// The repeated-interaction channel Q -> Tr_2(U (Q (x) beta) U*).
///
/// A ChannelSpec is validated on construction and immutable afterwards.
/// Besides the user-supplied (U, beta) it keeps a working representation in
/// the eigenbasis of beta: beta = W diag(lambda) W*, U_w = (I (x) W)* U (I (x) W).
/// When beta is already diagonal W is the identity and the order of lambda
/// follows the diagonal of beta.
class ChannelSpec {
 public:
  /// Throws ValidationError unless U is unitary and beta is a strictly
  /// positive density matrix, both at `tol`.
  ChannelSpec(ComplexMatrix u, ComplexMatrix beta, double tol = 1e-10);

  /// Diagonal environment state diag(spectrum).
  static ChannelSpec from_spectrum(ComplexMatrix u,
                                   const std::vector<double>& spectrum,
                                   double tol = 1e-10);

  int n() const { return n_; }
  const ComplexMatrix& u() const { return u_; }
  const ComplexMatrix& beta() const { return beta_; }

  /// Eigenvalues of beta in working-basis order.
  const std::vector<double>& spectrum() const { return lambda_; }
  /// Present when beta was diagonal on input.
  const std::optional<std::vector<double>>& beta_spectrum() const {
    return beta_spectrum_;
  }
  bool beta_is_diagonal() const { return beta_spectrum_.has_value(); }

  const ComplexMatrix& working_u() const { return u_work_; }
  const ComplexMatrix& beta_eigenbasis() const { return w_; }

 private:
  int n_ = 0;
  ComplexMatrix u_;
  ComplexMatrix beta_;
  std::vector<double> lambda_;
  std::optional<std::vector<double>> beta_spectrum_;
  ComplexMatrix u_work_;
  ComplexMatrix w_;
};

/// Kraus operators K_ij = sqrt(lambda_j) U^{ij}, stored at index i * n + j.
/// U^{ij} is the system block with environment row i and column j.
struct KrausSet {
  int n = 0;
  std::vector<ComplexMatrix> operators;

  const ComplexMatrix& at(int i, int j) const { return operators[i * n + j]; }
  /// Sum of K* K.
  ComplexMatrix completeness() const;
};

/// Matrix of the channel on row-major vectorized n x n matrices: column
/// r * n + s holds the coordinates of Phi(L_rs).
struct Superoperator {
  int n = 0;
  ComplexMatrix matrix;

  static int index(int n, int i, int k) { return i * n + k; }
  ComplexMatrix apply(const ComplexMatrix& q) const;
};

/// The n x n block U^{ij} of an n^2 x n^2 operator.
ComplexMatrix environment_block(const ComplexMatrix& u, int n, int i, int j);

/// Tr_2(U (Q (x) beta) U*) evaluated literally with the user's (U, beta).
ComplexMatrix apply_stinespring(const ChannelSpec& spec, const ComplexMatrix& q);

KrausSet kraus_set(const ChannelSpec& spec);
ComplexMatrix apply_kraus(const KrausSet& kraus, const ComplexMatrix& q);

/// Column-by-column construction from apply_stinespring. Valid for any beta.
Superoperator superoperator(const ChannelSpec& spec);

/// Entry formula
///   M[(a,k),(r,s)] = sum_{j,l} lambda_j u_{a,l,r,j} conj(u_{k,l,s,j})
/// with u_{i,j,k,l} = U_w(i*n + j, k*n + l), evaluated on the working
/// representation. Used as an independent cross-check of superoperator().
Superoperator superoperator_from_coordinates(const ChannelSpec& spec);

}  // namespace rqi

#endif  // RQI_CHANNEL_HPP
