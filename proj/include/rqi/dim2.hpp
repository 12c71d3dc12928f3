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

#ifndef RQI_DIM2_HPP
#define RQI_DIM2_HPP

#include <array>
#include <optional>

#include "rqi/channel.hpp"
#include "rqi/defaults.hpp"

namespace rqi::dim2 {

/// Qubit states are parametrized as Q = [[q11, a + ib], [a - ib, 1 - q11]].
struct StateParams {
  double q11 = 0.0;
  double a = 0.0;
  double b = 0.0;

  static StateParams of(const ComplexMatrix& q);
  ComplexMatrix to_matrix() const;
};

/// Coefficients of the affine action on (q11, a, b):
///   q11' = alpha1 q11 + beta1 + (a11 + a12) a + i (a11 - a12) b
///   a' + ib' = alpha2 q11 + beta2 + (a21 + a22) a + i (a21 - a22) b
/// Writing U^{ij} for the system block of U with environment row i and
/// column j, and p_j for the environment weights, every coefficient is a sum
/// over (i, j) of p_j times one of
///   alpha1: |U_11|^2 - |U_12|^2      beta1: |U_12|^2
///   alpha2: U_11 ~U_21 - U_12 ~U_22   beta2: U_12 ~U_22
///   a11: U_11 ~U_12   a12: U_12 ~U_11   a21: U_11 ~U_22   a22: U_12 ~U_21
/// where ~ denotes complex conjugation.
struct Coefficients {
  double alpha1 = 0.0;
  double beta1 = 0.0;
  Complex alpha2;
  Complex beta2;
  Complex a11, a12, a21, a22;
  double p1 = 0.0;
  double p2 = 0.0;
  /// Largest deviation from apply_stinespring observed while validating.
  double cross_check_error = 0.0;

  /// |alpha1| < 1 and 0 < beta1 < 1. Generic, but false for e.g. U = I.
  bool strict_bounds_hold() const;
  double largest_magnitude() const;
};

/// Throws ValidationError for n != 2 or non-diagonal beta, NumericalError if
/// the coefficients disagree with apply_stinespring by more than 1e-9 or
/// violate the reality constraints.
Coefficients coefficients(const ChannelSpec& spec);

std::array<double, 3> g_map(const Coefficients& c, double q11, double a, double b);

/// K = [[a11 + a12, i (a11 - a12)], [a21 + a22 - 1, i (a21 - a22 - 1)]].
ComplexMatrix k_matrix(const Coefficients& c);

struct UniquenessCertificate {
  Complex det_k;
  /// (alpha1 - 1) / alpha2; absent when |alpha2| <= tol.
  std::optional<Complex> z0;
  /// Determinant of the real 2x2 system left after eliminating q11.
  double det_real = 0.0;
  /// Determinant of the full real 3x3 fixed-point system.
  double det_system = 0.0;
  double tol = 0.0;
  bool unique = false;
};

/// unique requires |det_real| > tol together with |det K| > tol. The det K
/// condition is waived when the first row of K vanishes or alpha2 = 0, where
/// it carries no information, and when alpha1 = 1 the full 3x3 determinant
/// decides. `tol` is relative to the largest coefficient magnitude. Throws
/// ValidationError if tol <= 0.
UniquenessCertificate uniqueness_certificate(const Coefficients& c,
                                             double tol = defaults::kDim2Tol);

/// Real 3x3 system for the fixed point of g_map: rows are the q11 equation
/// and the real and imaginary parts of the off-diagonal equation.
struct FixedPointSystem {
  Eigen::Matrix3d matrix;
  Eigen::Vector3d rhs;
};
FixedPointSystem fixed_point_system(const Coefficients& c);

/// Solves g_map(q) = q. Throws ValidationError unless the certificate
/// reports uniqueness; NumericalError if the system is singular anyway.
ComplexMatrix closed_form_fixed_point(const Coefficients& c,
                                      double tol = defaults::kDim2Tol);

/// U = cos(theta) I + i sin(theta) sigma_x (x) sigma_x, beta = diag(p1, 1 - p1).
ChannelSpec sigma_x_channel(double theta, double p1);

}  // namespace rqi::dim2

#endif  // RQI_DIM2_HPP
