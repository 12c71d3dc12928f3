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

#ifndef RQI_CIRCULANT_HPP
#define RQI_CIRCULANT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "rqi/channel.hpp"

namespace rqi {

/// Unimodular phases u_k = exp(i angle_k) together with their ratio margin
///   min |u_i conj(u_j) - u_k conj(u_l)|
/// over distinct ordered pairs (i != j), (k != l). A positive margin means
/// no two ratios of distinct phases coincide.
struct PhaseVector {
  int n = 0;
  std::vector<double> angles;
  std::vector<Complex> values;
  double margin = 0.0;

  std::size_t size() const { return values.size(); }

  /// Throws ValidationError unless angles.size() == n * n.
  static PhaseVector from_angles(int n, std::vector<double> angles);
  /// Throws ValidationError unless every value has modulus 1 within 1e-12.
  static PhaseVector from_values(int n, const std::vector<Complex>& values);
};

/// Brute-force O(m^4) ratio margin, OpenMP-parallel over the first pair.
double phase_margin(std::span<const Complex> u);
/// Serial reference of phase_margin.
double phase_margin_serial(std::span<const Complex> u);

/// n^2 phases whose ratio margin is at least min_margin. Seeded uniform
/// angles are tried first with rejection; when the number of phases makes
/// that hopeless, a seeded affine image of a greedy Sidon set on a cyclic
/// lattice is used instead. Throws ValidationError if min_margin cannot be
/// met.
PhaseVector generic_phases(int n, std::uint64_t seed, double min_margin);

/// Greedy (Mian-Chowla) Sidon set starting at 0: all pairwise differences
/// of distinct elements are distinct.
std::vector<std::int64_t> greedy_sidon_set(int size);

/// Phase-decorated cyclic shift: e_k (x) e_l -> u_{k*n+l} e_k' (x) e_l' where
/// (k', l') follows (k, l) in row-major cyclic order.
ComplexMatrix build_circulant(const PhaseVector& phases, int n);

ChannelSpec circulant_channel(const PhaseVector& phases,
                              const std::vector<double>& spectrum);

/// Coefficients of Phi(L_rs) = a_rs L_rs + b_rs L_(r+1)(s+1) (indices mod n):
///   a_rs = sum_{j < n-1} u_{r n + j} conj(u_{s n + j}) lambda_j
///   b_rs = u_{r n + n - 1} conj(u_{s n + n - 1}) lambda_{n-1}
struct AbCoefficients {
  ComplexMatrix a;
  ComplexMatrix b;
};

AbCoefficients ab_coefficients(const PhaseVector& phases, int n,
                               const std::vector<double>& lambda);

/// True iff |sum lambda_j z_j| equals sum lambda_j within 1e-12.
bool unimodular_sum_rigidity(std::span<const double> lambda,
                             std::span<const Complex> z);
/// sum lambda_j - |sum lambda_j z_j| (non-negative up to rounding).
double rigidity_deficit(std::span<const double> lambda,
                        std::span<const Complex> z);

}  // namespace rqi

#endif  // RQI_CIRCULANT_HPP
