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

#ifndef RQI_FIXED_POINT_HPP
#define RQI_FIXED_POINT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rqi/channel.hpp"
#include "rqi/defaults.hpp"

namespace rqi {

struct FixedPointReport {
  int rank = 0;        // of M - I
  int kernel_dim = 0;  // rank + kernel_dim = n^2
  /// Orthonormal basis of ker(M - I), one n^2 vector per column.
  ComplexMatrix kernel_basis;
  std::optional<ComplexMatrix> fixed_density;
  bool unique = false;
  /// |Phi(Q*) - Q*|_max, evaluated with apply_stinespring.
  double residual = 0.0;
  /// Second-largest eigenvalue modulus of M.
  double spectral_gap = 0.0;
  RealVector singular_values;  // of M - I, descending
  double threshold = 0.0;
};

/// Rank analysis of Phi - I and extraction of a fixed density matrix.
///
/// With a one-dimensional kernel the kernel vector is reshaped, reduced to
/// its Hermitian (or i times anti-Hermitian) part and trace-normalized. With
/// a larger kernel the reported state is the Cesaro limit started from I/n,
/// obtained from the spectral projector onto eigenvalue one.
FixedPointReport analyze(const ChannelSpec& spec, const RankPolicy& policy = {});

struct Trajectory {
  std::vector<ComplexMatrix> states;  // Q_0 ... Q_steps
  std::vector<double> deltas;         // |Q_{k+1} - Q_k|_max
  bool converged = false;
  std::int64_t steps = 0;

  const ComplexMatrix& final_state() const { return states.back(); }
};

Trajectory iterate(const ChannelSpec& spec, const ComplexMatrix& q0,
                   std::int64_t max_steps = defaults::kMaxSteps,
                   double eps = defaults::kIterateEps);

/// (1/steps) * sum_{k < steps} Phi^k(Q0), evaluated by binary doubling of
/// the superoperator so that very long averages stay cheap.
ComplexMatrix cesaro_fixed_point(const ChannelSpec& spec, const ComplexMatrix& q0,
                                 std::int64_t steps);
ComplexMatrix cesaro_fixed_point(const Superoperator& m, const ComplexMatrix& q0,
                                 std::int64_t steps);

/// Eigenvalue moduli of M sorted in descending order.
std::vector<double> eigenvalue_moduli(const Superoperator& m);

}  // namespace rqi

#endif  // RQI_FIXED_POINT_HPP
