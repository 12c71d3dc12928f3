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

#ifndef RQI_DEFAULTS_HPP
#define RQI_DEFAULTS_HPP

#include <cstdint>
#include <vector>

/// Every numerical default used by the library and the CLI lives here.
namespace rqi::defaults {

/// Unitarity of U and density of beta when a ChannelSpec is built.
inline constexpr double kSpecTol = 1e-10;
/// Density check applied to user states and extracted fixed points.
inline constexpr double kDensityTol = 1e-8;
/// Maximum residual |Phi(Q) - Q|_max accepted for a reported fixed point.
inline constexpr double kResidualTol = 1e-9;

/// Iteration stops once |Q_{k+1} - Q_k|_max <= eps.
inline constexpr double kIterateEps = 1e-10;
inline constexpr std::int64_t kMaxSteps = 100000;
/// Steps of the Cesaro average used for non-unique fixed points when the
/// spectral projector is unavailable. Evaluated by binary doubling.
inline constexpr std::int64_t kCesaroSteps = std::int64_t{1} << 40;

/// Phase-ratio distinctness margin for n <= 6; scaled by (36/m)^2 beyond.
inline constexpr double kMinMargin = 1e-3;
/// Uniform-angle attempts before generic_phases switches to the Sidon lattice.
inline constexpr int kUniformPhaseAttempts = 64;

/// Relative tolerance of the two-dimensional determinants.
inline constexpr double kDim2Tol = 1e-9;
/// Cross-validation of the n = 2 coefficients against apply_stinespring.
inline constexpr double kDim2CrossCheckAbort = 1e-9;

/// Descending, strictly positive environment spectrum used when none is given.
std::vector<double> environment_spectrum(int n);

double min_margin(int n);

}  // namespace rqi::defaults

#endif  // RQI_DEFAULTS_HPP
