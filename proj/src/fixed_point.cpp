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

#include "rqi/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rqi {

namespace {

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  return 0.5 * (a + a.adjoint());
}

// A one-dimensional kernel of a Hermiticity-preserving map is spanned by a
// Hermitian matrix up to a phase, so either the Hermitian part or i times
// the anti-Hermitian part carries it.
ComplexMatrix density_from_kernel_vector(const ComplexVector& v, int n) {
  const ComplexMatrix a = unvec(v, n);
  const ComplexMatrix h = hermitian_part(a);
  const ComplexMatrix k = (a - a.adjoint()) / Complex(0.0, 2.0);
  ComplexMatrix x = max_abs(h) >= max_abs(k) ? h : k;
  const double tr = x.trace().real();
  if (std::abs(tr) <= 1e-12 * std::max(1.0, max_abs(x))) {
    throw NumericalError("kernel vector has vanishing trace");
  }
  x /= tr;
  return hermitian_part(x);
}

// Spectral projector onto eigenvalue one, V (W* V)^{-1} W*. Peripheral
// eigenvalues of a channel are semisimple, so this is the Cesaro limit.
std::optional<ComplexMatrix> cesaro_limit_projector(const ComplexMatrix& right,
                                                    const ComplexMatrix& left) {
  if (right.cols() != left.cols() || right.cols() == 0) return std::nullopt;
  const ComplexMatrix gram = left.adjoint() * right;
  Eigen::JacobiSVD<ComplexMatrix> svd(gram);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) < 1e-8 * sv(0)) return std::nullopt;
  return right * gram.inverse() * left.adjoint();
}

}  // namespace

std::vector<double> eigenvalue_moduli(const Superoperator& m) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m.matrix, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigenvalue computation of the superoperator failed");
  }
  std::vector<double> mods;
  mods.reserve(solver.eigenvalues().size());
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    mods.push_back(std::abs(solver.eigenvalues()(k)));
  }
  std::sort(mods.begin(), mods.end(), std::greater<>());
  return mods;
}

FixedPointReport analyze(const ChannelSpec& spec, const RankPolicy& policy) {
  const int n = spec.n();
  const int dim = n * n;
  const Superoperator m = superoperator(spec);
  const ComplexMatrix shifted = m.matrix - ComplexMatrix::Identity(dim, dim);
  // M has spectral radius one, so its entries carry rounding of order eps
  // even when M - I itself is tiny.
  RankPolicy effective = policy;
  effective.scale_floor = std::max(effective.scale_floor, 1.0);
  const RankResult rr = rank_and_nullspace(shifted, effective);

  FixedPointReport rep;
  rep.rank = rr.rank;
  rep.kernel_dim = rr.kernel_dim();
  rep.kernel_basis = rr.kernel;
  rep.unique = rep.kernel_dim == 1;
  rep.singular_values = rr.singular_values;
  rep.threshold = rr.threshold;
  const auto mods = eigenvalue_moduli(m);
  rep.spectral_gap = mods.size() > 1 ? mods[1] : 0.0;

  if (rep.kernel_dim == 0) {
    std::ostringstream msg;
    msg << "Phi - I has full numerical rank (smallest singular value "
        << rr.singular_values(dim - 1) << ", threshold " << rr.threshold
        << "); a fixed point must exist";
    throw NumericalError(msg.str());
  }

  ComplexMatrix q;
  if (rep.unique) {
    q = density_from_kernel_vector(rr.kernel.col(0), n);
  } else {
    const ComplexMatrix start = ComplexMatrix::Identity(n, n) / double(n);
    const RankResult left = rank_and_nullspace(shifted.adjoint(), effective);
    if (auto proj = cesaro_limit_projector(rr.kernel, left.kernel)) {
      q = hermitian_part(unvec(*proj * vec(start), n));
      q /= q.trace().real();
    } else {
      q = hermitian_part(cesaro_fixed_point(m, start, defaults::kCesaroSteps));
    }
  }

  std::string why;
  if (!is_density(q, defaults::kDensityTol, &why)) {
    throw NumericalError("no density matrix found in the fixed-point space: " +
                         why);
  }
  rep.residual = max_abs_diff(apply_stinespring(spec, q), q);
  rep.fixed_density = std::move(q);
  return rep;
}

Trajectory iterate(const ChannelSpec& spec, const ComplexMatrix& q0,
                   std::int64_t max_steps, double eps) {
  std::string why;
  if (!is_density(q0, defaults::kDensityTol, &why)) {
    throw ValidationError("initial state is not a density matrix: " + why);
  }
  const Superoperator m = superoperator(spec);
  Trajectory traj;
  traj.states.push_back(q0);
  ComplexVector v = vec(q0);
  for (std::int64_t k = 0; k < max_steps; ++k) {
    ComplexVector next = m.matrix * v;
    const double delta = (next - v).cwiseAbs().maxCoeff();
    v = std::move(next);
    traj.states.push_back(unvec(v, spec.n()));
    traj.deltas.push_back(delta);
    traj.steps = k + 1;
    if (delta <= eps) {
      traj.converged = true;
      break;
    }
  }
  return traj;
}

ComplexMatrix cesaro_fixed_point(const Superoperator& m, const ComplexMatrix& q0,
                                 std::int64_t steps) {
  if (steps < 1) throw ValidationError("cesaro_fixed_point: steps must be >= 1");
  const Eigen::Index dim = m.matrix.rows();
  // Invariant: sum = sum_{k<N} M^k, power = M^N for the prefix N of steps'
  // binary expansion consumed so far.
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix power = ComplexMatrix::Identity(dim, dim);
  int top = 62;
  while (!((steps >> top) & 1)) --top;
  for (int bit = top; bit >= 0; --bit) {
    sum += power * sum;
    power = power * power;
    if ((steps >> bit) & 1) {
      sum += power;
      power = power * m.matrix;
    }
  }
  // Dividing by the trace instead of by steps is exact for a trace-preserving
  // map. It also cancels the drift of the unit eigenvalue, which repeated
  // squaring amplifies to about steps * eps.
  const ComplexMatrix avg = unvec(sum * vec(q0), m.n);
  return avg / avg.trace();
}

ComplexMatrix cesaro_fixed_point(const ChannelSpec& spec, const ComplexMatrix& q0,
                                 std::int64_t steps) {
  return cesaro_fixed_point(superoperator(spec), q0, steps);
}

}  // namespace rqi
