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

#include "rqi/channel.hpp"

#include <cmath>
#include <sstream>

namespace rqi {

namespace {

int dimension_from_u(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw ValidationError("U is not square");
  const int dim = static_cast<int>(u.rows());
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim))));
  if (n < 1 || n * n != dim) {
    throw ValidationError("U dimension " + std::to_string(dim) +
                          " is not a perfect square");
  }
  return n;
}

}  // namespace

ChannelSpec::ChannelSpec(ComplexMatrix u, ComplexMatrix beta, double tol)
    : u_(std::move(u)), beta_(std::move(beta)) {
  if (!all_finite(u_) || !all_finite(beta_)) {
    throw ValidationError("channel spec has non-finite entries");
  }
  n_ = dimension_from_u(u_);
  if (beta_.rows() != n_ || beta_.cols() != n_) {
    throw ValidationError("beta must be " + std::to_string(n_) + "x" +
                          std::to_string(n_));
  }
  std::string why;
  if (!is_unitary(u_, tol, &why)) throw ValidationError("U is not unitary: " + why);
  if (!is_density(beta_, tol, &why)) {
    throw ValidationError("beta is not a density matrix: " + why);
  }

  bool diagonal = true;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j && beta_(i, j) != Complex(0.0, 0.0)) diagonal = false;
    }
  }

  if (diagonal) {
    lambda_.resize(n_);
    for (int i = 0; i < n_; ++i) lambda_[i] = beta_(i, i).real();
    beta_spectrum_ = lambda_;
    w_ = ComplexMatrix::Identity(n_, n_);
    u_work_ = u_;
  } else {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
        0.5 * (beta_ + beta_.adjoint()));
    if (solver.info() != Eigen::Success) {
      throw NumericalError("eigen-decomposition of beta failed");
    }
    lambda_.assign(solver.eigenvalues().data(),
                   solver.eigenvalues().data() + n_);
    w_ = solver.eigenvectors();
    const ComplexMatrix lift = kron(ComplexMatrix::Identity(n_, n_), w_);
    u_work_ = lift.adjoint() * u_ * lift;
  }
  for (double l : lambda_) {
    if (!(l > 0.0)) {
      std::ostringstream msg;
      msg << "beta must be strictly positive, found eigenvalue " << l;
      throw ValidationError(msg.str());
    }
  }
}

ChannelSpec ChannelSpec::from_spectrum(ComplexMatrix u,
                                       const std::vector<double>& spectrum,
                                       double tol) {
  ComplexMatrix beta = ComplexMatrix::Zero(spectrum.size(), spectrum.size());
  for (std::size_t q = 0; q < spectrum.size(); ++q) beta(q, q) = spectrum[q];
  return ChannelSpec(std::move(u), std::move(beta), tol);
}

ComplexMatrix KrausSet::completeness() const {
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  for (const auto& k : operators) acc += k.adjoint() * k;
  return acc;
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& q) const {
  return unvec(matrix * vec(q), n);
}

ComplexMatrix environment_block(const ComplexMatrix& u, int n, int i, int j) {
  ComplexMatrix block(n, n);
  for (int s = 0; s < n; ++s) {
    for (int sp = 0; sp < n; ++sp) block(s, sp) = u(s * n + i, sp * n + j);
  }
  return block;
}

ComplexMatrix apply_stinespring(const ChannelSpec& spec, const ComplexMatrix& q) {
  const int n = spec.n();
  if (q.rows() != n || q.cols() != n) {
    throw ValidationError("apply: state must be " + std::to_string(n) + "x" +
                          std::to_string(n));
  }
  const ComplexMatrix& u = spec.u();
  return partial_trace_env(u * kron(q, spec.beta()) * u.adjoint(), n);
}

KrausSet kraus_set(const ChannelSpec& spec) {
  const int n = spec.n();
  KrausSet out;
  out.n = n;
  out.operators.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.operators.push_back(std::sqrt(spec.spectrum()[j]) *
                              environment_block(spec.working_u(), n, i, j));
    }
  }
  return out;
}

ComplexMatrix apply_kraus(const KrausSet& kraus, const ComplexMatrix& q) {
  if (q.rows() != kraus.n || q.cols() != kraus.n) {
    throw ValidationError("apply_kraus: dimension mismatch");
  }
  ComplexMatrix acc = ComplexMatrix::Zero(kraus.n, kraus.n);
  for (const auto& k : kraus.operators) acc += k * q * k.adjoint();
  return acc;
}

Superoperator superoperator(const ChannelSpec& spec) {
  const int n = spec.n();
  Superoperator out;
  out.n = n;
  out.matrix.resize(n * n, n * n);
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      out.matrix.col(Superoperator::index(n, r, s)) =
          vec(apply_stinespring(spec, matrix_unit(n, r, s)));
    }
  }
  return out;
}

Superoperator superoperator_from_coordinates(const ChannelSpec& spec) {
  const int n = spec.n();
  const ComplexMatrix& u = spec.working_u();
  const auto& lambda = spec.spectrum();
  auto coef = [&](int i, int j, int k, int l) { return u(i * n + j, k * n + l); };

  Superoperator out;
  out.n = n;
  out.matrix = ComplexMatrix::Zero(n * n, n * n);
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      const int col = Superoperator::index(n, r, s);
      for (int a = 0; a < n; ++a) {
        for (int k = 0; k < n; ++k) {
          Complex acc = 0.0;
          for (int j = 0; j < n; ++j) {
            for (int l = 0; l < n; ++l) {
              acc += lambda[j] * coef(a, l, r, j) * std::conj(coef(k, l, s, j));
            }
          }
          out.matrix(Superoperator::index(n, a, k), col) = acc;
        }
      }
    }
  }
  return out;
}

}  // namespace rqi
