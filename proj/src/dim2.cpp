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

#include "rqi/dim2.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rqi::dim2 {

namespace {

constexpr Complex kI(0.0, 1.0);

struct RawCoefficients {
  Complex alpha1, beta1, alpha2, beta2, a11, a12, a21, a22;
};

RawCoefficients raw_coefficients(const ComplexMatrix& u, double p1, double p2) {
  RawCoefficients c{};
  const double p[2] = {p1, p2};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const ComplexMatrix blk = environment_block(u, 2, i, j);
      const Complex u11 = blk(0, 0), u12 = blk(0, 1);
      const Complex u21 = blk(1, 0), u22 = blk(1, 1);
      const double w = p[j];
      c.alpha1 += w * (std::norm(u11) - std::norm(u12));
      c.beta1 += w * std::norm(u12);
      c.alpha2 += w * (u11 * std::conj(u21) - u12 * std::conj(u22));
      c.beta2 += w * u12 * std::conj(u22);
      c.a11 += w * u11 * std::conj(u12);
      c.a12 += w * u12 * std::conj(u11);
      c.a21 += w * u11 * std::conj(u22);
      c.a22 += w * u12 * std::conj(u21);
    }
  }
  return c;
}

// Phi(Q) predicted by the coefficients for Q = [[q11, z], [conj z, 1 - q11]].
ComplexMatrix predicted_image(const RawCoefficients& c, const StateParams& s) {
  const Complex d = c.alpha1 * s.q11 + c.beta1 + (c.a11 + c.a12) * s.a +
                    kI * (c.a11 - c.a12) * s.b;
  const Complex off = c.alpha2 * s.q11 + c.beta2 + (c.a21 + c.a22) * s.a +
                      kI * (c.a21 - c.a22) * s.b;
  ComplexMatrix out(2, 2);
  out << d, off, std::conj(off), 1.0 - d;
  return out;
}

double max_entry(const Coefficients& c) {
  return std::max({std::abs(c.alpha1), std::abs(c.beta1), std::abs(c.alpha2),
                   std::abs(c.beta2), std::abs(c.a11), std::abs(c.a12),
                   std::abs(c.a21), std::abs(c.a22)});
}

}  // namespace

StateParams StateParams::of(const ComplexMatrix& q) {
  if (q.rows() != 2 || q.cols() != 2) {
    throw ValidationError("qubit parametrization needs a 2x2 matrix");
  }
  return {q(0, 0).real(), q(0, 1).real(), q(0, 1).imag()};
}

ComplexMatrix StateParams::to_matrix() const {
  ComplexMatrix q(2, 2);
  q << q11, Complex(a, b), Complex(a, -b), 1.0 - q11;
  return q;
}

bool Coefficients::strict_bounds_hold() const {
  return std::abs(alpha1) < 1.0 && beta1 > 0.0 && beta1 < 1.0;
}

double Coefficients::largest_magnitude() const { return max_entry(*this); }

Coefficients coefficients(const ChannelSpec& spec) {
  if (spec.n() != 2) throw ValidationError("dim2: channel dimension must be 2");
  if (!spec.beta_is_diagonal()) {
    throw ValidationError("dim2: beta must be diagonal in the working basis");
  }
  const double p1 = spec.spectrum()[0];
  const double p2 = spec.spectrum()[1];
  const RawCoefficients raw = raw_coefficients(spec.u(), p1, p2);

  double err = 0.0;
  const StateParams probes[] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const StateParams& s : probes) {
    const ComplexMatrix q = s.to_matrix();
    err = std::max(err, max_abs_diff(apply_stinespring(spec, q),
                                     predicted_image(raw, s)));
  }
  if (err > defaults::kDim2CrossCheckAbort) {
    std::ostringstream msg;
    msg << "dim2: coefficients disagree with the channel by " << err;
    throw NumericalError(msg.str());
  }

  const double reality = std::max(
      {std::abs(raw.alpha1.imag()), std::abs(raw.beta1.imag()),
       std::abs((raw.a11 + raw.a12).imag()),
       std::abs((kI * (raw.a11 - raw.a12)).imag())});
  if (reality > 1e-12) {
    std::ostringstream msg;
    msg << "dim2: reality constraints violated by " << reality;
    throw NumericalError(msg.str());
  }

  Coefficients c;
  c.alpha1 = raw.alpha1.real();
  c.beta1 = raw.beta1.real();
  c.alpha2 = raw.alpha2;
  c.beta2 = raw.beta2;
  c.a11 = raw.a11;
  c.a12 = raw.a12;
  c.a21 = raw.a21;
  c.a22 = raw.a22;
  c.p1 = p1;
  c.p2 = p2;
  c.cross_check_error = err;
  return c;
}

std::array<double, 3> g_map(const Coefficients& c, double q11, double a, double b) {
  const double first = c.alpha1 * q11 + c.beta1 + (c.a11 + c.a12).real() * a +
                       (kI * (c.a11 - c.a12)).real() * b;
  const Complex off = c.alpha2 * q11 + c.beta2 + (c.a21 + c.a22) * a +
                      kI * (c.a21 - c.a22) * b;
  return {first, off.real(), off.imag()};
}

ComplexMatrix k_matrix(const Coefficients& c) {
  ComplexMatrix k(2, 2);
  k << c.a11 + c.a12, kI * (c.a11 - c.a12), c.a21 + c.a22 - 1.0,
      kI * (c.a21 - c.a22 - 1.0);
  return k;
}

UniquenessCertificate uniqueness_certificate(const Coefficients& c, double tol) {
  if (!(tol > 0.0)) throw ValidationError("dim2: tolerance must be positive");
  const ComplexMatrix k = k_matrix(c);
  const double c11 = k(0, 0).real();
  const double c12 = k(0, 1).real();
  const Complex c21 = k(1, 0);
  const Complex c22 = k(1, 1);

  UniquenessCertificate cert;
  const double scale = std::max(1.0, max_entry(c));
  cert.tol = tol * scale;
  cert.det_k = k.determinant();

  double real_tol = cert.tol;
  if (std::abs(c.alpha2) > cert.tol) {
    // Eliminating q11 leaves c11 a + c12 b = z0 (c21 a + c22 b); for real
    // (a, b) the imaginary and real parts give two real equations.
    const Complex z0 = (c.alpha1 - 1.0) / c.alpha2;
    cert.z0 = z0;
    const double al = z0.real(), be = z0.imag();
    Eigen::Matrix2d sys;
    sys << be * c21.real() + al * c21.imag(), be * c22.real() + al * c22.imag(),
        al * c21.real() - be * c21.imag() - c11,
        al * c22.real() - be * c22.imag() - c12;
    cert.det_real = sys.determinant();
    real_tol *= std::max(1.0, std::abs(z0));
  } else {
    // alpha2 = 0 decouples q11; real solutions of c21 a + c22 b = 0 remain.
    Eigen::Matrix2d sys;
    sys << c21.real(), c22.real(), c21.imag(), c22.imag();
    cert.det_real = sys.determinant();
  }
  const FixedPointSystem full = fixed_point_system(c);
  cert.det_system = full.matrix.determinant();

  if (std::abs(c.alpha1 - 1.0) <= cert.tol) {
    // q11 drops out of its own equation; only the full system decides.
    cert.unique = std::abs(cert.det_system) > cert.tol;
    return cert;
  }
  // det K != 0 is necessary only while the first row of K is nonzero, and
  // with alpha2 = 0 the real system alone is decisive.
  const bool first_row_vanishes = std::hypot(c11, c12) <= cert.tol;
  const bool k_ok = std::abs(cert.det_k) > cert.tol || first_row_vanishes || !cert.z0;
  cert.unique = k_ok && std::abs(cert.det_real) > real_tol;
  return cert;
}

FixedPointSystem fixed_point_system(const Coefficients& c) {
  const ComplexMatrix k = k_matrix(c);
  FixedPointSystem sys;
  sys.matrix << c.alpha1 - 1.0, k(0, 0).real(), k(0, 1).real(),
      c.alpha2.real(), k(1, 0).real(), k(1, 1).real(),
      c.alpha2.imag(), k(1, 0).imag(), k(1, 1).imag();
  sys.rhs << -c.beta1, -c.beta2.real(), -c.beta2.imag();
  return sys;
}

ComplexMatrix closed_form_fixed_point(const Coefficients& c, double tol) {
  const UniquenessCertificate cert = uniqueness_certificate(c, tol);
  if (!cert.unique) {
    std::ostringstream msg;
    msg << "dim2: fixed point is not certified unique (|det K| = "
        << std::abs(cert.det_k) << ", det_real = " << cert.det_real << ")";
    throw ValidationError(msg.str());
  }
  const FixedPointSystem sys = fixed_point_system(c);
  Eigen::FullPivLU<Eigen::Matrix3d> lu(sys.matrix);
  lu.setThreshold(1e-14);
  if (!lu.isInvertible()) {
    std::ostringstream msg;
    msg << "dim2: fixed-point system singular despite certificate (det K = "
        << cert.det_k << ", det_real = " << cert.det_real << ")";
    throw NumericalError(msg.str());
  }
  const Eigen::Vector3d x = lu.solve(sys.rhs);
  return StateParams{x(0), x(1), x(2)}.to_matrix();
}

ChannelSpec sigma_x_channel(double theta, double p1) {
  if (!(p1 > 0.0 && p1 < 1.0)) {
    throw ValidationError("sigma_x_channel: p1 must lie in (0, 1)");
  }
  ComplexMatrix sx(2, 2);
  sx << 0.0, 1.0, 1.0, 0.0;
  const ComplexMatrix u = std::cos(theta) * ComplexMatrix::Identity(4, 4) +
                          kI * std::sin(theta) * kron(sx, sx);
  return ChannelSpec::from_spectrum(u, {p1, 1.0 - p1});
}

}  // namespace rqi::dim2
