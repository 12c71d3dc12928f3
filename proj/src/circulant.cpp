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

#include "rqi/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "rqi/defaults.hpp"

namespace rqi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<Complex> ordered_pair_ratios(std::span<const Complex> u) {
  std::vector<Complex> ratios;
  const std::size_t m = u.size();
  ratios.reserve(m * (m - 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) ratios.push_back(u[i] * std::conj(u[j]));
    }
  }
  return ratios;
}

void check_unimodular(std::span<const Complex> z, const char* what) {
  for (const Complex& v : z) {
    if (std::abs(std::abs(v) - 1.0) > 1e-12) {
      std::ostringstream msg;
      msg << what << ": value " << v << " is not unimodular";
      throw ValidationError(msg.str());
    }
  }
}

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0.0 ? t + kTwoPi : t;
}

}  // namespace

PhaseVector PhaseVector::from_angles(int n, std::vector<double> angles) {
  if (n < 1 || angles.size() != static_cast<std::size_t>(n) * n) {
    throw ValidationError("phase vector needs n^2 = " + std::to_string(n * n) +
                          " angles, got " + std::to_string(angles.size()));
  }
  PhaseVector pv;
  pv.n = n;
  pv.values.reserve(angles.size());
  for (double t : angles) {
    if (!std::isfinite(t)) throw ValidationError("non-finite phase angle");
    pv.values.push_back(std::polar(1.0, t));
  }
  pv.angles = std::move(angles);
  pv.margin = phase_margin(pv.values);
  return pv;
}

PhaseVector PhaseVector::from_values(int n, const std::vector<Complex>& values) {
  check_unimodular(values, "phase vector");
  std::vector<double> angles;
  angles.reserve(values.size());
  for (const Complex& v : values) angles.push_back(std::arg(v));
  PhaseVector pv = from_angles(n, std::move(angles));
  // Keep the caller's exact values (e.g. i stays exactly i).
  pv.values = values;
  pv.margin = phase_margin(pv.values);
  return pv;
}

double phase_margin_serial(std::span<const Complex> u) {
  const std::vector<Complex> r = ordered_pair_ratios(u);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < r.size(); ++p) {
    for (std::size_t q = p + 1; q < r.size(); ++q) {
      best = std::min(best, std::abs(r[p] - r[q]));
    }
  }
  return best;
}

double phase_margin(std::span<const Complex> u) {
  const std::vector<Complex> r = ordered_pair_ratios(u);
  const long count = static_cast<long>(r.size());
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(min : best) schedule(dynamic, 16)
  for (long p = 0; p < count; ++p) {
    double local = std::numeric_limits<double>::infinity();
    for (long q = p + 1; q < count; ++q) {
      local = std::min(local, std::abs(r[p] - r[q]));
    }
    best = std::min(best, local);
  }
  return best;
}

std::vector<std::int64_t> greedy_sidon_set(int size) {
  std::vector<std::int64_t> set;
  std::unordered_set<std::int64_t> diffs;
  std::int64_t x = 0;
  while (static_cast<int>(set.size()) < size) {
    bool ok = true;
    std::vector<std::int64_t> fresh;
    for (std::int64_t s : set) {
      const std::int64_t d = x - s;
      if (diffs.count(d) ||
          std::find(fresh.begin(), fresh.end(), d) != fresh.end()) {
        ok = false;
        break;
      }
      fresh.push_back(d);
    }
    if (ok) {
      set.push_back(x);
      diffs.insert(fresh.begin(), fresh.end());
    }
    ++x;
  }
  return set;
}

PhaseVector generic_phases(int n, std::uint64_t seed, double min_margin) {
  if (n < 2) throw ValidationError("generic_phases: n must be >= 2");
  if (!(min_margin > 0.0)) {
    throw ValidationError("generic_phases: min_margin must be positive");
  }
  const int m = n * n;
  Rng rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);

  for (int attempt = 0; attempt < defaults::kUniformPhaseAttempts; ++attempt) {
    std::vector<double> angles(m);
    for (double& t : angles) t = angle(rng);
    PhaseVector pv = PhaseVector::from_angles(n, std::move(angles));
    if (pv.margin >= min_margin) return pv;
  }

  // Ratios of lattice phases exp(2 pi i t s_k / P) are exp(2 pi i t (s_i - s_j) / P).
  // Sidon differences lie in (-P/2, P/2) and are pairwise distinct, and
  // multiplication by a unit t mod P keeps them distinct, so every pair of
  // ratios is at least 2 sin(pi / P) apart.
  const std::vector<std::int64_t> sidon = greedy_sidon_set(m);
  const std::int64_t modulus = 2 * sidon.back() + 1;
  std::uniform_int_distribution<std::int64_t> pick(1, modulus - 1);
  std::int64_t mult = pick(rng);
  while (std::gcd(mult, modulus) != 1) mult = pick(rng);
  const std::int64_t offset = pick(rng);
  const double rotation = angle(rng);
  std::vector<std::int64_t> order = sidon;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<double> angles(m);
  for (int k = 0; k < m; ++k) {
    const std::int64_t slot = (mult * order[k] + offset) % modulus;
    angles[k] = wrap_angle(kTwoPi * static_cast<double>(slot) /
                               static_cast<double>(modulus) +
                           rotation);
  }
  PhaseVector pv = PhaseVector::from_angles(n, std::move(angles));
  if (pv.margin < min_margin) {
    std::ostringstream msg;
    msg << "generic_phases: best margin " << pv.margin << " for m = " << m
        << " is below the requested " << min_margin;
    throw ValidationError(msg.str());
  }
  return pv;
}

ComplexMatrix build_circulant(const PhaseVector& phases, int n) {
  const int m = n * n;
  if (static_cast<int>(phases.size()) != m) {
    throw ValidationError("build_circulant: expected " + std::to_string(m) +
                          " phases, got " + std::to_string(phases.size()));
  }
  ComplexMatrix u = ComplexMatrix::Zero(m, m);
  for (int col = 0; col < m; ++col) u((col + 1) % m, col) = phases.values[col];
  return u;
}

ChannelSpec circulant_channel(const PhaseVector& phases,
                              const std::vector<double>& spectrum) {
  return ChannelSpec::from_spectrum(build_circulant(phases, phases.n), spectrum);
}

AbCoefficients ab_coefficients(const PhaseVector& phases, int n,
                               const std::vector<double>& lambda) {
  if (static_cast<int>(phases.size()) != n * n ||
      static_cast<int>(lambda.size()) != n) {
    throw ValidationError("ab_coefficients: dimension mismatch");
  }
  const auto& u = phases.values;
  AbCoefficients out{ComplexMatrix::Zero(n, n), ComplexMatrix::Zero(n, n)};
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      Complex acc = 0.0;
      for (int j = 0; j + 1 < n; ++j) {
        acc += u[r * n + j] * std::conj(u[s * n + j]) * lambda[j];
      }
      out.a(r, s) = acc;
      out.b(r, s) =
          u[r * n + n - 1] * std::conj(u[s * n + n - 1]) * lambda[n - 1];
    }
  }
  return out;
}

double rigidity_deficit(std::span<const double> lambda,
                        std::span<const Complex> z) {
  if (lambda.size() != z.size() || z.empty()) {
    throw ValidationError("rigidity: lambda and z must have equal, nonzero size");
  }
  check_unimodular(z, "rigidity");
  double total = 0.0;
  Complex sum = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (!(lambda[j] > 0.0)) {
      throw ValidationError("rigidity: weights must be strictly positive");
    }
    total += lambda[j];
    sum += lambda[j] * z[j];
  }
  return total - std::abs(sum);
}

bool unimodular_sum_rigidity(std::span<const double> lambda,
                             std::span<const Complex> z) {
  return std::abs(rigidity_deficit(lambda, z)) <= 1e-12;
}

}  // namespace rqi
