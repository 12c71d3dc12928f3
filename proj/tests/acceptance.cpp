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


// Acceptance gate. Each criterion prints one PASS/FAIL line with the
// measured figures; the exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "rqi/circulant.hpp"
#include "rqi/defaults.hpp"
#include "rqi/dim2.hpp"
#include "rqi/fixed_point.hpp"

namespace {

using namespace rqi;

constexpr Complex kI(0.0, 1.0);

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

template <typename F>
void criterion(int id, const char* name, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s [%d] %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, name,
              o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

ChannelSpec haar_spec(int n, std::uint64_t seed) {
  return ChannelSpec::from_spectrum(haar_unitary(n * n, seed),
                                    defaults::environment_spectrum(n));
}

// Quadruple loop over distinct ordered pairs, independent of phase_margin.
double brute_force_margin(const std::vector<Complex>& u) {
  const int m = static_cast<int>(u.size());
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          if (i == j || k == l || (i == k && j == l)) continue;
          best = std::min(best, std::abs(u[i] * std::conj(u[j]) - u[k] * std::conj(u[l])));
        }
  return best;
}

Outcome cptp_suite() {
  double trace_dev = 0, herm_dev = 0, min_eig = 1, agree = 0;
  int specs = 0;
  Rng rng(20260101);
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 200; ++t, ++specs) {
      const ChannelSpec spec = haar_spec(n, 1'000'000 + 1000 * n + t);
      const KrausSet kraus = kraus_set(spec);
      const Superoperator m = superoperator(spec);
      const ComplexMatrix q = random_density(n, rng);
      const ComplexMatrix out = apply_stinespring(spec, q);
      trace_dev = std::max(trace_dev, std::abs(trace(out) - 1.0));
      herm_dev = std::max(herm_dev, max_abs_diff(out, out.adjoint()));
      min_eig = std::min(min_eig, min_hermitian_eigenvalue(out));
      agree = std::max({agree, max_abs_diff(apply_kraus(kraus, q), out),
                        max_abs_diff(m.apply(q), out)});
    }
  }
  return {trace_dev <= 1e-12 && herm_dev <= 1e-12 && min_eig >= -1e-10 && agree <= 1e-12,
          fmt("%d specs; trace dev %.2e, hermiticity dev %.2e, min eig %.2e, "
              "three-way dev %.2e",
              specs, trace_dev, herm_dev, min_eig, agree)};
}

Outcome circulant_rank() {
  bool ok = true;
  double worst_ratio = std::numeric_limits<double>::infinity();
  double worst_fixed = 0.0;
  int cases = 0;
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed, ++cases) {
      const PhaseVector pv = generic_phases(n, seed, defaults::min_margin(n));
      const FixedPointReport rep =
          analyze(circulant_channel(pv, defaults::environment_spectrum(n)));
      const int m = n * n;
      const double retained = rep.singular_values(m - 2);
      const double discarded = rep.singular_values(m - 1);
      const double ratio = discarded > 0 ? retained / discarded
                                         : std::numeric_limits<double>::infinity();
      worst_ratio = std::min(worst_ratio, ratio);
      double fixed_err = std::numeric_limits<double>::infinity();
      if (rep.fixed_density) {
        fixed_err = max_abs_diff(*rep.fixed_density, ComplexMatrix::Identity(n, n) / double(n));
      }
      worst_fixed = std::max(worst_fixed, fixed_err);
      ok = ok && rep.rank == m - 1 && rep.unique && ratio >= 1e3 && fixed_err <= 1e-10;
    }
  }
  return {ok, fmt("%d cases n=2..5; rank n^2-1 in all: %s; min retained/discarded "
                  "singular value %.2e; max |Q - I/n| %.2e",
                  cases, ok ? "yes" : "no", worst_ratio, worst_fixed)};
}

Outcome golden_case() {
  const PhaseVector pv = PhaseVector::from_values(2, {kI, 1.0, 1.0, 1.0});
  const ChannelSpec spec = circulant_channel(pv, {0.7, 0.3});
  const FixedPointReport rep = analyze(spec);
  const dim2::UniquenessCertificate cert =
      dim2::uniqueness_certificate(dim2::coefficients(spec));
  const double expected = (1.0 + 0.7 * 0.7) - 0.3 * 0.3;
  const double dev = std::abs(cert.det_real - expected);
  return {rep.rank == 3 && dev <= 1e-12,
          fmt("rank %d; determinant %.15f vs %.2f (dev %.1e)", rep.rank, cert.det_real,
              expected, dev)};
}

Outcome sigma_x_degeneracy() {
  const ChannelSpec spec = dim2::sigma_x_channel(std::numbers::pi / 4, 0.7);
  const FixedPointReport rep = analyze(spec);
  double worst = 0.0;
  for (double a : {-0.4, 0.0, 0.3}) {
    const ComplexMatrix q = dim2::StateParams{0.5, a, 0.0}.to_matrix();
    worst = std::max(worst, max_abs_diff(apply_stinespring(spec, q), q));
  }
  const bool unique = dim2::uniqueness_certificate(dim2::coefficients(spec)).unique;
  return {rep.kernel_dim == 2 && worst <= 1e-12 && !unique,
          fmt("kernel_dim %d; family residual %.2e; certificate unique=%s", rep.kernel_dim,
              worst, unique ? "true" : "false")};
}

Outcome genericity() {
  struct Tally {
    int samples = 0, unique = 0, iterate_ok = 0, cesaro_ok = 0;
    double worst_cesaro = 0.0;
  };
  Tally all[2];
  for (int idx = 0; idx < 2; ++idx) {
    const int n = idx == 0 ? 2 : 3;
    const int samples = idx == 0 ? 1000 : 200;
    Tally& t = all[idx];
    Rng rng(777 + n);
    for (int s = 0; s < samples; ++s) {
      const ChannelSpec spec = haar_spec(n, 2'000'000 + 10'000 * n + s);
      ++t.samples;
      const FixedPointReport rep = analyze(spec);
      if (!rep.unique || !rep.fixed_density) continue;
      ++t.unique;
      const ComplexMatrix& fixed = *rep.fixed_density;
      bool reached = true;
      ComplexMatrix first;
      for (int r = 0; r < 5; ++r) {
        const ComplexMatrix q0 = random_density(n, rng);
        if (r == 0) first = q0;
        const Trajectory tr = iterate(spec, q0, 10'000, 1e-13);
        reached = reached && max_abs_diff(tr.final_state(), fixed) <= 1e-8;
      }
      if (reached) ++t.iterate_ok;
      const double ce = max_abs_diff(cesaro_fixed_point(spec, first, defaults::kCesaroSteps), fixed);
      t.worst_cesaro = std::max(t.worst_cesaro, ce);
      if (ce <= 1e-8) ++t.cesaro_ok;
    }
  }
  bool ok = true;
  std::string detail;
  for (int idx = 0; idx < 2; ++idx) {
    const Tally& t = all[idx];
    const double frac = double(t.unique) / t.samples;
    const double it = double(t.iterate_ok) / t.samples;
    const double ce = double(t.cesaro_ok) / t.samples;
    ok = ok && frac == 1.0 && it >= 0.99 && ce == 1.0;
    detail += fmt("%sn=%d: unique %d/%d, iterates %.1f%%, Cesaro %.1f%% (max dev %.1e)",
                  idx ? "; " : "", idx == 0 ? 2 : 3, t.unique, t.samples, 100 * it, 100 * ce,
                  t.worst_cesaro);
  }
  return {ok, detail};
}

Outcome closed_form() {
  int certified = 0, invariants_ok = 0;
  double worst = 0.0;
  bool ok = true;
  for (int s = 0; s < 500; ++s) {
    const ChannelSpec spec = ChannelSpec::from_spectrum(haar_unitary(4, 3'000'000 + s), {0.7, 0.3});
    const dim2::Coefficients c = dim2::coefficients(spec);
    const bool inv = std::abs((c.a11 + c.a12).imag()) <= 1e-12 &&
                     std::abs((kI * (c.a11 - c.a12)).imag()) <= 1e-12 &&
                     std::abs(c.alpha1) < 1.0 && c.beta1 > 0.0 && c.beta1 < 1.0;
    if (inv) ++invariants_ok;
    ok = ok && inv;
    if (!dim2::uniqueness_certificate(c).unique) continue;
    ++certified;
    const double dev = max_abs_diff(dim2::closed_form_fixed_point(c), *analyze(spec).fixed_density);
    worst = std::max(worst, dev);
    ok = ok && dev <= 1e-9;
  }
  return {ok, fmt("%d/500 certified unique; max |closed form - nullspace| %.2e; "
                  "invariants hold in %d/500",
                  certified, worst, invariants_ok)};
}

Outcome rigidity() {
  Rng rng(4242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> size(2, 8);
  double min_deficit = std::numeric_limits<double>::infinity();
  double worst_equal = 0.0;
  for (int t = 0; t < 10'000; ++t) {
    const int m = size(rng);
    std::vector<double> lambda(m);
    std::vector<Complex> z(m);
    double total = 0.0;
    for (int j = 0; j < m; ++j) total += lambda[j] = 1e-3 + unit(rng);
    for (double& l : lambda) l /= total;
    for (int j = 0; j < m; ++j) z[j] = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
    min_deficit = std::min(min_deficit, rigidity_deficit(lambda, z));
    const std::vector<Complex> same(m, z[0]);
    worst_equal = std::max(worst_equal, std::abs(rigidity_deficit(lambda, same)));
  }
  return {min_deficit > 0.0 && worst_equal <= 1e-12,
          fmt("10000 draws; min deficit (non-constant z) %.2e; max |deficit| (constant z) %.1e",
              min_deficit, worst_equal)};
}

Outcome phase_certificate() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 6; ++n) {
    const PhaseVector pv = generic_phases(n, 1, defaults::min_margin(n));
    const double margin = brute_force_margin(pv.values);
    ok = ok && margin >= 1e-3;
    detail += fmt("%sn=%d %.2e", n > 2 ? ", " : "margins ", n, margin);
  }
  return {ok, detail};
}

}  // namespace

int main() {
  criterion(1, "CPTP suite", cptp_suite);
  criterion(2, "circulant rank n^2-1", circulant_rank);
  criterion(3, "n=2 golden case", golden_case);
  criterion(4, "sigma_x (x) sigma_x degeneracy", sigma_x_degeneracy);
  criterion(5, "Haar genericity", genericity);
  criterion(6, "closed form vs nullspace", closed_form);
  criterion(7, "unimodular sum rigidity", rigidity);
  criterion(8, "phase ratio certificate", phase_certificate);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
