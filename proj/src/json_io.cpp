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

#include "rqi/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace rqi::io {

namespace {

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " is not finite");
  return v;
}

int positive_int(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw ParseError(std::string(what) + " must be a positive integer");
  }
  return j.get<int>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back(complex_pair(m(i, k)));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const int rows = positive_int(field(j, "rows"), "rows");
  const int cols = positive_int(field(j, "cols"), "cols");
  const json& entries = field(j, "entries");
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(rows) * cols) {
    throw ParseError("entries must hold rows * cols = " +
                     std::to_string(rows * cols) + " pairs");
  }
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      const json& e = entries[static_cast<std::size_t>(i) * cols + k];
      if (!e.is_array() || e.size() != 2) {
        throw ParseError("matrix entry must be a [re, im] pair");
      }
      m(i, k) = Complex(finite_number(e[0], "re"), finite_number(e[1], "im"));
    }
  }
  return m;
}

json spec_to_json(const ChannelSpec& spec) {
  json beta;
  if (spec.beta_spectrum()) {
    beta = {{"spectrum", *spec.beta_spectrum()}};
  } else {
    beta = matrix_to_json(spec.beta());
  }
  return {{"n", spec.n()}, {"beta", std::move(beta)}, {"U", matrix_to_json(spec.u())}};
}

ChannelSpec spec_from_json(const json& j) {
  const int n = positive_int(field(j, "n"), "n");
  const ComplexMatrix u = matrix_from_json(field(j, "U"));
  if (u.rows() != static_cast<Eigen::Index>(n) * n || u.cols() != u.rows()) {
    throw ParseError("U must be n^2 x n^2 for n = " + std::to_string(n));
  }
  const json& beta = field(j, "beta");
  if (beta.is_object() && beta.contains("spectrum")) {
    const json& sp = beta.at("spectrum");
    if (!sp.is_array() || sp.size() != static_cast<std::size_t>(n)) {
      throw ParseError("beta spectrum must list n values");
    }
    std::vector<double> lambda;
    for (const json& v : sp) lambda.push_back(finite_number(v, "spectrum value"));
    return ChannelSpec::from_spectrum(u, lambda);
  }
  return ChannelSpec(u, matrix_from_json(beta));
}

json phases_to_json(const PhaseVector& pv) {
  return {{"n", pv.n}, {"angles", pv.angles}};
}

PhaseVector phases_from_json(const json& j) {
  const int n = positive_int(field(j, "n"), "n");
  const json& a = field(j, "angles");
  if (!a.is_array()) throw ParseError("angles must be an array");
  std::vector<double> angles;
  for (const json& v : a) angles.push_back(finite_number(v, "angle"));
  return PhaseVector::from_angles(n, std::move(angles));
}

json report_to_json(const FixedPointReport& rep) {
  return {{"rank", rep.rank},
          {"kernel_dim", rep.kernel_dim},
          {"unique", rep.unique},
          {"fixed_density",
           rep.fixed_density ? matrix_to_json(*rep.fixed_density) : json(nullptr)},
          {"residual", rep.residual},
          {"spectral_gap", rep.spectral_gap}};
}

json dim2_to_json(const dim2::Coefficients& c,
                  const dim2::UniquenessCertificate& cert,
                  const std::optional<ComplexMatrix>& fixed_point) {
  json coeffs = {{"alpha1", c.alpha1},
                 {"beta1", c.beta1},
                 {"alpha2", complex_pair(c.alpha2)},
                 {"beta2", complex_pair(c.beta2)},
                 {"a11", complex_pair(c.a11)},
                 {"a12", complex_pair(c.a12)},
                 {"a21", complex_pair(c.a21)},
                 {"a22", complex_pair(c.a22)},
                 {"p1", c.p1},
                 {"p2", c.p2}};
  return {{"coefficients", std::move(coeffs)},
          {"detK", complex_pair(cert.det_k)},
          {"z0", cert.z0 ? complex_pair(*cert.z0) : json(nullptr)},
          {"detReal", cert.det_real},
          {"detSystem", cert.det_system},
          {"unique", cert.unique},
          {"fixed_point", fixed_point ? matrix_to_json(*fixed_point) : json(nullptr)}};
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream out;
  out.precision(17);
  out << "step,delta,trace,min_eigenvalue\n";
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const ComplexMatrix& q = traj.states[k];
    out << k << ',';
    if (k > 0) out << traj.deltas[k - 1];
    out << ',' << q.trace().real() << ',' << min_hermitian_eigenvalue(q) << '\n';
  }
  return out.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace rqi::io
