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

#ifndef RQI_JSON_IO_HPP
#define RQI_JSON_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "rqi/channel.hpp"
#include "rqi/circulant.hpp"
#include "rqi/dim2.hpp"
#include "rqi/fixed_point.hpp"

namespace rqi::io {

using nlohmann::json;

// Matrix: {"rows": R, "cols": C, "entries": [[re, im], ...]} row-major.
json matrix_to_json(const ComplexMatrix& m);
/// Throws ParseError on malformed input or non-finite entries.
ComplexMatrix matrix_from_json(const json& j);

// Channel: {"n": n, "beta": <matrix> | {"spectrum": [...]}, "U": <matrix>}.
// A diagonal beta is written in spectrum form.
json spec_to_json(const ChannelSpec& spec);
ChannelSpec spec_from_json(const json& j);

// Phases: {"n": n, "angles": [...]}.
json phases_to_json(const PhaseVector& pv);
PhaseVector phases_from_json(const json& j);

json report_to_json(const FixedPointReport& rep);
json dim2_to_json(const dim2::Coefficients& c,
                  const dim2::UniquenessCertificate& cert,
                  const std::optional<ComplexMatrix>& fixed_point);

/// step,delta,trace,min_eigenvalue; step 0 is the initial state with an
/// empty delta.
std::string trajectory_csv(const Trajectory& traj);

/// Throws ParseError if the file cannot be read or is not valid JSON.
json read_json_file(const std::string& path);
/// Two-space indented dump followed by a newline.
std::string dump(const json& j);

}  // namespace rqi::io

#endif  // RQI_JSON_IO_HPP
