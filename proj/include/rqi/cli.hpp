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

#ifndef RQI_CLI_HPP
#define RQI_CLI_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace rqi::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kValidationError = 3,
  kNumericalError = 4,
};

/// Runs the `rqi` command line. Results go to `out` unless --out is given;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "i,1,-0.5+0.5i,..." into complex values. Throws rqi::ParseError.
std::vector<std::complex<double>> parse_complex_list(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

}  // namespace rqi::cli

#endif  // RQI_CLI_HPP
