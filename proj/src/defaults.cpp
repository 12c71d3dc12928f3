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

#include "rqi/defaults.hpp"

namespace rqi::defaults {

std::vector<double> environment_spectrum(int n) {
  if (n == 2) return {0.7, 0.3};
  if (n == 3) return {0.5, 0.3, 0.2};
  // n, n-1, ..., 1 normalized.
  std::vector<double> out;
  const double total = 0.5 * n * (n + 1);
  for (int k = n; k >= 1; --k) out.push_back(k / total);
  return out;
}

double min_margin(int n) {
  if (n <= 6) return kMinMargin;
  const double m = static_cast<double>(n) * n;
  return kMinMargin * (36.0 / m) * (36.0 / m);
}

}  // namespace rqi::defaults
