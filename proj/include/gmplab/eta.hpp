// Copyright 2026 The gmplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gmplab {

/// sqrt(eps) + eps/2, the disturbance bound of the gentle measurement lemma.
double eta_quantum(double eps);

/// A disturbance-bound function eta on [0, 1]. Construction checks that eta is
/// nonnegative, vanishes at zero (eta(1e-12) < 1e-5) and is strictly
/// increasing on a 1e-3 grid.
class EtaFunction {
 public:
  using Evaluator = std::function<double(double)>;

  EtaFunction(std::string name, Evaluator evaluator);

  static EtaFunction quantum();
  /// Piecewise-linear interpolation of (eps, eta) rows. Rows must have strictly
  /// increasing eps, start at eps = 0 and end at eps = 1.
  static EtaFunction piecewise_linear(std::string name,
                                      std::vector<std::pair<double, double>> table);
  /// Reads a two-column `eps,eta` CSV (header line optional).
  static EtaFunction from_csv(const std::string& path);

  double operator()(double eps) const { return evaluator_(eps); }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  Evaluator evaluator_;
};

/// Bisection inverse on [0, 1]. Throws DomainError when y lies outside [eta(0), eta(1)].
double eta_inverse(const EtaFunction& eta, double y);

}  // namespace gmplab
