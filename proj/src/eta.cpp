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

#include "gmplab/eta.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "gmplab/error.hpp"

namespace gmplab {

namespace {

constexpr double kInverseTolerance = 1e-12;

void validate(const std::string& name, const EtaFunction::Evaluator& f) {
  if (!f) throw ValidationError("EtaFunction '" + name + "': empty evaluator");
  if (!(f(0.0) >= 0.0)) throw ValidationError("EtaFunction '" + name + "': eta(0) is negative");
  if (!(f(1e-12) < 1e-5)) {
    throw ValidationError("EtaFunction '" + name + "': eta does not vanish at zero");
  }
  double previous = f(0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double current = f(i * 1e-3);
    if (!(current > previous)) {
      throw ValidationError("EtaFunction '" + name + "': not strictly increasing near eps = " +
                            std::to_string(i * 1e-3));
    }
    previous = current;
  }
}

}  // namespace

double eta_quantum(double eps) { return std::sqrt(eps) + eps / 2.0; }

EtaFunction::EtaFunction(std::string name, Evaluator evaluator)
    : name_(std::move(name)), evaluator_(std::move(evaluator)) {
  validate(name_, evaluator_);
}

EtaFunction EtaFunction::quantum() { return EtaFunction("quantum", eta_quantum); }

EtaFunction EtaFunction::piecewise_linear(std::string name,
                                          std::vector<std::pair<double, double>> table) {
  if (table.size() < 2) throw ValidationError("eta table needs at least two rows");
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (!(table[i].first > table[i - 1].first)) {
      throw ValidationError("eta table: eps column must be strictly increasing");
    }
  }
  if (table.front().first != 0.0 || table.back().first != 1.0) {
    throw ValidationError("eta table must span eps = 0 to eps = 1");
  }
  auto rows = std::make_shared<const std::vector<std::pair<double, double>>>(std::move(table));
  Evaluator f = [rows](double eps) {
    const auto& t = *rows;
    if (eps <= t.front().first) return t.front().second;
    if (eps >= t.back().first) return t.back().second;
    auto hi = std::upper_bound(t.begin(), t.end(), eps,
                               [](double v, const auto& row) { return v < row.first; });
    auto lo = hi - 1;
    const double w = (eps - lo->first) / (hi->first - lo->first);
    return lo->second + w * (hi->second - lo->second);
  };
  return EtaFunction(std::move(name), std::move(f));
}

namespace {

double parse_field(std::string field) {
  const auto first = field.find_first_not_of(" \t");
  const auto last = field.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty field");
  field = field.substr(first, last - first + 1);
  std::size_t used = 0;
  const double v = std::stod(field, &used);
  if (used != field.size()) throw std::invalid_argument("trailing characters");
  return v;
}

}  // namespace

EtaFunction EtaFunction::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open eta table " + path);
  std::vector<std::pair<double, double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string a, b;
    if (!std::getline(fields, a, ',') || !std::getline(fields, b)) {
      throw ValidationError("eta table: malformed row '" + line + "'");
    }
    try {
      rows.emplace_back(parse_field(a), parse_field(b));
    } catch (const std::exception&) {
      if (first) {  // header
        first = false;
        continue;
      }
      throw ValidationError("eta table: non-numeric row '" + line + "'");
    }
    first = false;
  }
  return piecewise_linear("file:" + path, std::move(rows));
}

double eta_inverse(const EtaFunction& eta, double y) {
  const double lo_value = eta(0.0);
  const double hi_value = eta(1.0);
  if (!(y >= lo_value && y <= hi_value)) {
    throw DomainError("eta_inverse: " + std::to_string(y) + " outside [" +
                      std::to_string(lo_value) + ", " + std::to_string(hi_value) + "]");
  }
  if (y == lo_value) return 0.0;
  if (y == hi_value) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  // Run until the bracket collapses to adjacent doubles.
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eta(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double x = std::abs(eta(lo) - y) <= std::abs(eta(hi) - y) ? lo : hi;
  if (std::abs(eta(x) - y) > kInverseTolerance) {
    throw ToleranceError("eta_inverse: residual above 1e-12 (eta may be discontinuous)");
  }
  return x;
}

}  // namespace gmplab
