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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmplab/eta.hpp"
#include "gmplab/linalg.hpp"
#include "gmplab/sqt.hpp"

namespace gmplab {

inline constexpr double kPovmTolerance = 1e-10;

struct Effect {
  std::string label;
  HermitianOperator op;
};

/// Finite measurement: labelled effects summing to the identity.
class Povm {
 public:
  enum class Mode { kQuantum, kSqt };

  /// Quantum mode: every effect must be PSD.
  explicit Povm(std::vector<Effect> effects);
  /// Stretched mode: every effect must lie in the qubit effect cone at `params`.
  Povm(std::vector<Effect> effects, const sqt::SqtParams& params);

  /// Effects labelled "0", "1", ...
  static Povm from_operators(std::vector<HermitianOperator> ops);
  static Povm computational(std::size_t dim);
  /// Projective measurement onto the Fourier basis; {|+>, |->} for a qubit.
  static Povm fourier(std::size_t dim);
  static Povm trivial(std::size_t dim);

  Mode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return effects_.size(); }
  std::size_t dim() const noexcept { return effects_.front().op.dim(); }
  const std::vector<Effect>& effects() const noexcept { return effects_; }
  const Effect& operator[](std::size_t i) const { return effects_[i]; }
  /// Throws ValidationError when no effect carries `label`.
  std::size_t index_of(const std::string& label) const;

  std::vector<double> probabilities(const HermitianOperator& state) const;

 private:
  void check_completeness() const;

  std::vector<Effect> effects_;
  Mode mode_ = Mode::kQuantum;
};

struct CqItem {
  double probability = 0.0;
  std::string label;
  HermitianOperator state;
};

/// Classical-quantum ensemble sum_x p(x) |x><x| (x) phi_x, stored as its items.
class CqEnsemble {
 public:
  explicit CqEnsemble(std::vector<CqItem> items);
  const std::vector<CqItem>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }

 private:
  std::vector<CqItem> items_;
};

struct Branch {
  std::string label;
  HermitianOperator state;  // unnormalized sqrt(M_x) rho sqrt(M_x)
  double weight = 0.0;      // Tr[M_x rho]
};

/// rho -> sum_x sqrt(M_x) rho sqrt(M_x) (x) |x><x|, kept as one branch per
/// outcome. Inputs on A (x) R are accepted when A is the leading factor; the
/// Kraus operators then act as sqrt(M_x) (x) I_R.
class GentleChannel {
 public:
  explicit GentleChannel(const Povm& povm);

  std::vector<Branch> apply(const HermitianOperator& rho) const;
  /// Branch x only.
  HermitianOperator apply_branch(std::size_t x, const HermitianOperator& rho) const;
  const std::vector<HermitianOperator>& kraus() const noexcept { return sqrt_effects_; }
  std::size_t size() const noexcept { return labels_.size(); }

 private:
  ComplexMatrix lifted(std::size_t x, std::size_t total_dim) const;

  std::vector<std::string> labels_;
  std::vector<HermitianOperator> sqrt_effects_;
};

GentleChannel gentle_channel(const Povm& povm);

struct GentleLemmaReport {
  double lhs = 0.0;  // || rho - sqrt(X) rho sqrt(X) ||_1
  double rhs = 0.0;  // 2 sqrt(1 - Tr[rho X])
  bool holds = false;
};

/// Requires rho PSD with unit trace and 0 <= X <= I (each within 1e-10).
GentleLemmaReport gentle_lemma_check(const HermitianOperator& rho, const HermitianOperator& x_op);

struct DisturbanceReport {
  std::string label;
  double eps = 0.0;       // 1 - Tr[M_x phi_x]
  double distance = 0.0;  // (1/2) || E (x) id (phi_x) - phi_x (x) |x><x| ||_1
  double bound = 0.0;     // eta_quantum(eps)
  bool holds = false;
};

/// Disturbance of the gentle channel on each ensemble member. When
/// `references` is given, entry i is a state on A (x) R whose A-reduction must
/// equal the i-th ensemble state; the distance is then taken on A R X.
std::vector<DisturbanceReport> gmp_disturbance(
    const Povm& povm, const CqEnsemble& ensemble,
    const std::optional<std::vector<HermitianOperator>>& references = std::nullopt);

/// Effects sqrt(M_x) N_y sqrt(M_x), ordered row-major in (x, y) and labelled "x,y".
Povm simultaneous_povm(const Povm& mu, const Povm& nu);

/// One block of an outcome partition: outcome indices of mu and of nu.
struct OutcomeBlock {
  std::vector<std::size_t> mu;
  std::vector<std::size_t> nu;
};

struct PairCheck {
  std::size_t block = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  double probability = 0.0;  // p((x,y) | phi_xy, xi)
  double bound = 0.0;        // 1 - 2 eta(eps)
  bool holds = false;
};

struct UncertaintyReport {
  double eps = 0.0;
  double eta_eps = 0.0;
  double bound = 0.0;
  std::vector<PairCheck> pairs;
  bool all_hold = false;
};

using PairStates = std::map<std::pair<std::size_t, std::size_t>, HermitianOperator>;

/// Refined uncertainties relation on an outcome partition. Every (x, y) inside
/// a block needs a state in `states`. When `eps` is omitted the smallest eps
/// meeting the preparation thresholds is used; when given, the thresholds are
/// verified against it first.
UncertaintyReport partitioned_uncertainty_check(const Povm& mu, const Povm& nu,
                                                const std::vector<OutcomeBlock>& partition,
                                                const PairStates& states, const EtaFunction& eta,
                                                std::optional<double> eps = std::nullopt);

}  // namespace gmplab
