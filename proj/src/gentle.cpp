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

#include "gmplab/gentle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gmplab/error.hpp"

namespace gmplab {

namespace {

constexpr double kOperatorBoundTolerance = 1e-10;
constexpr double kLemmaSlack = 1e-9;
constexpr double kReferenceTolerance = 1e-10;

std::vector<Effect> label_in_order(std::vector<HermitianOperator> ops) {
  std::vector<Effect> effects;
  effects.reserve(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    effects.push_back({std::to_string(i), std::move(ops[i])});
  }
  return effects;
}

Povm projective(const std::vector<std::vector<Complex>>& basis) {
  std::vector<HermitianOperator> ops;
  for (const auto& ket : basis) ops.push_back(HermitianOperator::projector(ket));
  return Povm::from_operators(std::move(ops));
}

}  // namespace

// -------------------------------------------------------------------- Povm

Povm::Povm(std::vector<Effect> effects) : effects_(std::move(effects)), mode_(Mode::kQuantum) {
  check_completeness();
  for (const auto& e : effects_) {
    if (!is_psd(e.op, kPovmTolerance)) {
      throw ValidationError("Povm: effect '" + e.label + "' is not positive semidefinite");
    }
  }
}

Povm::Povm(std::vector<Effect> effects, const sqt::SqtParams& params)
    : effects_(std::move(effects)), mode_(Mode::kSqt) {
  check_completeness();
  for (const auto& e : effects_) {
    if (!sqt::qubit_effect_membership(e.op, params)) {
      throw ValidationError("Povm: effect '" + e.label + "' is outside the effect cone at tau = " +
                            std::to_string(params.tau()));
    }
  }
}

void Povm::check_completeness() const {
  if (effects_.empty()) throw ValidationError("Povm: no effects");
  const std::size_t d = effects_.front().op.dim();
  std::set<std::string> labels;
  ComplexMatrix total(d);
  for (const auto& e : effects_) {
    if (e.op.dim() != d) throw ValidationError("Povm: effects have different dimensions");
    if (!labels.insert(e.label).second) {
      throw ValidationError("Povm: duplicate label '" + e.label + "'");
    }
    total += e.op.matrix();
  }
  if (max_abs_diff(total, ComplexMatrix::identity(d)) > kPovmTolerance) {
    throw ValidationError("Povm: effects do not sum to the identity");
  }
}

Povm Povm::from_operators(std::vector<HermitianOperator> ops) {
  return Povm(label_in_order(std::move(ops)));
}

Povm Povm::computational(std::size_t dim) {
  std::vector<std::vector<Complex>> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(basis_ket(dim, i));
  return projective(basis);
}

Povm Povm::fourier(std::size_t dim) { return projective(sqt::fourier_basis(dim)); }

Povm Povm::trivial(std::size_t dim) {
  return Povm({Effect{"0", HermitianOperator::identity(dim)}});
}

std::size_t Povm::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < effects_.size(); ++i) {
    if (effects_[i].label == label) return i;
  }
  throw ValidationError("Povm: no outcome labelled '" + label + "'");
}

std::vector<double> Povm::probabilities(const HermitianOperator& state) const {
  std::vector<double> p;
  p.reserve(effects_.size());
  for (const auto& e : effects_) p.push_back(e.op.expectation(state));
  return p;
}

// -------------------------------------------------------------- CqEnsemble

CqEnsemble::CqEnsemble(std::vector<CqItem> items) : items_(std::move(items)) {
  if (items_.empty()) throw ValidationError("CqEnsemble: no items");
  double total = 0.0;
  for (const auto& item : items_) {
    if (item.probability < 0.0) throw ValidationError("CqEnsemble: negative probability");
    if (std::abs(item.state.trace() - 1.0) > 1e-12) {
      throw ValidationError("CqEnsemble: state '" + item.label + "' is not unit trace");
    }
    total += item.probability;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ValidationError("CqEnsemble: probabilities do not sum to 1");
  }
}

// ----------------------------------------------------------- GentleChannel

GentleChannel::GentleChannel(const Povm& povm) {
  for (const auto& e : povm.effects()) {
    labels_.push_back(e.label);
    sqrt_effects_.push_back(psd_sqrt(e.op));
  }
}

ComplexMatrix GentleChannel::lifted(std::size_t x, std::size_t total_dim) const {
  const ComplexMatrix& k = sqrt_effects_[x].matrix();
  if (total_dim == k.dim()) return k;
  if (total_dim % k.dim() != 0) {
    throw ValidationError("GentleChannel: state dimension is not a multiple of the effect dimension");
  }
  return kron(k, ComplexMatrix::identity(total_dim / k.dim()));
}

HermitianOperator GentleChannel::apply_branch(std::size_t x, const HermitianOperator& rho) const {
  return sandwich(lifted(x, rho.dim()), rho);
}

std::vector<Branch> GentleChannel::apply(const HermitianOperator& rho) const {
  std::vector<Branch> branches;
  branches.reserve(labels_.size());
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    HermitianOperator out = apply_branch(x, rho);
    const double weight = out.trace();
    branches.push_back({labels_[x], std::move(out), weight});
  }
  return branches;
}

GentleChannel gentle_channel(const Povm& povm) { return GentleChannel(povm); }

// ----------------------------------------------------------- lemma & GMP

GentleLemmaReport gentle_lemma_check(const HermitianOperator& rho, const HermitianOperator& x_op) {
  if (rho.dim() != x_op.dim()) throw ValidationError("gentle_lemma_check: dimension mismatch");
  if (std::abs(rho.trace() - 1.0) > kOperatorBoundTolerance || !is_psd(rho)) {
    throw ValidationError("gentle_lemma_check: rho must be a density operator");
  }
  const Spectrum sx = eigh(x_op);
  if (sx.eigenvalues.back() < -kOperatorBoundTolerance ||
      sx.eigenvalues.front() > 1.0 + kOperatorBoundTolerance) {
    throw ValidationError("gentle_lemma_check: X must satisfy 0 <= X <= I");
  }
  const HermitianOperator root = psd_sqrt(x_op);
  GentleLemmaReport report;
  report.lhs = trace_norm(rho - sandwich(root, rho));
  report.rhs = 2.0 * std::sqrt(std::max(0.0, 1.0 - rho.expectation(x_op)));
  report.holds = report.lhs <= report.rhs + kLemmaSlack;
  return report;
}

std::vector<DisturbanceReport> gmp_disturbance(
    const Povm& povm, const CqEnsemble& ensemble,
    const std::optional<std::vector<HermitianOperator>>& references) {
  if (povm.mode() != Povm::Mode::kQuantum) {
    throw ValidationError("gmp_disturbance: requires a quantum-mode POVM");
  }
  if (references && references->size() != ensemble.size()) {
    throw ValidationError("gmp_disturbance: one reference state per ensemble item is required");
  }
  const GentleChannel channel(povm);
  std::vector<DisturbanceReport> reports;
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    const CqItem& item = ensemble.items()[i];
    const std::size_t x = povm.index_of(item.label);
    const HermitianOperator* phi = &item.state;
    if (references) {
      const HermitianOperator& joint = (*references)[i];
      if (joint.subsystem_dims().size() < 2 || joint.subsystem_dims().front() != item.state.dim()) {
        throw ValidationError("gmp_disturbance: reference state must be on A (x) R");
      }
      const HermitianOperator reduced = partial_trace(joint, {0});
      if (max_abs_diff(reduced.matrix(), item.state.matrix()) > kReferenceTolerance) {
        throw ValidationError("gmp_disturbance: reference reduction differs from ensemble state '" +
                              item.label + "'");
      }
      phi = &joint;
    }

    // The X register is classical, so the trace norm splits over its blocks:
    // the matched block sqrt(M_x) phi sqrt(M_x) - phi plus the weights of the others.
    double unmatched = 0.0;
    HermitianOperator matched;
    for (std::size_t y = 0; y < channel.size(); ++y) {
      HermitianOperator branch = channel.apply_branch(y, *phi);
      if (y == x) {
        matched = std::move(branch);
      } else {
        unmatched += branch.trace();
      }
    }
    DisturbanceReport report;
    report.label = item.label;
    report.eps = std::max(0.0, 1.0 - povm[x].op.expectation(item.state));
    report.distance = 0.5 * (trace_norm(matched - *phi) + unmatched);
    report.bound = eta_quantum(report.eps);
    report.holds = report.distance <= report.bound + kLemmaSlack;
    reports.push_back(std::move(report));
  }
  return reports;
}

// ------------------------------------------------- uncertainties relation

Povm simultaneous_povm(const Povm& mu, const Povm& nu) {
  if (mu.dim() != nu.dim()) throw ValidationError("simultaneous_povm: dimension mismatch");
  const GentleChannel first(mu);
  std::vector<Effect> effects;
  effects.reserve(mu.size() * nu.size());
  for (std::size_t x = 0; x < mu.size(); ++x) {
    for (std::size_t y = 0; y < nu.size(); ++y) {
      effects.push_back(
          {mu[x].label + "," + nu[y].label, sandwich(first.kraus()[x], nu[y].op)});
    }
  }
  return Povm(std::move(effects));
}

UncertaintyReport partitioned_uncertainty_check(const Povm& mu, const Povm& nu,
                                                const std::vector<OutcomeBlock>& partition,
                                                const PairStates& states, const EtaFunction& eta,
                                                std::optional<double> eps) {
  if (partition.empty()) throw ValidationError("partition: no blocks");
  auto check_cover = [](const std::vector<OutcomeBlock>& blocks, std::size_t outcomes,
                        bool use_mu) {
    std::vector<int> seen(outcomes, 0);
    for (const auto& block : blocks) {
      const auto& members = use_mu ? block.mu : block.nu;
      if (members.empty()) throw ValidationError("partition: empty block");
      for (std::size_t o : members) {
        if (o >= outcomes) throw ValidationError("partition: outcome index out of range");
        ++seen[o];
      }
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
      throw ValidationError("partition: blocks are not disjoint and exhaustive");
    }
  };
  check_cover(partition, mu.size(), true);
  check_cover(partition, nu.size(), false);

  struct Prepared {
    std::size_t block, x, y;
    const HermitianOperator* state;
  };
  std::vector<Prepared> prepared;
  double worst = 0.0;
  for (std::size_t b = 0; b < partition.size(); ++b) {
    for (std::size_t x : partition[b].mu) {
      for (std::size_t y : partition[b].nu) {
        auto it = states.find({x, y});
        if (it == states.end()) {
          throw ValidationError("partitioned_uncertainty_check: missing state for (" +
                                std::to_string(x) + "," + std::to_string(y) + ")");
        }
        const double miss_x = 1.0 - mu[x].op.expectation(it->second);
        const double miss_y = 1.0 - nu[y].op.expectation(it->second);
        worst = std::max({worst, miss_x, miss_y});
        prepared.push_back({b, x, y, &it->second});
      }
    }
  }
  if (eps && *eps + 1e-12 < worst) {
    throw ValidationError("partitioned_uncertainty_check: preparation thresholds fail at eps = " +
                          std::to_string(*eps));
  }

  UncertaintyReport report;
  report.eps = std::min(1.0, eps ? *eps : worst);
  report.eta_eps = eta(report.eps);
  report.bound = 1.0 - 2.0 * report.eta_eps;
  const Povm xi = simultaneous_povm(mu, nu);
  report.all_hold = true;
  for (const auto& p : prepared) {
    PairCheck check;
    check.block = p.block;
    check.x = p.x;
    check.y = p.y;
    check.probability = xi[p.x * nu.size() + p.y].op.expectation(*p.state);
    check.bound = report.bound;
    check.holds = check.probability >= report.bound - kLemmaSlack;
    report.all_hold = report.all_hold && check.holds;
    report.pairs.push_back(check);
  }
  return report;
}

}  // namespace gmplab
