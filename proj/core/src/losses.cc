// Copyright 2026 The WikiTransfer Authors.
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

#include "wikitransfer/losses.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wikitransfer {

namespace {

constexpr double kSumTolerance = 1e-9;

double Reduce(double sum, std::size_t length, Reduction reduction) {
  return reduction == Reduction::kMean ? sum / static_cast<double>(length) : sum;
}

void CheckSameShape(const SequenceDistributions& a,
                    const SequenceDistributions& b) {
  if (a.length() != b.length() || a.vocab_size() != b.vocab_size()) {
    throw std::invalid_argument("distribution sequences differ in shape");
  }
}

}  // namespace

StepDistribution::StepDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    throw std::invalid_argument("distribution needs at least two entries");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("probabilities must be finite and >= 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum));
  }
}

SequenceDistributions::SequenceDistributions(std::vector<StepDistribution> steps)
    : steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("sequence needs m >= 1");
  for (const StepDistribution& s : steps_) {
    if (s.size() != steps_.front().size()) {
      throw std::invalid_argument("vocabulary size differs across steps");
    }
  }
}

SequenceDistributions SequenceDistributions::FromRows(
    const std::vector<std::vector<double>>& rows) {
  std::vector<StepDistribution> steps;
  steps.reserve(rows.size());
  for (const auto& row : rows) steps.emplace_back(row);
  return SequenceDistributions(std::move(steps));
}

SequenceDistributions SequenceDistributions::Concat(
    const SequenceDistributions& other) const {
  std::vector<StepDistribution> steps = steps_;
  steps.insert(steps.end(), other.steps_.begin(), other.steps_.end());
  return SequenceDistributions(std::move(steps));
}

LossConfig LossConfig::ForFewShot(int supervised_examples) {
  LossConfig c;
  c.lambda = supervised_examples <= 10 ? 0.1 : 0.5;
  return c;
}

void LossConfig::Validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be >= 0");
  }
  if (!(epsilon > 0.0 && epsilon < 1e-6)) {
    throw std::invalid_argument("epsilon must lie in (0, 1e-6)");
  }
}

double NllLoss(const SequenceDistributions& dists,
               std::span<const std::size_t> targets, const LossConfig& config) {
  config.Validate();
  if (targets.size() != dists.length()) {
    throw std::invalid_argument("need exactly one target per step");
  }
  double sum = 0.0;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (targets[t] >= dists.vocab_size()) {
      throw std::out_of_range("target id " + std::to_string(targets[t]) +
                              " outside vocabulary");
    }
    sum -= std::log(std::max(dists[t][targets[t]], config.epsilon));
  }
  return Reduce(sum, dists.length(), config.reduction);
}

double Kl(const StepDistribution& p, const StepDistribution& q, double epsilon) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("KL arguments differ in vocabulary size");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    sum += p[i] * std::log(p[i] / std::max(q[i], epsilon));
  }
  // KL is non-negative; a tiny negative total is rounding noise.
  return std::max(sum, 0.0);
}

double ConsistencyLoss(const SequenceDistributions& orig,
                       const SequenceDistributions& aug,
                       const LossConfig& config) {
  config.Validate();
  CheckSameShape(orig, aug);
  double sum = 0.0;
  for (std::size_t t = 0; t < orig.length(); ++t) {
    sum += Kl(orig[t], aug[t], config.epsilon);
  }
  return Reduce(sum, orig.length(), config.reduction);
}

double CombinedLoss(const SequenceDistributions& x_dists,
                    const SequenceDistributions& aug_dists,
                    std::span<const std::size_t> targets,
                    const LossConfig& config) {
  return NllLoss(x_dists, targets, config) +
         config.lambda * ConsistencyLoss(x_dists, aug_dists, config);
}

double UdaLoss(const SequenceDistributions& orig_u,
               const SequenceDistributions& aug_u, const LossConfig& config) {
  return ConsistencyLoss(orig_u, aug_u, config);
}

std::vector<double> Softmax(std::span<const double> logits) {
  if (logits.empty()) return {};
  const double peak = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double z = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - peak);
    z += out[i];
  }
  for (double& v : out) v /= z;
  return out;
}

std::vector<double> GradKlWrtQLogits(const StepDistribution& p,
                                     std::span<const double> q_logits) {
  if (q_logits.size() != p.size()) {
    throw std::invalid_argument("logits and distribution differ in size");
  }
  std::vector<double> grad = Softmax(q_logits);
  for (std::size_t i = 0; i < grad.size(); ++i) grad[i] -= p[i];
  return grad;
}

EpochTrace AlternatingEpoch(std::span<const double> supervised_losses,
                            std::span<const double> uda_losses) {
  EpochTrace trace;
  for (std::size_t i = 0; i < supervised_losses.size(); ++i) {
    trace.steps.push_back({EpochPhase::kSupervised, i, supervised_losses[i]});
    trace.supervised_total += supervised_losses[i];
  }
  for (std::size_t i = 0; i < uda_losses.size(); ++i) {
    trace.steps.push_back({EpochPhase::kUnsupervised, i, uda_losses[i]});
    trace.unsupervised_total += uda_losses[i];
  }
  trace.total = trace.supervised_total + trace.unsupervised_total;
  return trace;
}

}  // namespace wikitransfer
