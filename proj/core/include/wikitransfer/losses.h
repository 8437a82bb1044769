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

// Reference math for the supervised, consistency and UDA objectives over
// caller-supplied output distributions. No model is involved: each step
// distribution stands for the decoder's output at one teacher-forced
// position, given the gold prefix and either the original or the
// round-trip-translated input.

#ifndef WIKITRANSFER_LOSSES_H_
#define WIKITRANSFER_LOSSES_H_

#include <cstddef>
#include <span>
#include <vector>

namespace wikitransfer {

// Probability vector over the vocabulary: entries >= 0, sum within 1e-9 of 1,
// at least two entries. The constructor throws std::invalid_argument.
class StepDistribution {
 public:
  explicit StepDistribution(std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// One distribution per target position; all over the same vocabulary.
class SequenceDistributions {
 public:
  explicit SequenceDistributions(std::vector<StepDistribution> steps);
  // Convenience: validates every row.
  static SequenceDistributions FromRows(
      const std::vector<std::vector<double>>& rows);

  std::size_t length() const { return steps_.size(); }
  std::size_t vocab_size() const { return steps_.front().size(); }
  const StepDistribution& operator[](std::size_t t) const { return steps_[t]; }
  const std::vector<StepDistribution>& steps() const { return steps_; }

  // This sequence followed by `other`. Vocabularies must match.
  SequenceDistributions Concat(const SequenceDistributions& other) const;

 private:
  std::vector<StepDistribution> steps_;
};

enum class Reduction { kSum, kMean };

struct LossConfig {
  double lambda = 0.5;
  // Floor applied to probabilities inside logs and divisions.
  double epsilon = 1e-12;
  // Sum over timesteps is canonical; kMean divides by the sequence length.
  Reduction reduction = Reduction::kSum;

  // lambda 0.5 for 100-example runs, 0.1 for 10-example runs.
  static LossConfig ForFewShot(int supervised_examples);

  // Throws std::invalid_argument unless lambda >= 0 and 0 < epsilon < 1e-6.
  void Validate() const;
};

// -sum_t log(max(p_t[target_t], epsilon)). Throws std::out_of_range for a
// target id outside the vocabulary and std::invalid_argument on a length
// mismatch.
double NllLoss(const SequenceDistributions& dists,
               std::span<const std::size_t> targets,
               const LossConfig& config = {});

// sum_i p_i log(p_i / max(q_i, epsilon)) with 0 log 0 = 0. Throws
// std::invalid_argument on a size mismatch.
double Kl(const StepDistribution& p, const StepDistribution& q,
          double epsilon = 1e-12);

// sum_t KL(orig_t || aug_t). The original-input side is a constant target:
// gradients flow only through `aug` (see GradKlWrtQLogits).
double ConsistencyLoss(const SequenceDistributions& orig,
                       const SequenceDistributions& aug,
                       const LossConfig& config = {});

// NllLoss(x) + lambda * ConsistencyLoss(x, aug).
double CombinedLoss(const SequenceDistributions& x_dists,
                    const SequenceDistributions& aug_dists,
                    std::span<const std::size_t> targets,
                    const LossConfig& config = {});

// Consistency term for pseudo-labelled unlabelled examples. Same formula as
// ConsistencyLoss; the teacher-forcing prefix comes from a pseudo label.
double UdaLoss(const SequenceDistributions& orig_u,
               const SequenceDistributions& aug_u,
               const LossConfig& config = {});

std::vector<double> Softmax(std::span<const double> logits);

// d/dz KL(p || softmax(z)) = softmax(z) - p.
std::vector<double> GradKlWrtQLogits(const StepDistribution& p,
                                     std::span<const double> q_logits);

// Epoch bookkeeping for semi-supervised training: every supervised loss,
// then every unsupervised (UDA) loss.
enum class EpochPhase { kSupervised, kUnsupervised };

struct EpochStep {
  EpochPhase phase;
  std::size_t index;  // within its phase
  double loss;
};

struct EpochTrace {
  std::vector<EpochStep> steps;
  double supervised_total = 0.0;
  double unsupervised_total = 0.0;
  double total = 0.0;
};

EpochTrace AlternatingEpoch(std::span<const double> supervised_losses,
                            std::span<const double> uda_losses);

}  // namespace wikitransfer

#endif  // WIKITRANSFER_LOSSES_H_
