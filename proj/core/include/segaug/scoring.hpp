// Copyright (c) 2026, The segaug Authors. All rights reserved.
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

#ifndef SEGAUG_SCORING_HPP_
#define SEGAUG_SCORING_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace segaug {

struct ErrorCounts {
  std::int64_t hits = 0;
  std::int64_t substitutions = 0;
  std::int64_t deletions = 0;
  std::int64_t insertions = 0;
  std::int64_t ref_len = 0;

  std::int64_t errors() const { return substitutions + deletions + insertions; }
  ErrorCounts& operator+=(const ErrorCounts& o);
  bool operator==(const ErrorCounts&) const = default;
};

/// Unit-cost Levenshtein alignment of word sequences. The backtrace prefers
/// the diagonal (hit or substitution), then deletion, then insertion when
/// costs tie.
ErrorCounts EditAlign(std::span<const std::string> ref,
                      std::span<const std::string> hyp);

/// Corpus-level rates in percent.
struct ErrorRates {
  double wer = 0.0;
  double sub = 0.0;
  double del = 0.0;
  double ins = 0.0;
};

/// Throws kUndefinedMetric when ref_len is 0.
ErrorRates Rates(const ErrorCounts& totals);
double WerPercent(const ErrorCounts& totals);

/// 100 * (base - updated) / base. Throws kUndefinedMetric when base is 0.
double RelativeReduction(double base, double updated);

struct UtteranceStats {
  std::string id;
  ErrorCounts counts;
};

/// Per-utterance counts of a baseline and a new system on the same
/// reference, for paired resampling.
struct PairedStats {
  std::string id;
  ErrorCounts baseline;
  ErrorCounts system;
};

struct BootstrapOptions {
  int replicates = 5000;
  double alpha = 0.05;
  std::uint64_t seed = 0;
};

struct BootstrapResult {
  double mean = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int replicates = 0;
  double alpha = 0.0;
  /// Share of replicates strictly below zero.
  double fraction_below_zero = 0.0;
};

using CorpusMetric = std::function<double(const ErrorCounts&)>;
using PairedMetric =
    std::function<double(const ErrorCounts& baseline, const ErrorCounts& system)>;

// Percentile bootstrap over utterances. Input is sorted by id first, so the
// result does not depend on input order. Replicate b draws its N indices
// from a stream keyed by (seed, b), which makes replicates independent of
// evaluation order. Each replicate aggregates counts before evaluating the
// metric (corpus ratio, not mean of per-utterance ratios).

std::vector<double> BootstrapReplicates(std::span<const UtteranceStats> stats,
                                        const CorpusMetric& metric,
                                        const BootstrapOptions& options);
BootstrapResult BootstrapCi(std::span<const UtteranceStats> stats,
                            const CorpusMetric& metric,
                            const BootstrapOptions& options);

/// Both systems are resampled with the same indices.
std::vector<double> BootstrapReplicates(std::span<const PairedStats> stats,
                                        const PairedMetric& metric,
                                        const BootstrapOptions& options);
BootstrapResult BootstrapCi(std::span<const PairedStats> stats,
                            const PairedMetric& metric,
                            const BootstrapOptions& options);

/// Lower/upper percentile bounds of an unsorted replicate set:
/// sorted[floor(B*alpha/2)] and sorted[ceil(B*(1-alpha/2)) - 1].
std::pair<double, double> PercentileBounds(std::vector<double> replicates,
                                           double alpha);

/// Renders "mean_[lower, upper]" with `decimals` digits after the point.
std::string FormatInterval(const BootstrapResult& r, int decimals = 2);
std::string FormatFixed(double value, int decimals);

}  // namespace segaug

#endif  // SEGAUG_SCORING_HPP_
