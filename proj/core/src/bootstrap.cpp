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

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "segaug/draws.hpp"
#include "segaug/error.hpp"
#include "segaug/scoring.hpp"

namespace segaug {

namespace {

void CheckOptions(std::size_t n, const BootstrapOptions& options) {
  if (n == 0) {
    throw Error(ErrorCode::kUndefinedMetric, "bootstrap over an empty corpus");
  }
  if (options.replicates <= 0) {
    throw Error(ErrorCode::kParameter, "bootstrap needs at least one replicate");
  }
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    throw Error(ErrorCode::kParameter, "alpha must lie in (0, 1)");
  }
}

template <typename T>
std::vector<const T*> ById(std::span<const T> stats) {
  std::vector<const T*> sorted;
  sorted.reserve(stats.size());
  for (const auto& s : stats) sorted.push_back(&s);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const T* a, const T* b) { return a->id < b->id; });
  return sorted;
}

// Calls `visit(index)` N times with indices drawn for replicate b.
template <typename Visit>
void Resample(std::uint64_t seed, int b, std::size_t n, Visit&& visit) {
  SeededDraws draws(seed, "bootstrap/" + std::to_string(b));
  const auto hi = static_cast<std::int64_t>(n) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    visit(static_cast<std::size_t>(draws.UniformInt(0, hi)));
  }
}

BootstrapResult Summarize(double mean, std::vector<double> replicates,
                          const BootstrapOptions& options) {
  BootstrapResult r;
  r.mean = mean;
  r.replicates = options.replicates;
  r.alpha = options.alpha;
  const auto below = std::count_if(replicates.begin(), replicates.end(),
                                   [](double v) { return v < 0.0; });
  r.fraction_below_zero =
      static_cast<double>(below) / static_cast<double>(replicates.size());
  std::tie(r.lower, r.upper) = PercentileBounds(std::move(replicates), options.alpha);
  return r;
}

}  // namespace

std::pair<double, double> PercentileBounds(std::vector<double> replicates,
                                           double alpha) {
  if (replicates.empty()) {
    throw Error(ErrorCode::kUndefinedMetric, "no bootstrap replicates");
  }
  std::sort(replicates.begin(), replicates.end());
  const auto b = static_cast<double>(replicates.size());
  auto lo = static_cast<std::size_t>(std::floor(b * alpha / 2.0));
  auto hi = static_cast<std::size_t>(std::ceil(b * (1.0 - alpha / 2.0)));
  hi = std::clamp<std::size_t>(hi, 1, replicates.size()) - 1;
  lo = std::min(lo, hi);
  return {replicates[lo], replicates[hi]};
}

std::vector<double> BootstrapReplicates(std::span<const UtteranceStats> stats,
                                        const CorpusMetric& metric,
                                        const BootstrapOptions& options) {
  CheckOptions(stats.size(), options);
  const auto sorted = ById(stats);
  std::vector<double> out(static_cast<std::size_t>(options.replicates));
  for (int b = 0; b < options.replicates; ++b) {
    ErrorCounts agg;
    Resample(options.seed, b, sorted.size(),
             [&](std::size_t i) { agg += sorted[i]->counts; });
    out[static_cast<std::size_t>(b)] = metric(agg);
  }
  return out;
}

BootstrapResult BootstrapCi(std::span<const UtteranceStats> stats,
                            const CorpusMetric& metric,
                            const BootstrapOptions& options) {
  auto replicates = BootstrapReplicates(stats, metric, options);
  ErrorCounts total;
  for (const auto& s : stats) total += s.counts;
  return Summarize(metric(total), std::move(replicates), options);
}

std::vector<double> BootstrapReplicates(std::span<const PairedStats> stats,
                                        const PairedMetric& metric,
                                        const BootstrapOptions& options) {
  CheckOptions(stats.size(), options);
  const auto sorted = ById(stats);
  std::vector<double> out(static_cast<std::size_t>(options.replicates));
  for (int b = 0; b < options.replicates; ++b) {
    ErrorCounts base;
    ErrorCounts sys;
    Resample(options.seed, b, sorted.size(), [&](std::size_t i) {
      base += sorted[i]->baseline;
      sys += sorted[i]->system;
    });
    out[static_cast<std::size_t>(b)] = metric(base, sys);
  }
  return out;
}

BootstrapResult BootstrapCi(std::span<const PairedStats> stats,
                            const PairedMetric& metric,
                            const BootstrapOptions& options) {
  auto replicates = BootstrapReplicates(stats, metric, options);
  ErrorCounts base;
  ErrorCounts sys;
  for (const auto& s : stats) {
    base += s.baseline;
    sys += s.system;
  }
  return Summarize(metric(base, sys), std::move(replicates), options);
}

}  // namespace segaug
