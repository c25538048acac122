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

#include <vector>

#include "segaug/scoring.hpp"

namespace segaug {

ErrorCounts& ErrorCounts::operator+=(const ErrorCounts& o) {
  hits += o.hits;
  substitutions += o.substitutions;
  deletions += o.deletions;
  insertions += o.insertions;
  ref_len += o.ref_len;
  return *this;
}

ErrorCounts EditAlign(std::span<const std::string> ref,
                      std::span<const std::string> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  const std::size_t w = m + 1;
  std::vector<std::int32_t> cost((n + 1) * w);
  for (std::size_t i = 0; i <= n; ++i) cost[i * w] = static_cast<std::int32_t>(i);
  for (std::size_t j = 0; j <= m; ++j) cost[j] = static_cast<std::int32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::int32_t diag =
          cost[(i - 1) * w + j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      const std::int32_t del = cost[(i - 1) * w + j] + 1;
      const std::int32_t ins = cost[i * w + j - 1] + 1;
      cost[i * w + j] = std::min(diag, std::min(del, ins));
    }
  }

  ErrorCounts c;
  c.ref_len = static_cast<std::int64_t>(n);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const std::int32_t here = cost[i * w + j];
    if (i > 0 && j > 0) {
      const bool same = ref[i - 1] == hyp[j - 1];
      if (here == cost[(i - 1) * w + j - 1] + (same ? 0 : 1)) {
        same ? ++c.hits : ++c.substitutions;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && here == cost[(i - 1) * w + j] + 1) {
      ++c.deletions;
      --i;
    } else {
      ++c.insertions;
      --j;
    }
  }
  return c;
}

}  // namespace segaug
