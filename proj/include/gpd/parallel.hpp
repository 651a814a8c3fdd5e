// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace gpd {

// Process-wide cap on worker threads (CLI --jobs). 0 = hardware concurrency.
void set_max_jobs(int jobs);
int max_jobs();

// Runs fn(i) for i in [begin, end) on up to max_jobs() threads using a static
// block partition. Callers must only write to disjoint, index-addressed slots;
// under that discipline results are identical for any thread count.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn);

}  // namespace gpd
