// Index-parallel map: every index writes only its own output slot, so the
// result is identical for any worker count or schedule.
#pragma once

#include <cstddef>
#include <functional>

namespace ledyn {

// workers = 0 picks hardware_concurrency; set_default_workers overrides the
// process-wide default (CLI --workers)
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  unsigned workers = 0);
void set_default_workers(unsigned workers);
unsigned default_workers();

} // namespace ledyn
