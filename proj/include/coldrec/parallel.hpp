#pragma once

#include <cstddef>
#include <functional>

namespace coldrec {

// Worker cap shared by every parallel loop. 0 means "not set yet": the first
// query falls back to COLDREC_THREADS, then to 1.
void set_max_threads(int n);
int max_threads();

// Runs fn(i) for every i in [0, n) and blocks until all calls finish.
// Callers must write results to disjoint slots so the schedule cannot
// influence the outcome.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace coldrec
