#pragma once

#include <functional>

namespace parab {

// Effective worker count: set_worker_count if called with n >= 1, else the
// PARAB_THREADS environment variable, else the OpenMP default (1 when built
// without OpenMP).
int worker_count();
void set_worker_count(int n);  // n <= 0 restores automatic selection

// Runs fn(i) for i in [begin, end), in parallel when worker_count() > 1 and
// OpenMP is available, serially otherwise. The first exception thrown by any
// iteration is rethrown after the loop drains.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace parab
