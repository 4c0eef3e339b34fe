#pragma once

#include <functional>

namespace replika {

// Worker count from REPLIKA_WORKERS (default 1).
int worker_count();

// Runs body(i) for i in [0, n) on worker_count() threads. Each index is
// visited exactly once; the first exception is rethrown after joining.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace replika
