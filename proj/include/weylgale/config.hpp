#pragma once

#include <cstddef>
#include <functional>

namespace weylgale {

struct EngineConfig {
  int bound_slack = 2;     // extra d-values scanned past every derived bound
  unsigned threads = 0;    // 0 = hardware concurrency (capped by WEYLGALE_THREADS)
  long witness_degree = 12;  // h-degree cap for witness searches that have no a-priori bound
};

EngineConfig& engine_config();
unsigned worker_count();

// Runs fn(i) for i in [0, n) on up to worker_count() threads.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace weylgale
