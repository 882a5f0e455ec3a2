#ifndef CCT_STATS_HPP
#define CCT_STATS_HPP

#include <atomic>
#include <cstdint>

namespace cct::stats {

/// Process-wide work counters surfaced in CLI reports.
struct Counters {
  std::atomic<std::uint64_t> lp_calls{0};
  std::atomic<std::uint64_t> pivot_steps{0};
};

Counters& counters();

inline void count_lp_call() { counters().lp_calls.fetch_add(1, std::memory_order_relaxed); }
inline void count_pivot_step() { counters().pivot_steps.fetch_add(1, std::memory_order_relaxed); }

struct Snapshot {
  std::uint64_t lp_calls = 0;
  std::uint64_t pivot_steps = 0;
};

Snapshot snapshot();
void reset();

}  // namespace cct::stats

#endif  // CCT_STATS_HPP
