#include "cct/stats.hpp"

namespace cct::stats {

Counters& counters() {
  static Counters instance;
  return instance;
}

Snapshot snapshot() {
  return Snapshot{counters().lp_calls.load(), counters().pivot_steps.load()};
}

void reset() {
  counters().lp_calls.store(0);
  counters().pivot_steps.store(0);
}

}  // namespace cct::stats
