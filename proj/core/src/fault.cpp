#include "buchi/fault.hpp"

#include <atomic>

namespace buchi {

namespace {
[[maybe_unused]] std::atomic<fault> current{fault::none};
}

std::string_view fault_name(fault f) {
  switch (f) {
    case fault::none: return "none";
    case fault::retro_accept_all_stage2: return "retro-accept-all-stage2";
    case fault::successor_min_owner: return "successor-min-owner";
    case fault::slice_child_order: return "slice-child-order";
    case fault::rank_cutpoint_keep_odd: return "rank-cutpoint-keep-odd";
    case fault::tighten_by_acceptance: return "tighten-by-acceptance";
  }
  return "unknown";
}

#ifdef BUCHI_FAULT_INJECTION
fault active_fault() { return current.load(std::memory_order_relaxed); }
void set_active_fault(fault f) { current.store(f, std::memory_order_relaxed); }

fault_guard::fault_guard(fault f) : previous_(active_fault()) { set_active_fault(f); }
fault_guard::~fault_guard() { set_active_fault(previous_); }
bool fault_injection_enabled() { return true; }
#else
fault_guard::fault_guard(fault) : previous_(fault::none) {}
fault_guard::~fault_guard() = default;
bool fault_injection_enabled() { return false; }
#endif

}  // namespace buchi
