#pragma once

// Deliberate construction bugs that the verification sweep must detect.
// Compiled to constant false unless BUCHI_FAULT_INJECTION is defined.

#include <string_view>

namespace buchi {

enum class fault {
  none,
  /// Every second-stage state of the retrospective complement is accepting.
  retro_accept_all_stage2,
  /// Successor preorders give a contested target to the smallest claiming class.
  successor_min_owner,
  /// Successor preorders list the accepting child class before the other one.
  slice_child_order,
  /// The rank complement keeps odd-ranked states in the obligation set.
  rank_cutpoint_keep_odd,
  /// Tightening gives every non-accepting state an odd rank, even ones that
  /// descend from accepting states.
  tighten_by_acceptance,
};

inline constexpr fault all_faults[] = {
    fault::retro_accept_all_stage2, fault::successor_min_owner, fault::slice_child_order,
    fault::rank_cutpoint_keep_odd, fault::tighten_by_acceptance,
};

std::string_view fault_name(fault f);

#ifdef BUCHI_FAULT_INJECTION
/// The fault currently injected process-wide.
fault active_fault();
inline bool fault_active(fault f) { return active_fault() == f; }
void set_active_fault(fault f);
#else
constexpr bool fault_active(fault) { return false; }
#endif

/// Injects a fault for the lifetime of the guard. Only effective when fault
/// injection is compiled in.
class fault_guard {
 public:
  explicit fault_guard(fault f);
  ~fault_guard();
  fault_guard(const fault_guard&) = delete;
  fault_guard& operator=(const fault_guard&) = delete;

 private:
  fault previous_;
};

/// Whether this build honors fault_guard.
bool fault_injection_enabled();

}  // namespace buchi
