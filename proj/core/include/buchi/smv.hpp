#pragma once

#include <string>

#include "buchi/nbw.hpp"

namespace buchi {

/// SMV model of the symbolic complement.
///
/// States are numbered 0..n-1 in declaration order. Each state gets a rank
/// variable over 0..m+1 where m = 2|Q\F| and m+1 stands for bottom, plus a
/// bit in the obligation vector `subset`. Section order: typedef, letter,
/// rank, phase, subset, init block, phase update, one rank update per state,
/// subset update, SPEC and FAIRNESS.
std::string to_smv(const nbw& a);

}  // namespace buchi
