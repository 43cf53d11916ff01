#include "buchi/complement.hpp"

#include <string>

#include "buchi/rank_complement.hpp"
#include "buchi/retro_complement.hpp"
#include "buchi/search.hpp"
#include "buchi/slice_complement.hpp"

namespace buchi {

std::string_view method_name(method m) {
  switch (m) {
    case method::rank: return "rank";
    case method::tight: return "tight";
    case method::slice: return "slice";
    case method::retro: return "retro";
    case method::schewe: return "schewe";
    case method::symbolic: return "symbolic";
  }
  return "unknown";
}

method parse_method(std::string_view name) {
  for (method m : all_methods)
    if (method_name(m) == name) return m;
  throw input_error("unknown method '" + std::string(name) +
                    "' (expected rank, tight, slice, retro, schewe or symbolic)");
}

nbw complement(const nbw& a, method m, const complement_options& options) {
  switch (m) {
    case method::rank: return materialize(rank_complement(a, options.bound), options.budget);
    case method::tight: return materialize(tight_rank_complement(a), options.budget);
    case method::slice: return materialize(slice_complement(a), options.budget);
    case method::retro: return materialize(retro_complement(a), options.budget);
    case method::schewe: return materialize(schewe_complement(a), options.budget);
    case method::symbolic: return materialize(symbolic_complement(a), options.budget);
  }
  throw input_error("unknown method");
}

bool complement_accepts(const nbw& a, method m, const lasso_word& w,
                        const complement_options& options) {
  switch (m) {
    case method::rank: return accepts(rank_complement(a, options.bound), w);
    case method::tight: return accepts(tight_rank_complement(a), w);
    case method::slice: return accepts(slice_complement(a), w);
    case method::retro: return accepts(retro_complement(a), w);
    case method::schewe: return accepts(schewe_complement(a), w);
    case method::symbolic: return accepts(symbolic_complement(a), w);
  }
  throw input_error("unknown method");
}

}  // namespace buchi
