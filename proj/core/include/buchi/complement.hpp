#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "buchi/nbw.hpp"

namespace buchi {

enum class method { rank, tight, slice, retro, schewe, symbolic };

inline constexpr std::array<method, 6> all_methods = {
    method::rank, method::tight, method::slice, method::retro, method::schewe, method::symbolic,
};

std::string_view method_name(method m);
/// Inverse of method_name; throws input_error on unknown names.
method parse_method(std::string_view name);

struct complement_options {
  /// Rank bound for method::rank; defaults to 2|Q \ F|.
  std::optional<int> bound;
  /// State cap for explicit construction.
  std::size_t budget = 1'000'000;
};

/// Explicit complement automaton by the given construction.
nbw complement(const nbw& a, method m, const complement_options& options = {});

/// Membership in the complement decided on the fly, without materializing it.
bool complement_accepts(const nbw& a, method m, const lasso_word& w,
                        const complement_options& options = {});

}  // namespace buchi
