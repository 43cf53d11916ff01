#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>

namespace buchi {

using state_id = std::uint32_t;
using symbol_id = std::uint32_t;

/// Largest automaton the subset-based constructions accept.
inline constexpr std::size_t max_dense_states = 64;

/// A set of states of an automaton with at most 64 states, stored as a bitmask.
class state_set {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = state_id;
    using difference_type = std::ptrdiff_t;
    using pointer = const state_id*;
    using reference = state_id;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    state_id operator*() const { return static_cast<state_id>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr state_set() = default;
  constexpr explicit state_set(std::uint64_t bits) : bits_(bits) {}
  state_set(std::initializer_list<state_id> states) {
    for (state_id q : states) insert(q);
  }

  static state_set singleton(state_id q) { return state_set(std::uint64_t{1} << q); }
  /// {0, ..., n-1}
  static state_set universe(std::size_t n) {
    return state_set(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  bool contains(state_id q) const { return (bits_ >> q) & 1U; }
  void insert(state_id q) { bits_ |= std::uint64_t{1} << q; }
  void erase(state_id q) { bits_ &= ~(std::uint64_t{1} << q); }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  std::uint64_t bits() const { return bits_; }
  bool intersects(state_set other) const { return (bits_ & other.bits_) != 0; }
  bool subset_of(state_set other) const { return (bits_ & ~other.bits_) == 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  state_set operator|(state_set o) const { return state_set(bits_ | o.bits_); }
  state_set operator&(state_set o) const { return state_set(bits_ & o.bits_); }
  /// set difference
  state_set operator-(state_set o) const { return state_set(bits_ & ~o.bits_); }
  state_set& operator|=(state_set o) {
    bits_ |= o.bits_;
    return *this;
  }
  state_set& operator&=(state_set o) {
    bits_ &= o.bits_;
    return *this;
  }
  state_set& operator-=(state_set o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  bool operator==(const state_set&) const = default;
  auto operator<=>(const state_set&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace buchi

template <>
struct std::hash<buchi::state_set> {
  std::size_t operator()(buchi::state_set s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
