#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "buchi/nbw.hpp"

namespace buchi {

/// Syntax or semantic error in an automaton document, with a 1-based position.
class parse_error : public input_error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& message)
      : input_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                    message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads the line-oriented automaton format:
///
///     nbw
///     #@ key value
///     alphabet: a b
///     states: p q
///     initial: p
///     accepting: q
///     p a -> p q
///
/// Names are any run of non-blank characters other than '#'. Lines starting
/// with "#@" carry metadata, other '#' text is a comment.
nbw parse_nbw(std::string_view text);
/// Canonical rendering; parse_nbw(print_nbw(a)) == a.
std::string print_nbw(const nbw& a);

nbw read_nbw_file(const std::string& path);
void write_nbw_file(const nbw& a, const std::string& path);

}  // namespace buchi
