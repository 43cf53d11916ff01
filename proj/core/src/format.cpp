#include "buchi/format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace buchi {

namespace {

struct token {
  std::string text;
  std::size_t column;
};

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// Splits one line into tokens, stopping at a comment.
std::vector<token> tokenize(std::string_view line) {
  std::vector<token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (is_blank(line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !is_blank(line[i]) && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

class parser {
 public:
  explicit parser(std::string_view text) : text_(text) {}

  nbw run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_;
      handle(text_.substr(pos, end - pos));
      pos = end + 1;
    }
    if (!seen_header_) fail(line_, 1, "expected header 'nbw', got end of input");
    return std::move(a_);
  }

 private:
  [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) {
    throw parse_error(line, col, msg);
  }

  void handle(std::string_view line) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line.substr(first).starts_with("#@")) {
      metadata(line.substr(first + 2), first + 3);
      return;
    }
    auto tokens = tokenize(line);
    if (tokens.empty()) return;
    if (!seen_header_) {
      if (tokens[0].text != "nbw" || tokens.size() != 1)
        fail(line_, tokens[0].column, "expected header 'nbw', got '" + tokens[0].text + "'");
      seen_header_ = true;
      return;
    }
    const std::string& head = tokens[0].text;
    if (head.ends_with(':') && tokens.size() >= 1 && (head == "alphabet:" || head == "states:" ||
                                                       head == "initial:" || head == "accepting:")) {
      section(tokens);
      return;
    }
    transition(tokens);
  }

  void metadata(std::string_view rest, std::size_t column) {
    if (!seen_header_) fail(line_, column, "metadata before header 'nbw'");
    std::size_t start = rest.find_first_not_of(" \t");
    if (start == std::string_view::npos) fail(line_, column, "expected metadata key");
    rest = rest.substr(start);
    std::size_t split = rest.find_first_of(" \t");
    std::string key(rest.substr(0, split));
    std::string value;
    if (split != std::string_view::npos) {
      std::string_view v = rest.substr(split);
      std::size_t b = v.find_first_not_of(" \t");
      std::size_t e = v.find_last_not_of(" \t\r");
      if (b != std::string_view::npos) value = std::string(v.substr(b, e - b + 1));
    }
    a_.metadata()[key] = value;
  }

  void section(const std::vector<token>& tokens) {
    const std::string& head = tokens[0].text;
    int index = head == "alphabet:" ? 0 : head == "states:" ? 1 : head == "initial:" ? 2 : 3;
    if (done_[index]) fail(line_, tokens[0].column, "duplicate section '" + head + "'");
    if (index >= 2 && !done_[1])
      fail(line_, tokens[0].column, "section '" + head + "' before 'states:'");
    if (transitions_started_)
      fail(line_, tokens[0].column, "section '" + head + "' after the first transition");
    done_[index] = true;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const token& t = tokens[i];
      if (t.text == "->") fail(line_, t.column, "unexpected '->' in section '" + head + "'");
      try {
        switch (index) {
          case 0: a_.add_symbol(t.text); break;
          case 1: a_.add_state(t.text); break;
          default: {
            auto q = a_.find_state(t.text);
            if (!q) fail(line_, t.column, "undeclared state '" + t.text + "'");
            if (index == 2) a_.set_initial(*q);
            else a_.set_accepting(*q);
          }
        }
      } catch (const parse_error&) {
        throw;
      } catch (const input_error& e) {
        fail(line_, t.column, e.what());
      }
    }
  }

  void transition(const std::vector<token>& tokens) {
    if (!done_[0] || !done_[1])
      fail(line_, tokens[0].column,
           "expected 'alphabet:' and 'states:' before transitions, got '" + tokens[0].text + "'");
    transitions_started_ = true;
    if (tokens.size() < 3 || tokens[2].text != "->") {
      std::size_t col = tokens.size() >= 3 ? tokens[2].column
                                           : tokens.back().column + tokens.back().text.size();
      fail(line_, col, "expected 'SRC SYM -> DST ...'");
    }
    auto src = a_.find_state(tokens[0].text);
    if (!src) fail(line_, tokens[0].column, "undeclared state '" + tokens[0].text + "'");
    auto sym = a_.find_symbol(tokens[1].text);
    if (!sym) fail(line_, tokens[1].column, "undeclared symbol '" + tokens[1].text + "'");
    for (std::size_t i = 3; i < tokens.size(); ++i) {
      auto dst = a_.find_state(tokens[i].text);
      if (!dst) fail(line_, tokens[i].column, "undeclared state '" + tokens[i].text + "'");
      a_.add_transition(*src, *sym, *dst);
    }
  }

  std::string_view text_;
  std::size_t line_ = 0;
  bool seen_header_ = false;
  bool done_[4] = {false, false, false, false};
  bool transitions_started_ = false;
  nbw a_;
};

void join(std::ostringstream& out, const std::vector<std::string>& names) {
  for (const auto& n : names) out << ' ' << n;
}

}  // namespace

nbw parse_nbw(std::string_view text) { return parser(text).run(); }

std::string print_nbw(const nbw& a) {
  std::ostringstream out;
  out << "nbw\n";
  for (const auto& [key, value] : a.metadata()) {
    out << "#@ " << key;
    if (!value.empty()) out << ' ' << value;
    out << '\n';
  }
  out << "alphabet:";
  join(out, a.alphabet());
  out << "\nstates:";
  join(out, a.state_names());
  out << "\ninitial:";
  for (state_id q : a.initial_states()) out << ' ' << a.state_name(q);
  out << "\naccepting:";
  for (state_id q : a.accepting_states()) out << ' ' << a.state_name(q);
  out << '\n';
  for (state_id q = 0; q < a.num_states(); ++q)
    for (symbol_id s = 0; s < a.alphabet_size(); ++s) {
      auto succ = a.successors(q, s);
      if (succ.empty()) continue;
      out << a.state_name(q) << ' ' << a.symbol_name(s) << " ->";
      for (state_id r : succ) out << ' ' << a.state_name(r);
      out << '\n';
    }
  return out.str();
}

nbw read_nbw_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_nbw(buf.str());
}

void write_nbw_file(const nbw& a, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << print_nbw(a);
}

}  // namespace buchi
