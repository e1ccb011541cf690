#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "axial/errors.hpp"
#include "axial/space_id.hpp"

namespace axial {

/// One ground `connected/3` fact: two atoms plus a connection
/// multiplicity (>= 1). The multiplicity is preserved here but collapses
/// to plain adjacency when edges are built, since the depth measures are
/// unweighted.
struct FactLine {
  std::string from;
  std::string to;
  std::int64_t multiplicity = 1;

  friend bool operator==(const FactLine&, const FactLine&) = default;
};

struct ParseIssue {
  std::size_t line = 0;  // 1-based
  std::string message;

  friend bool operator==(const ParseIssue&, const ParseIssue&) = default;
};

/// Per-file accounting. Every input line lands in exactly one bucket:
/// accepted fact, skipped comment/header, blank, or error.
struct ParseDiagnostics {
  std::size_t accepted = 0;
  std::size_t skipped_comments = 0;
  std::size_t blank_lines = 0;
  std::size_t total_lines = 0;
  std::vector<ParseIssue> errors;

  bool balanced() const noexcept {
    return accepted + skipped_comments + blank_lines + errors.size() == total_lines;
  }
};

struct ParseResult {
  std::vector<FactLine> facts;
  ParseDiagnostics diagnostics;
};

/// Raised when a whole input yields zero usable facts. Carries the
/// diagnostics so callers can still report what went wrong line by line.
class EmptyInputError : public Error {
 public:
  explicit EmptyInputError(ParseDiagnostics diagnostics)
      : Error("no facts parsed from input (" + std::to_string(diagnostics.errors.size()) +
              " malformed line(s))"),
        diagnostics_(std::move(diagnostics)) {}

  const ParseDiagnostics& diagnostics() const noexcept { return diagnostics_; }

 private:
  ParseDiagnostics diagnostics_;
};

namespace detail {

inline bool is_atom(std::string_view token) noexcept {
  if (token.empty() || token[0] < 'a' || token[0] > 'z') return false;
  return SpaceId::is_valid(token);
}

inline std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

/// Splits text into lines at '\n'; a trailing newline does not open a
/// final empty line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    fn(++line_no, text.substr(start, end - start));
    start = end + 1;
  }
}

/// Parses the integer third argument: [1-9][0-9]*, no sign, no leading
/// zeros. Returns -1 on failure.
inline std::int64_t parse_multiplicity(std::string_view token) noexcept {
  if (token.empty() || token[0] < '1' || token[0] > '9') return -1;
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return -1;
  return value;
}

struct FactScanner {
  std::string_view text;
  std::size_t pos = 0;
  bool strict = false;

  void skip_space() {
    if (strict) return;
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string_view token() {
    skip_space();
    const auto begin = pos;
    while (pos < text.size()) {
      const char c = text[pos];
      const bool word = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_';
      if (!word) break;
      ++pos;
    }
    return text.substr(begin, pos - begin);
  }

  bool at_end() {
    // Trailing spaces are tolerated in both modes; line endings vary.
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) {
      ++pos;
    }
    return pos == text.size();
  }
};

}  // namespace detail

/// Parses one line that should hold `connected(<atom>,<atom>,<int>).`.
/// Returns the fact via `out` or an explanation via `error`.
inline bool parse_fact(std::string_view line, bool strict, FactLine& out, std::string& error) {
  detail::FactScanner scan{line, 0, strict};
  const auto predicate = scan.token();
  if (predicate.empty()) {
    error = "expected a fact";
    return false;
  }
  if (predicate != "connected") {
    error = "unsupported predicate '" + std::string(predicate) + "', expected 'connected'";
    return false;
  }
  if (!scan.eat('(')) {
    error = "expected '(' after 'connected'";
    return false;
  }
  std::vector<std::string_view> args;
  while (true) {
    const auto arg = scan.token();
    if (arg.empty()) {
      error = "empty argument " + std::to_string(args.size() + 1);
      return false;
    }
    args.push_back(arg);
    if (scan.eat(',')) continue;
    if (scan.eat(')')) break;
    error = "expected ',' or ')' after argument " + std::to_string(args.size());
    return false;
  }
  if (!scan.eat('.')) {
    error = "missing terminating '.'";
    return false;
  }
  if (!scan.at_end()) {
    error = "unexpected content after '.'";
    return false;
  }
  if (args.size() != 3) {
    error = "arity " + std::to_string(args.size()) + ", expected 3";
    return false;
  }
  if (!detail::is_atom(args[0]) || !detail::is_atom(args[1])) {
    error = "arguments must be lowercase-initial atoms";
    return false;
  }
  const auto multiplicity = detail::parse_multiplicity(args[2]);
  if (multiplicity < 1) {
    error = "third argument '" + std::string(args[2]) + "' is not a positive integer";
    return false;
  }
  out = FactLine{std::string(args[0]), std::string(args[1]), multiplicity};
  return true;
}

/// Parses a whole connectivity fact file. `%` comments and blank lines
/// are skipped; every other malformed line becomes a diagnostic and the
/// parse continues. Throws EmptyInputError only when nothing parses.
inline ParseResult parse_fact_file(std::string_view text, bool strict = false) {
  ParseResult result;
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    ++result.diagnostics.total_lines;
    const auto line = detail::trim(raw);
    if (line.empty()) {
      ++result.diagnostics.blank_lines;
      return;
    }
    if (line.front() == '%') {
      ++result.diagnostics.skipped_comments;
      return;
    }
    FactLine fact;
    std::string error;
    if (parse_fact(line, strict, fact, error)) {
      result.facts.push_back(std::move(fact));
      ++result.diagnostics.accepted;
    } else {
      result.diagnostics.errors.push_back(ParseIssue{line_no, std::move(error)});
    }
  });
  if (result.facts.empty()) throw EmptyInputError(std::move(result.diagnostics));
  return result;
}

/// Parses a CSV edge list: columns from,to[,weight], optional header,
/// LF or CRLF endings. Missing weight defaults to 1.
inline ParseResult parse_csv_edges(std::string_view text) {
  ParseResult result;
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    ++result.diagnostics.total_lines;
    const auto line = detail::trim(raw);
    if (line.empty()) {
      ++result.diagnostics.blank_lines;
      return;
    }

    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      if (comma == std::string_view::npos) {
        cells.push_back(detail::trim(line.substr(start)));
        break;
      }
      cells.push_back(detail::trim(line.substr(start, comma - start)));
      start = comma + 1;
    }

    const auto lowered = [](std::string_view cell) {
      std::string s(cell);
      std::transform(s.begin(), s.end(), s.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      return s;
    };
    if (line_no == 1 && cells.size() >= 2 && lowered(cells[0]) == "from" &&
        lowered(cells[1]) == "to" && (cells.size() == 2 || lowered(cells[2]) == "weight")) {
      ++result.diagnostics.skipped_comments;  // header
      return;
    }

    const auto fail = [&](std::string message) {
      result.diagnostics.errors.push_back(ParseIssue{line_no, std::move(message)});
    };
    if (cells.size() < 2 || cells.size() > 3) {
      fail("expected 2 or 3 columns, got " + std::to_string(cells.size()));
      return;
    }
    if (cells[0].empty() || cells[1].empty()) {
      fail("empty atom");
      return;
    }
    if (!detail::is_atom(cells[0]) || !detail::is_atom(cells[1])) {
      fail("columns must hold lowercase-initial atoms");
      return;
    }
    std::int64_t multiplicity = 1;
    if (cells.size() == 3) {
      multiplicity = detail::parse_multiplicity(cells[2]);
      if (multiplicity < 1) {
        fail("weight '" + std::string(cells[2]) + "' is not a positive integer");
        return;
      }
    }
    result.facts.push_back(FactLine{std::string(cells[0]), std::string(cells[1]), multiplicity});
    ++result.diagnostics.accepted;
  });
  if (result.facts.empty()) throw EmptyInputError(std::move(result.diagnostics));
  return result;
}

struct EdgeListResult {
  std::vector<std::pair<SpaceId, SpaceId>> edges;  // unordered pairs, deduped, sorted
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
};

/// Collapses facts to simple adjacency: any multiplicity >= 1 means
/// connected, ordered pairs fold to unordered, self-loops are dropped.
inline EdgeListResult to_edge_list(const std::vector<FactLine>& facts) {
  EdgeListResult result;
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(facts.size());
  for (const auto& fact : facts) {
    if (fact.from == fact.to) {
      ++result.self_loops_dropped;
      continue;
    }
    auto a = fact.from;
    auto b = fact.to;
    if (b < a) std::swap(a, b);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  std::sort(pairs.begin(), pairs.end());
  const auto last = std::unique(pairs.begin(), pairs.end());
  result.duplicates_collapsed = static_cast<std::size_t>(pairs.end() - last);
  pairs.erase(last, pairs.end());
  result.edges.reserve(pairs.size());
  for (auto& [a, b] : pairs) result.edges.emplace_back(SpaceId(std::move(a)), SpaceId(std::move(b)));
  return result;
}

/// Writes facts back out in the `connected/3` dialect, one per line.
inline std::string serialize_facts(const std::vector<FactLine>& facts) {
  std::string out;
  for (const auto& fact : facts) {
    out += "connected(";
    out += fact.from;
    out += ',';
    out += fact.to;
    out += ',';
    out += std::to_string(fact.multiplicity);
    out += ").\n";
  }
  return out;
}

}  // namespace axial
