#include <charconv>
#include <sstream>

#include "butson/butson_matrix.hpp"

namespace butson {

ParseError::ParseError(int line, int column, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line), column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      ++i;
    if (i > start)
      tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

int parse_int(const Token &t, int line_no, const char *what) {
  int value = 0;
  const auto *first = t.text.data(), *last = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line_no, t.column,
                     std::string("expected ") + what + ", found '" + std::string(t.text) + "'");
  return value;
}

} // namespace

ExponentGrid parse_grid(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  ExponentGrid grid;
  int row = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.front() == '#')
      continue;
    const auto tokens = tokenize(line);
    if (tokens.empty())
      continue;

    if (!have_header) {
      if (tokens[0].text != "butson")
        throw ParseError(line_no, tokens[0].column, "expected header 'butson <n> <k>'");
      if (tokens.size() != 3)
        throw ParseError(line_no, 1, "header must be 'butson <n> <k>'");
      grid.n = parse_int(tokens[1], line_no, "order n");
      grid.k = parse_int(tokens[2], line_no, "root order k");
      if (grid.n < 1)
        throw ParseError(line_no, tokens[1].column, "order n must be positive");
      if (grid.k < 1)
        throw ParseError(line_no, tokens[2].column, "root order k must be positive");
      grid.exps.reserve(static_cast<std::size_t>(grid.n) * grid.n);
      have_header = true;
      continue;
    }

    if (row >= grid.n)
      throw ParseError(line_no, tokens[0].column,
                       "more than n=" + std::to_string(grid.n) + " rows");
    if (static_cast<int>(tokens.size()) != grid.n)
      throw ParseError(line_no, tokens.size() > static_cast<std::size_t>(grid.n)
                                    ? tokens[grid.n].column
                                    : static_cast<int>(line.size()) + 1,
                       "row has " + std::to_string(tokens.size()) + " entries, expected " +
                           std::to_string(grid.n));
    for (const auto &t : tokens) {
      const int e = parse_int(t, line_no, "exponent");
      if (e < 0 || e >= grid.k)
        throw ParseError(line_no, t.column,
                         "exponent " + std::to_string(e) + " out of range for k=" +
                             std::to_string(grid.k));
      grid.exps.push_back(e);
    }
    ++row;
  }
  if (!have_header)
    throw ParseError(line_no, 1, "missing header 'butson <n> <k>'");
  if (row != grid.n)
    throw ParseError(line_no, 1,
                     "expected " + std::to_string(grid.n) + " rows, found " + std::to_string(row));
  return grid;
}

ButsonMatrix parse_butson(std::string_view text) { return ButsonMatrix::from_grid(parse_grid(text)); }

std::string serialize(const ExponentGrid &grid) {
  std::ostringstream out;
  out << "butson " << grid.n << ' ' << grid.k << '\n';
  for (int i = 0; i < grid.n; ++i) {
    for (int j = 0; j < grid.n; ++j)
      out << (j ? " " : "") << grid(i, j);
    out << '\n';
  }
  return out.str();
}

} // namespace butson
