#include "gmosaic/mosaic.hpp"

#include <array>
#include <charconv>
#include <string>

#include "gmosaic/errors.hpp"

namespace gmosaic {

Mosaic::Mosaic(std::size_t rows, std::size_t cols) : Mosaic(rows, cols, std::vector<Tile>(rows * cols)) {}

Mosaic::Mosaic(std::size_t rows, std::size_t cols, std::vector<Tile> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows_ == 0 || cols_ == 0) throw DomainError("mosaic needs at least one row and one column");
  if (cells_.size() != rows_ * cols_) {
    throw DomainError("mosaic has " + std::to_string(cells_.size()) + " cells, expected " +
                      std::to_string(rows_ * cols_));
  }
}

bool is_suitably_connected(const Mosaic& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const CpPattern p = cp_pattern(m.at(i, j));
      if (j + 1 < m.cols() && p.r != cp_pattern(m.at(i, j + 1)).l) return false;
      if (i + 1 < m.rows() && p.b != cp_pattern(m.at(i + 1, j)).t) return false;
    }
  }
  return true;
}

bool is_graph_mosaic(const Mosaic& m) {
  if (!is_suitably_connected(m)) return false;
  for (Side side : {Side::Left, Side::Right, Side::Top, Side::Bottom}) {
    if (boundary_state(m, side).letters().find('o') != std::string::npos) return false;
  }
  return true;
}

StateWord boundary_state(const Mosaic& m, Side side) {
  std::string letters;
  auto mark = [&](bool cp) { letters.push_back(cp ? 'o' : 'x'); };
  switch (side) {
    case Side::Left:
      for (std::size_t i = 0; i < m.rows(); ++i) mark(cp_pattern(m.at(i, 0)).l);
      break;
    case Side::Right:
      for (std::size_t i = 0; i < m.rows(); ++i) mark(cp_pattern(m.at(i, m.cols() - 1)).r);
      break;
    case Side::Top:
      for (std::size_t j = 0; j < m.cols(); ++j) mark(cp_pattern(m.at(0, j)).t);
      break;
    case Side::Bottom:
      for (std::size_t j = 0; j < m.cols(); ++j) mark(cp_pattern(m.at(m.rows() - 1, j)).b);
      break;
  }
  return StateWord(std::move(letters));
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

// Parses a positive decimal starting at `pos`; advances `pos` past it.
std::size_t parse_dimension(std::string_view line, std::size_t& pos, std::size_t line_no) {
  const std::size_t start = pos;
  while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') ++pos;
  if (pos == start) throw ParseError(line_no, start + 1, "expected a positive integer");
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + pos, value);
  if (ec != std::errc{} || value == 0) {
    throw ParseError(line_no, start + 1, "dimension must be a positive integer");
  }
  return value;
}

}  // namespace

Mosaic parse_mosaic(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t begin = 0; begin < text.size();) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(trim_right(text.substr(begin, end - begin)));
    begin = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, 1, "missing header \"<rows> <cols>\"");

  const std::string_view header = lines[0];
  std::size_t pos = 0;
  const std::size_t rows = parse_dimension(header, pos, 1);
  if (pos >= header.size() || !is_blank(header[pos])) {
    throw ParseError(1, pos + 1, "expected a space between rows and cols");
  }
  while (pos < header.size() && is_blank(header[pos])) ++pos;
  const std::size_t cols = parse_dimension(header, pos, 1);
  if (pos != header.size()) throw ParseError(1, pos + 1, "unexpected text after header");

  if (lines.size() - 1 < rows) {
    throw ParseError(lines.size() + 1, 1,
                     "expected " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 1));
  }
  if (lines.size() - 1 > rows) {
    throw ParseError(rows + 2, 1, "more than the declared " + std::to_string(rows) + " rows");
  }

  std::vector<Tile> cells;
  cells.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string_view line = lines[i + 1];
    for (std::size_t j = 0; j < line.size(); ++j) {
      const int v = hex_value(line[j]);
      if (v < 0) throw ParseError(i + 2, j + 1, std::string("'") + line[j] + "' is not a hex digit");
      if (j >= cols) throw ParseError(i + 2, j + 1, "row longer than " + std::to_string(cols) + " cells");
      cells.push_back(Tile::from_id(v));
    }
    if (line.size() < cols) {
      throw ParseError(i + 2, line.size() + 1, "row shorter than " + std::to_string(cols) + " cells");
    }
  }
  return Mosaic(rows, cols, std::move(cells));
}

std::string serialize_mosaic(const Mosaic& m) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(kDigits[m.at(i, j).id()]);
    out.push_back('\n');
  }
  return out;
}

namespace {

// Center mark. Tiles sharing a pattern are told apart here.
constexpr std::array<char, kTileCount> kCenter{' ', '+', '+', '+', '+', '-', '|', '/',
                                               '\\', '|', '-', '*', '*', '*', '*', '#'};

}  // namespace

std::string render_ascii(const Mosaic& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string top, mid, bot;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Tile tile = m.at(i, j);
      const CpPattern p = cp_pattern(tile);
      top += p.t ? " | " : "   ";
      mid += p.l ? '-' : ' ';
      mid += kCenter[tile.id()];
      mid += p.r ? '-' : ' ';
      bot += p.b ? " | " : "   ";
    }
    out += top + "\n" + mid + "\n" + bot + "\n";
  }
  return out;
}

}  // namespace gmosaic
