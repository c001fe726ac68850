#include "ekr/family_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "ekr/errors.hpp"

namespace ekr {
namespace {

std::vector<std::string_view> split_lines(std::string_view contents) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

int parse_int(std::string_view word, std::size_t line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    fail(line_no, "expected an integer, got '" + std::string(word) + "'");
  }
  return v;
}

KSet parse_text_row(std::string_view line, const GroundSpec& g, std::size_t line_no) {
  SetWord bits = 0;
  int prev = 0;
  int count = 0;
  for (std::string_view w : split_words(line)) {
    int e = parse_int(w, line_no);
    if (e < 1 || e > g.n()) fail(line_no, "element " + std::to_string(e) + " outside [1," + std::to_string(g.n()) + "]");
    if (e <= prev) fail(line_no, "elements must be strictly ascending");
    bits |= bit(e - 1);
    prev = e;
    ++count;
  }
  if (count != g.k()) fail(line_no, "set has " + std::to_string(count) + " elements, expected " + std::to_string(g.k()));
  return KSet(bits);
}

KSet parse_bits_row(std::string_view line, const GroundSpec& g, std::size_t line_no) {
  if (line.empty()) fail(line_no, "empty bitmask");
  SetWord bits = 0;
  int significant = 0;
  for (char c : line) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else {
      fail(line_no, "invalid hex digit '" + std::string(1, c) + "'");
    }
    if (significant > 0 || digit != 0) ++significant;
    if (significant * 4 > kMaxElements + 3) fail(line_no, "bitmask too wide");
    bits = (bits << 4) | static_cast<SetWord>(digit);
  }
  if (bits & ~g.universe()) fail(line_no, "bitmask has an element above n=" + std::to_string(g.n()));
  if (popcount(bits) != g.k()) {
    fail(line_no, "set has " + std::to_string(popcount(bits)) + " elements, expected " + std::to_string(g.k()));
  }
  return KSet(bits);
}

std::string to_hex(SetWord bits) {
  if (bits == 0) return "0";
  std::string out;
  while (bits != 0) {
    out.push_back("0123456789abcdef"[static_cast<int>(bits & 0xf)]);
    bits >>= 4;
  }
  return std::string(out.rbegin(), out.rend());
}

}  // namespace

FamilyFormat parse_format_name(std::string_view name) {
  if (name == "text") return FamilyFormat::text;
  if (name == "bits") return FamilyFormat::bits;
  throw UsageError("unknown family format '" + std::string(name) + "'");
}

Family parse_family(std::string_view contents, FamilyFormat format) {
  auto lines = split_lines(contents);
  if (lines.empty()) throw ParseError("line 1: missing 'n k' header");
  auto header = split_words(lines[0]);
  if (header.size() != 2) fail(1, "header must be 'n k'");
  int n = parse_int(header[0], 1);
  int k = parse_int(header[1], 1);
  if (n < 1 || n > kMaxElements || k < 0 || k > n) fail(1, "invalid ground set n=" + std::to_string(n) + " k=" + std::to_string(k));
  GroundSpec g(n, k);

  std::vector<KSet> sets;
  std::unordered_set<KSet> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    KSet s = format == FamilyFormat::text ? parse_text_row(lines[i], g, line_no)
                                          : parse_bits_row(lines[i], g, line_no);
    if (!seen.insert(s).second) fail(line_no, "duplicate set " + s.to_string());
    sets.push_back(s);
  }
  return Family(g, std::move(sets));
}

Family read_family(std::istream& in, FamilyFormat format) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str(), format);
}

Family read_family_file(const std::string& path, FamilyFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_family(in, format);
}

std::string format_family(const Family& family, FamilyFormat format) {
  std::string out = std::to_string(family.n()) + " " + std::to_string(family.k()) + "\n";
  for (KSet s : family) {
    if (format == FamilyFormat::bits) {
      out += to_hex(s.bits());
    } else {
      bool first = true;
      for (int e : s.elements()) {
        if (!first) out += ' ';
        out += std::to_string(e);
        first = false;
      }
    }
    out += '\n';
  }
  return out;
}

void write_family_file(const std::string& path, const Family& family, FamilyFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << format_family(family, format);
}

ElementSet parse_element_set(std::string_view literal) {
  std::string cleaned;
  for (char c : literal) cleaned.push_back((c == ',' || c == '{' || c == '}') ? ' ' : c);
  std::vector<int> elems;
  for (std::string_view w : split_words(cleaned)) elems.push_back(parse_int(w, 1));
  try {
    return KSet::from_elements(elems);
  } catch (const UsageError& e) {
    throw ParseError(std::string("set literal: ") + e.what());
  }
}

}  // namespace ekr
