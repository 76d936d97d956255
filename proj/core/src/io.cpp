#include "qsyl/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qsyl/errors.hpp"

namespace qsyl {

namespace {

struct Token {
  std::string_view text;
  int column = 1;
};

struct Line {
  int number = 0;
  std::string_view text;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t end = text.find('\n', pos);
    std::string_view s = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    Line line{++number, s, {}};
    size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
      const size_t start = i;
      while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
      if (i > start) line.tokens.push_back({s.substr(start, i - start), static_cast<int>(start) + 1});
    }
    out.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

bool skippable(const Line& l) { return l.tokens.empty() || l.tokens.front().text.front() == '#'; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : lines_(split_lines(text)) {}

  // Next non-blank, non-comment line, or nullptr at end of input.
  const Line* next() {
    while (i_ < lines_.size() && skippable(lines_[i_])) ++i_;
    return i_ < lines_.size() ? &lines_[i_++] : nullptr;
  }
  const Line* peek() {
    while (i_ < lines_.size() && skippable(lines_[i_])) ++i_;
    return i_ < lines_.size() ? &lines_[i_] : nullptr;
  }
  const Line& require(const char* what) {
    const Line* l = next();
    if (!l) throw ParseError(std::string("unexpected end of input, expected ") + what, last_line() + 1, 1);
    return *l;
  }
  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }
  const std::vector<Line>& lines() const { return lines_; }

 private:
  std::vector<Line> lines_;
  size_t i_ = 0;
};

[[noreturn]] void fail(const Line& l, const Token& t, const std::string& what) {
  throw ParseError(what + " '" + std::string(t.text) + "'", l.number, t.column);
}

double to_double(const Line& l, const Token& t) {
  double v = 0.0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  if (*b == '+') ++b;
  const auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || !std::isfinite(v)) fail(l, t, "expected a finite decimal, got");
  return v;
}

long to_long(const Line& l, const Token& t, long min = 0) {
  long v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  const auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) fail(l, t, "expected an integer, got");
  if (v < min) fail(l, t, "integer out of range");
  return v;
}

void expect_count(const Line& l, size_t count, const char* what) {
  if (l.tokens.size() == count) return;
  const int column = l.tokens.size() > count ? l.tokens[count].column : static_cast<int>(l.text.size()) + 1;
  throw ParseError(std::string(what) + ": expected " + std::to_string(count) + " fields, found " +
                       std::to_string(l.tokens.size()),
                   l.number, column);
}

QuatMatrix read_qmat(Cursor& cur) {
  const Line& h = cur.require("a 'm n' header");
  expect_count(h, 2, "matrix header");
  const Index m = to_long(h, h.tokens[0]), n = to_long(h, h.tokens[1]);
  QuatMatrix out(m, n);
  for (Index r = 0; r < m; ++r) {
    const Line& l = cur.require("a matrix row");
    expect_count(l, static_cast<size_t>(4 * n), "matrix row");
    for (Index c = 0; c < n; ++c) {
      const auto* t = &l.tokens[static_cast<size_t>(4 * c)];
      out.set(r, c, {to_double(l, t[0]), to_double(l, t[1]), to_double(l, t[2]), to_double(l, t[3])});
    }
  }
  return out;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

bool valid_label(std::string_view s) {
  for (const auto& l : canonical_labels())
    if (s == l) return true;
  return false;
}

// Blocks a kind reads: coefficients for its equations and its unknowns.
bool label_in_kind(Kind k, std::string_view s) {
  const int idx = s[1] - '0';
  return s[0] == 'X' ? idx <= unknown_count(k) : idx <= equation_count(k);
}

}  // namespace

QuatMatrix parse_qmat(std::string_view text) {
  Cursor cur(text);
  QuatMatrix m = read_qmat(cur);
  if (const Line* extra = cur.next()) fail(*extra, extra->tokens.front(), "trailing content");
  return m;
}

std::string format_qmat(const QuatMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      const Quaternion q = m(r, c);
      if (c) out += "  ";
      out += format_number(q.a0) + " " + format_number(q.a1) + " " + format_number(q.a2) + " " +
             format_number(q.a3);
    }
    out += "\n";
  }
  return out;
}

QuatMatrix load_qmat(const std::filesystem::path& path) { return parse_qmat(read_file(path)); }

void save_qmat(const std::filesystem::path& path, const QuatMatrix& m) { write_file(path, format_qmat(m)); }

const std::vector<std::string>& canonical_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> v;
    for (int i = 1; i <= 4; ++i)
      for (char c : {'A', 'B', 'C'}) v.push_back(std::string(1, c) + std::to_string(i));
    for (int i = 1; i <= 5; ++i) v.push_back("X" + std::to_string(i));
    return v;
  }();
  return labels;
}

SystemFile SystemFile::from_system(const CoupledSystem& sys, const std::vector<QuatMatrix>& X) {
  sys.unknown_shapes();
  SystemFile f;
  f.kind = sys.kind;
  for (size_t i = 0; i < sys.A.size(); ++i) {
    const std::string n = std::to_string(i + 1);
    f.blocks["A" + n] = sys.A[i];
    f.blocks["B" + n] = sys.B[i];
    f.blocks["C" + n] = sys.C[i];
  }
  for (size_t k = 0; k < X.size(); ++k) f.blocks["X" + std::to_string(k + 1)] = X[k];
  return f;
}

CoupledSystem SystemFile::system() const {
  CoupledSystem s;
  s.kind = kind;
  for (int i = 1; i <= equation_count(kind); ++i)
    for (char c : {'A', 'B', 'C'}) {
      const std::string label = std::string(1, c) + std::to_string(i);
      const auto it = blocks.find(label);
      if (it == blocks.end()) throw ShapeError(std::string(to_string(kind)) + " system is missing " + label);
      (c == 'A' ? s.A : c == 'B' ? s.B : s.C).push_back(it->second);
    }
  s.unknown_shapes();
  return s;
}

std::optional<std::vector<QuatMatrix>> SystemFile::solution() const {
  std::vector<QuatMatrix> X;
  for (int k = 1; k <= unknown_count(kind); ++k) {
    const auto it = blocks.find("X" + std::to_string(k));
    if (it == blocks.end()) return std::nullopt;
    X.push_back(it->second);
  }
  return X;
}

SystemFile SystemFile::corrected() const {
  SystemFile out = *this;
  for (const auto& f : fixes) {
    const auto it = out.blocks.find(f.label);
    if (it == out.blocks.end()) throw ShapeError("fix refers to missing block " + f.label);
    if (f.row >= it->second.rows() || f.col >= it->second.cols())
      throw ShapeError("fix position outside " + f.label);
    it->second.set(f.row, f.col, f.value);
  }
  out.fixes.clear();
  return out;
}

SystemFile parse_qsys(std::string_view text) {
  Cursor cur(text);
  SystemFile f;
  for (const auto& l : cur.lines()) {
    if (l.number > 1 && !l.tokens.empty() && l.tokens.front().text.front() == '#')
      f.comments.emplace_back(l.text);
  }
  const Line& head = cur.require("a system kind");
  expect_count(head, 1, "kind line");
  const auto kind = parse_kind(head.tokens[0].text);
  if (!kind) fail(head, head.tokens[0], "unknown system kind");
  f.kind = *kind;

  while (const Line* l = cur.next()) {
    const Token& t = l->tokens.front();
    if (t.text == "@ranks") {
      for (size_t i = 1; i < l->tokens.size(); ++i) f.ranks.push_back(to_long(*l, l->tokens[i]));
    } else if (t.text == "@fix") {
      expect_count(*l, 8, "@fix");
      const auto& k = l->tokens;
      if (!valid_label(k[1].text)) fail(*l, k[1], "unknown block label");
      EntryFix fix{std::string(k[1].text), to_long(*l, k[2], 1) - 1, to_long(*l, k[3], 1) - 1,
                   {to_double(*l, k[4]), to_double(*l, k[5]), to_double(*l, k[6]), to_double(*l, k[7])}};
      f.fixes.push_back(std::move(fix));
    } else if (t.text.back() == ':') {
      expect_count(*l, 1, "block label");
      const std::string_view label = t.text.substr(0, t.text.size() - 1);
      if (!valid_label(label)) fail(*l, t, "unknown block label");
      if (!label_in_kind(f.kind, label)) fail(*l, t, std::string("block not used by ") + to_string(f.kind) + ":");
      if (f.blocks.count(std::string(label))) fail(*l, t, "duplicate block");
      f.blocks.emplace(std::string(label), read_qmat(cur));
    } else {
      fail(*l, t, "expected a block label, @ranks or @fix, got");
    }
  }
  for (int i = 1; i <= equation_count(f.kind); ++i)
    for (char c : {'A', 'B', 'C'}) {
      const std::string label = std::string(1, c) + std::to_string(i);
      if (!f.blocks.count(label)) throw ParseError("missing block " + label, cur.last_line(), 1);
    }
  return f;
}

std::string format_qsys(const SystemFile& f) {
  std::string out = std::string(to_string(f.kind)) + "\n";
  for (const auto& c : f.comments) out += c + "\n";
  for (const auto& label : canonical_labels()) {
    const auto it = f.blocks.find(label);
    if (it == f.blocks.end()) continue;
    out += label + ":\n" + format_qmat(it->second);
  }
  if (!f.ranks.empty()) {
    out += "@ranks";
    for (long r : f.ranks) out += " " + std::to_string(r);
    out += "\n";
  }
  for (const auto& x : f.fixes)
    out += "@fix " + x.label + " " + std::to_string(x.row + 1) + " " + std::to_string(x.col + 1) + " " +
           format_number(x.value.a0) + " " + format_number(x.value.a1) + " " + format_number(x.value.a2) + " " +
           format_number(x.value.a3) + "\n";
  return out;
}

SystemFile load_qsys(const std::filesystem::path& path) { return parse_qsys(read_file(path)); }

void save_qsys(const std::filesystem::path& path, const SystemFile& f) { write_file(path, format_qsys(f)); }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string checksum(const SystemFile& f) {
  auto num = [](double v) {
    const double r = std::round(v);
    return r == v ? std::to_string(std::llround(v)) : format_number(v);
  };
  std::string canon;
  for (const auto& label : canonical_labels()) {
    const auto it = f.blocks.find(label);
    if (it == f.blocks.end()) continue;
    const QuatMatrix& m = it->second;
    canon += label + " " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (Index r = 0; r < m.rows(); ++r)
      for (Index c = 0; c < m.cols(); ++c) {
        const Quaternion q = m(r, c);
        canon += num(q.a0) + " " + num(q.a1) + " " + num(q.a2) + " " + num(q.a3) + "\n";
      }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canon)));
  return buf;
}

}  // namespace qsyl
