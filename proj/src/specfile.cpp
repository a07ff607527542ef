#include "aclab/specfile.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace aclab {

namespace {

struct RawEntry {
  std::string value;
  int line = 0;
};

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// key -> raw value text, after joining bracket-continued lines.
std::map<std::string, RawEntry> collect_entries(std::string_view text) {
  std::map<std::string, RawEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int start_line = 0;
  std::string pending;
  int depth = 0;
  auto flush = [&](const std::string& logical, int at) {
    std::string t = strip(logical);
    if (t.empty()) return;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", at);
    std::string key = strip(t.substr(0, eq));
    std::string value = strip(t.substr(eq + 1));
    if (key.empty()) throw ParseError("missing key before '='", at);
    if (value.empty()) throw ParseError("missing value for '" + key + "'", at);
    if (entries.count(key)) throw ParseError("duplicate key '" + key + "'", at);
    entries[key] = RawEntry{value, at};
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (pending.empty()) {
      if (strip(line).empty()) continue;
      start_line = lineno;
    }
    for (char c : line) {
      if (c == '[') ++depth;
      if (c == ']') --depth;
    }
    pending += line;
    pending += ' ';
    if (depth < 0) throw ParseError("unbalanced ']'", lineno);
    if (depth == 0) {
      flush(pending, start_line);
      pending.clear();
    }
  }
  if (depth != 0) throw ParseError("unterminated '['", start_line);
  return entries;
}

class ValueParser {
 public:
  ValueParser(const std::string& text, int line) : text_(text), line_(line) {}

  std::string quoted_string() {
    skip_ws();
    std::string s = parse_quoted();
    expect_end();
    return s;
  }

  std::vector<std::string> string_list() {
    skip_ws();
    expect('[');
    std::vector<std::string> out;
    skip_ws();
    if (!at_end() && peek() == ']') {
      ++pos_;
      expect_end();
      return out;
    }
    while (true) {
      skip_ws();
      out.push_back(parse_quoted());
      skip_ws();
      if (at_end()) fail("unterminated list");
      if (peek() == ',') {
        ++pos_;
      } else if (peek() == ']') {
        ++pos_;
        break;
      } else {
        fail("expected ',' or ']'");
      }
    }
    expect_end();
    return out;
  }

  Mat<Rational> matrix() {
    skip_ws();
    expect('[');
    Mat<Rational> rows;
    while (true) {
      skip_ws();
      if (at_end()) fail("unterminated matrix");
      if (peek() == ']') {
        ++pos_;
        break;
      }
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      rows.push_back(row());
    }
    expect_end();
    if (rows.empty()) fail("empty matrix");
    for (const auto& r : rows)
      if (r.size() != rows.front().size()) fail("ragged matrix rows");
    return rows;
  }

 private:
  Vec<Rational> row() {
    expect('[');
    Vec<Rational> out;
    while (true) {
      skip_ws();
      if (at_end()) fail("unterminated matrix row");
      if (peek() == ']') {
        ++pos_;
        break;
      }
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      std::size_t start = pos_;
      while (!at_end() && peek() != ',' && peek() != ']' &&
             !std::isspace(static_cast<unsigned char>(peek())))
        ++pos_;
      try {
        out.push_back(parse_rational(text_.substr(start, pos_ - start)));
      } catch (const ParseError& e) {
        fail(e.what());
      }
    }
    if (out.empty()) fail("empty matrix row");
    return out;
  }

  std::string parse_quoted() {
    if (at_end() || peek() != '"') fail("expected '\"'");
    ++pos_;
    std::size_t start = pos_;
    while (!at_end() && peek() != '"') ++pos_;
    if (at_end()) fail("unterminated string");
    std::string s = text_.substr(start, pos_ - start);
    ++pos_;
    return s;
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_end() {
    skip_ws();
    if (!at_end()) fail("trailing text");
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
  }

  std::string text_;
  int line_;
  std::size_t pos_ = 0;
};

std::string matrix_text(const Mat<Rational>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out += ", ";
      out += to_string(m[i][j]);
    }
    out += "]";
  }
  out += "]";
  return out;
}

}  // namespace

ProblemSpec parse_spec(std::string_view text) {
  auto entries = collect_entries(text);
  for (const auto& [key, entry] : entries) {
    if (key != "algebra" && key != "J.psi" && key != "J.matrix" && key != "metric" &&
        key != "frame.omega" && key != "frame.vectors")
      throw ParseError("unknown key '" + key + "'", entry.line);
  }
  if (entries.count("J.psi") && entries.count("J.matrix"))
    throw ParseError("give J.psi or J.matrix, not both", entries.at("J.matrix").line);

  ProblemSpec spec;
  if (auto it = entries.find("algebra"); it != entries.end()) {
    ValueParser vp(it->second.value, it->second.line);
    spec.algebra = LieAlgebraSpec::parse_salamon(vp.quoted_string());
  }
  if (auto it = entries.find("J.psi"); it != entries.end()) {
    ValueParser vp(it->second.value, it->second.line);
    std::vector<std::string> texts = vp.string_list();
    if (texts.empty()) throw ParseError("J.psi needs at least one form", it->second.line);
    int dim = spec.algebra ? spec.algebra->dim() : 2 * static_cast<int>(texts.size());
    for (const auto& t : texts) spec.psis.push_back(parse_complex_form(t, dim));
    spec.structure = AlmostComplexStructure::from_one_zero_forms(dim, spec.psis);
  }
  if (auto it = entries.find("J.matrix"); it != entries.end()) {
    ValueParser vp(it->second.value, it->second.line);
    spec.structure = AlmostComplexStructure::from_matrix(vp.matrix());
  }
  if (spec.algebra && spec.structure && spec.algebra->dim() != spec.structure->dim())
    throw ParseError("algebra and J have different dimensions",
                     entries.count("J.psi") ? entries.at("J.psi").line : entries.at("J.matrix").line);
  if (auto it = entries.find("metric"); it != entries.end()) {
    ValueParser vp(it->second.value, it->second.line);
    spec.metric = MetricSpec::validate(vp.matrix());
  }
  if (auto it = entries.find("frame.omega"); it != entries.end()) {
    ValueParser vp(it->second.value, it->second.line);
    spec.frame_omega = vp.matrix();
  }
  if (auto it = entries.find("frame.vectors"); it != entries.end()) {
    ValueParser vp(it->second.value, it->second.line);
    spec.frame_vectors = vp.matrix();
  }
  return spec;
}

std::string print_spec(const ProblemSpec& spec) {
  std::string out;
  if (spec.algebra) out += "algebra = \"" + spec.algebra->salamon_string() + "\"\n";
  if (spec.structure) out += "J.matrix = " + matrix_text(spec.structure->matrix()) + "\n";
  if (spec.metric) out += "metric = " + matrix_text(spec.metric->matrix()) + "\n";
  if (spec.frame_omega) out += "frame.omega = " + matrix_text(*spec.frame_omega) + "\n";
  if (spec.frame_vectors) out += "frame.vectors = " + matrix_text(*spec.frame_vectors) + "\n";
  return out;
}

}  // namespace aclab
