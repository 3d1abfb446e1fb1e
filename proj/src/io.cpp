#include "bmg/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "bmg/errors.hpp"

namespace bmg::io {

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',' ||
           c == ';' || c == '|';
  });
}

namespace {

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  PhyloTree parse() {
    skip_space();
    if (at_end()) fail("empty tree");
    const NodeId root = node();
    skip_space();
    expect(';');
    skip_space();
    if (!at_end()) fail("unexpected text after ';'");
    try {
      return std::move(builder_).build(root);
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      fail(e.what());
    }
  }

 private:
  NodeId node() {
    skip_space();
    if (peek() != '(') return leaf();
    const std::size_t open_line = line_, open_col = col_;
    advance();
    std::vector<NodeId> kids{node()};
    skip_space();
    while (peek() == ',') {
      advance();
      kids.push_back(node());
      skip_space();
    }
    expect(')');
    if (kids.size() < 2)
      throw ParseError("inner vertex with a single child (tree is not phylogenetic)", open_line,
                       open_col);
    skip_space();
    if (!at_end() && !is_delim(peek())) fail("labels on inner vertices are not supported");
    return builder_.add_inner(kids);
  }

  NodeId leaf() {
    const std::size_t line = line_, col = col_;
    const std::string name = token();
    if (name.empty()) fail("expected a leaf or '('");
    if (peek() != '|') throw ParseError("uncolored leaf '" + name + "'", line, col);
    advance();
    const std::string color = token();
    if (color.empty()) fail("missing color after '|'");
    if (seen_.contains(name)) throw ParseError("duplicate leaf name '" + name + "'", line, col);
    seen_.insert(name);
    return builder_.add_leaf(name, Color(color));
  }

  std::string token() {
    std::string out;
    while (!at_end() && !is_delim(peek()) && peek() != '|' &&
           !std::isspace(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  static bool is_delim(char c) { return c == '(' || c == ')' || c == ',' || c == ';'; }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  TreeBuilder builder_;
  std::unordered_set<std::string> seen_;
};

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

PhyloTree parse_tree(std::string_view text) { return NewickParser(text).parse(); }

std::string serialize_tree(const PhyloTree& t) { return t.canonical_form(); }

ColoredDigraph parse_graph(std::string_view text) {
  ColoredDigraph g;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t col = static_cast<std::size_t>(words.front().data() - line.data()) + 1;
    auto fail = [&](const std::string& what) -> void { throw ParseError(what, line_no, col); };
    if (words.size() != 3) fail("expected 'V <name> <color>' or 'A <src> <dst>'");
    for (std::size_t i = 1; i < 3; ++i)
      if (!is_valid_label(words[i])) fail("invalid label '" + std::string(words[i]) + "'");
    if (words[0] == "V") {
      if (g.has_vertex(words[1])) fail("duplicate vertex '" + std::string(words[1]) + "'");
      g.add_vertex(std::string(words[1]), Color(words[2]));
    } else if (words[0] == "A") {
      for (std::size_t i = 1; i < 3; ++i)
        if (!g.has_vertex(words[i])) fail("undeclared vertex '" + std::string(words[i]) + "'");
      const VertexId s = g.id(words[1]), d = g.id(words[2]);
      if (s == d) fail("self-loop at '" + std::string(words[1]) + "'");
      if (g.has_arc(s, d)) fail("duplicate arc");
      g.add_arc(s, d);
    } else {
      fail("unknown record '" + std::string(words[0]) + "'");
    }
    if (end == text.size()) break;
  }
  return g;
}

std::string serialize_graph(const ColoredDigraph& g) {
  std::vector<VertexId> order(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return g.name(a) < g.name(b); });
  std::ostringstream out;
  for (VertexId v : order) out << "V " << g.name(v) << ' ' << g.color(v).name() << '\n';
  for (VertexId v : order) {
    std::vector<VertexId> targets(g.out_neighbors(v).begin(), g.out_neighbors(v).end());
    std::sort(targets.begin(), targets.end(),
              [&](VertexId a, VertexId b) { return g.name(a) < g.name(b); });
    for (VertexId w : targets) out << "A " << g.name(v) << ' ' << g.name(w) << '\n';
  }
  return out.str();
}

bool looks_like_tree(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto words = split_words(text.substr(start, end - start));
    start = end + 1;
    if (words.empty() || words.front().front() == '#') continue;
    return !(words.front() == "V" || words.front() == "A");
  }
  return false;
}

}  // namespace bmg::io
