// Copyright 2026 The callgraph-metrics Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cgm/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cgm/errors.hpp"

namespace cgm {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view strip_bom(std::string_view text) {
  if (text.size() >= 3 && static_cast<unsigned char>(text[0]) == 0xEF &&
      static_cast<unsigned char>(text[1]) == 0xBB &&
      static_cast<unsigned char>(text[2]) == 0xBF) {
    text.remove_prefix(3);
  }
  return text;
}

// Calls fn(line_number, line) for every line, without the newline.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    fn(line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

// ---------------------------------------------------------------------------
// DOT subset

enum class TokKind { kId, kQuoted, kArrow, kUndirected, kLBrace, kRBrace, kAttrList, kSemi, kComma, kEq, kEnd };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t line;
};

bool is_dot_special(char c) {
  return c == '{' || c == '}' || c == '[' || c == ']' || c == ';' || c == ',' || c == '=' ||
         c == '"';
}

class DotLexer {
 public:
  explicit DotLexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    if (pos_ >= text_.size()) return {TokKind::kEnd, {}, line_};
    const char c = text_[pos_];
    const std::size_t line = line_;
    if (c == '-' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == '>' || text_[pos_ + 1] == '-')) {
      const bool arrow = text_[pos_ + 1] == '>';
      pos_ += 2;
      return {arrow ? TokKind::kArrow : TokKind::kUndirected, arrow ? "->" : "--", line};
    }
    switch (c) {
      case '{': ++pos_; return {TokKind::kLBrace, "{", line};
      case '}': ++pos_; return {TokKind::kRBrace, "}", line};
      case ';': ++pos_; return {TokKind::kSemi, ";", line};
      case ',': ++pos_; return {TokKind::kComma, ",", line};
      case '=': ++pos_; return {TokKind::kEq, "=", line};
      case '[': return attr_list();
      case ']': throw ParseError(line, "unbalanced ']'");
      case '"': return quoted();
      default: break;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '\n' &&
           !is_dot_special(text_[pos_])) {
      if (text_[pos_] == '-' && pos_ + 1 < text_.size() &&
          (text_[pos_ + 1] == '>' || text_[pos_ + 1] == '-') && pos_ > start) {
        break;
      }
      ++pos_;
    }
    return {TokKind::kId, std::string(text_.substr(start, pos_ - start)), line};
  }

 private:
  void skip_trivia() {
    bool at_line_start = pos_ == 0 || text_[pos_ - 1] == '\n';
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
        at_line_start = true;
      } else if (is_space(c)) {
        ++pos_;
      } else if (c == '#' && at_line_start) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (text_.compare(pos_, 2, "//") == 0) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (text_.compare(pos_, 2, "/*") == 0) {
        const std::size_t open_line = line_;
        pos_ += 2;
        while (pos_ < text_.size() && text_.compare(pos_, 2, "*/") != 0) {
          if (text_[pos_] == '\n') ++line_;
          ++pos_;
        }
        if (pos_ >= text_.size()) throw ParseError(open_line, "unterminated comment");
        pos_ += 2;
      } else {
        return;
      }
    }
  }

  Token quoted() {
    const std::size_t line = line_;
    std::string value;
    ++pos_;
    while (true) {
      if (pos_ >= text_.size()) throw ParseError(line, "unterminated string");
      const char c = text_[pos_++];
      if (c == '"') break;
      if (c == '\\' && pos_ < text_.size()) {
        const char escaped = text_[pos_++];
        if (escaped == '\n') {
          ++line_;  // line continuation
          continue;
        }
        if (escaped != '"') value.push_back('\\');
        value.push_back(escaped);
        continue;
      }
      if (c == '\n') ++line_;
      value.push_back(c);
    }
    return {TokKind::kQuoted, std::move(value), line};
  }

  Token attr_list() {
    const std::size_t line = line_;
    ++pos_;
    bool in_string = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_++];
      if (c == '\n') ++line_;
      if (in_string) {
        if (c == '\\' && pos_ < text_.size()) {
          if (text_[pos_] == '\n') ++line_;
          ++pos_;
        } else if (c == '"') {
          in_string = false;
        }
      } else if (c == '"') {
        in_string = true;
      } else if (c == ']') {
        return {TokKind::kAttrList, {}, line};
      }
    }
    throw ParseError(line, "unterminated attribute list");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

bool keyword(const Token& t, std::string_view word) {
  if (t.kind != TokKind::kId || t.text.size() != word.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(t.text[i])) != word[i]) return false;
  }
  return true;
}

bool is_node_id(const Token& t) { return t.kind == TokKind::kId || t.kind == TokKind::kQuoted; }

class DotParser {
 public:
  explicit DotParser(std::string_view text) : lexer_(text) { advance(); }

  CallGraph parse() {
    if (keyword(tok_, "strict")) advance();
    if (keyword(tok_, "graph")) {
      throw ParseError(tok_.line, "unsupported construct: undirected edge ('graph' block); use 'digraph'");
    }
    if (!keyword(tok_, "digraph")) throw ParseError(tok_.line, "expected 'digraph'");
    advance();
    if (is_node_id(tok_)) advance();
    expect(TokKind::kLBrace, "'{'");
    while (tok_.kind != TokKind::kRBrace) {
      if (tok_.kind == TokKind::kEnd) throw ParseError(tok_.line, "missing closing '}'");
      statement();
    }
    advance();
    if (tok_.kind != TokKind::kEnd) {
      throw ParseError(tok_.line, "unexpected content after closing '}'");
    }
    if (builder_.node_count() == 0) throw InputError("graph has no nodes");
    return std::move(builder_).build();
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  void expect(TokKind kind, const char* what) {
    if (tok_.kind != kind) {
      throw ParseError(tok_.line, std::string("expected ") + what + ", found '" + tok_.text + "'");
    }
    advance();
  }

  void statement() {
    if (tok_.kind == TokKind::kSemi) {
      advance();
      return;
    }
    if (keyword(tok_, "subgraph") || tok_.kind == TokKind::kLBrace) {
      throw ParseError(tok_.line, "unsupported construct: subgraph");
    }
    if (keyword(tok_, "graph") || keyword(tok_, "node") || keyword(tok_, "edge")) {
      advance();
      if (tok_.kind == TokKind::kAttrList) advance();
      end_statement();
      return;
    }
    if (!is_node_id(tok_)) {
      throw ParseError(tok_.line, "unexpected '" + tok_.text + "'");
    }
    Token first = tok_;
    advance();
    if (tok_.kind == TokKind::kEq) {  // graph attribute: key = value
      advance();
      if (!is_node_id(tok_)) throw ParseError(tok_.line, "expected attribute value");
      advance();
      end_statement();
      return;
    }
    if (tok_.kind == TokKind::kUndirected) {
      throw ParseError(tok_.line, "unsupported construct: undirected edge '--'");
    }
    if (tok_.kind != TokKind::kArrow) {  // node statement
      if (tok_.kind == TokKind::kAttrList) advance();
      end_statement();
      return;
    }
    std::string caller = first.text;
    while (tok_.kind == TokKind::kArrow) {
      advance();
      if (tok_.kind == TokKind::kLBrace || keyword(tok_, "subgraph")) {
        throw ParseError(tok_.line, "unsupported construct: subgraph");
      }
      if (!is_node_id(tok_)) throw ParseError(tok_.line, "expected node after '->'");
      builder_.add_edge(caller, tok_.text);
      caller = tok_.text;
      advance();
      if (tok_.kind == TokKind::kUndirected) {
        throw ParseError(tok_.line, "unsupported construct: undirected edge '--'");
      }
    }
    if (tok_.kind == TokKind::kAttrList) advance();
    end_statement();
  }

  void end_statement() {
    if (tok_.kind == TokKind::kSemi || tok_.kind == TokKind::kComma) advance();
  }

  DotLexer lexer_;
  Token tok_{TokKind::kEnd, {}, 0};
  GraphBuilder builder_;
};

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

}  // namespace

CallGraph load_edge_list(std::string_view text) {
  GraphBuilder builder;
  for_each_line(strip_bom(text), [&](std::size_t line_no, std::string_view line) {
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') return;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 'caller callee', found " +
                                    std::to_string(tokens.size()) + " token(s)");
    }
    builder.add_edge(tokens[0], tokens[1]);
  });
  if (builder.node_count() == 0) throw InputError("graph has no nodes");
  return std::move(builder).build();
}

CallGraph load_dot_subset(std::string_view text) {
  return DotParser(strip_bom(text)).parse();
}

CallGraph load_graph(std::string_view text, InputFormat format) {
  return format == InputFormat::kDot ? load_dot_subset(text) : load_edge_list(text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

CallGraph load_graph_file(const std::filesystem::path& path, InputFormat format) {
  return load_graph(read_file(path), format);
}

InputFormat format_for_path(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  return ext == ".dot" || ext == ".gv" ? InputFormat::kDot : InputFormat::kEdgeList;
}

std::string write_edge_list(const CallGraph& g) {
  std::string out;
  const std::size_t n = g.n();
  std::vector<bool> seen(n, false);
  std::vector<Edge> ordered;
  ordered.reserve(g.m());
  std::vector<Edge> all = g.edges();
  std::vector<bool> used(all.size(), false);
  auto edge_index = [&](NodeId u, NodeId v) {
    const Edge key{u, v};
    auto it = std::lower_bound(all.begin(), all.end(), key);
    return static_cast<std::size_t>(it - all.begin());
  };
  auto take = [&](NodeId u, NodeId v) {
    const std::size_t idx = edge_index(u, v);
    used[idx] = true;
    ordered.push_back(all[idx]);
    seen[u] = seen[v] = true;
  };

  // Introduce node k with an edge to an earlier node, or as caller of k + 1.
  // When neither exists the remaining order is arbitrary.
  bool greedy = g.directed();
  for (NodeId k = 0; greedy && k < n; ++k) {
    if (seen[k]) continue;
    bool placed = false;
    for (NodeId v : g.predecessors(k)) {
      if (v < k) {
        take(v, k);
        placed = true;
        break;
      }
    }
    for (NodeId v : g.successors(k)) {
      if (placed) break;
      if (v < k) {
        take(k, v);
        placed = true;
      }
    }
    if (!placed && k + 1 < n && g.has_edge(k, k + 1) && !seen[k + 1]) {
      take(k, k + 1);
      placed = true;
    }
    if (!placed) greedy = false;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!used[i]) ordered.push_back(all[i]);
  }
  for (const Edge& e : ordered) {
    out += g.name(e.source);
    out += ' ';
    out += g.name(e.target);
    out += '\n';
  }
  return out;
}

std::vector<CorpusEntry> parse_manifest(std::string_view text,
                                        const std::filesystem::path& base_dir) {
  std::vector<CorpusEntry> entries;
  for_each_line(strip_bom(text), [&](std::size_t line_no, std::string_view line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') return;
    const auto fields = split_tabs(line);
    if (fields.size() != 4 && fields.size() != 6) {
      throw ParseError(line_no, "expected 4 or 6 tab-separated fields, found " +
                                    std::to_string(fields.size()));
    }
    CorpusEntry entry;
    entry.label = std::string(fields[0]);
    entry.language = std::string(fields[1]);
    entry.domain = std::string(fields[2]);
    if (entry.label.empty()) throw ParseError(line_no, "empty label");
    if (fields[3].empty()) throw ParseError(line_no, "empty path");
    std::filesystem::path path{std::string(fields[3])};
    entry.path = path.is_absolute() || base_dir.empty() ? path : base_dir / path;
    if (fields.size() == 6) {
      entry.expected_n = parse_u64(fields[4]);
      entry.expected_m = parse_u64(fields[5]);
      if (!entry.expected_n || !entry.expected_m) {
        throw ParseError(line_no, "node/edge counts must be nonnegative integers");
      }
    }
    entries.push_back(std::move(entry));
  });
  return entries;
}

void validate_counts(const CorpusEntry& entry, const CallGraph& g) {
  if (entry.expected_n && *entry.expected_n != g.n()) {
    throw ValidationError(entry.label + ": expected N=" + std::to_string(*entry.expected_n) +
                          ", loaded " + std::to_string(g.n()));
  }
  if (entry.expected_m && *entry.expected_m != g.m()) {
    throw ValidationError(entry.label + ": expected M=" + std::to_string(*entry.expected_m) +
                          ", loaded " + std::to_string(g.m()));
  }
}

}  // namespace cgm
