#include "coxfold/parse.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "coxfold/catalog.hpp"
#include "coxfold/errors.hpp"

namespace coxfold {

namespace {

struct Token {
  enum class Kind { number, word, punct, dotdot, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 0;
  int column = 0;
};

// One statement: its raw text and the source position of every character.
struct Statement {
  std::string text;
  std::vector<std::pair<int, int>> where;
  int line = 0;
  int column = 0;
};

std::vector<Statement> split_statements(const std::string& text) {
  std::vector<Statement> out;
  Statement cur;
  int line = 1;
  int column = 1;
  bool comment = false;
  auto flush = [&] {
    const auto first = cur.text.find_first_not_of(" \t\r");
    if (first != std::string::npos) {
      const auto last = cur.text.find_last_not_of(" \t\r");
      Statement s;
      s.text = cur.text.substr(first, last - first + 1);
      s.where.assign(cur.where.begin() + static_cast<long>(first),
                     cur.where.begin() + static_cast<long>(last + 1));
      s.line = s.where.front().first;
      s.column = s.where.front().second;
      out.push_back(std::move(s));
    }
    cur = Statement{};
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      comment = false;
      ++line;
      column = 1;
      continue;
    }
    if (c == '#') comment = true;
    if (!comment) {
      if (c == ';') {
        flush();
      } else {
        cur.text.push_back(c);
        cur.where.emplace_back(line, column);
      }
    }
    ++column;
  }
  flush();
  return out;
}

class Cursor {
 public:
  explicit Cursor(const Statement& s) : s_(s) { tokenize(); }

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::end; }
  bool accept(const std::string& punct) {
    if (peek().kind == Token::Kind::punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const std::string& punct) {
    if (!accept(punct)) fail("expected '" + punct + "'" + found());
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().column);
  }
  std::string found() const {
    return at_end() ? " at end of statement" : " but found '" + peek().text + "'";
  }

  int integer() {
    const bool negative = accept("-");
    if (peek().kind != Token::Kind::number) fail("expected a vertex id" + found());
    const Token t = next();
    if (t.text.size() > 9) throw ParseError("vertex id too large", t.line, t.column);
    return negative ? -std::stoi(t.text) : std::stoi(t.text);
  }

  // Rest of the statement after the current token, verbatim.
  std::string rest() {
    if (at_end()) return {};
    const int offset = offsets_[pos_];
    pos_ = tokens_.size() - 1;
    return s_.text.substr(static_cast<size_t>(offset));
  }

 private:
  void tokenize() {
    const std::string& t = s_.text;
    size_t i = 0;
    auto push = [&](Token::Kind kind, size_t from, size_t to) {
      tokens_.push_back({kind, t.substr(from, to - from), s_.where[from].first, s_.where[from].second});
      offsets_.push_back(static_cast<int>(from));
    };
    while (i < t.size()) {
      const unsigned char c = static_cast<unsigned char>(t[i]);
      if (std::isspace(c)) {
        ++i;
      } else if (std::isdigit(c)) {
        size_t j = i;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        push(Token::Kind::number, i, j);
        i = j;
      } else if (std::isalpha(c) || c == '_') {
        size_t j = i;
        while (j < t.size() && (std::isalnum(static_cast<unsigned char>(t[j])) || t[j] == '_' || t[j] == '\''))
          ++j;
        push(Token::Kind::word, i, j);
        i = j;
      } else if (c == '.' && i + 1 < t.size() && t[i + 1] == '.') {
        push(Token::Kind::dotdot, i, i + 2);
        i += 2;
      } else if (c == '-' || c == ':' || c == ',' || c == '(' || c == ')') {
        push(Token::Kind::punct, i, i + 1);
        ++i;
      } else {
        throw ParseError(std::string("unexpected character '") + t[i] + "'", s_.where[i].first,
                         s_.where[i].second);
      }
    }
    const auto [line, column] = s_.where.back();
    tokens_.push_back({Token::Kind::end, "", line, column + 1});
    offsets_.push_back(static_cast<int>(t.size()));
  }

  const Statement& s_;
  std::vector<Token> tokens_;
  std::vector<int> offsets_;
  size_t pos_ = 0;
};

struct PendingEdge {
  VertexId u, v;
  Label label;
  int line, column;
};

struct PendingSymmetry {
  std::string name;
  std::map<VertexId, VertexId> map;
  int line, column;
};

class SpecBuilder {
 public:
  explicit SpecBuilder(std::size_t cap) : cap_(cap) {}

  void statement(const Statement& s) {
    Cursor c(s);
    const Token head = c.next();
    if (head.kind != Token::Kind::word) throw ParseError("expected a keyword", head.line, head.column);
    const std::string& kw = head.text;
    if (kw == "vertices") {
      vertices(c, head);
    } else if (kw == "edge") {
      edge(c);
    } else if (kw == "symmetry") {
      symmetry(c, head);
    } else if (kw == "group") {
      group(c);
    } else if (kw == "infinite") {
      c.accept(":");
      do {
        const Token at = c.peek();
        infinite_.push_back({c.integer(), at.line, at.column});
        c.accept(",");
      } while (!c.at_end());
    } else if (kw == "name") {
      name_ = c.rest();
    } else if (kw == "catalog") {
      catalog(c, head);
    } else {
      throw ParseError("unknown statement '" + kw + "'", head.line, head.column);
    }
    if (!c.at_end()) c.fail("unexpected '" + c.peek().text + "'");
  }

  SymmetricGraph finish() {
    CoxeterGraph graph;
    if (base_) {
      graph = base_->graph;
    } else {
      if (ids_.empty()) throw ParseError("no vertices declared", 1, 1);
      std::vector<Edge> edges;
      for (const auto& e : edges_) edges.push_back({e.u, e.v, e.label});
      graph = CoxeterGraph(ids_, edges, name_);
    }
    if (!name_.empty()) graph = graph.renamed(name_);

    std::vector<NamedSymmetry> declared;
    if (base_) declared = base_->symmetries;
    for (const auto& p : symmetries_) {
      try {
        declared.push_back({p.name, validate_symmetry(graph, p.map)});
      } catch (const SymmetryError& e) {
        throw ParseError(e.what(), p.line, p.column);
      }
    }
    std::vector<NamedSymmetry> gens;
    if (group_) {
      for (const auto& [name, line, column] : *group_) {
        auto it = std::find_if(declared.begin(), declared.end(),
                               [&](const NamedSymmetry& s) { return s.name == name; });
        if (it == declared.end()) throw ParseError("unknown symmetry '" + name + "'", line, column);
        gens.push_back(*it);
      }
    } else if (!base_) {
      gens = declared;
    } else {
      gens = base_group_;
    }
    std::vector<int> infinite;
    for (const auto& [v, line, column] : infinite_) {
      if (!graph.contains(v)) throw ParseError("unknown vertex " + std::to_string(v), line, column);
      infinite.push_back(graph.position(v));
    }
    return {graph, SymmetryGroup(graph, std::move(gens), cap_, std::move(infinite))};
  }

 private:
  void require_explicit(const Token& at) {
    if (base_) throw ParseError("a catalog graph cannot be extended", at.line, at.column);
  }

  void add_vertex(VertexId v, const Token& at) {
    if (std::find(ids_.begin(), ids_.end(), v) != ids_.end())
      throw ParseError("vertex " + std::to_string(v) + " declared twice", at.line, at.column);
    ids_.push_back(v);
  }

  void vertices(Cursor& c, const Token& head) {
    require_explicit(head);
    do {
      const Token at = c.peek();
      const int lo = c.integer();
      if (c.peek().kind == Token::Kind::dotdot) {
        c.next();
        const int hi = c.integer();
        if (hi < lo) throw ParseError("empty range", at.line, at.column);
        if (hi - lo > 100000) throw ParseError("range too large", at.line, at.column);
        for (int v = lo; v <= hi; ++v) add_vertex(v, at);
      } else {
        add_vertex(lo, at);
      }
      c.accept(",");
    } while (!c.at_end());
  }

  void check_vertex(VertexId v, const Token& at) {
    if (std::find(ids_.begin(), ids_.end(), v) == ids_.end())
      throw ParseError("unknown vertex " + std::to_string(v), at.line, at.column);
  }

  void edge(Cursor& c) {
    const Token at_u = c.peek();
    require_explicit(at_u);
    const VertexId u = c.integer();
    check_vertex(u, at_u);
    c.expect("-");
    const Token at_v = c.peek();
    const VertexId v = c.integer();
    check_vertex(v, at_v);
    if (u == v) throw ParseError("self loop on vertex " + std::to_string(u), at_v.line, at_v.column);
    Label label(3);
    if (c.peek().kind == Token::Kind::word && c.peek().text == "label") {
      c.next();
      const Token at = c.next();
      if (at.kind == Token::Kind::word && (at.text == "inf" || at.text == "infinity")) {
        label = Label::infinity();
      } else if (at.kind == Token::Kind::number && at.text.size() <= 9) {
        const int m = std::stoi(at.text);
        if (m < 2) throw ParseError("label must be at least 2", at.line, at.column);
        label = Label(m);
      } else {
        throw ParseError("expected a label value or 'inf'", at.line, at.column);
      }
    }
    for (const PendingEdge& e : edges_)
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
        if (!(e.label == label))
          throw ParseError("edge " + std::to_string(u) + "-" + std::to_string(v) + " declared with label " +
                               label.to_string() + " but line " + std::to_string(e.line) + " gives " +
                               e.label.to_string(),
                           at_u.line, at_u.column);
        return;
      }
    edges_.push_back({u, v, label, at_u.line, at_u.column});
  }

  void symmetry(Cursor& c, const Token& head) {
    const Token name = c.next();
    if (name.kind != Token::Kind::word) throw ParseError("expected a symmetry name", name.line, name.column);
    c.expect(":");
    PendingSymmetry p{name.text, {}, head.line, head.column};
    std::map<VertexId, bool> used;
    while (!c.at_end()) {
      c.expect("(");
      std::vector<VertexId> cycle;
      while (!c.accept(")")) {
        const Token at = c.peek();
        const VertexId v = c.integer();
        if (!base_) check_vertex(v, at);
        if (used[v]) throw ParseError("vertex " + std::to_string(v) + " repeated in a cycle", at.line, at.column);
        used[v] = true;
        cycle.push_back(v);
      }
      for (size_t i = 0; i < cycle.size(); ++i) p.map[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    symmetries_.push_back(std::move(p));
  }

  void group(Cursor& c) {
    c.expect(":");
    group_.emplace();
    while (!c.at_end()) {
      const Token t = c.next();
      if (t.kind != Token::Kind::word) throw ParseError("expected a symmetry name", t.line, t.column);
      group_->push_back({t.text, t.line, t.column});
      c.accept(",");
    }
  }

  void catalog(Cursor& c, const Token& head) {
    if (base_ || !ids_.empty()) throw ParseError("catalog must be the only graph source", head.line, head.column);
    const Token at = c.peek();
    const std::string token = c.rest();
    try {
      const ParsedToken parsed = parse_catalog_token(token);
      base_ = catalog_graph(parsed.family, parsed.rank);
      base_group_ = catalog_pair(token).group.generators();
    } catch (const CatalogError& e) {
      throw ParseError(e.what(), at.line, at.column);
    }
  }

  struct Located {
    std::string name;
    int line, column;
  };
  struct LocatedId {
    VertexId v;
    int line, column;
  };

  std::size_t cap_;
  std::vector<VertexId> ids_;
  std::vector<PendingEdge> edges_;
  std::vector<PendingSymmetry> symmetries_;
  std::optional<std::vector<Located>> group_;
  std::vector<LocatedId> infinite_;
  std::string name_;
  std::optional<CatalogEntry> base_;
  std::vector<NamedSymmetry> base_group_;
};

}  // namespace

SymmetricGraph parse_graph_text(const std::string& text, std::size_t closure_cap) {
  SpecBuilder builder(closure_cap);
  for (const Statement& s : split_statements(text)) builder.statement(s);
  return builder.finish();
}

SymmetricGraph load_input(const std::string& input, std::size_t closure_cap) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream in(input);
    if (!in) throw Error("cannot read " + input);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str(), closure_cap);
  }
  const SymmetricGraph pair = catalog_pair(input);
  if (closure_cap < pair.group.order())
    throw CapExceeded("symmetry group closure exceeds " + std::to_string(closure_cap) + " elements");
  return pair;
}

}  // namespace coxfold
