// Copyright 2026 The Cybertopo Authors.
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

#include "cybertopo/path_homology.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

#include "cybertopo/error.hpp"

namespace cybertopo {

Digraph::Digraph(std::vector<std::string> vertex_labels,
                 const std::vector<std::pair<std::string, std::string>>& arcs) {
  for (const auto& [u, v] : arcs) {
    if (u == v) throw InvalidInput("self-loop at '" + u + "'");
    vertex_labels.push_back(u);
    vertex_labels.push_back(v);
  }
  labels_ = LabelTable(std::move(vertex_labels));
  for (const auto& [u, v] : arcs) arcs_.emplace_back(labels_.id(u), labels_.id(v));
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  out_.assign(labels_.size(), {});
  for (auto [u, v] : arcs_) out_[u].push_back(v);
}

bool Digraph::has_arc(VertexId from, VertexId to) const {
  if (from >= out_.size()) return false;
  return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

std::vector<Path> allowed_paths(const Digraph& d, int p) {
  if (p < 0) throw InvalidInput("path degree must be nonnegative");
  std::vector<Path> paths;
  for (VertexId v = 0; v < d.vertex_count(); ++v) paths.push_back({v});
  for (int step = 0; step < p; ++step) {
    std::vector<Path> next;
    for (const auto& path : paths) {
      for (VertexId w : d.successors(path.back())) {
        Path grown = path;
        grown.push_back(w);
        next.push_back(std::move(grown));
      }
    }
    paths = std::move(next);
  }
  return paths;
}

ExactMatrix nonregular_boundary(const std::vector<Path>& paths,
                                std::vector<Path>& faces) {
  faces.clear();
  for (const auto& path : paths) {
    if (path.size() < 2) continue;
    for (std::size_t j = 0; j < path.size(); ++j) {
      Path face = path;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
      faces.push_back(std::move(face));
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  ExactMatrix m(Field::kRational, faces.size(), paths.size());
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const auto& path = paths[k];
    if (path.size() < 2) continue;
    for (std::size_t j = 0; j < path.size(); ++j) {
      Path face = path;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
      const auto row = static_cast<std::size_t>(
          std::lower_bound(faces.begin(), faces.end(), face) - faces.begin());
      m.add(row, k, (j % 2 == 0) ? 1 : -1);
    }
  }
  return m;
}

namespace {

bool is_allowed(const Digraph& d, const Path& path) {
  for (std::size_t j = 1; j < path.size(); ++j) {
    if (!d.has_arc(path[j - 1], path[j])) return false;
  }
  return true;
}

// Rows of ∂_[p] on the allowed p-paths that land on non-allowed tuples.
ExactMatrix omega_constraints(const Digraph& d, const std::vector<Path>& allowed) {
  std::vector<Path> faces;
  const ExactMatrix full = nonregular_boundary(allowed, faces);
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (!is_allowed(d, faces[i])) rows.push_back(i);
  }
  ExactMatrix c(Field::kRational, rows.size(), allowed.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [col, v] : full.row(rows[i])) c.set(i, col, v);
  }
  return c;
}

}  // namespace

PathBasis omega(const Digraph& d, int p) {
  PathBasis basis;
  basis.degree = p;
  basis.allowed = allowed_paths(d, p);
  basis.omega_basis = omega_constraints(d, basis.allowed).null_space();
  return basis;
}

ExactMatrix omega_boundary(const Digraph& d, int p) {
  if (p < 1) throw InvalidInput("omega_boundary needs p >= 1");
  const PathBasis top = omega(d, p);
  const auto lower = allowed_paths(d, p - 1);
  std::vector<Path> faces;
  const ExactMatrix full = nonregular_boundary(top.allowed, faces) * top.omega_basis;
  ExactMatrix out(Field::kRational, lower.size(), top.dimension());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& row = full.row(i);
    if (row.empty()) continue;
    auto it = std::lower_bound(lower.begin(), lower.end(), faces[i]);
    if (it == lower.end() || *it != faces[i]) {
      throw InternalError("boundary of an Ω chain leaves the allowed paths");
    }
    const auto r = static_cast<std::size_t>(it - lower.begin());
    for (const auto& [c, v] : row) out.set(r, c, v);
  }
  return out;
}

PathHomology path_homology(const Digraph& d, int max_p) {
  if (max_p < 0) throw InvalidInput("max_p must be nonnegative");
  PathHomology out;
  const int top = max_p + 1;
  for (int p = 0; p <= top; ++p) {
    const auto allowed = allowed_paths(d, p);
    const std::size_t constrained = omega_constraints(d, allowed).rank();
    const std::size_t dim = allowed.size() - constrained;
    out.omega_dims.push_back(dim);
    if (p == 0) {
      out.ranks.push_back(0);
      continue;
    }
    // ker(∂_p|Ω_p) = ker(∂_[p] on allowed chains), since cycles lie in Ω_p.
    std::vector<Path> faces;
    const std::size_t kernel = allowed.size() - nonregular_boundary(allowed, faces).rank();
    out.ranks.push_back(dim - kernel);
  }
  auto& profile = out.profile;
  for (int p = 0; p <= max_p; ++p) {
    const auto i = static_cast<std::size_t>(p);
    const std::size_t cycles = out.omega_dims[i] - out.ranks[i];
    const auto b = static_cast<long long>(cycles - out.ranks[i + 1]);
    profile.chain_dims.push_back(out.omega_dims[i]);
    profile.ranks.push_back(out.ranks[i]);
    profile.cycles.push_back(cycles);
    profile.boundaries.push_back(out.ranks[i + 1]);
    profile.betti.push_back(b);
    profile.euler += (p % 2 == 0) ? b : -b;
  }
  profile.reduced = profile.betti;
  if (d.vertex_count() > 0) profile.reduced[0] -= 1;
  return out;
}

BettiProfile path_betti(const Digraph& d, int max_p, bool reduced) {
  BettiProfile profile = path_homology(d, max_p).profile;
  if (reduced) {
    profile.betti = profile.reduced;
    profile.euler = 0;
    for (std::size_t p = 0; p < profile.betti.size(); ++p) {
      profile.euler += (p % 2 == 0) ? profile.betti[p] : -profile.betti[p];
    }
  }
  return profile;
}

long long cyclomatic(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = n;
  for (auto [u, v] : d.arcs()) {
    VertexId a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return static_cast<long long>(d.arcs().size()) - static_cast<long long>(n) +
         static_cast<long long>(components);
}

Digraph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> arcs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError("expected exactly two vertex labels", line_no);
    }
    if (tokens[0] == tokens[1]) throw ParseError("self-loop at '" + tokens[0] + "'", line_no);
    arcs.emplace_back(tokens[0], tokens[1]);
  }
  if (arcs.empty()) throw ParseError("no arcs in input");
  return Digraph({}, arcs);
}

namespace {

class DotLexer {
 public:
  struct Token {
    enum Kind { kId, kArrow, kLBrace, kRBrace, kSemi, kEnd } kind;
    std::string text;
    std::size_t line, column;
  };

  explicit DotLexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    const std::size_t line = line_, column = column_;
    if (pos_ >= text_.size()) return {Token::kEnd, "", line, column};
    const char ch = text_[pos_];
    if (ch == '{') return advance(1), Token{Token::kLBrace, "{", line, column};
    if (ch == '}') return advance(1), Token{Token::kRBrace, "}", line, column};
    if (ch == ';') return advance(1), Token{Token::kSemi, ";", line, column};
    if (text_.substr(pos_, 2) == "->") return advance(2), Token{Token::kArrow, "->", line, column};
    if (ch == '"') {
      advance(1);
      std::string value;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance(1);
        value += text_[pos_];
        advance(1);
      }
      if (pos_ >= text_.size()) throw ParseError("unterminated string", line, column);
      advance(1);
      return {Token::kId, value, line, column};
    }
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.') {
      std::string value;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '.')) {
        value += text_[pos_];
        advance(1);
      }
      return {Token::kId, value, line, column};
    }
    throw ParseError(std::string("unsupported syntax '") + ch + "'", line, column);
  }

 private:
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        advance(1);
      } else if (ch == '#' || text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
      } else if (text_.substr(pos_, 2) == "/*") {
        advance(2);
        while (pos_ < text_.size() && text_.substr(pos_, 2) != "*/") advance(1);
        advance(2);
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

Digraph parse_dot(std::string_view text) {
  using Token = DotLexer::Token;
  DotLexer lex(text);
  auto fail = [](const std::string& msg, const Token& t) -> ParseError {
    return ParseError(msg, t.line, t.column);
  };

  Token t = lex.next();
  if (t.kind != Token::kId || t.text != "digraph") throw fail("expected 'digraph'", t);
  t = lex.next();
  if (t.kind == Token::kId) t = lex.next();
  if (t.kind != Token::kLBrace) throw fail("expected '{'", t);

  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> arcs;
  t = lex.next();
  while (t.kind != Token::kRBrace) {
    if (t.kind == Token::kSemi) {
      t = lex.next();
      continue;
    }
    if (t.kind != Token::kId) throw fail("expected a node identifier", t);
    if (t.text == "subgraph" || t.text == "graph" || t.text == "node" || t.text == "edge") {
      throw fail("unsupported statement '" + t.text + "'", t);
    }
    std::string previous = t.text;
    vertices.push_back(previous);
    t = lex.next();
    while (t.kind == Token::kArrow) {
      Token head = lex.next();
      if (head.kind != Token::kId) throw fail("expected a node identifier after '->'", head);
      if (head.text == previous) throw fail("self-loop at '" + previous + "'", head);
      arcs.emplace_back(previous, head.text);
      previous = head.text;
      t = lex.next();
    }
    if (t.kind == Token::kSemi) {
      t = lex.next();
    } else if (t.kind != Token::kId && t.kind != Token::kRBrace) {
      throw fail("unsupported syntax '" + t.text + "'", t);
    }
  }
  t = lex.next();
  if (t.kind != Token::kEnd) throw fail("trailing input after '}'", t);
  if (vertices.empty()) throw ParseError("digraph has no vertices");
  return Digraph(std::move(vertices), arcs);
}

}  // namespace cybertopo
