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

#include "cybertopo/dowker.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cybertopo/error.hpp"

namespace cybertopo {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw InvalidInput(std::string("duplicate ") + what + " label '" + l + "'");
    }
  }
}

}  // namespace

Relation::Relation(std::vector<std::string> row_labels,
                   std::vector<std::string> col_labels,
                   std::vector<std::vector<bool>> matrix)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      matrix_(std::move(matrix)) {
  require_unique(row_labels_, "row");
  require_unique(col_labels_, "column");
  if (matrix_.size() != row_labels_.size()) throw InvalidInput("relation row count mismatch");
  for (const auto& row : matrix_) {
    if (row.size() != col_labels_.size()) throw InvalidInput("relation column count mismatch");
  }
}

std::vector<std::size_t> Relation::row_support(std::size_t r) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols(); ++c) {
    if (matrix_[r][c]) out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> Relation::col_support(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rows(); ++r) {
    if (matrix_[r][c]) out.push_back(r);
  }
  return out;
}

Relation Relation::transposed() const {
  std::vector<std::vector<bool>> m(cols(), std::vector<bool>(rows()));
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) m[c][r] = matrix_[r][c];
  }
  return Relation(col_labels_, row_labels_, std::move(m));
}

Relation Relation::row_window(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows()) throw InvalidInput("row window out of range");
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < cols(); ++c) {
    for (std::size_t r = begin; r < end; ++r) {
      if (matrix_[r][c]) {
        keep.push_back(c);
        break;
      }
    }
  }
  std::vector<std::string> rl(row_labels_.begin() + static_cast<std::ptrdiff_t>(begin),
                              row_labels_.begin() + static_cast<std::ptrdiff_t>(end));
  std::vector<std::string> cl;
  for (std::size_t c : keep) cl.push_back(col_labels_[c]);
  std::vector<std::vector<bool>> m;
  for (std::size_t r = begin; r < end; ++r) {
    std::vector<bool> row;
    for (std::size_t c : keep) row.push_back(matrix_[r][c]);
    m.push_back(std::move(row));
  }
  return Relation(std::move(rl), std::move(cl), std::move(m));
}

DowkerSide parse_side(const std::string& name) {
  if (name == "rows") return DowkerSide::kRows;
  if (name == "cols" || name == "columns") return DowkerSide::kCols;
  throw InvalidInput("unknown Dowker side '" + name + "' (expected rows or cols)");
}

SimplicialComplex dowker_complex(const Relation& r, DowkerSide side, int max_dim) {
  if (max_dim < 0) throw InvalidInput("max_dim must be nonnegative");
  const bool rows_side = side == DowkerSide::kRows;
  const auto& vertex_labels = rows_side ? r.row_labels() : r.col_labels();
  LabelTable labels(vertex_labels);
  std::vector<VertexId> id_of;
  for (const auto& l : vertex_labels) id_of.push_back(labels.id(l));

  std::vector<std::vector<VertexId>> facets;
  const std::size_t generators = rows_side ? r.cols() : r.rows();
  for (std::size_t g = 0; g < generators; ++g) {
    const auto support = rows_side ? r.col_support(g) : r.row_support(g);
    if (support.empty()) continue;
    std::vector<VertexId> facet;
    for (std::size_t v : support) facet.push_back(id_of[v]);
    facets.push_back(std::move(facet));
  }
  return SimplicialComplex::from_id_facets(std::move(labels), facets, max_dim);
}

BettiProfile dowker_betti(const Relation& r, DowkerSide side, int max_betti_dim) {
  if (max_betti_dim < 0) throw InvalidInput("max_betti_dim must be nonnegative");
  const auto k = dowker_complex(r, side, max_betti_dim + 1);
  return simplicial_betti(k, Field::kGF2, max_betti_dim);
}

namespace {

struct Token {
  enum Kind { kIdent, kNumber, kOp, kAssign } kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) {
        ++j;
      }
      out.push_back({Token::kIdent, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '.')) {
        ++j;
      }
      if (j < line.size() && (line[j] == 'e' || line[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < line.size() && (line[k] == '+' || line[k] == '-')) ++k;
        if (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) {
          while (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) ++k;
          j = k;
        }
      }
      out.push_back({Token::kNumber, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (ch == '+' || ch == '-' || ch == '*' || ch == '/') {
      out.push_back({Token::kOp, std::string(1, ch), col});
      ++i;
    } else if (ch == '=') {
      out.push_back({Token::kAssign, "=", col});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", line_no, col);
    }
  }
  return out;
}

}  // namespace

Relation parse_straightline(std::string_view source) {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::unordered_map<std::string, std::size_t> col_index;
  std::vector<std::vector<std::size_t>> supports;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.remove_suffix(1);
    }
    if (!line.empty() && line.back() == ';') line.remove_suffix(1);
    const auto tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;

    if (tokens[0].kind != Token::kIdent) {
      throw ParseError("expected an identifier on the left of '='", line_no, tokens[0].column);
    }
    if (tokens.size() < 2 || tokens[1].kind != Token::kAssign) {
      const std::size_t col = tokens.size() < 2 ? line.size() + 1 : tokens[1].column;
      throw ParseError("expected '='", line_no, col);
    }
    if (tokens.size() < 3) throw ParseError("expected a term after '='", line_no, line.size() + 1);
    std::vector<std::string> idents{tokens[0].text};
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const bool want_term = (i % 2 == 0);
      const auto& t = tokens[i];
      if (want_term && t.kind != Token::kIdent && t.kind != Token::kNumber) {
        throw ParseError("expected an identifier or number", line_no, t.column);
      }
      if (!want_term && t.kind != Token::kOp) {
        throw ParseError("expected an operator", line_no, t.column);
      }
      if (t.kind == Token::kIdent) idents.push_back(t.text);
    }
    if (tokens.size() % 2 == 0) {
      throw ParseError("expression ends with an operator", line_no, tokens.back().column);
    }

    std::vector<std::size_t> support;
    for (const auto& name : idents) {
      auto [it, inserted] = col_index.emplace(name, col_labels.size());
      if (inserted) col_labels.push_back(name);
      support.push_back(it->second);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    supports.push_back(std::move(support));
    row_labels.push_back(std::to_string(line_no));
  }
  if (supports.empty()) throw ParseError("no assignments in input");

  std::vector<std::vector<bool>> m(supports.size(), std::vector<bool>(col_labels.size()));
  for (std::size_t r = 0; r < supports.size(); ++r) {
    for (std::size_t c : supports[r]) m[r][c] = true;
  }
  return Relation(std::move(row_labels), std::move(col_labels), std::move(m));
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    const auto a = cell.find_first_not_of(" \t\r");
    const auto b = cell.find_last_not_of(" \t\r");
    cells.push_back(a == std::string::npos ? "" : cell.substr(a, b - a + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Relation read_relation_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    header = split_csv(line);
    break;
  }
  if (header.empty()) throw ParseError("empty relation file");
  const std::size_t header_line = line_no;

  std::vector<std::string> row_labels;
  std::vector<std::vector<bool>> m;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const auto cells = split_csv(line);
    if (cells.size() < 2) throw ParseError("row needs a label and entries", line_no);
    if (width == 0) width = cells.size() - 1;
    if (cells.size() - 1 != width) throw ParseError("ragged row", line_no);
    std::vector<bool> row;
    for (std::size_t i = 1; i < cells.size(); ++i) {
      if (cells[i] == "1") {
        row.push_back(true);
      } else if (cells[i] == "0") {
        row.push_back(false);
      } else {
        throw ParseError("entry must be 0 or 1", line_no);
      }
    }
    row_labels.push_back(cells[0]);
    m.push_back(std::move(row));
  }
  if (m.empty()) throw ParseError("relation has no rows");
  if (header.size() == width + 1) header.erase(header.begin());
  if (header.size() != width) throw ParseError("header width does not match rows", header_line);
  try {
    return Relation(std::move(row_labels), std::move(header), std::move(m));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

void write_relation_csv(std::ostream& out, const Relation& r) {
  for (const auto& l : r.col_labels()) out << ',' << l;
  out << '\n';
  for (std::size_t i = 0; i < r.rows(); ++i) {
    out << r.row_labels()[i];
    for (std::size_t c = 0; c < r.cols(); ++c) out << ',' << (r.at(i, c) ? 1 : 0);
    out << '\n';
  }
}

WindowRow relation_summary(const Relation& r, DowkerSide side, int max_betti_dim) {
  if (max_betti_dim < 0) throw InvalidInput("max_betti_dim must be nonnegative");
  const int cap = max_betti_dim + 1;
  WindowRow row;
  row.start_label = r.rows() > 0 ? r.row_labels().front() : "";
  const auto k = dowker_complex(r, side, cap);
  row.betti = simplicial_betti(k, Field::kGF2, max_betti_dim).betti;
  for (int p = 0; p <= cap; ++p) {
    const auto n = static_cast<long long>(k.count(p));
    row.chi += (p % 2 == 0) ? n : -n;
  }
  const std::size_t generators = side == DowkerSide::kRows ? r.cols() : r.rows();
  for (std::size_t g = 0; g < generators; ++g) {
    const auto size = side == DowkerSide::kRows ? r.col_support(g).size()
                                                : r.row_support(g).size();
    if (size > static_cast<std::size_t>(cap) + 1) row.chi_truncated = true;
  }
  return row;
}

WindowProfile windowed_profile(const Relation& r, std::size_t w, int max_betti_dim) {
  if (w < 1 || w > r.rows()) {
    throw InvalidInput("window size must be between 1 and the row count (" +
                       std::to_string(r.rows()) + ")");
  }
  WindowProfile profile;
  profile.window_size = w;
  profile.max_betti_dim = max_betti_dim;
  for (std::size_t start = 0; start + w <= r.rows(); ++start) {
    profile.rows.push_back(
        relation_summary(r.row_window(start, start + w), DowkerSide::kCols, max_betti_dim));
  }
  return profile;
}

void write_profile_csv(std::ostream& out, const WindowProfile& profile) {
  out << "start_label";
  for (int p = 0; p <= profile.max_betti_dim; ++p) out << ",beta" << p;
  out << ",chi,chi_truncated\n";
  for (const auto& row : profile.rows) {
    out << row.start_label;
    for (long long b : row.betti) out << ',' << b;
    out << ',' << row.chi << ',' << (row.chi_truncated ? "true" : "false") << '\n';
  }
}

}  // namespace cybertopo
