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

#include "cybertopo/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "cybertopo/error.hpp"

namespace cybertopo {

std::string to_string(Field field) {
  return field == Field::kGF2 ? "f2" : "q";
}

Field parse_field(const std::string& name) {
  if (name == "f2" || name == "gf2" || name == "F2") return Field::kGF2;
  if (name == "q" || name == "rational" || name == "Q") return Field::kRational;
  throw InvalidInput("unknown field '" + name + "' (expected f2 or q)");
}

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows) {}

ExactMatrix ExactMatrix::from_dense(
    Field field, const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Rational ExactMatrix::normalize(const Rational& value) const {
  if (field_ == Field::kRational) return value;
  if (denominator(value) != 1) {
    throw InvalidInput("non-integer entry in a GF(2) matrix");
  }
  auto n = numerator(value);
  return (n % 2 != 0) ? Rational(1) : Rational(0);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw InvalidInput("matrix index out of range");
  Rational v = normalize(value);
  Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v == 0) {
      row.erase(it);
    } else {
      it->second = std::move(v);
    }
  } else if (v != 0) {
    row.insert(it, Entry{c, std::move(v)});
  }
}

void ExactMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  set(r, c, at(r, c) + value);
}

Rational ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw InvalidInput("matrix index out of range");
  const Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rational(0);
}

std::size_t ExactMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool ExactMatrix::is_zero() const { return nonzeros() == 0; }

namespace {

// Row reduction over GF(2) on packed bit rows.
std::size_t gf2_rank(const std::vector<ExactMatrix::Row>& rows, std::size_t cols) {
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::ptrdiff_t> owner(cols, -1);
  std::vector<std::uint64_t> bits(words);
  for (const auto& row : rows) {
    if (row.empty()) continue;
    std::fill(bits.begin(), bits.end(), 0);
    for (const auto& [c, v] : row) bits[c / 64] |= std::uint64_t{1} << (c % 64);
    std::size_t w = 0;
    while (true) {
      while (w < words && bits[w] == 0) ++w;
      if (w == words) break;
      const std::size_t lead = w * 64 + static_cast<std::size_t>(std::countr_zero(bits[w]));
      if (owner[lead] < 0) {
        owner[lead] = static_cast<std::ptrdiff_t>(basis.size());
        basis.push_back(bits);
        break;
      }
      const auto& pivot = basis[static_cast<std::size_t>(owner[lead])];
      for (std::size_t i = w; i < words; ++i) bits[i] ^= pivot[i];
    }
  }
  return basis.size();
}

using Row = ExactMatrix::Row;

// target -= factor * source, both sorted by column.
void axpy(Row& target, const Rational& factor, const Row& source) {
  Row out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == target.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

// Echelon form over Q: pivot rows keyed by leading column, each normalized
// so its leading entry is 1. Sparse rows are processed shortest first.
std::map<std::size_t, Row> rational_echelon(std::vector<Row> rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.size() < b.size(); });
  std::map<std::size_t, Row> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const Rational lead = row.front().second;
        for (auto& e : row) e.second /= lead;
        const std::size_t col = row.front().first;
        pivots.emplace(col, std::move(row));
        break;
      }
      const Rational factor = row.front().second;
      axpy(row, factor, it->second);
    }
  }
  return pivots;
}

}  // namespace

std::size_t ExactMatrix::rank() const {
  if (field_ == Field::kGF2) return gf2_rank(data_, cols_);
  return rational_echelon(data_).size();
}

ExactMatrix ExactMatrix::null_space() const {
  if (field_ != Field::kRational) {
    throw InvalidInput("null_space is only implemented over the rationals");
  }
  auto pivots = rational_echelon(data_);
  // Back substitution, highest pivot first, to reach reduced echelon form.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    Row& row = it->second;
    std::vector<std::size_t> hits;
    for (const auto& [c, v] : row) {
      if (c != it->first && pivots.contains(c)) hits.push_back(c);
    }
    for (std::size_t c : hits) {
      auto pos = std::lower_bound(row.begin(), row.end(), c,
                                  [](const Entry& e, std::size_t col) { return e.first < col; });
      const Rational factor = pos->second;
      axpy(row, factor, pivots.at(c));
    }
  }
  std::vector<std::size_t> free_cols;
  std::vector<std::ptrdiff_t> free_index(cols_, -1);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!pivots.contains(c)) {
      free_index[c] = static_cast<std::ptrdiff_t>(free_cols.size());
      free_cols.push_back(c);
    }
  }
  ExactMatrix basis(Field::kRational, cols_, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) basis.set(free_cols[j], j, 1);
  for (const auto& [lead, row] : pivots) {
    for (const auto& [c, v] : row) {
      if (c == lead) continue;
      basis.set(lead, static_cast<std::size_t>(free_index[c]), -v);
    }
  }
  return basis;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  }
  return t;
}

ExactMatrix ExactMatrix::column(std::size_t c) const {
  ExactMatrix out(field_, rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational v = at(r, c);
    if (v != 0) out.set(r, 0, v);
  }
  return out;
}

ExactMatrix ExactMatrix::permuted(const std::vector<std::size_t>& row_order,
                                  const std::vector<std::size_t>& col_order) const {
  if (row_order.size() != rows_ || col_order.size() != cols_) {
    throw InvalidInput("permutation size mismatch");
  }
  std::vector<std::size_t> new_col(cols_);
  for (std::size_t j = 0; j < cols_; ++j) new_col[col_order[j]] = j;
  ExactMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Row& row = out.data_[i];
    for (const auto& [c, v] : data_[row_order[i]]) row.emplace_back(new_col[c], v);
    std::sort(row.begin(), row.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
  }
  return out;
}

std::vector<std::vector<Rational>> ExactMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field_ != b.field_) throw InvalidInput("field mismatch in product");
  if (a.cols_ != b.rows_) throw InvalidInput("shape mismatch in product");
  ExactMatrix out(a.field_, a.rows_, b.cols_);
  std::map<std::size_t, Rational> acc;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    acc.clear();
    for (const auto& [k, av] : a.data_[r]) {
      for (const auto& [c, bv] : b.data_[k]) acc[c] += av * bv;
    }
    for (auto& [c, v] : acc) {
      Rational n = out.normalize(v);
      if (n != 0) out.data_[r].emplace_back(c, std::move(n));
    }
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

}  // namespace cybertopo
