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

// Exact matrices over GF(2) and the rationals.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace cybertopo {

using Rational = boost::multiprecision::mpq_rational;

enum class Field { kGF2, kRational };

std::string to_string(Field field);
// Accepts "f2"/"gf2" and "q"/"rational"; throws InvalidInput otherwise.
Field parse_field(const std::string& name);

// Sparse row-major matrix with exact entries. Under GF(2) every stored entry
// is 1; setting an integer value keeps its parity.
class ExactMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;
  using Row = std::vector<Entry>;

  ExactMatrix() = default;
  ExactMatrix(Field field, std::size_t rows, std::size_t cols);

  static ExactMatrix from_dense(Field field,
                                const std::vector<std::vector<Rational>>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);
  Rational at(std::size_t r, std::size_t c) const;
  const Row& row(std::size_t r) const { return data_.at(r); }
  std::size_t nonzeros() const;

  bool is_zero() const;
  std::size_t rank() const;
  // Columns form a basis of the right kernel, one per free column of the
  // reduced row echelon form, in ascending free-column order. Rational only.
  ExactMatrix null_space() const;
  ExactMatrix transpose() const;
  ExactMatrix column(std::size_t c) const;
  // result(i, j) = this(row_order[i], col_order[j]).
  ExactMatrix permuted(const std::vector<std::size_t>& row_order,
                       const std::vector<std::size_t>& col_order) const;
  std::vector<std::vector<Rational>> to_dense() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  Rational normalize(const Rational& value) const;

  Field field_ = Field::kRational;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

}  // namespace cybertopo
