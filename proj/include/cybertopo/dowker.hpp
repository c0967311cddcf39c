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

// Relations, their Dowker complexes, and windowed homology profiles of
// straight-line code.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cybertopo/complex.hpp"
#include "cybertopo/homology.hpp"

namespace cybertopo {

// A 0/1 incidence matrix between labelled rows (assignments) and labelled
// columns (variables).
class Relation {
 public:
  Relation() = default;
  Relation(std::vector<std::string> row_labels,
           std::vector<std::string> col_labels,
           std::vector<std::vector<bool>> matrix);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  bool at(std::size_t r, std::size_t c) const { return matrix_.at(r).at(c); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  std::vector<std::size_t> row_support(std::size_t r) const;
  std::vector<std::size_t> col_support(std::size_t c) const;

  Relation transposed() const;
  // Rows [begin, end), keeping only columns with a 1 among them.
  Relation row_window(std::size_t begin, std::size_t end) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<std::vector<bool>> matrix_;
};

enum class DowkerSide {
  kRows,  // vertices are rows, simplices come from column supports
  kCols,  // vertices are columns, simplices come from row supports
};

DowkerSide parse_side(const std::string& name);

SimplicialComplex dowker_complex(const Relation& r, DowkerSide side,
                                 int max_dim = kUnboundedDim);

// GF(2) Betti numbers in degrees 0..max_betti_dim, from simplices up to
// dimension max_betti_dim + 1.
BettiProfile dowker_betti(const Relation& r, DowkerSide side,
                          int max_betti_dim = 2);

// One row per assignment `IDENT = term (op term)*`, one column per distinct
// identifier in order of first appearance. Rows are labelled by source line.
Relation parse_straightline(std::string_view source);

// Header of column labels (optionally preceded by a corner cell), then one
// line per row: label followed by 0/1 entries.
Relation read_relation_csv(std::istream& in);
void write_relation_csv(std::ostream& out, const Relation& r);

struct WindowRow {
  std::string start_label;
  std::vector<long long> betti;  // degrees 0..max_betti_dim
  // Alternating simplex count up to dimension max_betti_dim + 1.
  long long chi = 0;
  // Set when the complex has simplices above that dimension, so chi is
  // not the full Euler characteristic.
  bool chi_truncated = false;
};

struct WindowProfile {
  std::size_t window_size = 0;
  int max_betti_dim = 2;
  std::vector<WindowRow> rows;
};

// Homology of the Dowker complex of a whole relation on the given side.
WindowRow relation_summary(const Relation& r, DowkerSide side,
                           int max_betti_dim = 2);

// Slides a window of w consecutive rows (step 1); each window's complex has
// the variables as vertices.
WindowProfile windowed_profile(const Relation& r, std::size_t w,
                               int max_betti_dim = 2);

// Columns: start_label, beta0.., chi, chi_truncated.
void write_profile_csv(std::ostream& out, const WindowProfile& profile);

}  // namespace cybertopo
