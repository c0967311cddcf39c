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

// Abstract simplicial complexes over interned vertex labels.
//
// Labels are interned to dense ids in natural order (numeric labels by value,
// then everything else lexicographically), so a simplex is a strictly
// ascending id tuple and every derived basis has a canonical orientation.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace cybertopo {

using VertexId = std::uint32_t;

class Simplex {
 public:
  Simplex() = default;
  // Sorts and validates; throws InvalidInput on empty or repeated vertices.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  std::span<const VertexId> vertices() const { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  VertexId front() const { return vertices_.front(); }

  bool contains(VertexId v) const;
  // True when every vertex of `face` is a vertex of this simplex.
  bool has_face(const Simplex& face) const;
  // The codimension-one face obtained by deleting position `j`.
  Simplex delete_vertex(std::size_t j) const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

using SimplexSet = std::set<Simplex>;

// Interned, naturally ordered vertex labels.
class LabelTable {
 public:
  LabelTable() = default;
  // Deduplicates and orders the labels.
  explicit LabelTable(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(VertexId id) const { return labels_.at(id); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;
  VertexId id(std::string_view label) const;  // throws InvalidInput

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
};

// Natural label order: integers by value first, then other strings.
bool natural_less(std::string_view a, std::string_view b);

inline constexpr int kUnboundedDim = std::numeric_limits<int>::max();

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // All nonempty subsets (up to dimension max_dim) of the given label sets.
  static SimplicialComplex from_facets(
      const std::vector<std::vector<std::string>>& facets,
      int max_dim = kUnboundedDim);

  // Same, with facets already expressed as ids into `labels`.
  static SimplicialComplex from_id_facets(
      LabelTable labels, const std::vector<std::vector<VertexId>>& facets,
      int max_dim = kUnboundedDim);

  // The subcomplex made of `simplices`, which must already be closed.
  static SimplicialComplex from_closed_set(LabelTable labels,
                                           const SimplexSet& simplices);

  const LabelTable& labels() const { return labels_; }
  std::size_t vertex_count() const { return labels_.size(); }
  bool empty() const { return simplex_count_ == 0; }
  // -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t size() const { return simplex_count_; }

  // Simplices of one dimension, lexicographic in vertex ids.
  std::span<const Simplex> simplices(int dim) const;
  std::size_t count(int dim) const { return simplices(dim).size(); }
  std::vector<Simplex> all_simplices() const;

  bool contains(const Simplex& s) const { return members_.contains(s); }
  // Index of `s` inside simplices(s.dimension()); throws if absent.
  std::size_t index_of(const Simplex& s) const;
  // Simplices containing vertex v (any dimension), lexicographic.
  std::span<const Simplex> containing_vertex(VertexId v) const;

  // Maximal simplices, lexicographic.
  std::vector<Simplex> facets() const;
  Simplex simplex(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const Simplex& s) const;

 private:
  void index();

  LabelTable labels_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::unordered_set<Simplex, SimplexHash> members_;
  std::unordered_map<Simplex, std::size_t, SimplexHash> position_;
  std::vector<std::vector<Simplex>> by_vertex_;
  std::size_t simplex_count_ = 0;
};

// Smallest closed set containing `a`. Throws InvalidInput if a ⊄ K.
SimplexSet closure(const SimplicialComplex& k, const SimplexSet& a);
// All simplices of K having some element of `a` as a face.
SimplexSet star(const SimplicialComplex& k, const SimplexSet& a);
bool is_closed(const SimplicialComplex& k, const SimplexSet& a);
bool is_open(const SimplicialComplex& k, const SimplexSet& a);
SimplexSet complement(const SimplicialComplex& k, const SimplexSet& a);
// Maximal elements of a set of simplices.
std::vector<Simplex> maximal_elements(const SimplexSet& a);
// Number of connected components of a closed set (0 if empty).
std::size_t connected_components(const SimplexSet& closed);

// Simple undirected graph on labelled vertices.
struct Graph {
  LabelTable labels;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

// Contains a simplex exactly when its vertex set is a clique of `g`.
SimplicialComplex clique_complex(const Graph& g, int max_dim = kUnboundedDim);

// One facet per line, labels separated by whitespace, '#' comment lines.
std::vector<std::vector<std::string>> parse_facets(std::istream& in);
void write_facets(std::ostream& out, const SimplicialComplex& k);

}  // namespace cybertopo
