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

// Non-regular path homology of loopless digraphs.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cybertopo/complex.hpp"
#include "cybertopo/homology.hpp"
#include "cybertopo/linalg.hpp"

namespace cybertopo {

class Digraph {
 public:
  Digraph() = default;
  // Vertices are the given labels plus any arc endpoints. Duplicate arcs
  // collapse; a self-loop throws InvalidInput.
  Digraph(std::vector<std::string> vertex_labels,
          const std::vector<std::pair<std::string, std::string>>& arcs);

  const LabelTable& labels() const { return labels_; }
  std::size_t vertex_count() const { return labels_.size(); }
  // Sorted (tail, head) pairs.
  const std::vector<std::pair<VertexId, VertexId>>& arcs() const { return arcs_; }
  std::span<const VertexId> successors(VertexId v) const { return out_[v]; }
  bool has_arc(VertexId from, VertexId to) const;

 private:
  LabelTable labels_;
  std::vector<std::pair<VertexId, VertexId>> arcs_;
  std::vector<std::vector<VertexId>> out_;
};

// A vertex tuple (v_0, ..., v_p).
using Path = std::vector<VertexId>;

// Directed walks on p + 1 vertices, in lexicographic order.
std::vector<Path> allowed_paths(const Digraph& d, int p);

struct PathBasis {
  int degree = 0;
  std::vector<Path> allowed;
  // Columns span Ω_p in the coordinates of `allowed`.
  ExactMatrix omega_basis;

  std::size_t dimension() const { return omega_basis.cols(); }
};

// Allowed p-chains whose non-regular boundary has no component on a
// non-allowed (p-1)-tuple.
PathBasis omega(const Digraph& d, int p);

// ∂_p restricted to Ω_p: columns are Ω_p basis vectors, rows the allowed
// (p-1)-paths. p >= 1.
ExactMatrix omega_boundary(const Digraph& d, int p);

// Matrix of the non-regular boundary on the given (p+1)-tuples. `faces`
// receives the sorted list of p-tuples indexing the rows.
ExactMatrix nonregular_boundary(const std::vector<Path>& paths,
                                std::vector<Path>& faces);

struct PathHomology {
  std::vector<std::size_t> omega_dims;  // degrees 0..max_p + 1
  std::vector<std::size_t> ranks;       // rank ∂_p on Ω_p, degrees 0..max_p + 1
  BettiProfile profile;                 // degrees 0..max_p
};

PathHomology path_homology(const Digraph& d, int max_p = 2);

// β_p (or β̃_p when reduced) for p = 0..max_p, over the rationals.
BettiProfile path_betti(const Digraph& d, int max_p = 2, bool reduced = false);

// Arcs - vertices + weakly connected components.
long long cyclomatic(const Digraph& d);

// `u v` per line; '#' starts a comment.
Digraph parse_edge_list(std::istream& in);
// `digraph [name] { a; a -> b -> c; }` with no attributes or subgraphs.
Digraph parse_dot(std::string_view text);

}  // namespace cybertopo
