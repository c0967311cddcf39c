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

#include "cybertopo/complex.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cybertopo/error.hpp"

namespace cybertopo {

Simplex::Simplex(std::vector<VertexId> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidInput("simplex must be nonempty");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) !=
      vertices_.end()) {
    throw InvalidInput("simplex has a repeated vertex");
  }
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

bool Simplex::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::has_face(const Simplex& face) const {
  return std::includes(vertices_.begin(), vertices_.end(),
                       face.vertices_.begin(), face.vertices_.end());
}

Simplex Simplex::delete_vertex(std::size_t j) const {
  if (vertices_.size() < 2) throw InvalidInput("a vertex has no faces");
  Simplex face;
  face.vertices_.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i != j) face.vertices_.push_back(vertices_[i]);
  }
  return face;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  // FNV-1a over the vertex ids.
  std::uint64_t h = 1469598103934665603ULL;
  for (VertexId v : s.vertices()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

std::optional<long long> as_integer(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  auto ia = as_integer(a);
  auto ib = as_integer(b);
  if (ia && ib) return *ia != *ib ? *ia < *ib : a < b;
  if (ia != std::nullopt) return true;
  if (ib != std::nullopt) return false;
  return a < b;
}

LabelTable::LabelTable(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end(),
            [](const std::string& a, const std::string& b) {
              return natural_less(a, b);
            });
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    index_.emplace(labels_[i], static_cast<VertexId>(i));
  }
}

std::optional<VertexId> LabelTable::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId LabelTable::id(std::string_view label) const {
  auto found = find(label);
  if (!found) throw InvalidInput("unknown vertex label '" + std::string(label) + "'");
  return *found;
}

namespace {

// Calls visit(subset) for every subset of `items` with 1..max_size elements,
// in ascending size.
template <typename Visit>
void for_each_subset(const std::vector<VertexId>& items, std::size_t max_size,
                     Visit&& visit) {
  const std::size_t n = items.size();
  std::vector<std::size_t> pick;
  std::vector<VertexId> subset;
  for (std::size_t k = 1; k <= std::min(n, max_size); ++k) {
    pick.resize(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      subset.clear();
      for (std::size_t i : pick) subset.push_back(items[i]);
      visit(subset);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

std::size_t size_cap(int max_dim) {
  if (max_dim < 0) throw InvalidInput("max_dim must be nonnegative");
  if (max_dim == kUnboundedDim) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(max_dim) + 1;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets, int max_dim) {
  std::vector<std::string> all;
  for (const auto& facet : facets) {
    if (facet.empty()) throw InvalidInput("facet must be nonempty");
    all.insert(all.end(), facet.begin(), facet.end());
  }
  LabelTable labels(std::move(all));
  std::vector<std::vector<VertexId>> ids;
  ids.reserve(facets.size());
  for (const auto& facet : facets) {
    std::vector<VertexId> row;
    for (const auto& label : facet) row.push_back(labels.id(label));
    ids.push_back(std::move(row));
  }
  return from_id_facets(std::move(labels), ids, max_dim);
}

SimplicialComplex SimplicialComplex::from_id_facets(
    LabelTable labels, const std::vector<std::vector<VertexId>>& facets,
    int max_dim) {
  const std::size_t cap = size_cap(max_dim);
  SimplicialComplex k;
  k.labels_ = std::move(labels);
  for (auto facet : facets) {
    if (facet.empty()) throw InvalidInput("facet must be nonempty");
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    if (facet.back() >= k.labels_.size()) {
      throw InvalidInput("facet vertex id out of range");
    }
    for_each_subset(facet, cap, [&](const std::vector<VertexId>& subset) {
      k.members_.insert(Simplex(subset));
    });
  }
  k.index();
  return k;
}

SimplicialComplex SimplicialComplex::from_closed_set(
    LabelTable labels, const SimplexSet& simplices) {
  SimplicialComplex k;
  k.labels_ = std::move(labels);
  for (const auto& s : simplices) {
    if (s.vertices().back() >= k.labels_.size()) {
      throw InvalidInput("simplex vertex id out of range");
    }
    k.members_.insert(s);
  }
  for (const auto& s : simplices) {
    if (s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!k.members_.contains(s.delete_vertex(j))) {
        throw InvalidInput("simplex set is not closed under faces");
      }
    }
  }
  k.index();
  return k;
}

void SimplicialComplex::index() {
  by_dim_.clear();
  position_.clear();
  by_vertex_.assign(labels_.size(), {});
  for (const auto& s : members_) {
    const auto d = static_cast<std::size_t>(s.dimension());
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].push_back(s);
    for (VertexId v : s.vertices()) by_vertex_[v].push_back(s);
  }
  for (auto& layer : by_dim_) {
    std::sort(layer.begin(), layer.end());
    for (std::size_t i = 0; i < layer.size(); ++i) position_[layer[i]] = i;
  }
  for (auto& list : by_vertex_) std::sort(list.begin(), list.end());
  simplex_count_ = members_.size();
}

std::span<const Simplex> SimplicialComplex::simplices(int dim) const {
  if (dim < 0 || static_cast<std::size_t>(dim) >= by_dim_.size()) return {};
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  out.reserve(simplex_count_);
  for (const auto& layer : by_dim_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
  auto it = position_.find(s);
  if (it == position_.end()) throw InvalidInput("simplex is not in the complex");
  return it->second;
}

std::span<const Simplex> SimplicialComplex::containing_vertex(VertexId v) const {
  if (v >= by_vertex_.size()) return {};
  return by_vertex_[v];
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = dimension(); d >= 0; --d) {
    for (const auto& s : simplices(d)) {
      bool maximal = true;
      for (const auto& c : containing_vertex(s.front())) {
        if (c.size() > s.size() && c.has_face(s)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Simplex SimplicialComplex::simplex(const std::vector<std::string>& labels) const {
  std::vector<VertexId> ids;
  for (const auto& label : labels) ids.push_back(labels_.id(label));
  return Simplex(std::move(ids));
}

std::vector<std::string> SimplicialComplex::labels_of(const Simplex& s) const {
  std::vector<std::string> out;
  for (VertexId v : s.vertices()) out.push_back(labels_.label(v));
  return out;
}

namespace {

void require_members(const SimplicialComplex& k, const SimplexSet& a) {
  for (const auto& s : a) {
    if (!k.contains(s)) throw InvalidInput("simplex is not in the complex");
  }
}

}  // namespace

SimplexSet closure(const SimplicialComplex& k, const SimplexSet& a) {
  require_members(k, a);
  SimplexSet out;
  std::vector<Simplex> work(a.begin(), a.end());
  while (!work.empty()) {
    Simplex s = std::move(work.back());
    work.pop_back();
    if (!out.insert(s).second || s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) work.push_back(s.delete_vertex(j));
  }
  return out;
}

SimplexSet star(const SimplicialComplex& k, const SimplexSet& a) {
  require_members(k, a);
  SimplexSet out;
  for (const auto& s : a) {
    for (const auto& c : k.containing_vertex(s.front())) {
      if (c.has_face(s)) out.insert(c);
    }
  }
  return out;
}

bool is_closed(const SimplicialComplex& k, const SimplexSet& a) {
  require_members(k, a);
  for (const auto& s : a) {
    if (s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!a.contains(s.delete_vertex(j))) return false;
    }
  }
  return true;
}

bool is_open(const SimplicialComplex& k, const SimplexSet& a) {
  return star(k, a) == a;
}

SimplexSet complement(const SimplicialComplex& k, const SimplexSet& a) {
  SimplexSet out;
  for (const auto& s : k.all_simplices()) {
    if (!a.contains(s)) out.insert(s);
  }
  return out;
}

std::vector<Simplex> maximal_elements(const SimplexSet& a) {
  std::vector<Simplex> out;
  for (const auto& s : a) {
    bool maximal = std::none_of(a.begin(), a.end(), [&](const Simplex& c) {
      return c.size() > s.size() && c.has_face(s);
    });
    if (maximal) out.push_back(s);
  }
  return out;
}

std::size_t connected_components(const SimplexSet& closed) {
  std::vector<VertexId> vertices;
  for (const auto& s : closed) {
    if (s.size() == 1) vertices.push_back(s.front());
  }
  std::unordered_map<VertexId, VertexId> parent;
  for (VertexId v : vertices) parent[v] = v;
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = vertices.size();
  for (const auto& s : closed) {
    if (s.size() != 2) continue;
    VertexId a = find(s[0]), b = find(s[1]);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

SimplicialComplex clique_complex(const Graph& g, int max_dim) {
  const std::size_t cap = size_cap(max_dim);
  const std::size_t n = g.labels.size();
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges) {
    if (u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("graph has a self-loop");
    adjacent[u][v] = adjacent[v][u] = true;
  }
  SimplexSet cliques;
  std::vector<std::vector<VertexId>> frontier;
  for (VertexId v = 0; v < n; ++v) frontier.push_back({v});
  while (!frontier.empty()) {
    std::vector<std::vector<VertexId>> next;
    for (const auto& clique : frontier) {
      cliques.insert(Simplex(clique));
      if (clique.size() >= cap) continue;
      for (VertexId w = clique.back() + 1; w < n; ++w) {
        bool joins = std::all_of(clique.begin(), clique.end(),
                                 [&](VertexId u) { return adjacent[u][w]; });
        if (!joins) continue;
        auto grown = clique;
        grown.push_back(w);
        next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  return SimplicialComplex::from_closed_set(g.labels, cliques);
}

std::vector<std::vector<std::string>> parse_facets(std::istream& in) {
  std::vector<std::vector<std::string>> facets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> facet;
    for (std::string w; words >> w;) {
      if (w.front() == '#') break;
      facet.push_back(w);
    }
    std::sort(facet.begin(), facet.end());
    if (std::adjacent_find(facet.begin(), facet.end()) != facet.end()) {
      throw ParseError("facet repeats a vertex label", line_no);
    }
    if (!facet.empty()) facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw ParseError("no facets in input");
  return facets;
}

void write_facets(std::ostream& out, const SimplicialComplex& k) {
  for (const auto& f : k.facets()) {
    const auto labels = k.labels_of(f);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      out << (i ? " " : "") << labels[i];
    }
    out << '\n';
  }
}

}  // namespace cybertopo
