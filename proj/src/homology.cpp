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

#include "cybertopo/homology.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "cybertopo/error.hpp"

namespace cybertopo {

std::size_t ChainComplex::dim(int p) const {
  if (p < 0 || p > top_degree()) return 0;
  return basis[static_cast<std::size_t>(p)].size();
}

const ExactMatrix& ChainComplex::boundary(int p) const {
  if (p < 1 || p > top_degree()) throw InvalidInput("no boundary map in degree " + std::to_string(p));
  return boundaries[static_cast<std::size_t>(p - 1)];
}

void ChainComplex::verify() const {
  for (int p = 2; p <= top_degree(); ++p) {
    if (!(boundary(p - 1) * boundary(p)).is_zero()) {
      throw InternalError("boundary of a boundary is nonzero in degree " +
                          std::to_string(p));
    }
  }
}

namespace {

// Builds chains on the simplices of X selected by `in_basis`, which must be
// the complement of a closed set; faces outside the basis are dropped.
ChainComplex build_chains(const SimplicialComplex& x, Field field, int max_dim,
                          const std::function<bool(const Simplex&)>& in_basis) {
  ChainComplex c;
  c.field = field;
  const int top = std::min(x.dimension(), max_dim);
  for (int p = 0; p <= top; ++p) {
    std::vector<Simplex> layer;
    for (const auto& s : x.simplices(p)) {
      if (in_basis(s)) layer.push_back(s);
    }
    c.basis.push_back(std::move(layer));
  }
  while (!c.basis.empty() && c.basis.back().empty()) c.basis.pop_back();

  for (int p = 1; p <= c.top_degree(); ++p) {
    const auto& cols = c.basis[static_cast<std::size_t>(p)];
    const auto& rows = c.basis[static_cast<std::size_t>(p - 1)];
    std::unordered_map<Simplex, std::size_t, SimplexHash> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
    ExactMatrix d(field, rows.size(), cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      for (std::size_t j = 0; j < cols[k].size(); ++j) {
        auto it = row_index.find(cols[k].delete_vertex(j));
        if (it == row_index.end()) continue;
        d.set(it->second, k, (j % 2 == 0) ? 1 : -1);
      }
    }
    c.boundaries.push_back(std::move(d));
  }
  return c;
}

}  // namespace

ChainComplex simplicial_chain_complex(const SimplicialComplex& k, Field field,
                                      int max_dim) {
  if (max_dim < 0) throw InvalidInput("max_dim must be nonnegative");
  return build_chains(k, field, max_dim, [](const Simplex&) { return true; });
}

BettiProfile betti(const ChainComplex& c) {
  BettiProfile out;
  const int top = c.top_degree();
  std::vector<std::size_t> rank(static_cast<std::size_t>(std::max(top, 0)) + 2, 0);
  for (int p = 1; p <= top; ++p) rank[static_cast<std::size_t>(p)] = c.boundary(p).rank();
  for (int p = 0; p <= top; ++p) {
    const auto i = static_cast<std::size_t>(p);
    const std::size_t dim = c.dim(p);
    out.chain_dims.push_back(dim);
    out.ranks.push_back(rank[i]);
    out.cycles.push_back(dim - rank[i]);
    out.boundaries.push_back(rank[i + 1]);
    const auto b = static_cast<long long>(dim - rank[i] - rank[i + 1]);
    out.betti.push_back(b);
    out.euler += (p % 2 == 0) ? b : -b;
  }
  out.reduced = out.betti;
  if (!out.reduced.empty() && c.dim(0) > 0) out.reduced[0] -= 1;
  return out;
}

BettiProfile BettiProfile::truncated(int max_degree) const {
  if (max_degree < 0) throw InvalidInput("max_degree must be nonnegative");
  const auto n = static_cast<std::size_t>(max_degree) + 1;
  BettiProfile out = *this;
  for (auto* v : {&out.chain_dims, &out.ranks, &out.cycles, &out.boundaries}) v->resize(n, 0);
  out.betti.resize(n, 0);
  out.reduced.resize(n, 0);
  out.euler = 0;
  for (std::size_t p = 0; p < n; ++p) out.euler += (p % 2 == 0) ? out.betti[p] : -out.betti[p];
  return out;
}

BettiProfile simplicial_betti(const SimplicialComplex& k, Field field,
                              int max_degree) {
  if (max_degree == kUnboundedDim) return betti(simplicial_chain_complex(k, field));
  auto profile = betti(simplicial_chain_complex(k, field, max_degree + 1));
  return profile.truncated(max_degree);
}

ChainComplex relative_chain_complex(const SimplicialComplex& x,
                                    const SimplexSet& y, Field field,
                                    int max_dim) {
  if (max_dim < 0) throw InvalidInput("max_dim must be nonnegative");
  for (const auto& s : y) {
    if (!x.contains(s)) throw InvalidInput("relative subcomplex is not contained in X");
  }
  if (!is_closed(x, y)) throw InvalidInput("relative subcomplex is not closed");
  return build_chains(x, field, max_dim,
                      [&](const Simplex& s) { return !y.contains(s); });
}

ChainComplex relative_chain_complex(const SimplicialComplex& x,
                                    const SimplicialComplex& y, Field field,
                                    int max_dim) {
  SimplexSet mapped;
  for (const auto& s : y.all_simplices()) {
    std::vector<VertexId> ids;
    for (VertexId v : s.vertices()) {
      auto found = x.labels().find(y.labels().label(v));
      if (!found) throw InvalidInput("relative subcomplex is not contained in X");
      ids.push_back(*found);
    }
    mapped.insert(Simplex(std::move(ids)));
  }
  return relative_chain_complex(x, mapped, field, max_dim);
}

SimplexSet region_of_influence(const SimplicialComplex& k, const Simplex& c) {
  if (!k.contains(c)) throw InvalidInput("simplex is not in the complex");
  return star(k, closure(k, star(k, {c})));
}

std::vector<std::size_t> local_homology(const SimplicialComplex& x,
                                        const Simplex& c,
                                        const std::vector<int>& ks) {
  if (ks.empty()) return {};
  const int top = *std::max_element(ks.begin(), ks.end());
  if (*std::min_element(ks.begin(), ks.end()) < 0) throw InvalidInput("negative homology degree");
  // X \ roi c is closed, so the relative basis is roi c itself.
  const SimplexSet roi = region_of_influence(x, c);
  const auto chains = build_chains(x, Field::kGF2, top + 1,
                                   [&](const Simplex& s) { return roi.contains(s); });
  const auto profile = betti(chains);
  std::vector<std::size_t> out;
  for (int k : ks) {
    const auto i = static_cast<std::size_t>(k);
    out.push_back(i < profile.betti.size() ? static_cast<std::size_t>(profile.betti[i]) : 0);
  }
  return out;
}

std::size_t local_homology(const SimplicialComplex& x, const Simplex& c, int k) {
  return local_homology(x, c, std::vector<int>{k}).front();
}

}  // namespace cybertopo
