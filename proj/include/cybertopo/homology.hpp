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

// Simplicial and relative chain complexes, Betti numbers, local homology.

#pragma once

#include <cstddef>
#include <vector>

#include "cybertopo/complex.hpp"
#include "cybertopo/linalg.hpp"

namespace cybertopo {

struct ChainComplex {
  Field field = Field::kGF2;
  // basis[p] lists the oriented p-simplices spanning C_p (ascending tuples).
  std::vector<std::vector<Simplex>> basis;
  // boundaries[p - 1] is ∂_p : C_p -> C_{p-1}, for p = 1..top_degree().
  std::vector<ExactMatrix> boundaries;

  int top_degree() const { return static_cast<int>(basis.size()) - 1; }
  std::size_t dim(int p) const;
  const ExactMatrix& boundary(int p) const;
  // Throws InternalError unless every ∂_{p-1} ∂_p is the zero matrix.
  void verify() const;
};

struct BettiProfile {
  std::vector<long long> betti;
  // β̃_p = β_p - δ_{p0}; all zero for an empty complex.
  std::vector<long long> reduced;
  // Σ (-1)^p β_p over the listed degrees.
  long long euler = 0;
  std::vector<std::size_t> chain_dims;
  // ranks[p] = rank ∂_p, with rank ∂_0 = 0.
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> cycles;      // dim Z_p
  std::vector<std::size_t> boundaries;  // dim B_p

  // Keeps degrees 0..max_degree (padding with zeros).
  BettiProfile truncated(int max_degree) const;
};

// Chains on simplices of dimension <= max_dim. ∂_p deletes position j with
// sign (-1)^j; signs vanish over GF(2).
ChainComplex simplicial_chain_complex(const SimplicialComplex& k, Field field,
                                      int max_dim = kUnboundedDim);

BettiProfile betti(const ChainComplex& c);

// Convenience: Betti numbers of K in degrees 0..max_degree (computed from
// chains up to max_degree + 1). Unbounded by default.
BettiProfile simplicial_betti(const SimplicialComplex& k, Field field,
                              int max_degree = kUnboundedDim);

// C_p(X, Y) spanned by p-simplices of X outside Y; faces lying in Y are
// dropped from boundaries. Y must be a closed subset of X.
ChainComplex relative_chain_complex(const SimplicialComplex& x,
                                    const SimplexSet& y, Field field,
                                    int max_dim = kUnboundedDim);
// Y given as a complex of its own; matched to X by vertex labels.
ChainComplex relative_chain_complex(const SimplicialComplex& x,
                                    const SimplicialComplex& y, Field field,
                                    int max_dim = kUnboundedDim);

// Union of star(cl f) over the facets f containing c, i.e. star(cl(star c)).
// Its complement is always closed.
SimplexSet region_of_influence(const SimplicialComplex& k, const Simplex& c);

// dim H_k(X, X \ roi c) over GF(2).
std::size_t local_homology(const SimplicialComplex& x, const Simplex& c, int k);
// Same for several degrees, sharing one relative chain complex.
std::vector<std::size_t> local_homology(const SimplicialComplex& x,
                                        const Simplex& c,
                                        const std::vector<int>& ks);

}  // namespace cybertopo
