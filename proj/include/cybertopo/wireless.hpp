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

// Disk-model wireless networks, their link and interference complexes, and
// the activation sheaf built over either one.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cybertopo/complex.hpp"

namespace cybertopo {

struct WirelessNode {
  std::string id;
  double x = 0.0;
  double y = 0.0;
  double radius = 1.0;
};

class WirelessNetwork {
 public:
  // Throws InvalidInput on an empty list, duplicate ids, non-finite
  // coordinates or a non-positive radius. Nodes are reordered so that node
  // i carries vertex id i of labels().
  explicit WirelessNetwork(std::vector<WirelessNode> nodes);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<WirelessNode>& nodes() const { return nodes_; }
  const WirelessNode& node(VertexId v) const { return nodes_.at(v); }
  const LabelTable& labels() const { return labels_; }

 private:
  std::vector<WirelessNode> nodes_;
  LabelTable labels_;
};

enum class BaseComplex { kLink, kInterference };
BaseComplex parse_base_complex(const std::string& name);

// Nodes i, j are linked when each lies strictly inside the other's disk.
Graph link_graph(const WirelessNetwork& w);
SimplicialComplex link_complex(const WirelessNetwork& w, int max_dim = kUnboundedDim);
// Node sets whose open coverage disks share a point.
SimplicialComplex interference_complex(const WirelessNetwork& w,
                                       int max_dim = kUnboundedDim);
SimplicialComplex base_complex(const WirelessNetwork& w, BaseComplex kind,
                               int max_dim = kUnboundedDim);

// nullopt stands for the idle value ⊥.
using NodeValue = std::optional<VertexId>;

class ActivationSheaf {
 public:
  // Throws InvalidInput on an empty base.
  explicit ActivationSheaf(SimplicialComplex base);

  const SimplicialComplex& base() const { return base_; }
  // Nodes sharing a coface with c, ascending; ⊥ is implicit.
  std::span<const VertexId> stalk(const Simplex& c) const;
  bool in_stalk(const Simplex& c, NodeValue value) const;
  // Restriction along a face inclusion into d.
  NodeValue restrict_to(const Simplex& d, NodeValue value) const;

 private:
  SimplicialComplex base_;
  std::vector<std::vector<std::vector<VertexId>>> stalks_;  // [dim][index]
};

struct SheafSection {
  std::map<Simplex, NodeValue> assignment;

  // Nodes n with value n on the vertex [n].
  std::vector<VertexId> transmitting() const;
};

// Values lie in their stalks and agree under every restriction between
// simplices of the support.
bool is_section(const ActivationSheaf& sheaf, const SheafSection& s);
bool is_global(const ActivationSheaf& sheaf, const SheafSection& s);

// Global sections in lexicographic order of vertex values (⊥ first), at most
// `limit` of them.
std::vector<SheafSection> global_sections(const ActivationSheaf& sheaf,
                                          std::size_t limit = SIZE_MAX);
// The global section agreeing with `partial`, if one exists.
std::optional<SheafSection> extend_section(const ActivationSheaf& sheaf,
                                           const SheafSection& partial);
// Simplices with value n. Empty when n is not transmitting.
SimplexSet active_region(const SheafSection& s, VertexId n);

// dim H^k of the vector activation sheaf for k = 0..dim base, over the
// rationals. Throws InternalError if the coboundaries do not compose to 0.
std::vector<std::size_t> vector_sheaf_cohomology(const ActivationSheaf& sheaf);

struct CriticalityRow {
  Simplex simplex;
  std::vector<std::size_t> lh;  // one entry per requested k
  std::vector<bool> above_mean;
};

struct CriticalityReport {
  std::vector<int> ks;
  std::vector<double> mean;
  std::vector<CriticalityRow> rows;  // vertices, then edges
};

CriticalityReport criticality_report(const WirelessNetwork& w,
                                     const std::vector<int>& ks,
                                     BaseComplex kind = BaseComplex::kLink);

struct TrafficResult {
  std::vector<std::uint64_t> forwarded;  // per node
  std::uint64_t delivered = 0;
  std::uint64_t dropped = 0;
};

// Random source/destination pairs routed along breadth-first shortest paths
// of the link graph, ties broken toward the smallest next-hop id.
TrafficResult traffic_sim(const WirelessNetwork& w, std::uint64_t packets,
                          std::uint64_t seed);

// Uniform positions in [0, side]^2 and radii in [r_lo, r_hi]; ids "1".."n".
WirelessNetwork random_geometric_network(std::size_t n, double side, double r_lo,
                                         double r_hi, std::uint64_t seed);

WirelessNetwork read_network_json(std::istream& in);
void write_network_json(std::ostream& out, const WirelessNetwork& w);

}  // namespace cybertopo
