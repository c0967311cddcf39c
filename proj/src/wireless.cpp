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

#include "cybertopo/wireless.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "cybertopo/error.hpp"
#include "cybertopo/homology.hpp"
#include "cybertopo/linalg.hpp"

namespace cybertopo {

namespace {

constexpr double kContainmentTolerance = 1e-9;

struct Point {
  double x, y;
};

double distance(double ax, double ay, double bx, double by) {
  return std::hypot(ax - bx, ay - by);
}

double distance(const WirelessNode& a, const WirelessNode& b) {
  return distance(a.x, a.y, b.x, b.y);
}

void circle_intersections(const WirelessNode& a, const WirelessNode& b,
                          std::vector<Point>& out) {
  const double d = distance(a, b);
  if (d == 0.0 || d > a.radius + b.radius || d < std::abs(a.radius - b.radius)) return;
  const double along = (a.radius * a.radius - b.radius * b.radius + d * d) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, a.radius * a.radius - along * along));
  const double ux = (b.x - a.x) / d, uy = (b.y - a.y) / d;
  const double mx = a.x + along * ux, my = a.y + along * uy;
  out.push_back({mx - h * uy, my + h * ux});
  out.push_back({mx + h * uy, my - h * ux});
}

bool disks_meet(const WirelessNetwork& w, const std::vector<VertexId>& members) {
  std::vector<Point> candidates;
  for (VertexId v : members) candidates.push_back({w.node(v).x, w.node(v).y});
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      circle_intersections(w.node(members[i]), w.node(members[j]), candidates);
    }
  }
  return std::any_of(candidates.begin(), candidates.end(), [&](const Point& p) {
    return std::all_of(members.begin(), members.end(), [&](VertexId v) {
      const auto& n = w.node(v);
      return distance(p.x, p.y, n.x, n.y) <= n.radius + kContainmentTolerance;
    });
  });
}

}  // namespace

WirelessNetwork::WirelessNetwork(std::vector<WirelessNode> nodes) {
  if (nodes.empty()) throw InvalidInput("a network needs at least one node");
  std::vector<std::string> ids;
  for (const auto& n : nodes) {
    if (!std::isfinite(n.x) || !std::isfinite(n.y)) {
      throw InvalidInput("node '" + n.id + "' has a non-finite position");
    }
    if (!(n.radius > 0.0) || !std::isfinite(n.radius)) {
      throw InvalidInput("node '" + n.id + "' needs a positive radius");
    }
    ids.push_back(n.id);
  }
  labels_ = LabelTable(ids);
  if (labels_.size() != nodes.size()) throw InvalidInput("node ids must be unique");
  nodes_.resize(nodes.size());
  for (auto& n : nodes) {
    const VertexId v = labels_.id(n.id);
    nodes_[v] = std::move(n);
  }
}

BaseComplex parse_base_complex(const std::string& name) {
  if (name == "link") return BaseComplex::kLink;
  if (name == "interference") return BaseComplex::kInterference;
  throw InvalidInput("unknown complex '" + name + "' (expected link or interference)");
}

Graph link_graph(const WirelessNetwork& w) {
  Graph g{w.labels(), {}};
  for (VertexId i = 0; i < w.size(); ++i) {
    for (VertexId j = i + 1; j < w.size(); ++j) {
      const auto& a = w.node(i);
      const auto& b = w.node(j);
      if (distance(a, b) < std::min(a.radius, b.radius)) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

SimplicialComplex link_complex(const WirelessNetwork& w, int max_dim) {
  return clique_complex(link_graph(w), max_dim);
}

SimplicialComplex interference_complex(const WirelessNetwork& w, int max_dim) {
  const std::size_t n = w.size();
  std::vector<std::vector<VertexId>> later(n);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (distance(w.node(i), w.node(j)) < w.node(i).radius + w.node(j).radius) {
        later[i].push_back(j);
      }
    }
  }
  SimplexSet simplices;
  std::vector<VertexId> members;
  auto grow = [&](auto&& self, const std::vector<VertexId>& options) -> void {
    simplices.insert(Simplex(members));
    if (static_cast<int>(members.size()) > max_dim) return;
    for (VertexId j : options) {
      members.push_back(j);
      if (disks_meet(w, members)) {
        std::vector<VertexId> next;
        std::set_intersection(options.begin(), options.end(), later[j].begin(),
                              later[j].end(), std::back_inserter(next));
        self(self, next);
      }
      members.pop_back();
    }
  };
  for (VertexId i = 0; i < n; ++i) {
    members = {i};
    grow(grow, later[i]);
  }
  return SimplicialComplex::from_closed_set(w.labels(), simplices);
}

SimplicialComplex base_complex(const WirelessNetwork& w, BaseComplex kind, int max_dim) {
  return kind == BaseComplex::kLink ? link_complex(w, max_dim)
                                    : interference_complex(w, max_dim);
}

ActivationSheaf::ActivationSheaf(SimplicialComplex base) : base_(std::move(base)) {
  if (base_.empty()) throw InvalidInput("activation sheaf needs a nonempty base");
  stalks_.resize(static_cast<std::size_t>(base_.dimension()) + 1);
  for (int p = 0; p <= base_.dimension(); ++p) {
    auto& layer = stalks_[static_cast<std::size_t>(p)];
    for (const auto& c : base_.simplices(p)) {
      std::vector<VertexId> nodes;
      for (const auto& d : base_.containing_vertex(c.front())) {
        if (d.has_face(c)) nodes.insert(nodes.end(), d.vertices().begin(), d.vertices().end());
      }
      std::sort(nodes.begin(), nodes.end());
      nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
      layer.push_back(std::move(nodes));
    }
  }
}

std::span<const VertexId> ActivationSheaf::stalk(const Simplex& c) const {
  return stalks_.at(static_cast<std::size_t>(c.dimension())).at(base_.index_of(c));
}

bool ActivationSheaf::in_stalk(const Simplex& c, NodeValue value) const {
  if (!value) return true;
  const auto s = stalk(c);
  return std::binary_search(s.begin(), s.end(), *value);
}

NodeValue ActivationSheaf::restrict_to(const Simplex& d, NodeValue value) const {
  return in_stalk(d, value) ? value : std::nullopt;
}

std::vector<VertexId> SheafSection::transmitting() const {
  std::vector<VertexId> out;
  for (const auto& [c, value] : assignment) {
    if (c.size() == 1 && value == c.front()) out.push_back(c.front());
  }
  return out;
}

bool is_section(const ActivationSheaf& sheaf, const SheafSection& s) {
  for (const auto& [d, value] : s.assignment) {
    if (!sheaf.base().contains(d) || !sheaf.in_stalk(d, value)) return false;
    const std::size_t m = d.size();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
      std::vector<VertexId> face;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1) face.push_back(d[i]);
      }
      auto it = s.assignment.find(Simplex(face));
      if (it != s.assignment.end() && sheaf.restrict_to(d, it->second) != value) return false;
    }
  }
  return true;
}

bool is_global(const ActivationSheaf& sheaf, const SheafSection& s) {
  return s.assignment.size() == sheaf.base().size() && is_section(sheaf, s);
}

namespace {

// Backtracking over vertex values. A global section is determined by its
// vertex values, and it exists exactly when every simplex sees the same
// restriction from each of its vertices.
class SectionSearch {
 public:
  SectionSearch(const ActivationSheaf& sheaf, const SheafSection* fixed)
      : sheaf_(sheaf), fixed_(fixed), values_(sheaf.base().vertex_count()) {
    const auto& k = sheaf.base();
    closing_.resize(values_.size());
    for (const auto& s : k.all_simplices()) closing_[s.vertices().back()].push_back(s);
  }

  template <typename Visit>
  void run(Visit&& visit) {
    stop_ = false;
    descend(0, visit);
  }

  SheafSection section() const {
    SheafSection out;
    for (const auto& c : sheaf_.base().all_simplices()) {
      out.assignment.emplace(c, sheaf_.restrict_to(c, values_[c.front()]));
    }
    return out;
  }

 private:
  template <typename Visit>
  void descend(VertexId v, Visit& visit) {
    if (stop_) return;
    if (v == values_.size()) {
      if (!visit(section())) stop_ = true;
      return;
    }
    const Simplex vertex{v};
    std::vector<NodeValue> options{std::nullopt};
    for (VertexId n : sheaf_.stalk(vertex)) options.push_back(n);
    for (const auto& option : options) {
      values_[v] = option;
      if (consistent(v)) descend(v + 1, visit);
      if (stop_) return;
    }
  }

  bool consistent(VertexId v) const {
    for (const auto& d : closing_[v]) {
      const NodeValue value = sheaf_.restrict_to(d, values_[d.front()]);
      for (std::size_t i = 1; i < d.size(); ++i) {
        if (sheaf_.restrict_to(d, values_[d[i]]) != value) return false;
      }
      if (fixed_ != nullptr) {
        auto it = fixed_->assignment.find(d);
        if (it != fixed_->assignment.end() && it->second != value) return false;
      }
    }
    return true;
  }

  const ActivationSheaf& sheaf_;
  const SheafSection* fixed_;
  std::vector<NodeValue> values_;
  std::vector<std::vector<Simplex>> closing_;  // simplices by largest vertex
  bool stop_ = false;
};

}  // namespace

std::vector<SheafSection> global_sections(const ActivationSheaf& sheaf, std::size_t limit) {
  std::vector<SheafSection> out;
  if (limit == 0) return out;
  SectionSearch search(sheaf, nullptr);
  search.run([&](SheafSection s) {
    out.push_back(std::move(s));
    return out.size() < limit;
  });
  return out;
}

std::optional<SheafSection> extend_section(const ActivationSheaf& sheaf,
                                           const SheafSection& partial) {
  for (const auto& [c, value] : partial.assignment) {
    if (!sheaf.base().contains(c)) throw InvalidInput("partial section outside the base");
    if (!sheaf.in_stalk(c, value)) return std::nullopt;
  }
  std::optional<SheafSection> found;
  SectionSearch search(sheaf, &partial);
  search.run([&](SheafSection s) {
    found = std::move(s);
    return false;
  });
  return found;
}

SimplexSet active_region(const SheafSection& s, VertexId n) {
  SimplexSet out;
  for (const auto& [c, value] : s.assignment) {
    if (value == n) out.insert(c);
  }
  return out;
}

std::vector<std::size_t> vector_sheaf_cohomology(const ActivationSheaf& sheaf) {
  const auto& k = sheaf.base();
  const int top = k.dimension();
  // offsets[p][i] is the first cochain coordinate of the i-th p-simplex.
  std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(top) + 1);
  std::vector<std::size_t> dims;
  for (int p = 0; p <= top; ++p) {
    std::size_t total = 0;
    for (const auto& c : k.simplices(p)) {
      offsets[static_cast<std::size_t>(p)].push_back(total);
      total += sheaf.stalk(c).size();
    }
    dims.push_back(total);
  }
  std::vector<ExactMatrix> coboundary;  // coboundary[p]: C^p -> C^{p+1}
  for (int p = 0; p < top; ++p) {
    ExactMatrix delta(Field::kRational, dims[static_cast<std::size_t>(p) + 1],
                      dims[static_cast<std::size_t>(p)]);
    const auto up = k.simplices(p + 1);
    for (std::size_t di = 0; di < up.size(); ++di) {
      const auto& d = up[di];
      const auto d_stalk = sheaf.stalk(d);
      for (std::size_t j = 0; j < d.size(); ++j) {
        const Simplex c = d.delete_vertex(j);
        const auto c_stalk = sheaf.stalk(c);
        const std::size_t ci = k.index_of(c);
        for (std::size_t a = 0; a < d_stalk.size(); ++a) {
          const auto pos = static_cast<std::size_t>(
              std::lower_bound(c_stalk.begin(), c_stalk.end(), d_stalk[a]) - c_stalk.begin());
          delta.add(offsets[static_cast<std::size_t>(p) + 1][di] + a,
                    offsets[static_cast<std::size_t>(p)][ci] + pos, (j % 2 == 0) ? 1 : -1);
        }
      }
    }
    coboundary.push_back(std::move(delta));
  }
  for (std::size_t p = 1; p < coboundary.size(); ++p) {
    if (!(coboundary[p] * coboundary[p - 1]).is_zero()) {
      throw InternalError("vector activation sheaf coboundary does not square to zero");
    }
  }
  std::vector<std::size_t> ranks;
  for (const auto& m : coboundary) ranks.push_back(m.rank());
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    const std::size_t outgoing = p < ranks.size() ? ranks[p] : 0;
    const std::size_t incoming = p > 0 ? ranks[p - 1] : 0;
    out.push_back(dims[p] - outgoing - incoming);
  }
  return out;
}

CriticalityReport criticality_report(const WirelessNetwork& w, const std::vector<int>& ks,
                                     BaseComplex kind) {
  if (ks.empty()) throw InvalidInput("no homological degrees requested");
  int top = 0;
  for (int k : ks) {
    if (k < 0) throw InvalidInput("homological degrees must be nonnegative");
    top = std::max(top, k);
  }
  const SimplicialComplex x = base_complex(w, kind, top + 1);
  CriticalityReport report;
  report.ks = ks;
  report.mean.assign(ks.size(), 0.0);
  for (int p = 0; p <= std::min(1, x.dimension()); ++p) {
    for (const auto& c : x.simplices(p)) {
      report.rows.push_back({c, local_homology(x, c, ks), {}});
    }
  }
  if (report.rows.empty()) return report;
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < ks.size(); ++i) report.mean[i] += static_cast<double>(row.lh[i]);
  }
  for (auto& m : report.mean) m /= static_cast<double>(report.rows.size());
  for (auto& row : report.rows) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      row.above_mean.push_back(static_cast<double>(row.lh[i]) > report.mean[i]);
    }
  }
  return report;
}

TrafficResult traffic_sim(const WirelessNetwork& w, std::uint64_t packets, std::uint64_t seed) {
  const std::size_t n = w.size();
  TrafficResult result;
  result.forwarded.assign(n, 0);
  if (n < 2) {
    result.dropped = packets;
    return result;
  }
  std::vector<std::vector<VertexId>> adjacent(n);
  for (auto [u, v] : link_graph(w).edges) {
    adjacent[u].push_back(v);
    adjacent[v].push_back(u);
  }
  for (auto& a : adjacent) std::sort(a.begin(), a.end());

  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> hops(n, std::vector<std::size_t>(n, kUnreached));
  for (VertexId target = 0; target < n; ++target) {
    auto& dist = hops[target];
    std::deque<VertexId> queue{target};
    dist[target] = 0;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId u : adjacent[v]) {
        if (dist[u] == kUnreached) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_source(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_other(0, n - 2);
  for (std::uint64_t packet = 0; packet < packets; ++packet) {
    const auto source = static_cast<VertexId>(pick_source(rng));
    auto target = static_cast<VertexId>(pick_other(rng));
    if (target >= source) ++target;
    const auto& dist = hops[target];
    if (dist[source] == kUnreached) {
      ++result.dropped;
      continue;
    }
    VertexId at = source;
    while (at != target) {
      for (VertexId u : adjacent[at]) {
        if (dist[u] + 1 == dist[at]) {
          at = u;
          break;
        }
      }
      if (at != target) ++result.forwarded[at];
    }
    ++result.delivered;
  }
  return result;
}

WirelessNetwork random_geometric_network(std::size_t n, double side, double r_lo,
                                         double r_hi, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("a network needs at least one node");
  if (!(side > 0.0) || !(r_lo > 0.0) || r_hi < r_lo) {
    throw InvalidInput("invalid random network parameters");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coordinate(0.0, side);
  std::uniform_real_distribution<double> radius(r_lo, r_hi);
  std::vector<WirelessNode> nodes;
  for (std::size_t i = 0; i < n; ++i) {
    WirelessNode node;
    node.id = std::to_string(i + 1);
    node.x = coordinate(rng);
    node.y = coordinate(rng);
    node.radius = r_hi > r_lo ? radius(rng) : r_lo;
    nodes.push_back(std::move(node));
  }
  return WirelessNetwork(std::move(nodes));
}

WirelessNetwork read_network_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw ParseError("expected an object with a \"nodes\" array");
  }
  std::vector<WirelessNode> nodes;
  std::size_t index = 0;
  for (const auto& entry : doc["nodes"]) {
    const std::string where = "node " + std::to_string(index++);
    if (!entry.is_object()) throw ParseError(where + ": expected an object");
    WirelessNode node;
    const auto& id = entry.value("id", nlohmann::json());
    if (id.is_string()) {
      node.id = id.get<std::string>();
    } else if (id.is_number_integer()) {
      node.id = std::to_string(id.get<long long>());
    } else {
      throw ParseError(where + ": \"id\" must be a string or an integer");
    }
    for (auto [key, slot] : {std::pair{"x", &node.x}, std::pair{"y", &node.y},
                             std::pair{"radius", &node.radius}}) {
      if (!entry.contains(key) || !entry[key].is_number()) {
        throw ParseError(where + ": \"" + key + "\" must be a number");
      }
      *slot = entry[key].get<double>();
    }
    nodes.push_back(std::move(node));
  }
  return WirelessNetwork(std::move(nodes));
}

void write_network_json(std::ostream& out, const WirelessNetwork& w) {
  nlohmann::ordered_json doc;
  doc["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : w.nodes()) {
    doc["nodes"].push_back({{"id", n.id}, {"x", n.x}, {"y", n.y}, {"radius", n.radius}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace cybertopo
