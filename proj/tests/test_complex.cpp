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

#include <algorithm>
#include <random>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "cybertopo/complex.hpp"
#include "cybertopo/error.hpp"

using namespace cybertopo;

namespace {

SimplicialComplex simple_asc() {
  return SimplicialComplex::from_facets({{"1", "2"}, {"1", "3"}, {"2", "3", "4"}, {"5"}});
}

SimplexSet labelled(const SimplicialComplex& k,
                    const std::vector<std::vector<std::string>>& sets) {
  SimplexSet out;
  for (const auto& s : sets) out.insert(k.simplex(s));
  return out;
}

// Every nonempty subset of every facet, by bitmask.
SimplexSet brute_force_simplices(const std::vector<std::vector<VertexId>>& facets) {
  SimplexSet out;
  for (const auto& f : facets) {
    for (unsigned mask = 1; mask < (1u << f.size()); ++mask) {
      std::vector<VertexId> v;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (mask >> i & 1) v.push_back(f[i]);
      }
      out.insert(Simplex(v));
    }
  }
  return out;
}

std::vector<std::vector<VertexId>> random_facets(std::mt19937& rng, VertexId n, int count) {
  std::uniform_int_distribution<VertexId> vertex(0, n - 1);
  std::uniform_int_distribution<int> size(1, 4);
  std::vector<std::vector<VertexId>> facets;
  for (int i = 0; i < count; ++i) {
    std::vector<VertexId> f;
    const int s = size(rng);
    while (static_cast<int>(f.size()) < s) {
      VertexId v = vertex(rng);
      if (std::find(f.begin(), f.end(), v) == f.end()) f.push_back(v);
    }
    std::sort(f.begin(), f.end());
    facets.push_back(f);
  }
  return facets;
}

LabelTable numbered(VertexId n) {
  std::vector<std::string> labels;
  for (VertexId i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return LabelTable(labels);
}

}  // namespace

TEST_CASE("simplex tuples are sorted and validated") {
  Simplex s{3, 1, 2};
  CHECK(s.vertices()[0] == 1);
  CHECK(s.dimension() == 2);
  CHECK(s.delete_vertex(1) == Simplex{1, 3});
  CHECK(s.has_face(Simplex{1, 3}));
  CHECK_FALSE(s.has_face(Simplex{0}));
  CHECK_THROWS_AS(Simplex({1, 1}), InvalidInput);
  CHECK_THROWS_AS(Simplex(std::vector<VertexId>{}), InvalidInput);
}

TEST_CASE("labels use natural order") {
  LabelTable t({"10", "2", "b", "a", "2"});
  REQUIRE(t.size() == 4);
  CHECK(t.label(0) == "2");
  CHECK(t.label(1) == "10");
  CHECK(t.label(2) == "a");
  CHECK(t.label(3) == "b");
  CHECK_THROWS_AS(t.id("zz"), InvalidInput);
}

TEST_CASE("four-facet complex") {
  const auto k = simple_asc();
  CHECK(k.size() == 11);  // 5 vertices, 5 edges, 1 triangle
  CHECK(k.dimension() == 2);
  CHECK(k.count(0) == 5);
  CHECK(k.count(1) == 5);
  CHECK(k.count(2) == 1);
  const auto facets = k.facets();
  std::vector<std::vector<std::string>> named;
  for (const auto& f : facets) named.push_back(k.labels_of(f));
  CHECK(named == std::vector<std::vector<std::string>>{{"1", "2"}, {"1", "3"}, {"2", "3", "4"}, {"5"}});
}

TEST_CASE("absorbed facets and bad facets") {
  const auto k = SimplicialComplex::from_facets({{"a", "b", "c"}, {"a", "b"}});
  CHECK(k.facets().size() == 1);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{"a"}, {}}), InvalidInput);
  const auto capped = SimplicialComplex::from_facets({{"a", "b", "c", "d"}}, 1);
  CHECK(capped.dimension() == 1);
  CHECK(capped.count(1) == 6);
}

TEST_CASE("closure and star on the four-facet complex") {
  const auto k = simple_asc();
  const auto a = closure(k, labelled(k, {{"2", "4"}}));
  CHECK(a == labelled(k, {{"2", "4"}, {"2"}, {"4"}}));
  CHECK(is_closed(k, a));
  CHECK_FALSE(is_open(k, a));

  const auto b = star(k, labelled(k, {{"1"}, {"5"}}));
  CHECK(b == labelled(k, {{"1", "2"}, {"1", "3"}, {"1"}, {"5"}}));
  CHECK(is_open(k, b));

  CHECK(star(k, labelled(k, {{"2"}})) ==
        labelled(k, {{"2"}, {"1", "2"}, {"2", "3"}, {"2", "4"}, {"2", "3", "4"}}));
  CHECK(star(k, labelled(k, {{"2", "3", "4"}})) == labelled(k, {{"2", "3", "4"}}));
  CHECK_THROWS_AS(star(k, {Simplex{0, 4}}), InvalidInput);
}

TEST_CASE("random complexes: facets, closure, star and complement") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const VertexId n = 7;
    const auto facets = random_facets(rng, n, 1 + trial % 6);
    const auto k = SimplicialComplex::from_id_facets(numbered(n), facets);
    const auto expected = brute_force_simplices(facets);
    const auto all = k.all_simplices();
    REQUIRE(SimplexSet(all.begin(), all.end()) == expected);

    // Maximal input sets, by pairwise containment.
    std::vector<Simplex> maximal;
    for (const auto& f : facets) {
      const Simplex s(f);
      bool dominated = false;
      for (const auto& g : facets) {
        const Simplex t(g);
        if (t != s && t.has_face(s)) dominated = true;
      }
      if (!dominated && std::find(maximal.begin(), maximal.end(), s) == maximal.end()) {
        maximal.push_back(s);
      }
    }
    std::sort(maximal.begin(), maximal.end());
    CHECK(k.facets() == maximal);

    SimplexSet sample;
    for (std::size_t i = 0; i < all.size(); i += 3) sample.insert(all[i]);
    const auto cl = closure(k, sample);
    const auto st = star(k, sample);
    CHECK(is_closed(k, cl));
    CHECK(is_open(k, st));
    CHECK(is_open(k, complement(k, cl)));
    CHECK(is_closed(k, complement(k, st)));
    CHECK(std::includes(cl.begin(), cl.end(), sample.begin(), sample.end()));
    CHECK(std::includes(st.begin(), st.end(), sample.begin(), sample.end()));
  }
}

TEST_CASE("connected components of closed sets") {
  const auto k = simple_asc();
  const auto all = k.all_simplices();
  CHECK(connected_components(SimplexSet(all.begin(), all.end())) == 2);
  CHECK(connected_components({}) == 0);
}

TEST_CASE("clique complexes") {
  Graph triangle{LabelTable({"a", "b", "c"}), {{0, 1}, {1, 2}, {0, 2}}};
  CHECK(clique_complex(triangle).count(2) == 1);
  Graph square{LabelTable({"a", "b", "c", "d"}), {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
  const auto k = clique_complex(square);
  CHECK(k.dimension() == 1);
  CHECK(k.count(1) == 4);
  Graph k5{numbered(5), {}};
  for (VertexId i = 0; i < 5; ++i)
    for (VertexId j = i + 1; j < 5; ++j) k5.edges.emplace_back(i, j);
  CHECK(clique_complex(k5).size() == 31);
  CHECK(clique_complex(k5, 2).size() == 25);
}

TEST_CASE("facet file parsing") {
  std::istringstream good("# comment\n1 2\n\n2 3 4\n");
  CHECK(parse_facets(good).size() == 2);
  std::istringstream repeated("1 1 2\n");
  CHECK_THROWS_AS(parse_facets(repeated), ParseError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_facets(empty), ParseError);

  const auto k = simple_asc();
  std::ostringstream out;
  write_facets(out, k);
  std::istringstream back(out.str());
  CHECK(SimplicialComplex::from_facets(parse_facets(back)).facets() == k.facets());
}
