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
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "cybertopo/error.hpp"
#include "cybertopo/tme.hpp"

using namespace cybertopo;

namespace {

using Grid = std::vector<int>;

// All unimodal integer sequences bounded above by f, excluding zero.
void unimodal_below(const Grid& f, std::size_t i, bool falling, Grid& current,
                    std::vector<Grid>& out) {
  if (i == f.size()) {
    if (std::any_of(current.begin(), current.end(), [](int v) { return v > 0; })) {
      out.push_back(current);
    }
    return;
  }
  const int previous = i == 0 ? 0 : current[i - 1];
  for (int v = 0; v <= f[i]; ++v) {
    if (falling && v > previous) break;
    current.push_back(v);
    unimodal_below(f, i + 1, falling || v < previous, current, out);
    current.pop_back();
  }
}

// Minimum number of unimodal summands, by exhaustive search.
int brute_force_ucat(const Grid& f, std::map<Grid, int>& memo) {
  if (std::all_of(f.begin(), f.end(), [](int v) { return v == 0; })) return 0;
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  std::vector<Grid> pieces;
  Grid scratch;
  unimodal_below(f, 0, false, scratch, pieces);
  int best = 1 << 20;
  for (const auto& g : pieces) {
    Grid rest(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) rest[i] = f[i] - g[i];
    best = std::min(best, 1 + brute_force_ucat(rest, memo));
    if (best == 1) break;
  }
  memo[f] = best;
  return best;
}

std::vector<double> as_doubles(const Grid& g) { return {g.begin(), g.end()}; }

// Superlevel sets at every attained value are index intervals.
bool excursions_are_intervals(const std::vector<double>& c) {
  std::set<double> levels(c.begin(), c.end());
  for (double y : levels) {
    if (y <= 0.0) continue;
    std::size_t first = c.size(), last = 0, count = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= y) {
        first = std::min(first, i);
        last = i;
        ++count;
      }
    }
    if (count != last - first + 1) return false;
  }
  return true;
}

// Plateaus strictly above both neighbours, with zero padding at the ends.
std::size_t strict_local_maxima(const std::vector<double>& f) {
  std::vector<double> p{0.0};
  p.insert(p.end(), f.begin(), f.end());
  p.push_back(0.0);
  std::size_t count = 0;
  for (std::size_t i = 1; i + 1 < p.size();) {
    std::size_t j = i;
    while (j + 1 < p.size() - 1 && p[j + 1] == p[i]) ++j;
    if (p[i] > p[i - 1] && p[i] > p[j + 1]) ++count;
    i = j + 1;
  }
  return count;
}

bool has_separated_maxima(const std::vector<double>& f) {
  // Some bin is strictly below a bin on each side.
  for (std::size_t k = 1; k + 1 < f.size(); ++k) {
    const double left = *std::max_element(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
    const double right = *std::max_element(f.begin() + static_cast<std::ptrdiff_t>(k) + 1, f.end());
    if (f[k] < left && f[k] < right) return true;
  }
  return false;
}

void check_decomposition(const std::vector<double>& f) {
  const auto d = sweep_decompose(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    double sum = 0.0;
    for (const auto& c : d.components) sum += c[i];
    REQUIRE(std::abs(sum - f[i]) <= 1e-12);
  }
  double total = 0.0;
  for (std::size_t m = 0; m < d.components.size(); ++m) {
    const auto& c = d.components[m];
    REQUIRE(c.size() == f.size());
    CHECK(excursions_are_intervals(c));
    CHECK(is_unimodal(c));
    CHECK(std::all_of(c.begin(), c.end(), [](double v) { return v >= 0.0; }));
    CHECK(d.weights[m] > 0.0);
    total += d.weights[m];
  }
  if (!d.components.empty()) CHECK(std::abs(total - 1.0) < 1e-9);
  CHECK(d.components.size() <= strict_local_maxima(f));
  if (has_separated_maxima(f)) CHECK(d.components.size() >= 2);
}

std::vector<double> load_samples(const std::string& name) {
  std::ifstream in(std::string(CYBERTOPO_DATA_DIR) + "/samples/" + name);
  REQUIRE(in);
  return read_samples(in);
}

}  // namespace

TEST_CASE("unimodal category of small grids") {
  CHECK(unimodal_category(std::vector<double>{1, 2, 1, 0, 0}) == 1);
  CHECK(unimodal_category(std::vector<double>{1, 2, 1, 2, 1}) == 2);
  CHECK(unimodal_category(std::vector<double>{0, 0, 0}) == 0);
  CHECK(unimodal_category(std::vector<double>{}) == 0);
  // Four strict local maxima, two components.
  const std::vector<double> ripples{2, 1.9, 2, 1.9, 2, 1.9, 2};
  CHECK(strict_local_maxima(ripples) == 4);
  CHECK(unimodal_category(ripples) == 2);
  // A zero bin splits the grid, so the two rippled halves add up.
  CHECK(unimodal_category(std::vector<double>{2, 1.9, 2, 1.9, 2, 0, 1, 0.9, 1}) == 4);
  CHECK_THROWS_AS(sweep_decompose(std::vector<double>{1, -1}), InvalidInput);
  CHECK_THROWS_AS(sweep_decompose(std::vector<double>{1, NAN}), InvalidInput);
}

TEST_CASE("sweep components for a two-peak grid") {
  const auto d = sweep_decompose(std::vector<double>{1, 2, 1, 2, 1});
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0] == std::vector<double>{1, 2, 1, 1, 0});
  CHECK(d.components[1] == std::vector<double>{0, 0, 0, 1, 1});
  CHECK(d.weights[0] == Catch::Approx(5.0 / 7.0));
}

TEST_CASE("sweep is minimal on every small integer grid") {
  std::map<Grid, int> memo;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
      Grid f(n);
      std::size_t c = code;
      for (auto& v : f) {
        v = static_cast<int>(c % 4);
        c /= 4;
      }
      CAPTURE(f);
      REQUIRE(static_cast<int>(unimodal_category(as_doubles(f))) == brute_force_ucat(f, memo));
    }
  }
}

TEST_CASE("decomposition invariants on random grids") {
  std::mt19937 rng(73);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  std::bernoulli_distribution zero(0.15);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> f(5 + static_cast<std::size_t>(trial) % 60);
    for (auto& v : f) v = zero(rng) ? 0.0 : value(rng) * std::pow(10.0, trial % 5 - 2);
    check_decomposition(f);

    const double scale = 2.0;
    std::vector<double> scaled(f);
    for (auto& v : scaled) v *= scale;
    const auto a = sweep_decompose(f);
    const auto b = sweep_decompose(scaled);
    REQUIRE(a.components.size() == b.components.size());
    for (std::size_t m = 0; m < a.components.size(); ++m)
      for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(b.components[m][i] == scale * a.components[m][i]);
    for (double c : {0.3, 7.0}) {
      std::vector<double> g(f);
      for (auto& v : g) v *= c;
      CHECK(unimodal_category(g) == a.components.size());
    }
  }
}

TEST_CASE("kernel density estimates") {
  std::mt19937 rng(79);
  std::normal_distribution<double> normal(0.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> s(10 + trial);
    for (auto& v : s) v = normal(rng);
    const auto g = kde(s, 0.2 + 0.1 * trial, 256);
    CHECK(std::abs(g.mass() - 1.0) < 1e-9);
    CHECK(g.xs.size() == 256);
    CHECK(std::all_of(g.fs.begin(), g.fs.end(), [](double f) { return f >= 0.0; }));
    CHECK(g.xs.front() == Catch::Approx(*std::min_element(s.begin(), s.end()) - 3 * (0.2 + 0.1 * trial)));
    check_decomposition(g.fs);
  }
  const std::vector<double> same{4.0, 4.0, 4.0};
  const auto bump = kde(same, 1.0, 101);
  CHECK(unimodal_category(bump.fs) == 1);
  for (std::size_t i = 0; i < 101; ++i) CHECK(bump.fs[i] == Catch::Approx(bump.fs[100 - i]));

  std::vector<double> clusters;
  std::normal_distribution<double> tight(0.0, 0.5);
  for (int i = 0; i < 100; ++i) clusters.push_back(tight(rng));
  for (int i = 0; i < 100; ++i) clusters.push_back(10.0 + tight(rng));
  CHECK(unimodal_category(kde(clusters, 0.5, 512).fs) == 2);

  CHECK_THROWS_AS(kde(std::vector<double>{1.0}, 1.0, 10), InvalidInput);
  CHECK_THROWS_AS(kde(same, 0.0, 10), InvalidInput);
  CHECK_THROWS_AS(kde(same, 1.0, 1), InvalidInput);
}

TEST_CASE("bandwidth selection") {
  const auto bimodal = load_samples("bimodal.txt");
  REQUIRE(bimodal.size() == 1000);
  const auto scan = select_bandwidth(bimodal);
  CHECK(scan.bandwidths.size() == kDefaultBandwidths);
  CHECK(std::is_sorted(scan.bandwidths.begin(), scan.bandwidths.end()));
  CHECK(scan.modal_ucat == 2);
  CHECK(scan.ucats.back() == 1);
  REQUIRE(scan.decomposition.components.size() == 2);
  // Sample proportions are exactly one half on each side.
  for (double w : scan.decomposition.weights) CHECK(std::abs(w - 0.5) <= 0.05);
  CHECK(scan.chosen_bandwidth >= scan.bandwidths.front());
  CHECK(scan.chosen_bandwidth <= scan.bandwidths.back());
  CHECK(unimodal_category(kde(bimodal, scan.chosen_bandwidth, kDefaultBins).fs) == 2);

  // The chosen bandwidth sits inside a longest run of the modal category.
  std::size_t best = 0, run = 0, best_end = 0;
  for (std::size_t i = 0; i < scan.ucats.size(); ++i) {
    run = scan.ucats[i] == scan.modal_ucat ? run + 1 : 0;
    if (run > best) {
      best = run;
      best_end = i;
    }
  }
  CHECK(scan.chosen_bandwidth >= scan.bandwidths[best_end + 1 - best]);
  CHECK(scan.chosen_bandwidth <= scan.bandwidths[best_end]);

  CHECK(select_bandwidth(load_samples("unimodal.txt")).modal_ucat == 1);
  CHECK_THROWS_AS(select_bandwidth(std::vector<double>{2.0, 2.0, 2.0}), InvalidInput);
  CHECK_THROWS_AS(select_bandwidth(std::vector<double>{2.0}), InvalidInput);
}

TEST_CASE("sample files") {
  CHECK(load_samples("with_header.csv").size() == 50);
  std::istringstream plain("1\n2.5\n# note\n\n-3e-2\n");
  CHECK(read_samples(plain) == std::vector<double>{1.0, 2.5, -0.03});
  try {
    std::istringstream bad("1\n2\nthree\n");
    read_samples(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream two_columns("a,b\n1,2\n");
  CHECK_THROWS_AS(read_samples(two_columns), ParseError);
}
