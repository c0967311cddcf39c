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

// One-dimensional topological mixture estimation on uniform grids.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace cybertopo {

struct DensityGrid {
  std::vector<double> xs;  // uniform, ascending
  std::vector<double> fs;  // nonnegative
  double step = 0.0;

  double mass() const;
};

// Gaussian kernel density on [min - 3h, max + 3h], scaled to unit mass.
DensityGrid kde(std::span<const double> samples, double bandwidth, std::size_t bins);

struct UnimodalDecomposition {
  // Each component has the length of the input and they sum to it.
  std::vector<std::vector<double>> components;
  // Component mass over total mass.
  std::vector<double> weights;
};

// Sweeps left to right keeping at most one component that may still rise.
// Decreases are taken from components already past their peak before the
// rising one is touched, and a new component starts only when the signal
// rises with no rising component left. The result has the minimum possible
// number of unimodal components. Throws InvalidInput on negative values.
UnimodalDecomposition sweep_decompose(std::span<const double> fs);

std::size_t unimodal_category(std::span<const double> fs);

// Every superlevel set {i : values[i] >= y} is a run of consecutive indices.
bool is_unimodal(std::span<const double> values);

struct BandwidthScan {
  std::vector<double> bandwidths;  // log-spaced, ascending
  std::vector<std::size_t> ucats;
  std::size_t modal_ucat = 0;
  double chosen_bandwidth = 0.0;
  DensityGrid density;  // at the chosen bandwidth
  UnimodalDecomposition decomposition;
};

inline constexpr std::size_t kDefaultBins = 512;
inline constexpr std::size_t kDefaultBandwidths = 64;

// Picks the most frequent unimodal category over the scan (ties go to the
// smaller category) and the geometric midpoint of its longest run.
BandwidthScan select_bandwidth(std::span<const double> samples,
                               std::size_t n_bandwidths = kDefaultBandwidths,
                               std::size_t bins = kDefaultBins);

// One value per line, or a single CSV column under a header line.
std::vector<double> read_samples(std::istream& in);

}  // namespace cybertopo
