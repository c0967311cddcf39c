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

#include "cybertopo/tme.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <numbers>
#include <string>

#include "cybertopo/error.hpp"
#include "cybertopo/linalg.hpp"

namespace cybertopo {

double DensityGrid::mass() const {
  double total = 0.0;
  for (double f : fs) total += f * step;
  return total;
}

DensityGrid kde(std::span<const double> samples, double bandwidth, std::size_t bins) {
  if (samples.size() < 2) throw InvalidInput("kernel density needs at least two samples");
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw InvalidInput("bandwidth must be positive and finite");
  }
  if (bins < 2) throw InvalidInput("kernel density needs at least two bins");
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const double lo = *lo_it - 3.0 * bandwidth;
  const double hi = *hi_it + 3.0 * bandwidth;
  if (!(hi > lo) || !std::isfinite(hi - lo)) throw InvalidInput("degenerate samples");

  DensityGrid grid;
  grid.step = (hi - lo) / static_cast<double>(bins - 1);
  const double scale = 1.0 / (static_cast<double>(samples.size()) * bandwidth *
                              std::sqrt(2.0 * std::numbers::pi));
  for (std::size_t i = 0; i < bins; ++i) {
    const double x = lo + grid.step * static_cast<double>(i);
    double f = 0.0;
    for (double s : samples) {
      const double z = (x - s) / bandwidth;
      f += std::exp(-0.5 * z * z);
    }
    grid.xs.push_back(x);
    grid.fs.push_back(f * scale);
  }
  const double mass = grid.mass();
  if (!(mass > 0.0)) throw InvalidInput("degenerate samples");
  for (double& f : grid.fs) f /= mass;
  return grid;
}

UnimodalDecomposition sweep_decompose(std::span<const double> fs) {
  for (double f : fs) {
    if (!(f >= 0.0) || !std::isfinite(f)) {
      throw InvalidInput("densities must be finite and nonnegative");
    }
  }
  // Exact arithmetic keeps the components summing to the input bit for bit
  // before the final conversion back to doubles.
  const std::size_t n = fs.size();
  std::vector<std::vector<Rational>> parts;
  std::vector<bool> falling;
  std::ptrdiff_t rising = -1;
  Rational previous = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational current(fs[i]);
    for (auto& part : parts) part.push_back(i == 0 ? Rational(0) : part.back());
    if (current > previous) {
      if (rising < 0) {
        parts.emplace_back(n, Rational(0));
        parts.back().resize(i + 1);
        falling.push_back(false);
        rising = static_cast<std::ptrdiff_t>(parts.size()) - 1;
      }
      parts[static_cast<std::size_t>(rising)][i] += current - previous;
    } else if (current < previous) {
      Rational owed = previous - current;
      for (std::size_t m = 0; m < parts.size() && owed > 0; ++m) {
        if (!falling[m]) continue;
        Rational& v = parts[m][i];
        const Rational take = std::min(v, owed);
        v -= take;
        owed -= take;
      }
      if (owed > 0) {
        const auto r = static_cast<std::size_t>(rising);
        parts[r][i] -= owed;
        falling[r] = true;
        rising = -1;
      }
    }
    previous = current;
  }

  UnimodalDecomposition out;
  double total = 0.0;
  for (double f : fs) total += f;
  for (const auto& part : parts) {
    std::vector<double> values;
    double mass = 0.0;
    for (const auto& v : part) {
      values.push_back(v.convert_to<double>());
      mass += values.back();
    }
    out.components.push_back(std::move(values));
    out.weights.push_back(mass / total);
  }
  return out;
}

std::size_t unimodal_category(std::span<const double> fs) {
  return sweep_decompose(fs).components.size();
}

bool is_unimodal(std::span<const double> values) {
  // Superlevel sets are intervals exactly when the sequence never rises
  // again after it has fallen.
  bool fallen = false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) fallen = true;
    if (values[i] > values[i - 1] && fallen) return false;
  }
  return true;
}

namespace {

struct Run {
  std::size_t begin = 0;
  std::size_t length = 0;
};

}  // namespace

BandwidthScan select_bandwidth(std::span<const double> samples, std::size_t n_bandwidths,
                               std::size_t bins) {
  if (samples.size() < 2) throw InvalidInput("bandwidth selection needs at least two samples");
  if (n_bandwidths < 1) throw InvalidInput("need at least one bandwidth");
  if (bins < 2) throw InvalidInput("need at least two bins");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double range = sorted.back() - sorted.front();
  if (!(range > 0.0)) throw InvalidInput("all samples are identical");

  std::vector<double> gaps;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] > sorted[i - 1]) gaps.push_back(sorted[i] - sorted[i - 1]);
  }
  std::sort(gaps.begin(), gaps.end());
  const double low_gap = gaps[static_cast<std::size_t>(0.01 * static_cast<double>(gaps.size() - 1))];
  const double hi = range;
  const double lo = std::min(hi, std::max(low_gap, range / static_cast<double>(bins)));

  BandwidthScan scan;
  for (std::size_t i = 0; i < n_bandwidths; ++i) {
    const double t = n_bandwidths == 1 ? 1.0
                                       : static_cast<double>(i) / static_cast<double>(n_bandwidths - 1);
    const double h = lo * std::pow(hi / lo, t);
    scan.bandwidths.push_back(h);
    scan.ucats.push_back(unimodal_category(kde(samples, h, bins).fs));
  }

  std::map<std::size_t, std::size_t> frequency;
  for (std::size_t u : scan.ucats) ++frequency[u];
  std::size_t best_count = 0;
  for (const auto& [u, count] : frequency) {
    if (count > best_count) {
      best_count = count;
      scan.modal_ucat = u;
    }
  }

  Run best, current;
  for (std::size_t i = 0; i < scan.ucats.size(); ++i) {
    if (scan.ucats[i] == scan.modal_ucat) {
      if (current.length == 0) current.begin = i;
      ++current.length;
      if (current.length > best.length) best = current;
    } else {
      current.length = 0;
    }
  }
  scan.chosen_bandwidth = std::sqrt(scan.bandwidths[best.begin] *
                                    scan.bandwidths[best.begin + best.length - 1]);
  scan.density = kde(samples, scan.chosen_bandwidth, bins);
  scan.decomposition = sweep_decompose(scan.density.fs);
  return scan;
}

namespace {

bool parse_double(const std::string& text, double& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

std::vector<double> read_samples(std::istream& in) {
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string cell = trim(line);
    if (cell.empty()) continue;
    if (cell.find(',') != std::string::npos) {
      throw ParseError("expected a single column", line_no);
    }
    double value = 0.0;
    if (parse_double(cell, value)) {
      out.push_back(value);
    } else if (!first_content) {
      throw ParseError("not a number: '" + cell + "'", line_no);
    }
    first_content = false;
  }
  return out;
}

}  // namespace cybertopo
