// Copyright 2026 The qchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qchan/stats.hpp"

#include <algorithm>
#include <cmath>

namespace qchan {

SampleStats sample_stats(const std::vector<double>& xs) {
  SampleStats s;
  s.count = xs.size();
  if (xs.empty()) return s;
  double acc = 0;
  for (double x : xs) acc += x;
  s.mean = acc / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.variance = ss / static_cast<double>(xs.size() - 1);
    s.se = std::sqrt(s.variance / static_cast<double>(xs.size()));
  }
  return s;
}

double median(std::vector<double> xs) {
  require(!xs.empty(), "median: empty sample");
  const std::size_t mid = xs.size() / 2;
  std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
  double hi = xs[mid];
  if (xs.size() % 2 == 1) return hi;
  std::nth_element(xs.begin(), xs.begin() + mid - 1, xs.end());
  return 0.5 * (hi + xs[mid - 1]);
}

double raw_moment(const std::vector<double>& xs, int k) {
  require(!xs.empty(), "raw_moment: empty sample");
  double acc = 0;
  for (double x : xs) acc += std::pow(x, k);
  return acc / static_cast<double>(xs.size());
}

namespace {

// Kolmogorov survival function Q(lambda) = 2 sum_j (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda) {
  if (lambda < 1e-8) return 1.0;
  double sum = 0;
  double sign = 1;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-12) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

KsResult two_sample_ks(std::vector<double> a, std::vector<double> b) {
  require(!a.empty() && !b.empty(), "two_sample_ks: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const std::size_t na = a.size(), nb = b.size();
  std::size_t ia = 0, ib = 0;
  double d = 0;
  while (ia < na && ib < nb) {
    const double x = std::min(a[ia], b[ib]);
    while (ia < na && a[ia] <= x) ++ia;
    while (ib < nb && b[ib] <= x) ++ib;
    const double fa = static_cast<double>(ia) / static_cast<double>(na);
    const double fb = static_cast<double>(ib) / static_cast<double>(nb);
    d = std::max(d, std::abs(fa - fb));
  }
  KsResult r;
  r.statistic = d;
  const double en = std::sqrt(static_cast<double>(na) * static_cast<double>(nb) /
                              static_cast<double>(na + nb));
  r.p_value = kolmogorov_q((en + 0.12 + 0.11 / en) * d);
  return r;
}

Histogram histogram(const std::vector<double>& xs, int bins) {
  require(!xs.empty(), "histogram: empty sample");
  std::vector<double> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front(), hi = sorted.back();
  if (bins <= 0) {
    const std::size_t n = sorted.size();
    const double q1 = sorted[n / 4];
    const double q3 = sorted[(3 * n) / 4];
    const double iqr = q3 - q1;
    const double width = 2.0 * iqr / std::cbrt(static_cast<double>(n));
    bins = (width > 0 && hi > lo)
               ? std::max(1, static_cast<int>(std::ceil((hi - lo) / width)))
               : 1;
    bins = std::min(bins, 10000);
  }
  Histogram h;
  const double span = (hi > lo) ? (hi - lo) : 1.0;
  h.edges.resize(bins + 1);
  for (int i = 0; i <= bins; ++i)
    h.edges[i] = lo + span * static_cast<double>(i) / static_cast<double>(bins);
  h.counts.assign(bins, 0.0);
  for (double x : xs) {
    int idx = static_cast<int>((x - lo) / span * bins);
    idx = std::clamp(idx, 0, bins - 1);
    h.counts[idx] += 1.0;
  }
  return h;
}

}  // namespace qchan
