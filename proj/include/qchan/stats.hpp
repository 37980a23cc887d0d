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

#pragma once

#include <vector>

#include "qchan/common.hpp"

namespace qchan {

struct SampleStats {
  double mean = 0;
  double variance = 0;  // unbiased
  double se = 0;        // standard error of the mean
  std::size_t count = 0;
};
SampleStats sample_stats(const std::vector<double>& xs);

double median(std::vector<double> xs);

/// k-th raw moment (1/n) sum x_i^k.
double raw_moment(const std::vector<double>& xs, int k);

struct KsResult {
  double statistic = 0;
  double p_value = 0;
};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value
/// (finite-sample effective size correction applied).
KsResult two_sample_ks(std::vector<double> a, std::vector<double> b);

struct Histogram {
  std::vector<double> edges;   // size bins + 1
  std::vector<double> counts;  // size bins
};

/// Freedman-Diaconis binning by default; pass bins > 0 to fix the bin count.
Histogram histogram(const std::vector<double>& xs, int bins = 0);

}  // namespace qchan
