// Copyright 2026 The remote-vm Authors
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

#include <cstddef>
#include <span>

namespace rvm {

struct SummaryStats {
    std::size_t count = 0;
    double mean = 0.0;
    /// Sample standard deviation (n-1 denominator); 0 for a single value.
    double stddev = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double min = 0.0;
    double max = 0.0;

    bool operator==(const SummaryStats &) const = default;
};

/// 95% interval: normal quantile from 30 samples up, Student t below.
SummaryStats summarize(std::span<const double> values);

/// Two-sided 95% critical value used for a sample of `count`.
double ci_critical_value(std::size_t count);

/// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> x, std::span<const double> y);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace rvm
