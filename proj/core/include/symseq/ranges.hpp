#pragma once

#include <span>
#include <vector>

#include "symseq/core.hpp"

namespace symseq {

/// Concatenates all signals' values in dataset order.
std::vector<double> flatten(const TimeSeriesDataset& dataset);

/// Fits num_ranges equal-width ranges over [min(flat), max(flat)].
/// bounds[i] = min + i * interval, with the final bound set exactly to
/// max(flat) so accumulated rounding can never exclude the maximum.
/// Throws DegenerateRangeError when max == min.
RangeBounds compute_ranges(std::span<const double> flat, int num_ranges);

/// Returns the index i with bounds[i] <= value < bounds[i+1]. The final
/// range is closed on the right, so value == max maps to num_ranges - 1.
/// Values outside [min, max] clamp to the first/last range; that only
/// happens when the bounds were fitted on different data.
int locate(double value, const RangeBounds& bounds);

}  // namespace symseq
