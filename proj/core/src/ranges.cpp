#include "symseq/ranges.hpp"

#include <algorithm>
#include <cmath>

namespace symseq {

std::vector<double> flatten(const TimeSeriesDataset& dataset) {
  std::size_t total = 0;
  for (const Signal& signal : dataset.signals) total += signal.values.size();
  std::vector<double> flat;
  flat.reserve(total);
  for (const Signal& signal : dataset.signals) {
    flat.insert(flat.end(), signal.values.begin(), signal.values.end());
  }
  return flat;
}

RangeBounds compute_ranges(std::span<const double> flat, int num_ranges) {
  if (flat.empty()) {
    throw ValidationError("cannot compute ranges from empty data");
  }
  if (num_ranges < 2) {
    throw ValidationError("num_ranges must be at least 2, got " +
                          std::to_string(num_ranges));
  }
  const auto [min_it, max_it] = std::minmax_element(flat.begin(), flat.end());
  const double min_value = *min_it;
  const double max_value = *max_it;
  if (!(max_value > min_value)) {
    throw DegenerateRangeError("all values equal " + std::to_string(min_value) +
                               "; equal-width ranges are undefined");
  }

  RangeBounds out;
  out.num_ranges = num_ranges;
  out.interval = (max_value - min_value) / num_ranges;
  out.bounds.resize(static_cast<std::size_t>(num_ranges) + 1);
  for (int i = 0; i <= num_ranges; ++i) {
    out.bounds[static_cast<std::size_t>(i)] = min_value + i * out.interval;
  }
  // The last bound is the fitted maximum itself, not min + N*d.
  out.bounds.back() = max_value;
  return out;
}

int locate(double value, const RangeBounds& bounds) {
  if (value <= bounds.bounds.front()) return 0;
  if (value >= bounds.bounds.back()) return bounds.num_ranges - 1;
  auto it = std::upper_bound(bounds.bounds.begin(), bounds.bounds.end(), value);
  return static_cast<int>(it - bounds.bounds.begin()) - 1;
}

}  // namespace symseq
