#include "symseq/core.hpp"

#include <cmath>
#include <unordered_set>

namespace symseq {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) {
    throw ValidationError("alphabet needs at least 2 symbols, got " +
                          std::to_string(symbols_.size()));
  }
  positions_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(symbols_[i]);
    if (positions_[c] >= 0) {
      throw ValidationError(std::string("duplicate alphabet symbol '") +
                            symbols_[i] + "'");
    }
    positions_[c] = static_cast<int>(i);
  }
}

Alphabet Alphabet::latin(int size) {
  if (size < 2 || size > 26) {
    throw ValidationError("latin alphabet size must be in [2, 26], got " +
                          std::to_string(size));
  }
  static const std::string kLetters = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  return Alphabet(kLetters.substr(0, static_cast<std::size_t>(size)));
}

const TimeSeriesDataset& validate_dataset(const TimeSeriesDataset& dataset) {
  if (dataset.signals.empty()) {
    throw ValidationError("dataset has no signals");
  }
  if (dataset.labeled() && dataset.labels.size() != dataset.signals.size()) {
    throw ValidationError(
        "label count mismatch: " + std::to_string(dataset.labels.size()) +
        " labels for " + std::to_string(dataset.signals.size()) + " signals");
  }
  std::unordered_set<std::string> seen;
  seen.reserve(dataset.signals.size());
  for (const Signal& signal : dataset.signals) {
    if (signal.values.empty()) {
      throw ValidationError("signal '" + signal.id + "' has no samples");
    }
    for (std::size_t i = 0; i < signal.values.size(); ++i) {
      if (!std::isfinite(signal.values[i])) {
        throw ValidationError("non-finite value in signal '" + signal.id +
                              "' at index " + std::to_string(i));
      }
    }
    if (!seen.insert(signal.id).second) {
      throw ValidationError("duplicate signal id '" + signal.id + "'");
    }
  }
  return dataset;
}

}  // namespace symseq
