#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "symseq/error.hpp"

namespace symseq {

/// A single real-valued time series. Values are unitless sensor
/// magnitudes; the sample order is the temporal order.
struct Signal {
  std::string id;
  std::vector<double> values;
};

/// An ordered collection of signals. `labels`, when non-empty, holds one
/// class label per signal in the same order; empty means unlabeled.
struct TimeSeriesDataset {
  std::vector<Signal> signals;
  std::vector<std::string> labels;

  bool labeled() const { return !labels.empty(); }
};

/// Ordered set of distinct single characters used as range symbols.
/// The default instance is the 26 uppercase letters A..Z.
class Alphabet {
 public:
  explicit Alphabet(std::string symbols);

  /// First `size` letters of A..Z (size in [2, 26]).
  static Alphabet latin(int size = 26);

  int size() const { return static_cast<int>(symbols_.size()); }
  char symbol(int index) const { return symbols_[static_cast<std::size_t>(index)]; }
  const std::string& symbols() const { return symbols_; }

  /// 0-based position of `c`, or -1 when `c` is not a member.
  int position(char c) const {
    return positions_[static_cast<unsigned char>(c)];
  }

  bool contains(char c) const { return position(c) >= 0; }

 private:
  std::string symbols_;
  std::array<int, 256> positions_;
};

/// Fitted equal-width discretization grid: num_ranges + 1 ascending
/// boundary values partitioning [min, max], with interval = (max - min)
/// / num_ranges. bounds.front() is the fitted minimum and bounds.back()
/// the fitted maximum.
struct RangeBounds {
  std::vector<double> bounds;
  int num_ranges = 0;
  double interval = 0.0;

  double min() const { return bounds.front(); }
  double max() const { return bounds.back(); }
};

/// Character rendering of one signal: one symbol per sample, order
/// preserving.
struct SymbolicSequence {
  std::string id;
  std::string chars;
};

/// Dense k-mer count vector of length |alphabet|^k, indexed by the
/// lexicographic rank of each k-mer. The counts sum to
/// max(0, sequence_length - k + 1).
struct KmerSpectrum {
  std::vector<std::int64_t> counts;
  int k = 0;
  std::size_t sequence_length = 0;
};

/// Checks every dataset invariant and returns the dataset unchanged.
/// Throws ValidationError naming the offending signal/index otherwise.
const TimeSeriesDataset& validate_dataset(const TimeSeriesDataset& dataset);

}  // namespace symseq
