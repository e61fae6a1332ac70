#include "reference_impl.hpp"

#include <cstddef>
#include <stdexcept>

namespace refimpl {

namespace {

// All |alphabet|^ksize strings of length ksize in lexicographic order.
std::vector<std::string> materialize_vocabulary(const std::string& alphabet,
                                                int ksize) {
  std::vector<std::string> vocabulary;
  std::vector<std::size_t> odometer(static_cast<std::size_t>(ksize), 0);
  while (true) {
    std::string kmer;
    for (std::size_t position : odometer) kmer += alphabet[position];
    vocabulary.push_back(kmer);
    int wheel = ksize - 1;
    while (wheel >= 0) {
      if (++odometer[static_cast<std::size_t>(wheel)] < alphabet.size()) break;
      odometer[static_cast<std::size_t>(wheel)] = 0;
      --wheel;
    }
    if (wheel < 0) break;
  }
  return vocabulary;
}

std::size_t linear_index_of(const std::vector<std::string>& vocabulary,
                            const std::string& kmer) {
  for (std::size_t i = 0; i < vocabulary.size(); ++i) {
    if (vocabulary[i] == kmer) return i;
  }
  throw std::logic_error("k-mer missing from the reference vocabulary");
}

}  // namespace

ReferenceResult reference_pipeline(
    const std::vector<std::vector<double>>& signals,
    const std::string& alphabet, int ksize) {
  // Flatten every signal in order.
  std::vector<double> flat;
  for (const std::vector<double>& signal : signals) {
    for (double value : signal) flat.push_back(value);
  }
  if (flat.empty()) throw std::logic_error("reference needs data");

  // Global extremes by linear scan.
  double min_value = flat[0];
  double max_value = flat[0];
  for (double value : flat) {
    if (value < min_value) min_value = value;
    if (value > max_value) max_value = value;
  }
  if (!(max_value > min_value)) {
    throw std::logic_error("reference needs a non-degenerate value range");
  }

  const int num_ranges = static_cast<int>(alphabet.size());
  const double interval = (max_value - min_value) / num_ranges;

  // Accumulate the boundary list starting from the minimum.
  ReferenceResult result;
  double bound = min_value;
  for (int i = 0; i <= num_ranges; ++i) {
    result.bounds.push_back(bound);
    bound += interval;
  }

  // Map each value through the half-open ranges; anything unmatched (the
  // global maximum, or drift past the accumulated final bound) takes the
  // last symbol.
  for (const std::vector<double>& signal : signals) {
    std::string sequence;
    for (double value : signal) {
      char symbol = alphabet[static_cast<std::size_t>(num_ranges - 1)];
      for (int i = 0; i < num_ranges; ++i) {
        if (result.bounds[static_cast<std::size_t>(i)] <= value &&
            value < result.bounds[static_cast<std::size_t>(i) + 1]) {
          symbol = alphabet[static_cast<std::size_t>(i)];
          break;
        }
      }
      sequence += symbol;
    }
    result.sequences.push_back(sequence);
  }

  // Count every overlapping k-mer at its lexicographic vocabulary slot.
  const std::vector<std::string> vocabulary =
      materialize_vocabulary(alphabet, ksize);
  for (const std::string& sequence : result.sequences) {
    std::vector<long long> counts(vocabulary.size(), 0);
    if (sequence.size() >= static_cast<std::size_t>(ksize)) {
      for (std::size_t offset = 0;
           offset + static_cast<std::size_t>(ksize) <= sequence.size();
           ++offset) {
        const std::string kmer =
            sequence.substr(offset, static_cast<std::size_t>(ksize));
        ++counts[linear_index_of(vocabulary, kmer)];
      }
    }
    result.spectra.push_back(std::move(counts));
  }
  return result;
}

}  // namespace refimpl
