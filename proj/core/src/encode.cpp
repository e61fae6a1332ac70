#include "symseq/encode.hpp"

#include "symseq/ranges.hpp"

namespace symseq {

SymbolicSequence map_signal(const Signal& signal, const RangeBounds& bounds,
                            const Alphabet& alphabet) {
  if (alphabet.size() != bounds.num_ranges) {
    throw ValidationError("alphabet size " + std::to_string(alphabet.size()) +
                          " does not match " + std::to_string(bounds.num_ranges) +
                          " ranges");
  }
  SymbolicSequence seq;
  seq.id = signal.id;
  seq.chars.reserve(signal.values.size());
  for (double value : signal.values) {
    seq.chars.push_back(alphabet.symbol(locate(value, bounds)));
  }
  return seq;
}

std::vector<std::string> compute_kmers(std::string_view chars, int ksize) {
  if (ksize < 1) {
    throw ValidationError("ksize must be at least 1, got " +
                          std::to_string(ksize));
  }
  std::vector<std::string> kmers;
  const std::size_t k = static_cast<std::size_t>(ksize);
  if (chars.size() < k) return kmers;
  kmers.reserve(chars.size() - k + 1);
  for (std::size_t i = 0; i + k <= chars.size(); ++i) {
    kmers.emplace_back(chars.substr(i, k));
  }
  return kmers;
}

}  // namespace symseq
