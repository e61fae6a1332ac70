#include "symseq/spectrum.hpp"

#include <limits>

#include "symseq/encode.hpp"
#include "symseq/ranges.hpp"

namespace symseq {

namespace {

// Dense count vectors become impractical well before overflow; cap the
// spectrum at 2^28 entries (~2 GiB of int64 counts).
constexpr std::size_t kMaxSpectrumDim = std::size_t{1} << 28;

}  // namespace

std::size_t spectrum_dim(const Alphabet& alphabet, int ksize) {
  if (ksize < 1) {
    throw ValidationError("ksize must be at least 1, got " +
                          std::to_string(ksize));
  }
  std::size_t dim = 1;
  const std::size_t base = static_cast<std::size_t>(alphabet.size());
  for (int i = 0; i < ksize; ++i) {
    if (dim > kMaxSpectrumDim / base) {
      throw ValidationError("spectrum dimension " +
                            std::to_string(alphabet.size()) + "^" +
                            std::to_string(ksize) + " is too large");
    }
    dim *= base;
  }
  return dim;
}

std::size_t kmer_index(std::string_view kmer, const Alphabet& alphabet) {
  const std::size_t base = static_cast<std::size_t>(alphabet.size());
  std::size_t index = 0;
  for (char c : kmer) {
    const int pos = alphabet.position(c);
    if (pos < 0) {
      throw ValidationError(std::string("character '") + c +
                            "' is not in the alphabet");
    }
    index = index * base + static_cast<std::size_t>(pos);
  }
  return index;
}

KmerSpectrum build_spectrum(const SymbolicSequence& sequence, int ksize,
                            const Alphabet& alphabet) {
  KmerSpectrum spectrum;
  spectrum.k = ksize;
  spectrum.sequence_length = sequence.chars.size();
  spectrum.counts.assign(spectrum_dim(alphabet, ksize), 0);

  const std::size_t k = static_cast<std::size_t>(ksize);
  if (sequence.chars.size() < k) return spectrum;
  for (std::size_t i = 0; i + k <= sequence.chars.size(); ++i) {
    const std::size_t idx =
        kmer_index(std::string_view(sequence.chars).substr(i, k), alphabet);
    ++spectrum.counts[idx];
  }
  return spectrum;
}

EmbeddingResult generate_embedding(
    const TimeSeriesDataset& dataset, const Alphabet& alphabet, int ksize,
    FitScope scope, const std::optional<std::vector<bool>>& train_mask) {
  validate_dataset(dataset);

  std::vector<double> fit_data;
  if (scope == FitScope::train_only) {
    if (!train_mask.has_value()) {
      throw ValidationError("train_only fit scope requires a train mask");
    }
    if (train_mask->size() != dataset.signals.size()) {
      throw ValidationError(
          "train mask length " + std::to_string(train_mask->size()) +
          " does not match " + std::to_string(dataset.signals.size()) +
          " signals");
    }
    for (std::size_t i = 0; i < dataset.signals.size(); ++i) {
      if (!(*train_mask)[i]) continue;
      const auto& values = dataset.signals[i].values;
      fit_data.insert(fit_data.end(), values.begin(), values.end());
    }
    if (fit_data.empty()) {
      throw ValidationError("train mask selects no signals");
    }
  } else {
    fit_data = flatten(dataset);
  }

  EmbeddingResult result;
  result.bounds = compute_ranges(fit_data, alphabet.size());
  result.embedding.dim = spectrum_dim(alphabet, ksize);

  result.sequences.reserve(dataset.signals.size());
  result.embedding.rows.reserve(dataset.signals.size());
  result.embedding.ids.reserve(dataset.signals.size());
  for (const Signal& signal : dataset.signals) {
    SymbolicSequence seq = map_signal(signal, result.bounds, alphabet);
    result.embedding.rows.push_back(build_spectrum(seq, ksize, alphabet));
    result.embedding.ids.push_back(signal.id);
    result.sequences.push_back(std::move(seq));
  }
  return result;
}

}  // namespace symseq
