#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symseq/core.hpp"

namespace symseq {

/// One KmerSpectrum row per signal, in dataset order. dim is
/// |alphabet|^ksize; ids align with rows.
struct EmbeddingMatrix {
  std::vector<KmerSpectrum> rows;
  std::vector<std::string> ids;
  std::size_t dim = 0;
};

/// Which signals contribute to the range fit. all_data reproduces the
/// reference pipeline (ranges fitted on the full input before any
/// split); train_only fits on a masked subset and is the hygienic
/// alternative for evaluation.
enum class FitScope { all_data, train_only };

/// |alphabet|^ksize with an overflow/size guard.
std::size_t spectrum_dim(const Alphabet& alphabet, int ksize);

/// Lexicographic rank of `kmer` over all |A|^k strings of its length:
/// sum of pos(kmer[j]) * |A|^(k-1-j). Throws ValidationError on a
/// character outside the alphabet.
std::size_t kmer_index(std::string_view kmer, const Alphabet& alphabet);

/// Counts every overlapping k-mer of the sequence into a dense vector of
/// length |alphabet|^ksize. Sequences shorter than ksize produce an
/// all-zero spectrum.
KmerSpectrum build_spectrum(const SymbolicSequence& sequence, int ksize,
                            const Alphabet& alphabet);

struct EmbeddingResult {
  EmbeddingMatrix embedding;
  RangeBounds bounds;
  std::vector<SymbolicSequence> sequences;
};

/// Full pipeline: flatten the fitting subset, fit ranges, map every
/// signal to symbols, and count k-mers per signal. Row order matches
/// dataset order. With FitScope::train_only, `train_mask` must be
/// present, match the signal count, and select at least one signal.
EmbeddingResult generate_embedding(
    const TimeSeriesDataset& dataset, const Alphabet& alphabet, int ksize,
    FitScope scope = FitScope::all_data,
    const std::optional<std::vector<bool>>& train_mask = std::nullopt);

}  // namespace symseq
