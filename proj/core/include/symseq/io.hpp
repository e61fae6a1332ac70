#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symseq/core.hpp"
#include "symseq/eval.hpp"
#include "symseq/spectrum.hpp"

namespace symseq {

// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

// Signals CSV: one signal per line, `id,label,v1,...,vn`, no header.
// Rows may have different lengths. The label field may be empty on every
// row (unlabeled dataset); a mix of empty and non-empty labels is an error.
// Fields are not quoted, so ids and labels must not contain commas.
TimeSeriesDataset load_dataset(const std::string& path);
void save_dataset(const TimeSeriesDataset& dataset, const std::string& path);

// Sequences CSV with header `id,sequence`.
void save_sequences(const std::vector<SymbolicSequence>& sequences,
                    const std::string& path);
std::vector<SymbolicSequence> load_sequences(const std::string& path);

// Range bounds as JSON together with the alphabet they feed.
void save_bounds(const RangeBounds& bounds, const Alphabet& alphabet,
                 const std::string& path);

struct LoadedBounds {
  RangeBounds bounds;
  std::string alphabet;
};
LoadedBounds load_bounds(const std::string& path);

// Sparse spectrum persistence: triplet CSV `signal_id,kmer_index,count`
// holding only nonzero counts, plus a JSON manifest carrying the alphabet,
// k, dimension, signal order, sequence lengths, and fitted bounds. Signals
// whose spectrum is all zero appear in the manifest but contribute no
// triplet rows.
void save_spectrum(const EmbeddingMatrix& embedding, const RangeBounds& bounds,
                   const Alphabet& alphabet, int ksize,
                   const std::vector<std::size_t>& sequence_lengths,
                   const std::string& csv_path,
                   const std::string& manifest_path);

struct LoadedSpectrum {
  EmbeddingMatrix embedding;
  RangeBounds bounds;
  std::string alphabet;
  int ksize = 0;
  std::vector<std::size_t> sequence_lengths;
};
LoadedSpectrum load_spectrum(const std::string& csv_path,
                             const std::string& manifest_path);

// Evaluation report as JSON (means and SDs per classifier and metric).
void save_report(const EvalReport& report, const std::string& path);

// Per-run metrics CSV with header `run,classifier,metric,value` and one row
// per repetition x classifier x metric.
void save_runs_csv(const EvalReport& report, const std::string& path);

// Reads one metric series for one classifier out of a per-run metrics CSV,
// in row order (i.e. by repetition).
std::vector<double> load_metric_series(const std::string& path,
                                       const std::string& classifier,
                                       const std::string& metric);

}  // namespace symseq
