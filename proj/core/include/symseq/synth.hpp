#pragma once

#include <cstdint>

#include "symseq/core.hpp"

namespace symseq {

// Configuration for the synthetic benchmark generator. Class c produces
// noisy sinusoids centered at c * 3 vertical units; amplitudes are sized so
// the noise-free data span 26 units in total. Under the default 26-symbol
// grid one unit is then one range width, adjacent class centers sit three
// range widths apart, and the noise SD is 0.2 of that gap.
struct SynthConfig {
  int classes = 2;
  int signals_per_class = 10;
  int length = 100;
  std::uint64_t seed = 42;
};

// Builds the labeled dataset described by `config`. Deterministic per seed.
// Labels are "class_0", "class_1", ... in class-major signal order.
TimeSeriesDataset make_synthetic_dataset(const SynthConfig& config);

}  // namespace symseq
