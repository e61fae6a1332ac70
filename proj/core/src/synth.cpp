#include "symseq/synth.hpp"

#include <cmath>
#include <random>
#include <string>

#include "symseq/error.hpp"

namespace symseq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPeriod = 32.0;       // samples per sinusoid cycle
constexpr double kClassGap = 3.0;      // vertical distance between centers
constexpr double kTotalSpan = 26.0;    // noise-free span of the whole dataset
constexpr double kNoiseSd = 0.2 * kClassGap;

// Uniform double in [0, 1) from the top 53 bits of the generator, and a
// Box-Muller normal on top of it. Hand-rolled so the same seed produces the
// same file on every platform, independent of the standard library's
// distribution implementations.
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double next_normal(std::mt19937_64& rng) {
  const double u1 =
      (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  const double u2 = next_uniform(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

}  // namespace

TimeSeriesDataset make_synthetic_dataset(const SynthConfig& config) {
  const double amplitude =
      (kTotalSpan - kClassGap * (config.classes - 1)) / 2.0;
  if (config.classes < 2 || amplitude <= 0.0) {
    throw ValidationError(
        "classes must be between 2 and 9 so every class keeps a positive "
        "amplitude inside the " +
        std::to_string(static_cast<int>(kTotalSpan)) + "-unit span");
  }
  if (config.signals_per_class < 1) {
    throw ValidationError("signals_per_class must be at least 1");
  }
  if (config.length < 1) {
    throw ValidationError("length must be at least 1");
  }

  std::mt19937_64 rng(config.seed);
  TimeSeriesDataset dataset;
  dataset.signals.reserve(
      static_cast<std::size_t>(config.classes) * config.signals_per_class);
  dataset.labels.reserve(dataset.signals.capacity());

  for (int c = 0; c < config.classes; ++c) {
    const double center = kClassGap * c;
    const std::string label = "class_" + std::to_string(c);
    for (int s = 0; s < config.signals_per_class; ++s) {
      Signal signal;
      signal.id = "sig_" + std::to_string(c) + "_" + std::to_string(s);
      signal.values.reserve(static_cast<std::size_t>(config.length));
      const double phase = 2.0 * kPi * next_uniform(rng);
      for (int t = 0; t < config.length; ++t) {
        const double base =
            center + amplitude * std::sin(2.0 * kPi * t / kPeriod + phase);
        signal.values.push_back(base + kNoiseSd * next_normal(rng));
      }
      dataset.signals.push_back(std::move(signal));
      dataset.labels.push_back(label);
    }
  }
  return dataset;
}

}  // namespace symseq
