#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symseq/classify.hpp"
#include "symseq/spectrum.hpp"

namespace symseq {

/// The 60-10-30 repeated-split protocol. Sizes are round(n * frac) for
/// train and validation with the remainder assigned to test.
struct SplitSpec {
  double train_frac = 0.6;
  double val_frac = 0.1;
  double test_frac = 0.3;
  std::uint64_t seed = 0;
  bool stratified = false;
};

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> val;
  std::vector<std::size_t> test;
};

/// Seeded, deterministic partition of 0..n-1. Stratified mode preserves
/// per-class proportions where class counts permit; single-member
/// classes go to train. Throws ValidationError when any split would be
/// empty.
SplitIndices split(std::size_t n, const std::vector<int>& labels,
                   const SplitSpec& spec);

struct MetricRecord {
  double accuracy = 0.0;
  double precision_weighted = 0.0;
  double recall_weighted = 0.0;
  double f1_weighted = 0.0;
  double f1_macro = 0.0;
  double f1_micro = 0.0;
  double roc_auc_ovr_macro = 0.0;
  double train_runtime_seconds = 0.0;
};

inline constexpr std::array<std::string_view, 8> kMetricNames = {
    "accuracy",  "precision_weighted", "recall_weighted",
    "f1_weighted", "f1_macro",         "f1_micro",
    "roc_auc_ovr_macro", "train_runtime_seconds"};

std::array<double, 8> metric_values(const MetricRecord& record);

/// Classification metrics from hard predictions and per-class
/// probability scores. Per-class ratios define 0/0 as 0; ROC-AUC is the
/// one-vs-rest macro mean using the rank (Mann-Whitney) formulation with
/// ties contributing 1/2, skipping classes without both positives and
/// negatives in y_true. train_runtime_seconds is left at 0.
MetricRecord metrics(const std::vector<int>& y_true,
                     const std::vector<int>& y_pred, const Matrix& proba,
                     int class_count);

struct MetricStats {
  double mean = 0.0;
  double sd = 0.0;
};

struct ClassifierReport {
  std::string name;
  std::array<MetricStats, 8> stats;  // aligned with kMetricNames
};

struct RunRecord {
  int run = 0;
  std::string classifier;
  std::string metric;
  double value = 0.0;
};

struct EvalReport {
  int repetitions = 0;
  std::uint64_t base_seed = 0;
  std::vector<std::string> class_index;  // sorted label strings
  std::vector<ClassifierReport> classifiers;
  std::vector<RunRecord> runs;
};

/// Repeats the split/fit/test protocol `repetitions` times with seeds
/// base_seed + r, fitting each classifier on the train split, holding
/// the validation split out, and scoring the test split. SDs use the
/// R-1 divisor. Deterministic per base_seed except the runtime fields.
EvalReport run_experiment(const Matrix& features,
                          const std::vector<std::string>& labels,
                          const std::vector<ClassifierConfig>& classifiers,
                          int repetitions, std::uint64_t base_seed,
                          const SplitSpec& split_template = {});

inline EvalReport run_experiment(const EmbeddingMatrix& embedding,
                                 const std::vector<std::string>& labels,
                                 const std::vector<ClassifierConfig>& classifiers,
                                 int repetitions, std::uint64_t base_seed,
                                 const SplitSpec& split_template = {}) {
  return run_experiment(to_feature_matrix(embedding), labels, classifiers,
                        repetitions, base_seed, split_template);
}

/// Same protocol, but range bounds are refitted on each repetition's
/// train split before embedding (FitScope::train_only); test values
/// outside the fitted range clamp to the outer ranges.
EvalReport run_experiment_refit(const TimeSeriesDataset& dataset,
                                const Alphabet& alphabet, int ksize,
                                const std::vector<ClassifierConfig>& classifiers,
                                int repetitions, std::uint64_t base_seed,
                                const SplitSpec& split_template = {});

struct TTestResult {
  double t = 0.0;
  double p = 1.0;
  double df = 0.0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
};

/// Welch two-sample t-test with a two-sided p-value. When both samples
/// have zero variance the result degenerates to p = 1 for equal means
/// and p = 0 otherwise.
TTestResult t_test(std::span<const double> a, std::span<const double> b);

/// CDF of Student's t distribution with `dof` degrees of freedom.
double student_t_cdf(double x, double dof);

}  // namespace symseq
