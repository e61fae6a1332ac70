#include "symseq/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "symseq/error.hpp"

namespace symseq {

namespace {

// Fisher-Yates with raw bounded draws so shuffles do not depend on the
// standard library's distribution implementation.
void seeded_shuffle(std::vector<std::size_t>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

void check_class_range(const std::vector<int>& y, int class_count,
                       const char* what) {
  for (int label : y) {
    if (label < 0 || label >= class_count) {
      throw ValidationError(std::string(what) + " index " +
                            std::to_string(label) + " outside [0, " +
                            std::to_string(class_count) + ")");
    }
  }
}

}  // namespace

SplitIndices split(std::size_t n, const std::vector<int>& labels,
                   const SplitSpec& spec) {
  if (std::fabs(spec.train_frac + spec.val_frac + spec.test_frac - 1.0) >
      1e-9) {
    throw ValidationError("split fractions must sum to 1");
  }
  if (n < 4) {
    throw ValidationError("too few samples to split: need at least 4, got " +
                          std::to_string(n));
  }
  if (spec.stratified && labels.size() != n) {
    throw ValidationError("stratified split needs one label per sample");
  }

  std::mt19937_64 rng(spec.seed);
  SplitIndices out;

  if (!spec.stratified) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    seeded_shuffle(order, rng);

    const auto n_train =
        static_cast<std::size_t>(std::llround(static_cast<double>(n) * spec.train_frac));
    const auto n_val =
        static_cast<std::size_t>(std::llround(static_cast<double>(n) * spec.val_frac));
    if (n_train == 0 || n_val == 0 || n_train + n_val >= n) {
      throw ValidationError("too few samples: a split would be empty for n = " +
                            std::to_string(n));
    }
    out.train.assign(order.begin(), order.begin() + n_train);
    out.val.assign(order.begin() + n_train, order.begin() + n_train + n_val);
    out.test.assign(order.begin() + n_train + n_val, order.end());
  } else {
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < n; ++i) by_class[labels[i]].push_back(i);

    for (auto& [cls, members] : by_class) {
      seeded_shuffle(members, rng);
      const std::size_t m = members.size();
      if (m == 1) {
        out.train.push_back(members[0]);
        continue;
      }
      auto m_train = static_cast<std::size_t>(
          std::llround(static_cast<double>(m) * spec.train_frac));
      auto m_val = static_cast<std::size_t>(
          std::llround(static_cast<double>(m) * spec.val_frac));
      m_train = std::min(m_train, m);
      m_val = std::min(m_val, m - m_train);
      out.train.insert(out.train.end(), members.begin(),
                       members.begin() + m_train);
      out.val.insert(out.val.end(), members.begin() + m_train,
                     members.begin() + m_train + m_val);
      out.test.insert(out.test.end(), members.begin() + m_train + m_val,
                      members.end());
    }
    if (out.train.empty() || out.val.empty() || out.test.empty()) {
      throw ValidationError(
          "too few samples per class: a stratified split would be empty");
    }
  }

  std::sort(out.train.begin(), out.train.end());
  std::sort(out.val.begin(), out.val.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

std::array<double, 8> metric_values(const MetricRecord& record) {
  return {record.accuracy,  record.precision_weighted, record.recall_weighted,
          record.f1_weighted, record.f1_macro,         record.f1_micro,
          record.roc_auc_ovr_macro, record.train_runtime_seconds};
}

namespace {

// Mann-Whitney AUC from average ranks; ties contribute 1/2.
double binary_auc(const std::vector<double>& scores,
                  const std::vector<bool>& positive) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });

  std::vector<double> rank(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
    const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = avg_rank;
    i = j + 1;
  }

  double pos_rank_sum = 0.0;
  double n_pos = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (positive[k]) {
      pos_rank_sum += rank[k];
      n_pos += 1.0;
    }
  }
  const double n_neg = static_cast<double>(n) - n_pos;
  return (pos_rank_sum - n_pos * (n_pos + 1.0) / 2.0) / (n_pos * n_neg);
}

}  // namespace

MetricRecord metrics(const std::vector<int>& y_true,
                     const std::vector<int>& y_pred, const Matrix& proba,
                     int class_count) {
  const std::size_t n = y_true.size();
  if (n == 0) {
    throw ValidationError("metrics need at least one sample");
  }
  if (y_pred.size() != n) {
    throw ValidationError("prediction count does not match truth count");
  }
  if (proba.rows != n || proba.cols != static_cast<std::size_t>(class_count)) {
    throw ValidationError(
        "probability shape mismatch: expected " + std::to_string(n) + "x" +
        std::to_string(class_count) + ", got " + std::to_string(proba.rows) +
        "x" + std::to_string(proba.cols));
  }
  check_class_range(y_true, class_count, "class");
  check_class_range(y_pred, class_count, "prediction");

  const std::size_t c_count = static_cast<std::size_t>(class_count);
  std::vector<std::int64_t> confusion(c_count * c_count, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ++confusion[static_cast<std::size_t>(y_true[i]) * c_count +
                static_cast<std::size_t>(y_pred[i])];
  }

  MetricRecord out;
  std::int64_t correct = 0;
  std::int64_t pooled_tp = 0, pooled_fp = 0, pooled_fn = 0;
  double weighted_precision = 0.0, weighted_recall = 0.0, weighted_f1 = 0.0;
  double macro_f1 = 0.0;

  for (std::size_t c = 0; c < c_count; ++c) {
    const std::int64_t tp = confusion[c * c_count + c];
    std::int64_t support = 0, predicted = 0;
    for (std::size_t j = 0; j < c_count; ++j) {
      support += confusion[c * c_count + j];
      predicted += confusion[j * c_count + c];
    }
    const std::int64_t fn = support - tp;
    const std::int64_t fp = predicted - tp;
    correct += tp;
    pooled_tp += tp;
    pooled_fp += fp;
    pooled_fn += fn;

    const double precision =
        (tp + fp) > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    const double recall =
        (tp + fn) > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
    // 2TP / (2TP + FP + FN) = 2PR / (P + R); the count form keeps
    // f1_micro bit-equal to accuracy.
    const double f1 = (2 * tp + fp + fn) > 0
                          ? 2.0 * static_cast<double>(tp) /
                                static_cast<double>(2 * tp + fp + fn)
                          : 0.0;

    const double weight = static_cast<double>(support);
    weighted_precision += weight * precision;
    weighted_recall += weight * recall;
    weighted_f1 += weight * f1;
    macro_f1 += f1;
  }

  const double dn = static_cast<double>(n);
  out.accuracy = static_cast<double>(correct) / dn;
  out.precision_weighted = weighted_precision / dn;
  out.recall_weighted = weighted_recall / dn;
  out.f1_weighted = weighted_f1 / dn;
  out.f1_macro = macro_f1 / static_cast<double>(c_count);
  out.f1_micro = (2 * pooled_tp + pooled_fp + pooled_fn) > 0
                     ? 2.0 * static_cast<double>(pooled_tp) /
                           static_cast<double>(2 * pooled_tp + pooled_fp + pooled_fn)
                     : 0.0;

  double auc_sum = 0.0;
  int auc_classes = 0;
  std::vector<double> scores(n);
  std::vector<bool> positive(n);
  for (std::size_t c = 0; c < c_count; ++c) {
    std::size_t n_pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
      positive[i] = (static_cast<std::size_t>(y_true[i]) == c);
      if (positive[i]) ++n_pos;
      scores[i] = proba(i, c);
    }
    if (n_pos == 0 || n_pos == n) continue;  // AUC undefined for this class
    auc_sum += binary_auc(scores, positive);
    ++auc_classes;
  }
  out.roc_auc_ovr_macro = auc_classes > 0 ? auc_sum / auc_classes : 0.5;
  return out;
}

namespace {

MetricStats aggregate(const std::vector<double>& values) {
  MetricStats stats;
  const bool constant =
      std::all_of(values.begin(), values.end(),
                  [&](double v) { return v == values.front(); });
  if (constant) {
    // Exact zero SD for constant series, no rounding residue.
    stats.mean = values.front();
    stats.sd = 0.0;
    return stats;
  }
  const double n = static_cast<double>(values.size());
  stats.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) {
    const double diff = v - stats.mean;
    ss += diff * diff;
  }
  stats.sd = std::sqrt(ss / (n - 1.0));
  return stats;
}

std::vector<int> encode_labels(const std::vector<std::string>& labels,
                               std::vector<std::string>& class_index) {
  class_index = labels;
  std::sort(class_index.begin(), class_index.end());
  class_index.erase(std::unique(class_index.begin(), class_index.end()),
                    class_index.end());
  std::vector<int> y(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto it =
        std::lower_bound(class_index.begin(), class_index.end(), labels[i]);
    y[i] = static_cast<int>(it - class_index.begin());
  }
  return y;
}

std::vector<int> gather_labels(const std::vector<int>& y,
                               std::span<const std::size_t> indices) {
  std::vector<int> out;
  out.reserve(indices.size());
  for (std::size_t idx : indices) out.push_back(y[idx]);
  return out;
}

EvalReport run_protocol(
    std::size_t n, const std::vector<int>& y,
    std::vector<std::string> class_index,
    const std::vector<ClassifierConfig>& classifiers, int repetitions,
    std::uint64_t base_seed, const SplitSpec& split_template,
    const std::function<Matrix(const SplitIndices&)>& features_for) {
  if (repetitions < 1) {
    throw ValidationError("repetitions must be at least 1");
  }
  if (classifiers.empty()) {
    throw ValidationError("no classifiers configured");
  }
  const int class_count = static_cast<int>(class_index.size());

  EvalReport report;
  report.repetitions = repetitions;
  report.base_seed = base_seed;
  report.class_index = std::move(class_index);

  // per classifier, per metric, one value per repetition
  std::vector<std::array<std::vector<double>, 8>> values(classifiers.size());

  for (int r = 0; r < repetitions; ++r) {
    SplitSpec spec = split_template;
    spec.seed = base_seed + static_cast<std::uint64_t>(r);
    const SplitIndices indices = split(n, y, spec);
    const Matrix features = features_for(indices);

    const Matrix train_X = gather_rows(features, indices.train);
    const Matrix test_X = gather_rows(features, indices.test);
    const std::vector<int> train_y = gather_labels(y, indices.train);
    const std::vector<int> test_y = gather_labels(y, indices.test);
    // The validation split is held out; nothing is tuned on it.

    for (std::size_t ci = 0; ci < classifiers.size(); ++ci) {
      auto classifier = make_classifier(classifiers[ci]);
      const auto fit_start = std::chrono::steady_clock::now();
      classifier->fit(train_X, train_y, class_count);
      const auto fit_end = std::chrono::steady_clock::now();

      const Matrix proba = classifier->predict_proba(test_X);
      MetricRecord record = metrics(test_y, argmax_labels(proba), proba,
                                    class_count);
      record.train_runtime_seconds =
          std::chrono::duration<double>(fit_end - fit_start).count();

      const auto row = metric_values(record);
      for (std::size_t m = 0; m < row.size(); ++m) {
        values[ci][m].push_back(row[m]);
        report.runs.push_back(RunRecord{r, classifiers[ci].name(),
                                        std::string(kMetricNames[m]), row[m]});
      }
    }
  }

  for (std::size_t ci = 0; ci < classifiers.size(); ++ci) {
    ClassifierReport summary;
    summary.name = classifiers[ci].name();
    for (std::size_t m = 0; m < summary.stats.size(); ++m) {
      summary.stats[m] = aggregate(values[ci][m]);
    }
    report.classifiers.push_back(std::move(summary));
  }
  return report;
}

}  // namespace

EvalReport run_experiment(const Matrix& features,
                          const std::vector<std::string>& labels,
                          const std::vector<ClassifierConfig>& classifiers,
                          int repetitions, std::uint64_t base_seed,
                          const SplitSpec& split_template) {
  if (labels.size() != features.rows) {
    throw ValidationError("label count does not match feature rows");
  }
  std::vector<std::string> class_index;
  const std::vector<int> y = encode_labels(labels, class_index);
  return run_protocol(features.rows, y, std::move(class_index), classifiers,
                      repetitions, base_seed, split_template,
                      [&](const SplitIndices&) { return features; });
}

EvalReport run_experiment_refit(const TimeSeriesDataset& dataset,
                                const Alphabet& alphabet, int ksize,
                                const std::vector<ClassifierConfig>& classifiers,
                                int repetitions, std::uint64_t base_seed,
                                const SplitSpec& split_template) {
  validate_dataset(dataset);
  if (!dataset.labeled()) {
    throw ValidationError("evaluation requires a labeled dataset");
  }
  std::vector<std::string> class_index;
  const std::vector<int> y = encode_labels(dataset.labels, class_index);
  return run_protocol(
      dataset.signals.size(), y, std::move(class_index), classifiers,
      repetitions, base_seed, split_template, [&](const SplitIndices& idx) {
        std::vector<bool> mask(dataset.signals.size(), false);
        for (std::size_t i : idx.train) mask[i] = true;
        const EmbeddingResult result = generate_embedding(
            dataset, alphabet, ksize, FitScope::train_only, mask);
        return to_feature_matrix(result.embedding);
      });
}

namespace {

// Continued fraction for the regularized incomplete beta function
// (modified Lentz iteration).
double beta_continued_fraction(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 3e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const double m2 = 2.0 * m;
    double numer = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + numer * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + numer / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    numer = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + numer * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + numer / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return h;
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_beta = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_beta);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double sample_mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_variance(std::span<const double> v, double mean) {
  double ss = 0.0;
  for (double x : v) {
    const double diff = x - mean;
    ss += diff * diff;
  }
  return ss / (static_cast<double>(v.size()) - 1.0);
}

}  // namespace

double student_t_cdf(double x, double dof) {
  if (dof <= 0.0) {
    throw ValidationError("degrees of freedom must be positive");
  }
  const double tail =
      0.5 * regularized_incomplete_beta(dof / 2.0, 0.5, dof / (dof + x * x));
  return x >= 0.0 ? 1.0 - tail : tail;
}

TTestResult t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw ValidationError("t-test needs at least 2 values per sample");
  }
  TTestResult result;
  result.n_a = a.size();
  result.n_b = b.size();

  const double mean_a = sample_mean(a);
  const double mean_b = sample_mean(b);
  const double var_a = sample_variance(a, mean_a);
  const double var_b = sample_variance(b, mean_b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());

  if (var_a == 0.0 && var_b == 0.0) {
    result.df = na + nb - 2.0;
    if (mean_a == mean_b) {
      result.t = 0.0;
      result.p = 1.0;
    } else {
      result.t = mean_a > mean_b ? std::numeric_limits<double>::infinity()
                                 : -std::numeric_limits<double>::infinity();
      result.p = 0.0;
    }
    return result;
  }

  const double se_sq = var_a / na + var_b / nb;
  result.t = (mean_a - mean_b) / std::sqrt(se_sq);
  result.df = se_sq * se_sq /
              ((var_a / na) * (var_a / na) / (na - 1.0) +
               (var_b / nb) * (var_b / nb) / (nb - 1.0));
  // Two-sided p straight from the beta tail; avoids 1 - CDF cancellation.
  result.p = regularized_incomplete_beta(
      result.df / 2.0, 0.5, result.df / (result.df + result.t * result.t));
  return result;
}

}  // namespace symseq
