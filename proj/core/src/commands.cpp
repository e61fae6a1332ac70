#include "symseq/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "symseq/encode.hpp"
#include "symseq/error.hpp"
#include "symseq/io.hpp"
#include "symseq/matrix.hpp"
#include "symseq/ranges.hpp"

namespace symseq {

namespace {

void warn_short_signals(const TimeSeriesDataset& dataset, int ksize,
                        std::ostream& diagnostics) {
  for (const Signal& signal : dataset.signals) {
    if (signal.values.size() < static_cast<std::size_t>(ksize)) {
      diagnostics << "warning: signal \"" << signal.id << "\" has "
                  << signal.values.size() << " samples, shorter than k = "
                  << ksize << "; its spectrum is all zeros\n";
    }
  }
}

double series_mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

std::vector<ClassifierConfig> default_classifiers() {
  std::vector<ClassifierConfig> out(3);
  out[0].kind = ClassifierConfig::Kind::knn;
  out[1].kind = ClassifierConfig::Kind::logreg;
  out[2].kind = ClassifierConfig::Kind::gnb;
  return out;
}

void RunConfig::validate() const {
  if (alphabet_size < 2 || alphabet_size > 26) {
    throw ValidationError("alphabet size must be between 2 and 26, got " +
                          std::to_string(alphabet_size));
  }
  if (ksize < 1) {
    throw ValidationError("k must be at least 1, got " + std::to_string(ksize));
  }
  if (repetitions < 1) {
    throw ValidationError("repetitions must be at least 1, got " +
                          std::to_string(repetitions));
  }
  if (std::fabs(split.train_frac + split.val_frac + split.test_frac - 1.0) >
      1e-9) {
    throw ValidationError("split fractions must sum to 1");
  }
  if (split.train_frac <= 0.0 || split.val_frac <= 0.0 ||
      split.test_frac <= 0.0) {
    throw ValidationError("split fractions must all be positive");
  }
  if (classifiers.empty()) {
    throw ValidationError("no classifiers configured");
  }
}

std::vector<ClassifierConfig> parse_classifier_list(const std::string& csv,
                                                    int knn_k,
                                                    const LogRegConfig& logreg,
                                                    const GnbConfig& gnb) {
  std::vector<ClassifierConfig> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) comma = csv.size();
    const std::string name = csv.substr(start, comma - start);
    ClassifierConfig config = ClassifierConfig::from_name(name);
    config.knn_k = knn_k;
    config.logreg = logreg;
    config.gnb = gnb;
    for (const ClassifierConfig& existing : out) {
      if (existing.kind == config.kind) {
        throw ValidationError("classifier \"" + name +
                              "\" listed more than once");
      }
    }
    out.push_back(config);
    if (comma == csv.size()) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> cmd_encode(const RunConfig& config,
                                    const std::string& input_path,
                                    const std::string& output_prefix,
                                    std::ostream& diagnostics) {
  (void)diagnostics;
  config.validate();
  const TimeSeriesDataset dataset = load_dataset(input_path);
  const Alphabet alphabet = Alphabet::latin(config.alphabet_size);
  const RangeBounds bounds =
      compute_ranges(flatten(dataset), alphabet.size());

  std::vector<SymbolicSequence> sequences;
  sequences.reserve(dataset.signals.size());
  for (const Signal& signal : dataset.signals) {
    sequences.push_back(map_signal(signal, bounds, alphabet));
  }

  const std::string bounds_path = output_prefix + ".bounds.json";
  const std::string sequences_path = output_prefix + ".sequences.csv";
  save_bounds(bounds, alphabet, bounds_path);
  save_sequences(sequences, sequences_path);
  return {bounds_path, sequences_path};
}

std::vector<std::string> cmd_embed(const RunConfig& config,
                                   const std::string& input_path,
                                   const std::string& output_prefix,
                                   std::ostream& diagnostics) {
  config.validate();
  if (config.fit_scope == FitScope::train_only) {
    throw ValidationError(
        "fit scope \"train\" needs a train/test split and is only available "
        "under evaluate");
  }
  const TimeSeriesDataset dataset = load_dataset(input_path);
  warn_short_signals(dataset, config.ksize, diagnostics);

  const Alphabet alphabet = Alphabet::latin(config.alphabet_size);
  const EmbeddingResult result =
      generate_embedding(dataset, alphabet, config.ksize, FitScope::all_data);

  std::vector<std::size_t> sequence_lengths;
  sequence_lengths.reserve(result.embedding.rows.size());
  for (const KmerSpectrum& row : result.embedding.rows) {
    sequence_lengths.push_back(row.sequence_length);
  }

  const std::string csv_path = output_prefix + ".spectrum.csv";
  const std::string manifest_path = output_prefix + ".manifest.json";
  save_spectrum(result.embedding, result.bounds, alphabet, config.ksize,
                sequence_lengths, csv_path, manifest_path);
  return {csv_path, manifest_path};
}

std::vector<std::string> cmd_evaluate(const RunConfig& config,
                                      const std::string& input_path,
                                      const std::string& output_prefix,
                                      std::ostream& diagnostics) {
  config.validate();
  const TimeSeriesDataset dataset = load_dataset(input_path);
  if (!dataset.labeled()) {
    throw ValidationError("evaluation requires a labeled dataset");
  }
  warn_short_signals(dataset, config.ksize, diagnostics);

  const Alphabet alphabet = Alphabet::latin(config.alphabet_size);
  EvalReport report;
  if (config.fit_scope == FitScope::all_data) {
    const EmbeddingResult result = generate_embedding(
        dataset, alphabet, config.ksize, FitScope::all_data);
    report = run_experiment(to_feature_matrix(result.embedding),
                            dataset.labels, config.classifiers,
                            config.repetitions, config.base_seed, config.split);
  } else {
    report = run_experiment_refit(dataset, alphabet, config.ksize,
                                  config.classifiers, config.repetitions,
                                  config.base_seed, config.split);
  }

  const std::string report_path = output_prefix + ".report.json";
  const std::string runs_path = output_prefix + ".runs.csv";
  save_report(report, report_path);
  save_runs_csv(report, runs_path);
  return {report_path, runs_path};
}

std::vector<std::string> cmd_synth(const SynthConfig& config,
                                   const std::string& output_path) {
  save_dataset(make_synthetic_dataset(config), output_path);
  return {output_path};
}

TTestResult cmd_ttest(const TTestArgs& args, std::ostream& out) {
  const std::string input_b = args.input_b.empty() ? args.input_a : args.input_b;
  const std::string classifier_b =
      args.classifier_b.empty() ? args.classifier_a : args.classifier_b;

  const std::vector<double> a =
      load_metric_series(args.input_a, args.classifier_a, args.metric);
  const std::vector<double> b =
      load_metric_series(input_b, classifier_b, args.metric);
  const TTestResult result = t_test(a, b);
  const double mean_a = series_mean(a);
  const double mean_b = series_mean(b);

  out << "metric: " << args.metric << "\n"
      << "a: " << args.classifier_a << " in " << args.input_a
      << " (n = " << result.n_a << ", mean = " << format_double(mean_a)
      << ")\n"
      << "b: " << classifier_b << " in " << input_b << " (n = " << result.n_b
      << ", mean = " << format_double(mean_b) << ")\n"
      << "t = " << format_double(result.t) << ", df = "
      << format_double(result.df) << ", p = " << format_double(result.p)
      << "\n";

  if (!args.output_json.empty()) {
    nlohmann::ordered_json doc;
    doc["metric"] = args.metric;
    doc["classifier_a"] = args.classifier_a;
    doc["classifier_b"] = classifier_b;
    doc["n_a"] = result.n_a;
    doc["n_b"] = result.n_b;
    doc["mean_a"] = mean_a;
    doc["mean_b"] = mean_b;
    doc["t"] = result.t;
    doc["df"] = result.df;
    doc["p"] = result.p;
    std::ofstream file(args.output_json, std::ios::binary);
    if (!file.is_open()) {
      throw Error("cannot open file for writing: " + args.output_json);
    }
    file << doc.dump(2) << "\n";
  }
  return result;
}

}  // namespace symseq
