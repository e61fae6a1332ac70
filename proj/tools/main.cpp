#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "symseq/commands.hpp"
#include "symseq/error.hpp"

namespace {

struct CommonOptions {
  std::string input;
  std::string output;
  int alphabet_size = 26;
  int ksize = 3;
  std::string fit_scope = "all";
  int repetitions = 100;
  std::uint64_t seed = 42;
  std::string classifiers = "knn,logreg,gnb";
  bool stratified = false;
  int knn_k = 5;
  double learning_rate = 0.1;
  double l2 = 1e-3;
  int epochs = 500;
};

void add_io_options(CLI::App& cmd, CommonOptions& opts,
                    const char* output_help) {
  cmd.add_option("--input", opts.input, "Signals CSV to read")->required();
  cmd.add_option("--output", opts.output, output_help)->required();
}

void add_encoding_options(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--alphabet-size", opts.alphabet_size,
                 "Number of ranges / symbols (2-26)")
      ->capture_default_str();
}

void add_embedding_options(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--ksize", opts.ksize, "k-mer size")->capture_default_str();
  cmd.add_option("--fit-scope", opts.fit_scope,
                 "Fit ranges on all data or on each training split")
      ->check(CLI::IsMember({"all", "train"}))
      ->capture_default_str();
}

void add_eval_options(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--repetitions", opts.repetitions,
                 "Number of repeated splits")
      ->capture_default_str();
  cmd.add_option("--seed", opts.seed, "Base seed; run r uses seed + r")
      ->capture_default_str();
  cmd.add_option("--classifiers", opts.classifiers,
                 "Comma-separated list from: knn, logreg, gnb")
      ->capture_default_str();
  cmd.add_flag("--stratified", opts.stratified,
               "Stratify splits by class label");
  cmd.add_option("--knn-k", opts.knn_k, "Neighbor count for knn")
      ->capture_default_str();
  cmd.add_option("--lr", opts.learning_rate,
                 "Learning rate for logreg gradient descent")
      ->capture_default_str();
  cmd.add_option("--l2", opts.l2, "L2 penalty for logreg")
      ->capture_default_str();
  cmd.add_option("--epochs", opts.epochs, "Gradient descent epochs for logreg")
      ->capture_default_str();
}

symseq::RunConfig make_run_config(const CommonOptions& opts) {
  symseq::RunConfig config;
  config.alphabet_size = opts.alphabet_size;
  config.ksize = opts.ksize;
  config.fit_scope = opts.fit_scope == "train"
                         ? symseq::FitScope::train_only
                         : symseq::FitScope::all_data;
  config.repetitions = opts.repetitions;
  config.base_seed = opts.seed;
  config.split.stratified = opts.stratified;

  symseq::LogRegConfig logreg;
  logreg.learning_rate = opts.learning_rate;
  logreg.l2 = opts.l2;
  logreg.epochs = opts.epochs;
  config.classifiers = symseq::parse_classifier_list(
      opts.classifiers, opts.knn_k, logreg, symseq::GnbConfig{});
  return config;
}

void report_written(const std::vector<std::string>& paths) {
  for (const std::string& path : paths) {
    std::cout << "wrote " << path << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symseq: discretize numeric time series into letter sequences, embed "
      "them as k-mer count spectra, and classify them"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  CommonOptions opts;

  CLI::App* encode = app.add_subcommand(
      "encode", "Fit the range grid and write per-signal letter sequences");
  add_io_options(*encode, opts,
                 "Output prefix; writes <prefix>.bounds.json and "
                 "<prefix>.sequences.csv");
  add_encoding_options(*encode, opts);

  CLI::App* embed = app.add_subcommand(
      "embed", "Run the full pipeline and write sparse k-mer spectra");
  add_io_options(*embed, opts,
                 "Output prefix; writes <prefix>.spectrum.csv and "
                 "<prefix>.manifest.json");
  add_encoding_options(*embed, opts);
  add_embedding_options(*embed, opts);

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Embed, then score classifiers under repeated splits");
  add_io_options(*evaluate, opts,
                 "Output prefix; writes <prefix>.report.json and "
                 "<prefix>.runs.csv");
  add_encoding_options(*evaluate, opts);
  add_embedding_options(*evaluate, opts);
  add_eval_options(*evaluate, opts);

  symseq::SynthConfig synth_config;
  std::string synth_output;
  CLI::App* synth =
      app.add_subcommand("synth", "Write a synthetic labeled dataset");
  synth->add_option("--output", synth_output, "Signals CSV to write")
      ->required();
  synth->add_option("--classes", synth_config.classes, "Number of classes")
      ->capture_default_str();
  synth->add_option("--per-class", synth_config.signals_per_class,
                    "Signals per class")
      ->capture_default_str();
  synth->add_option("--length", synth_config.length, "Samples per signal")
      ->capture_default_str();
  synth->add_option("--seed", synth_config.seed, "Generator seed")
      ->capture_default_str();

  symseq::TTestArgs ttest_args;
  CLI::App* ttest = app.add_subcommand(
      "ttest", "Welch t-test between two per-run metric series");
  ttest->add_option("--input", ttest_args.input_a, "Per-run metrics CSV (a)")
      ->required();
  ttest->add_option("--input-b", ttest_args.input_b,
                    "Per-run metrics CSV (b); defaults to --input");
  ttest->add_option("--classifier", ttest_args.classifier_a,
                    "Classifier name for series a")
      ->required();
  ttest->add_option("--classifier-b", ttest_args.classifier_b,
                    "Classifier name for series b; defaults to --classifier");
  ttest->add_option("--metric", ttest_args.metric, "Metric name to compare")
      ->capture_default_str();
  ttest->add_option("--output", ttest_args.output_json,
                    "Optional JSON file for the test result");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*encode) {
      report_written(
          symseq::cmd_encode(make_run_config(opts), opts.input, opts.output,
                             std::cerr));
    } else if (*embed) {
      report_written(
          symseq::cmd_embed(make_run_config(opts), opts.input, opts.output,
                            std::cerr));
    } else if (*evaluate) {
      report_written(
          symseq::cmd_evaluate(make_run_config(opts), opts.input, opts.output,
                               std::cerr));
    } else if (*synth) {
      report_written(symseq::cmd_synth(synth_config, synth_output));
    } else if (*ttest) {
      symseq::cmd_ttest(ttest_args, std::cout);
    }
  } catch (const symseq::DegenerateRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
