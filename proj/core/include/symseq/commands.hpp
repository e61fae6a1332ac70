#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "symseq/classify.hpp"
#include "symseq/eval.hpp"
#include "symseq/spectrum.hpp"
#include "symseq/synth.hpp"

namespace symseq {

// The default classifier lineup: knn, logreg, gnb with stock hyperparameters.
std::vector<ClassifierConfig> default_classifiers();

// Shared configuration for the pipeline commands.
struct RunConfig {
  int alphabet_size = 26;
  int ksize = 3;
  FitScope fit_scope = FitScope::all_data;
  SplitSpec split;  // fractions + stratified flag; seed is taken per run
  int repetitions = 100;
  std::uint64_t base_seed = 42;
  std::vector<ClassifierConfig> classifiers = default_classifiers();

  // Throws ValidationError when a field is out of its documented range.
  void validate() const;
};

// Parses "knn,logreg,gnb"-style lists, attaching the given hyperparameters
// to each entry. Rejects unknown and duplicate names.
std::vector<ClassifierConfig> parse_classifier_list(const std::string& csv,
                                                    int knn_k,
                                                    const LogRegConfig& logreg,
                                                    const GnbConfig& gnb);

// Each command returns the list of files it wrote, in write order.
// `diagnostics` receives human-readable warnings (e.g. signals shorter
// than k); commands never write warnings to their data files.

// Fits the global range grid and writes <prefix>.bounds.json plus
// <prefix>.sequences.csv.
std::vector<std::string> cmd_encode(const RunConfig& config,
                                    const std::string& input_path,
                                    const std::string& output_prefix,
                                    std::ostream& diagnostics);

// Runs the full embedding pipeline and writes <prefix>.spectrum.csv plus
// <prefix>.manifest.json.
std::vector<std::string> cmd_embed(const RunConfig& config,
                                   const std::string& input_path,
                                   const std::string& output_prefix,
                                   std::ostream& diagnostics);

// Embeds, then evaluates every configured classifier under the repeated
// split protocol; writes <prefix>.report.json plus <prefix>.runs.csv.
std::vector<std::string> cmd_evaluate(const RunConfig& config,
                                      const std::string& input_path,
                                      const std::string& output_prefix,
                                      std::ostream& diagnostics);

// Writes a synthetic labeled dataset to `output_path` (exact path).
std::vector<std::string> cmd_synth(const SynthConfig& config,
                                   const std::string& output_path);

struct TTestArgs {
  std::string input_a;
  std::string input_b;        // defaults to input_a when empty
  std::string classifier_a;
  std::string classifier_b;   // defaults to classifier_a when empty
  std::string metric = "accuracy";
  std::string output_json;    // optional; no file written when empty
};

// Welch t-test between two per-run metric series; prints a summary to `out`
// and optionally writes a JSON record.
TTestResult cmd_ttest(const TTestArgs& args, std::ostream& out);

}  // namespace symseq
