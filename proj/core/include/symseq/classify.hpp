#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "symseq/matrix.hpp"

namespace symseq {

/// Hard labels plus a per-row probability distribution over classes.
/// Rows of `proba` are non-negative and sum to 1; `labels[i]` is the
/// argmax of row i with ties broken toward the lowest class index.
struct Prediction {
  std::vector<int> labels;
  Matrix proba;
};

/// Argmax per probability row, ties broken toward the lowest class index.
std::vector<int> argmax_labels(const Matrix& proba);

/// k-nearest-neighbour classification with Euclidean distance on raw
/// features. Probability of class c is the fraction of the k nearest
/// training rows labeled c; distance ties break toward the lower
/// training-row index.
Prediction knn_fit_predict(const Matrix& train_X, const std::vector<int>& train_y,
                           const Matrix& test_X, int k_neighbors,
                           int class_count);

struct LogRegConfig {
  double l2 = 1e-3;
  double learning_rate = 0.1;
  int epochs = 500;
  std::uint64_t seed = 0;  // reserved; full-batch training has no randomness
};

/// Mean cross-entropy of a multinomial softmax model plus
/// (l2/2) * ||W||^2 over the non-intercept rows. X is n x d; W is
/// (d+1) x class_count with the last row acting as the intercept.
double logreg_loss(const Matrix& X, const std::vector<int>& y, const Matrix& W,
                   int class_count, double l2);

/// Gradient of logreg_loss with respect to W, same shape as W.
Matrix logreg_gradient(const Matrix& X, const std::vector<int>& y,
                       const Matrix& W, int class_count, double l2);

/// Multinomial logistic regression trained by full-batch gradient
/// descent from zero-initialized weights. Features are standardized per
/// column with training mean/std; a column with zero variance is passed
/// through as 0 and its weight never moves.
class LogRegModel {
 public:
  Matrix predict_proba(const Matrix& X) const;
  std::vector<int> predict(const Matrix& X) const;

  int class_count() const { return class_count_; }
  /// Loss after each epoch, loss_trace()[0] being the initial loss.
  const std::vector<double>& loss_trace() const { return loss_trace_; }

 private:
  friend LogRegModel logreg_fit(const Matrix&, const std::vector<int>&, int,
                                const LogRegConfig&);

  int class_count_ = 0;
  std::vector<double> mean_;
  std::vector<double> std_;
  std::vector<std::size_t> active_;  // columns with nonzero training std
  Matrix weights_;                   // (|active_| + 1) x class_count
  std::vector<double> loss_trace_;
};

LogRegModel logreg_fit(const Matrix& train_X, const std::vector<int>& train_y,
                       int class_count, const LogRegConfig& config = {});

struct GnbConfig {
  double var_smoothing = 1e-9;
};

/// Gaussian naive Bayes: per-class, per-feature normal likelihoods with
/// empirical priors, accumulated in log space. Variances are floored at
/// var_smoothing times the largest per-feature variance of the training
/// data.
class GnbModel {
 public:
  Matrix predict_proba(const Matrix& X) const;
  std::vector<int> predict(const Matrix& X) const;

 private:
  friend GnbModel gnb_fit(const Matrix&, const std::vector<int>&, int,
                          const GnbConfig&);

  int class_count_ = 0;
  std::vector<double> log_priors_;  // -inf for classes absent from training
  Matrix means_;                    // class_count x d
  Matrix variances_;                // class_count x d, floored
};

GnbModel gnb_fit(const Matrix& train_X, const std::vector<int>& train_y,
                 int class_count, const GnbConfig& config = {});

Prediction gnb_fit_predict(const Matrix& train_X, const std::vector<int>& train_y,
                           const Matrix& test_X, int class_count,
                           const GnbConfig& config = {});

/// Uniform interface over the built-in classifiers, used by the
/// evaluation protocol.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual std::string_view name() const = 0;
  virtual void fit(const Matrix& X, const std::vector<int>& y,
                   int class_count) = 0;
  virtual Matrix predict_proba(const Matrix& X) const = 0;
  std::vector<int> predict(const Matrix& X) const {
    return argmax_labels(predict_proba(X));
  }
};

struct ClassifierConfig {
  enum class Kind { knn, logreg, gnb };

  Kind kind = Kind::knn;
  int knn_k = 5;
  LogRegConfig logreg;
  GnbConfig gnb;

  std::string name() const;
  /// Parses "knn", "logreg" or "gnb"; hyperparameters stay at defaults.
  static ClassifierConfig from_name(std::string_view name);
};

std::unique_ptr<Classifier> make_classifier(const ClassifierConfig& config);

}  // namespace symseq
