#include "symseq/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "symseq/error.hpp"

namespace symseq {

namespace {

void check_labels(const std::vector<int>& y, int class_count) {
  for (int label : y) {
    if (label < 0 || label >= class_count) {
      throw ValidationError("class index " + std::to_string(label) +
                            " outside [0, " + std::to_string(class_count) + ")");
    }
  }
}

int distinct_class_count(const std::vector<int>& y, int class_count) {
  std::vector<bool> seen(static_cast<std::size_t>(class_count), false);
  int distinct = 0;
  for (int label : y) {
    if (!seen[static_cast<std::size_t>(label)]) {
      seen[static_cast<std::size_t>(label)] = true;
      ++distinct;
    }
  }
  return distinct;
}

struct LossGrad {
  double loss = 0.0;
  Matrix grad;
};

// One fused forward/backward pass of the softmax objective. W holds one
// row per feature plus a final intercept row; l2 applies to the feature
// rows only.
LossGrad softmax_loss_grad(const Matrix& X, const std::vector<int>& y,
                           const Matrix& W, int class_count, double l2) {
  const std::size_t n = X.rows;
  const std::size_t d = X.cols;
  const std::size_t c_count = static_cast<std::size_t>(class_count);
  if (W.rows != d + 1 || W.cols != c_count) {
    throw ValidationError("weight matrix must be (features + 1) x classes");
  }
  if (y.size() != n) {
    throw ValidationError("label count does not match feature rows");
  }
  check_labels(y, class_count);

  LossGrad out;
  out.grad = Matrix(d + 1, c_count);
  std::vector<double> logits(c_count);
  std::vector<double> residual(c_count);

  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = X.row(i);
    for (std::size_t c = 0; c < c_count; ++c) logits[c] = W(d, c);
    for (std::size_t j = 0; j < d; ++j) {
      const double xj = xi[j];
      if (xj == 0.0) continue;
      for (std::size_t c = 0; c < c_count; ++c) logits[c] += xj * W(j, c);
    }

    const double m = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (std::size_t c = 0; c < c_count; ++c) {
      residual[c] = std::exp(logits[c] - m);
      sum += residual[c];
    }
    const std::size_t yi = static_cast<std::size_t>(y[i]);
    out.loss += (m + std::log(sum)) - logits[yi];

    for (std::size_t c = 0; c < c_count; ++c) {
      residual[c] = residual[c] / sum - (c == yi ? 1.0 : 0.0);
    }
    for (std::size_t j = 0; j < d; ++j) {
      const double xj = xi[j];
      if (xj == 0.0) continue;
      for (std::size_t c = 0; c < c_count; ++c) {
        out.grad(j, c) += xj * residual[c];
      }
    }
    for (std::size_t c = 0; c < c_count; ++c) out.grad(d, c) += residual[c];
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  out.loss *= inv_n;
  for (double& g : out.grad.data) g *= inv_n;

  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t c = 0; c < c_count; ++c) {
      out.loss += 0.5 * l2 * W(j, c) * W(j, c);
      out.grad(j, c) += l2 * W(j, c);
    }
  }
  return out;
}

Matrix softmax_proba(const Matrix& X, const Matrix& W, int class_count) {
  const std::size_t d = X.cols;
  const std::size_t c_count = static_cast<std::size_t>(class_count);
  Matrix proba(X.rows, c_count);
  std::vector<double> logits(c_count);
  for (std::size_t i = 0; i < X.rows; ++i) {
    const auto xi = X.row(i);
    for (std::size_t c = 0; c < c_count; ++c) logits[c] = W(d, c);
    for (std::size_t j = 0; j < d; ++j) {
      const double xj = xi[j];
      if (xj == 0.0) continue;
      for (std::size_t c = 0; c < c_count; ++c) logits[c] += xj * W(j, c);
    }
    const double m = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (std::size_t c = 0; c < c_count; ++c) {
      logits[c] = std::exp(logits[c] - m);
      sum += logits[c];
    }
    for (std::size_t c = 0; c < c_count; ++c) proba(i, c) = logits[c] / sum;
  }
  return proba;
}

}  // namespace

std::vector<int> argmax_labels(const Matrix& proba) {
  std::vector<int> labels(proba.rows);
  for (std::size_t i = 0; i < proba.rows; ++i) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < proba.cols; ++c) {
      if (proba(i, c) > proba(i, best)) best = c;
    }
    labels[i] = static_cast<int>(best);
  }
  return labels;
}

Prediction knn_fit_predict(const Matrix& train_X, const std::vector<int>& train_y,
                           const Matrix& test_X, int k_neighbors,
                           int class_count) {
  if (train_X.rows == 0) {
    throw ValidationError("empty training set");
  }
  if (train_X.rows != train_y.size()) {
    throw ValidationError("training label count does not match rows");
  }
  if (train_X.cols != test_X.cols) {
    throw ValidationError("dimension mismatch: train has " +
                          std::to_string(train_X.cols) + " columns, test has " +
                          std::to_string(test_X.cols));
  }
  if (k_neighbors < 1 || static_cast<std::size_t>(k_neighbors) > train_X.rows) {
    throw ValidationError("k_neighbors must be in [1, " +
                          std::to_string(train_X.rows) + "], got " +
                          std::to_string(k_neighbors));
  }
  check_labels(train_y, class_count);

  const std::size_t k = static_cast<std::size_t>(k_neighbors);
  Prediction out;
  out.proba = Matrix(test_X.rows, static_cast<std::size_t>(class_count));

  std::vector<std::pair<double, std::size_t>> dists(train_X.rows);
  for (std::size_t i = 0; i < test_X.rows; ++i) {
    const auto ti = test_X.row(i);
    for (std::size_t j = 0; j < train_X.rows; ++j) {
      const auto tj = train_X.row(j);
      double sq = 0.0;
      for (std::size_t f = 0; f < test_X.cols; ++f) {
        const double diff = ti[f] - tj[f];
        sq += diff * diff;
      }
      dists[j] = {sq, j};
    }
    // Pair ordering resolves equal distances toward the lower row index.
    std::partial_sort(dists.begin(), dists.begin() + k, dists.end());
    for (std::size_t j = 0; j < k; ++j) {
      out.proba(i, static_cast<std::size_t>(train_y[dists[j].second])) +=
          1.0 / static_cast<double>(k);
    }
  }
  out.labels = argmax_labels(out.proba);
  return out;
}

double logreg_loss(const Matrix& X, const std::vector<int>& y, const Matrix& W,
                   int class_count, double l2) {
  return softmax_loss_grad(X, y, W, class_count, l2).loss;
}

Matrix logreg_gradient(const Matrix& X, const std::vector<int>& y,
                       const Matrix& W, int class_count, double l2) {
  return softmax_loss_grad(X, y, W, class_count, l2).grad;
}

namespace {

// Standardized copy of the active (nonzero-std) columns.
Matrix standardize_active(const Matrix& X, const std::vector<double>& mean,
                          const std::vector<double>& std_dev,
                          const std::vector<std::size_t>& active) {
  Matrix out(X.rows, active.size());
  for (std::size_t i = 0; i < X.rows; ++i) {
    const auto xi = X.row(i);
    for (std::size_t a = 0; a < active.size(); ++a) {
      const std::size_t j = active[a];
      out(i, a) = (xi[j] - mean[j]) / std_dev[j];
    }
  }
  return out;
}

}  // namespace

LogRegModel logreg_fit(const Matrix& train_X, const std::vector<int>& train_y,
                       int class_count, const LogRegConfig& config) {
  if (train_X.rows == 0) {
    throw ValidationError("empty training set");
  }
  if (train_X.rows != train_y.size()) {
    throw ValidationError("training label count does not match rows");
  }
  check_labels(train_y, class_count);
  if (distinct_class_count(train_y, class_count) < 2) {
    throw ValidationError("training labels contain a single class");
  }
  if (config.epochs < 0) {
    throw ValidationError("epochs must be non-negative");
  }

  LogRegModel model;
  model.class_count_ = class_count;
  const std::size_t d = train_X.cols;
  const double n = static_cast<double>(train_X.rows);

  model.mean_.assign(d, 0.0);
  model.std_.assign(d, 0.0);
  for (std::size_t i = 0; i < train_X.rows; ++i) {
    const auto xi = train_X.row(i);
    for (std::size_t j = 0; j < d; ++j) model.mean_[j] += xi[j];
  }
  for (std::size_t j = 0; j < d; ++j) model.mean_[j] /= n;
  for (std::size_t i = 0; i < train_X.rows; ++i) {
    const auto xi = train_X.row(i);
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = xi[j] - model.mean_[j];
      model.std_[j] += diff * diff;
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    model.std_[j] = std::sqrt(model.std_[j] / n);
    if (model.std_[j] > 0.0) model.active_.push_back(j);
  }

  // Constant columns standardize to 0 everywhere, so their gradient is
  // identically zero and their weights would stay at 0; training runs on
  // the active columns only.
  const Matrix Xs =
      standardize_active(train_X, model.mean_, model.std_, model.active_);
  model.weights_ = Matrix(model.active_.size() + 1,
                          static_cast<std::size_t>(class_count));

  model.loss_trace_.reserve(static_cast<std::size_t>(config.epochs) + 1);
  LossGrad step =
      softmax_loss_grad(Xs, train_y, model.weights_, class_count, config.l2);
  model.loss_trace_.push_back(step.loss);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t idx = 0; idx < model.weights_.data.size(); ++idx) {
      model.weights_.data[idx] -= config.learning_rate * step.grad.data[idx];
    }
    step =
        softmax_loss_grad(Xs, train_y, model.weights_, class_count, config.l2);
    model.loss_trace_.push_back(step.loss);
  }
  return model;
}

Matrix LogRegModel::predict_proba(const Matrix& X) const {
  if (X.cols != mean_.size()) {
    throw ValidationError("dimension mismatch: model expects " +
                          std::to_string(mean_.size()) + " features, got " +
                          std::to_string(X.cols));
  }
  const Matrix Xs = standardize_active(X, mean_, std_, active_);
  return softmax_proba(Xs, weights_, class_count_);
}

std::vector<int> LogRegModel::predict(const Matrix& X) const {
  return argmax_labels(predict_proba(X));
}

GnbModel gnb_fit(const Matrix& train_X, const std::vector<int>& train_y,
                 int class_count, const GnbConfig& config) {
  if (train_X.rows == 0) {
    throw ValidationError("empty training set");
  }
  if (train_X.rows != train_y.size()) {
    throw ValidationError("training label count does not match rows");
  }
  check_labels(train_y, class_count);
  if (distinct_class_count(train_y, class_count) < 2) {
    throw ValidationError("training labels contain a single class");
  }

  const std::size_t d = train_X.cols;
  const std::size_t c_count = static_cast<std::size_t>(class_count);
  const double n = static_cast<double>(train_X.rows);

  GnbModel model;
  model.class_count_ = class_count;
  model.means_ = Matrix(c_count, d);
  model.variances_ = Matrix(c_count, d);
  model.log_priors_.assign(c_count, -std::numeric_limits<double>::infinity());

  std::vector<double> class_sizes(c_count, 0.0);
  for (int label : train_y) class_sizes[static_cast<std::size_t>(label)] += 1.0;

  for (std::size_t i = 0; i < train_X.rows; ++i) {
    const auto xi = train_X.row(i);
    const std::size_t c = static_cast<std::size_t>(train_y[i]);
    for (std::size_t j = 0; j < d; ++j) model.means_(c, j) += xi[j];
  }
  for (std::size_t c = 0; c < c_count; ++c) {
    if (class_sizes[c] == 0.0) continue;
    for (std::size_t j = 0; j < d; ++j) model.means_(c, j) /= class_sizes[c];
  }
  for (std::size_t i = 0; i < train_X.rows; ++i) {
    const auto xi = train_X.row(i);
    const std::size_t c = static_cast<std::size_t>(train_y[i]);
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = xi[j] - model.means_(c, j);
      model.variances_(c, j) += diff * diff;
    }
  }

  // Smoothing scale comes from the pooled per-feature variance so the
  // floor tracks the data's magnitude.
  double max_var = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < train_X.rows; ++i) mean += train_X(i, j);
    mean /= n;
    double var = 0.0;
    for (std::size_t i = 0; i < train_X.rows; ++i) {
      const double diff = train_X(i, j) - mean;
      var += diff * diff;
    }
    max_var = std::max(max_var, var / n);
  }
  double floor = config.var_smoothing * max_var;
  if (floor <= 0.0) floor = config.var_smoothing;

  for (std::size_t c = 0; c < c_count; ++c) {
    if (class_sizes[c] == 0.0) {
      for (std::size_t j = 0; j < d; ++j) model.variances_(c, j) = floor;
      continue;
    }
    model.log_priors_[c] = std::log(class_sizes[c] / n);
    for (std::size_t j = 0; j < d; ++j) {
      model.variances_(c, j) =
          std::max(model.variances_(c, j) / class_sizes[c], floor);
    }
  }
  return model;
}

Matrix GnbModel::predict_proba(const Matrix& X) const {
  if (X.cols != means_.cols) {
    throw ValidationError("dimension mismatch: model expects " +
                          std::to_string(means_.cols) + " features, got " +
                          std::to_string(X.cols));
  }
  const std::size_t c_count = static_cast<std::size_t>(class_count_);
  Matrix proba(X.rows, c_count);
  std::vector<double> joint(c_count);
  constexpr double kLogTwoPi = 1.8378770664093453;

  for (std::size_t i = 0; i < X.rows; ++i) {
    const auto xi = X.row(i);
    for (std::size_t c = 0; c < c_count; ++c) {
      double ll = log_priors_[c];
      if (std::isfinite(ll)) {
        for (std::size_t j = 0; j < X.cols; ++j) {
          const double var = variances_(c, j);
          const double diff = xi[j] - means_(c, j);
          ll += -0.5 * (kLogTwoPi + std::log(var)) - diff * diff / (2.0 * var);
        }
      }
      joint[c] = ll;
    }
    const double m = *std::max_element(joint.begin(), joint.end());
    double sum = 0.0;
    for (std::size_t c = 0; c < c_count; ++c) {
      joint[c] = std::exp(joint[c] - m);
      sum += joint[c];
    }
    for (std::size_t c = 0; c < c_count; ++c) proba(i, c) = joint[c] / sum;
  }
  return proba;
}

std::vector<int> GnbModel::predict(const Matrix& X) const {
  return argmax_labels(predict_proba(X));
}

Prediction gnb_fit_predict(const Matrix& train_X, const std::vector<int>& train_y,
                           const Matrix& test_X, int class_count,
                           const GnbConfig& config) {
  const GnbModel model = gnb_fit(train_X, train_y, class_count, config);
  Prediction out;
  out.proba = model.predict_proba(test_X);
  out.labels = argmax_labels(out.proba);
  return out;
}

namespace {

class KnnClassifier final : public Classifier {
 public:
  explicit KnnClassifier(int k) : k_(k) {}
  std::string_view name() const override { return "knn"; }
  void fit(const Matrix& X, const std::vector<int>& y, int class_count) override {
    train_X_ = X;
    train_y_ = y;
    class_count_ = class_count;
  }
  Matrix predict_proba(const Matrix& X) const override {
    return knn_fit_predict(train_X_, train_y_, X, k_, class_count_).proba;
  }

 private:
  int k_;
  Matrix train_X_;
  std::vector<int> train_y_;
  int class_count_ = 0;
};

class LogRegClassifier final : public Classifier {
 public:
  explicit LogRegClassifier(const LogRegConfig& config) : config_(config) {}
  std::string_view name() const override { return "logreg"; }
  void fit(const Matrix& X, const std::vector<int>& y, int class_count) override {
    model_ = logreg_fit(X, y, class_count, config_);
  }
  Matrix predict_proba(const Matrix& X) const override {
    return model_.predict_proba(X);
  }

 private:
  LogRegConfig config_;
  LogRegModel model_;
};

class GnbClassifier final : public Classifier {
 public:
  explicit GnbClassifier(const GnbConfig& config) : config_(config) {}
  std::string_view name() const override { return "gnb"; }
  void fit(const Matrix& X, const std::vector<int>& y, int class_count) override {
    model_ = gnb_fit(X, y, class_count, config_);
  }
  Matrix predict_proba(const Matrix& X) const override {
    return model_.predict_proba(X);
  }

 private:
  GnbConfig config_;
  GnbModel model_;
};

}  // namespace

std::string ClassifierConfig::name() const {
  switch (kind) {
    case Kind::knn:
      return "knn";
    case Kind::logreg:
      return "logreg";
    case Kind::gnb:
      return "gnb";
  }
  return "unknown";
}

ClassifierConfig ClassifierConfig::from_name(std::string_view name) {
  ClassifierConfig config;
  if (name == "knn") {
    config.kind = Kind::knn;
  } else if (name == "logreg") {
    config.kind = Kind::logreg;
  } else if (name == "gnb") {
    config.kind = Kind::gnb;
  } else {
    throw ValidationError("unknown classifier '" + std::string(name) +
                          "' (expected knn, logreg or gnb)");
  }
  return config;
}

std::unique_ptr<Classifier> make_classifier(const ClassifierConfig& config) {
  switch (config.kind) {
    case ClassifierConfig::Kind::knn:
      return std::make_unique<KnnClassifier>(config.knn_k);
    case ClassifierConfig::Kind::logreg:
      return std::make_unique<LogRegClassifier>(config.logreg);
    case ClassifierConfig::Kind::gnb:
      return std::make_unique<GnbClassifier>(config.gnb);
  }
  throw ValidationError("unknown classifier kind");
}

}  // namespace symseq
