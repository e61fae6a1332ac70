#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symseq/spectrum.hpp"

namespace symseq {

/// Dense row-major matrix of doubles. Small enough for this library's
/// feature matrices; no linear-algebra package needed.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }

  std::span<double> row(std::size_t r) {
    return std::span<double>(data).subspan(r * cols, cols);
  }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data).subspan(r * cols, cols);
  }
};

/// Spectrum counts as a dense rows x dim feature matrix.
Matrix to_feature_matrix(const EmbeddingMatrix& embedding);

/// Copies the selected rows, preserving index order.
Matrix gather_rows(const Matrix& source, std::span<const std::size_t> indices);

}  // namespace symseq
