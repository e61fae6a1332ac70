#include "symseq/matrix.hpp"

#include "symseq/error.hpp"

namespace symseq {

Matrix to_feature_matrix(const EmbeddingMatrix& embedding) {
  Matrix out(embedding.rows.size(), embedding.dim);
  for (std::size_t r = 0; r < embedding.rows.size(); ++r) {
    const auto& counts = embedding.rows[r].counts;
    if (counts.size() != embedding.dim) {
      throw ValidationError("spectrum row " + std::to_string(r) +
                            " has wrong dimension");
    }
    for (std::size_t c = 0; c < embedding.dim; ++c) {
      out(r, c) = static_cast<double>(counts[c]);
    }
  }
  return out;
}

Matrix gather_rows(const Matrix& source, std::span<const std::size_t> indices) {
  Matrix out(indices.size(), source.cols);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] >= source.rows) {
      throw ValidationError("row index " + std::to_string(indices[r]) +
                            " out of range");
    }
    auto src = source.row(indices[r]);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

}  // namespace symseq
