#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "psphdc/hv.hpp"
#include "psphdc/matrix.hpp"

namespace psphdc {

// Per-parameter min/max scaling statistics. Fitted exclusively from the
// training rows of a split; test rows outside the fitted range are clipped,
// never refitted.
struct ScalerStats {
  std::vector<double> x_min;
  std::vector<double> x_max;
  double epsilon = 1e-8;
  // Parameters with x_min == x_max. Every value of such a column scales to
  // -1; callers should surface the warning to the user.
  std::vector<std::size_t> constant_params;

  std::size_t param_count() const { return x_min.size(); }
};

// Fit over train rows only. Throws DataError on an empty train set and
// std::invalid_argument on epsilon <= 0.
ScalerStats fit_scaler(const Matrix& X, std::span<const std::size_t> train_idx,
                       double epsilon);

// x_hat = (x - min) / (max - min + eps); returns 2 * clip01(x_hat) - 1.
// Out-of-range test values saturate at the nearest extremum.
double scale_value(double x, const ScalerStats& stats, std::size_t j);

// Scale every cell of X into [-1, 1] using fitted stats (column j uses
// stats for parameter j). X must have stats.param_count() columns.
Matrix scale_matrix(const Matrix& X, const ScalerStats& stats);

// Trainable per-parameter embeddings, P rows of length d, row-major.
struct EmbeddingSet {
  std::size_t P = 0;
  std::size_t d = 0;
  std::vector<double> values;

  // i.i.d. normal(0, 1/sqrt(d)) from the pinned generator; keeps the
  // initial pre-activations of the projection inside tanh's responsive
  // region.
  static EmbeddingSet init(std::uint64_t seed, std::size_t P, std::size_t d);

  std::span<double> row(std::size_t j) { return {values.data() + j * d, d}; }
  std::span<const double> row(std::size_t j) const {
    return {values.data() + j * d, d};
  }
};

// Parameter hypervector for a scaled scalar: tanh((x_tilde * e_j)^T B).
// Odd in x_tilde; exactly zero at x_tilde = 0.
Hypervector encode_parameter(double x_tilde, std::span<const double> e_j,
                             const RandomBasis& basis);

}  // namespace psphdc
