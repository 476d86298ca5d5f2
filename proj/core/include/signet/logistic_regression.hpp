#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "signet/features.hpp"
#include "signet/graph.hpp"

namespace signet {

struct FitOptions {
  double l2_strength = 1e-4;      // on the mean log-loss; bias unregularized
  double tolerance = 1e-6;        // stop when the gradient max-norm drops below
  std::size_t max_iterations = 5000;
  std::uint64_t seed = 0;         // used only when noisy_init is set
  bool noisy_init = false;        // start from small seeded noise instead of zero
  int threads = 1;
};

struct FitInfo {
  std::size_t iterations = 0;
  double final_objective = 0.0;
  double gradient_max_norm = 0.0;
  bool converged = false;
};

/// Logistic-regression weights plus the frozen standardization transform.
/// predict_proba(f) = sigmoid(w . standardize(f) + bias).
struct TrainedModel {
  std::vector<std::string> feature_manifest;
  std::vector<double> means;
  std::vector<double> scales;  // always > 0; constant columns get 1
  std::vector<double> weights;
  double bias = 0.0;
  double l2_strength = 0.0;
  FitInfo training;
};

/// Fits by deterministic full-batch gradient descent with backtracking line
/// search on the L2-regularized mean negative log-likelihood. Columns are
/// standardized to zero mean and unit variance first (constant columns get
/// scale 1) and the transform is frozen into the model. Labels are 1 for a
/// positive edge, 0 for a negative edge.
///
/// Throws std::invalid_argument on an empty matrix, a label/row count
/// mismatch, non-binary labels, or non-finite feature values.
TrainedModel fit(FeatureMatrix features, std::span<const int> labels, const FitOptions& opts = {});

/// Probability that the edge with this (raw, unstandardized) feature row is
/// positive. Throws std::invalid_argument on a dimension mismatch or
/// non-finite input.
double predict_proba(const TrainedModel& m, std::span<const double> row);

/// Positive iff predict_proba >= threshold.
Sign predict_sign(const TrainedModel& m, std::span<const double> row, double threshold = 0.5);

/// Versioned JSON serialization; decimal round-trip reproduces every weight
/// bit-exactly.
void save_model(const TrainedModel& m, std::ostream& out);
void save_model_file(const TrainedModel& m, const std::filesystem::path& path);
TrainedModel load_model(std::istream& in);
TrainedModel load_model_file(const std::filesystem::path& path);

}  // namespace signet
