#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signet/features.hpp"
#include "signet/graph.hpp"
#include "signet/logistic_regression.hpp"
#include "signet/node_types.hpp"

namespace signet {

struct ExperimentOptions {
  double fraction = 0.1;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  FitOptions fit;
  int threads = 1;
  bool with_curve = false;
  std::vector<std::uint32_t> curve_levels = default_curve_levels();
  bool with_confusion = true;

  static std::vector<std::uint32_t> default_curve_levels();  // 0..25
};

struct ConfusionCounts {
  std::uint64_t true_positive = 0;
  std::uint64_t true_negative = 0;
  std::uint64_t false_positive = 0;
  std::uint64_t false_negative = 0;
};

struct RepeatResult {
  std::uint64_t seed = 0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  double accuracy = 0.0;
  double test_positive_fraction = 0.0;  // accuracy of the all-positive predictor
  FitInfo fit;
  std::optional<ConfusionCounts> confusion;
};

struct CurvePoint {
  std::uint32_t min_embeddedness = 0;
  std::uint64_t n_test = 0;  // pooled over repeats
  double accuracy = 0.0;
  bool low_support = false;  // fewer than 50 pooled test edges
};

struct ExperimentReport {
  std::string dataset;
  std::string train_dataset;  // differs from dataset only for cross-dataset runs
  std::string recipe;
  double fraction = 0.1;
  std::size_t repeats = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<RepeatResult> per_repeat;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;  // sample standard deviation over repeats
  double mean_baseline = 0.0;
  std::vector<CurvePoint> curve;  // empty unless requested
  double runtime_seconds = 0.0;
};

/// One (embeddedness, correctness) record per evaluated test edge.
struct EdgeOutcome {
  std::uint32_t embeddedness = 0;
  bool correct = false;
};

/// Per repeat: mask `fraction` of g's edges with the repeat's seed, extract
/// recipe features for observed (train) and hidden (test) edges, fit, and
/// score accuracy against the held-out signs. Requires a fully observed g.
ExperimentReport run_holdout_experiment(const SignedDigraph& g, const FeatureRecipe& recipe,
                                        const ExperimentOptions& opts = {},
                                        const std::string& dataset_name = "");

/// Accuracy restricted to outcomes with embeddedness >= level, per level.
/// Levels must be sorted ascending.
std::vector<CurvePoint> embeddedness_curve(std::span<const EdgeOutcome> outcomes,
                                           std::span<const std::uint32_t> levels);

/// Trains on train_g (masked per repeat, its own prior and standardization)
/// and evaluates on test_g's hidden edges, whose features use test_g's own
/// graph-derived priors but the trained standardization. Requires both
/// graphs fully observed.
ExperimentReport cross_dataset(const SignedDigraph& train_g, const SignedDigraph& test_g,
                               const FeatureRecipe& recipe, const ExperimentOptions& opts = {},
                               const std::string& train_name = "",
                               const std::string& test_name = "");

struct DatasetStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t positive_edges = 0;
  std::size_t negative_edges = 0;
  std::size_t hidden_edges = 0;
  double positive_fraction = 0.0;  // over observed edges
  double zero_embeddedness_fraction = 0.0;
  std::array<double, 16> type_fraction{};
  std::optional<DeterminedCensus> census;  // only for fully observed graphs
};

DatasetStats dataset_stats(const SignedDigraph& g, int threads = 1);

/// Report serialization. JSON key order and number formatting are fixed, so
/// identical runs produce byte-identical output; timing is included only on
/// request since it is the one non-reproducible field.
std::string report_to_json(const ExperimentReport& r, bool include_timing = false);
std::string report_to_text(const ExperimentReport& r);

std::string stats_to_json(const DatasetStats& s);
std::string stats_to_text(const DatasetStats& s);
/// 16-row `type_id,fraction` table.
std::string stats_to_csv(const DatasetStats& s);

/// CSV `min_embeddedness,n_test,accuracy,low_support`.
std::string curve_to_csv(std::span<const CurvePoint> curve);

}  // namespace signet
