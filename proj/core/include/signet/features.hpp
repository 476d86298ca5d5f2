#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "signet/bayes_features.hpp"
#include "signet/graph.hpp"

namespace signet {

enum class FeatureFamily : std::uint8_t {
  Bntc,    // Bayesian node-type concatenation, 32-d
  Bntk,    // Bayesian node-type Kronecker product, 256-d
  Bnp,     // Bayesian node properties, 8-d
  Triad,   // directed triad counts, 16-d
  Degree,  // degree features, 7-d
};

std::size_t family_dimension(FeatureFamily f);
std::string_view family_name(FeatureFamily f);

/// Ordered, non-empty set of feature families; concatenation defines the
/// design matrix. Bntc and Bntk never appear together.
struct FeatureRecipe {
  std::vector<FeatureFamily> families;

  /// Parses "bntk+bnp+triad" (case-insensitive tokens joined by '+').
  /// Throws std::invalid_argument on unknown tokens, duplicates, an empty
  /// recipe, or a recipe naming both bntc and bntk.
  static FeatureRecipe parse(std::string_view text);

  std::size_t dimension() const;
  std::vector<std::string> column_names() const;
  std::string name() const;
  bool has(FeatureFamily f) const;
};

/// Dense row-major matrix of per-edge features with named columns.
struct FeatureMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
  std::vector<std::string> columns;

  std::span<const double> row(std::size_t i) const { return {values.data() + i * cols, cols}; }
  std::span<double> row(std::size_t i) { return {values.data() + i * cols, cols}; }
};

/// Per-node quantities shared by all edges of one (partially observed) graph:
/// the global sign prior, Bayesian type distributions, and Bayesian node
/// properties. Build once per graph, then extract per-edge rows in parallel.
struct NodeFeatureCache {
  SignPrior global;
  std::vector<TypeDistribution> types;
  std::vector<BayesNodeProperties> properties;

  NodeFeatureCache() = default;
  explicit NodeFeatureCache(const SignedDigraph& g, int threads = 1);
};

/// Feature rows for the given edges, families in recipe order. Rows are
/// written independently, so results do not depend on the thread count.
FeatureMatrix extract_features(const SignedDigraph& g, std::span<const EdgeId> edges,
                               const FeatureRecipe& recipe, const NodeFeatureCache& cache,
                               int threads = 1);

/// All edge ids whose sign is observed / hidden, ascending.
std::vector<EdgeId> observed_edge_ids(const SignedDigraph& g);
std::vector<EdgeId> hidden_edge_ids(const SignedDigraph& g);

}  // namespace signet
