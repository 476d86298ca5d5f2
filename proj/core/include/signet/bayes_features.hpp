#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "signet/graph.hpp"
#include "signet/node_types.hpp"

namespace signet {

/// A Bernoulli prior over edge signs. positive + negative == 1.
struct SignPrior {
  double positive = 0.5;
  double negative = 0.5;

  static SignPrior from_positive(double p) { return {p, 1.0 - p}; }
};

/// Fraction of positive signs over the observed edges of the whole graph.
/// Throws GraphError when the graph has no observed-sign edge.
SignPrior global_sign_prior(const SignedDigraph& g);

/// Edge-sign ratios blending observed counts with prior-weighted hidden
/// counts: in_pos = (d_in_pos + P(+)u) / (d_in_pos + d_in_neg + u + eps),
/// eps = 1e-10, and correspondingly for the other three.
struct BayesNodeProperties {
  double in_pos = 0.0;
  double in_neg = 0.0;
  double out_pos = 0.0;
  double out_neg = 0.0;
};

BayesNodeProperties bayes_node_properties(const DegreeTally& tally, const SignPrior& global);

/// Distribution over the four EdgeClass values, indexed by EdgeClass.
struct ClassDistribution {
  std::array<double, 4> p{0.0, 0.0, 0.0, 0.0};

  double operator[](EdgeClass c) const { return p[static_cast<std::size_t>(c)]; }
  double& operator[](EdgeClass c) { return p[static_cast<std::size_t>(c)]; }
};

/// Class of one node side after k hidden edges take independent Bernoulli(q)
/// signs, given the side's observed class:
///   None  -> All+: q+^k, All-: q-^k, Mixed: remainder
///   All+  -> All+: q+^k, Mixed: remainder
///   All-  -> All-: q-^k, Mixed: remainder
///   Mixed -> Mixed
/// k = 0 is a point mass on the observed class.
ClassDistribution class_distribution(EdgeClass observed, std::uint32_t hidden_count,
                                     const SignPrior& q);

/// Probability distribution over the 16 node types; index i holds type i+1.
using TypeDistribution = std::array<double, 16>;

/// Outer product of the incoming and outgoing class distributions mapped
/// through the canonical (in, out) -> type bijection.
TypeDistribution bayes_type_distribution(const DegreeTally& tally, const SignPrior& in_prior,
                                         const SignPrior& out_prior);

/// Node-local incoming sign prior: the Bayesian property pair (in_pos, in_neg)
/// renormalized to sum 1. Falls back to the global prior when the node has no
/// incoming edges at all.
SignPrior incoming_sign_prior(const DegreeTally& tally, const SignPrior& global);
SignPrior outgoing_sign_prior(const DegreeTally& tally, const SignPrior& global);

/// Bayesian node type with the node-local priors derived from `global`.
TypeDistribution node_type_distribution(const DegreeTally& tally, const SignPrior& global);

std::array<double, 32> encode_concat(const TypeDistribution& vx, const TypeDistribution& vy);

/// Entry (i-1)*16 + (j-1) holds vx_i * vy_j.
std::array<double, 256> encode_kronecker(const TypeDistribution& vx, const TypeDistribution& vy);

enum class TypeEncoding : std::uint8_t {
  Concat,     // 32-d
  Kronecker,  // 256-d
};

inline std::size_t encoding_dimension(TypeEncoding e) {
  return e == TypeEncoding::Concat ? 32 : 256;
}

/// Copies of `tally` with one hidden edge revealed as `sign`.
DegreeTally reveal_hidden_out(const DegreeTally& tally, Sign sign);
DegreeTally reveal_hidden_in(const DegreeTally& tally, Sign sign);

/// Type-interaction features of the edge x->y, written to out[0..dim).
///
/// For an observed edge this encodes the two endpoint type distributions as
/// they stand. For a hidden edge the two sign hypotheses are encoded
/// separately - in each, the edge counts as observed with that sign in x's
/// out-tally and y's in-tally - and combined as P(+)*feat+ + P(-)*feat-.
/// Throws GraphError when the edge is absent.
void edge_type_features(const SignedDigraph& g, NodeId x, NodeId y, const SignPrior& global,
                        TypeEncoding encoding, std::span<double> out);

std::vector<double> edge_type_features(const SignedDigraph& g, NodeId x, NodeId y,
                                       const SignPrior& global, TypeEncoding encoding);

/// [bayes_node_properties(x) || bayes_node_properties(y)].
std::array<double, 8> edge_property_features(const SignedDigraph& g, NodeId x, NodeId y,
                                             const SignPrior& global);

}  // namespace signet
