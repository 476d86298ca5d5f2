#include "signet/bayes_features.hpp"

#include <algorithm>
#include <cmath>

namespace signet {

namespace {

constexpr double kEpsilon = 1e-10;

// q^k, exact repeated multiplication for small k.
double pow_count(double q, std::uint32_t k) {
  if (k == 0) return 1.0;
  if (q == 0.0) return 0.0;
  if (k <= 64) {
    double r = 1.0;
    for (std::uint32_t i = 0; i < k; ++i) r *= q;
    return r;
  }
  return std::exp(static_cast<double>(k) * std::log(q));
}

}  // namespace

SignPrior global_sign_prior(const SignedDigraph& g) {
  const std::size_t observed = g.observed_count();
  if (observed == 0) throw GraphError("graph has no observed-sign edges");
  return SignPrior::from_positive(static_cast<double>(g.positive_count()) /
                                  static_cast<double>(observed));
}

BayesNodeProperties bayes_node_properties(const DegreeTally& tally, const SignPrior& global) {
  const double u = tally.in_hidden;
  const double v = tally.out_hidden;
  const double in_den = tally.in_pos + tally.in_neg + u + kEpsilon;
  const double out_den = tally.out_pos + tally.out_neg + v + kEpsilon;
  return {
      (tally.in_pos + global.positive * u) / in_den,
      (tally.in_neg + global.negative * u) / in_den,
      (tally.out_pos + global.positive * v) / out_den,
      (tally.out_neg + global.negative * v) / out_den,
  };
}

ClassDistribution class_distribution(EdgeClass observed, std::uint32_t hidden_count,
                                     const SignPrior& q) {
  ClassDistribution dist;
  if (hidden_count == 0) {
    dist[observed] = 1.0;
    return dist;
  }
  const double all_pos = pow_count(q.positive, hidden_count);
  const double all_neg = pow_count(q.negative, hidden_count);
  switch (observed) {
    case EdgeClass::None:
      dist[EdgeClass::AllPositive] = all_pos;
      dist[EdgeClass::AllNegative] = all_neg;
      dist[EdgeClass::Mixed] = std::max(0.0, 1.0 - all_pos - all_neg);
      break;
    case EdgeClass::AllPositive:
      dist[EdgeClass::AllPositive] = all_pos;
      dist[EdgeClass::Mixed] = 1.0 - all_pos;
      break;
    case EdgeClass::AllNegative:
      dist[EdgeClass::AllNegative] = all_neg;
      dist[EdgeClass::Mixed] = 1.0 - all_neg;
      break;
    case EdgeClass::Mixed:
      dist[EdgeClass::Mixed] = 1.0;
      break;
  }
  return dist;
}

TypeDistribution bayes_type_distribution(const DegreeTally& tally, const SignPrior& in_prior,
                                         const SignPrior& out_prior) {
  const ClassDistribution in_dist =
      class_distribution(edge_class(tally.in_pos, tally.in_neg), tally.in_hidden, in_prior);
  const ClassDistribution out_dist =
      class_distribution(edge_class(tally.out_pos, tally.out_neg), tally.out_hidden, out_prior);

  TypeDistribution types{};
  constexpr EdgeClass kClasses[4] = {EdgeClass::None, EdgeClass::AllPositive,
                                     EdgeClass::AllNegative, EdgeClass::Mixed};
  for (EdgeClass in : kClasses) {
    const double pi = in_dist[in];
    if (pi == 0.0) continue;
    for (EdgeClass out : kClasses) {
      const double po = out_dist[out];
      if (po == 0.0) continue;
      types[NodeType::of(in, out).id() - 1] = pi * po;
    }
  }
  return types;
}

SignPrior incoming_sign_prior(const DegreeTally& tally, const SignPrior& global) {
  if (tally.in_total() == 0) return global;
  const BayesNodeProperties props = bayes_node_properties(tally, global);
  const double sum = props.in_pos + props.in_neg;
  return SignPrior::from_positive(props.in_pos / sum);
}

SignPrior outgoing_sign_prior(const DegreeTally& tally, const SignPrior& global) {
  if (tally.out_total() == 0) return global;
  const BayesNodeProperties props = bayes_node_properties(tally, global);
  const double sum = props.out_pos + props.out_neg;
  return SignPrior::from_positive(props.out_pos / sum);
}

TypeDistribution node_type_distribution(const DegreeTally& tally, const SignPrior& global) {
  return bayes_type_distribution(tally, incoming_sign_prior(tally, global),
                                 outgoing_sign_prior(tally, global));
}

std::array<double, 32> encode_concat(const TypeDistribution& vx, const TypeDistribution& vy) {
  std::array<double, 32> out;
  std::copy(vx.begin(), vx.end(), out.begin());
  std::copy(vy.begin(), vy.end(), out.begin() + 16);
  return out;
}

std::array<double, 256> encode_kronecker(const TypeDistribution& vx, const TypeDistribution& vy) {
  std::array<double, 256> out;
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) out[i * 16 + j] = vx[i] * vy[j];
  return out;
}

DegreeTally reveal_hidden_out(const DegreeTally& tally, Sign sign) {
  if (tally.out_hidden == 0) throw GraphError("no hidden outgoing edge to reveal");
  DegreeTally t = tally;
  --t.out_hidden;
  if (sign == Sign::Positive)
    ++t.out_pos;
  else if (sign == Sign::Negative)
    ++t.out_neg;
  else
    throw std::invalid_argument("revealed sign must be +1 or -1");
  return t;
}

DegreeTally reveal_hidden_in(const DegreeTally& tally, Sign sign) {
  if (tally.in_hidden == 0) throw GraphError("no hidden incoming edge to reveal");
  DegreeTally t = tally;
  --t.in_hidden;
  if (sign == Sign::Positive)
    ++t.in_pos;
  else if (sign == Sign::Negative)
    ++t.in_neg;
  else
    throw std::invalid_argument("revealed sign must be +1 or -1");
  return t;
}

namespace {

void encode_into(TypeEncoding encoding, const TypeDistribution& vx, const TypeDistribution& vy,
                 double weight, std::span<double> out) {
  if (encoding == TypeEncoding::Concat) {
    for (std::size_t i = 0; i < 16; ++i) {
      out[i] += weight * vx[i];
      out[16 + i] += weight * vy[i];
    }
  } else {
    for (std::size_t i = 0; i < 16; ++i) {
      if (vx[i] == 0.0) continue;
      const double wx = weight * vx[i];
      double* row = out.data() + i * 16;
      for (std::size_t j = 0; j < 16; ++j) row[j] += wx * vy[j];
    }
  }
}

}  // namespace

void edge_type_features(const SignedDigraph& g, NodeId x, NodeId y, const SignPrior& global,
                        TypeEncoding encoding, std::span<double> out) {
  const auto edge = g.find_edge(x, y);
  if (!edge) {
    throw GraphError("edge " + std::to_string(x) + " -> " + std::to_string(y) +
                     " is not in the graph");
  }
  if (out.size() != encoding_dimension(encoding))
    throw std::invalid_argument("output span has the wrong dimension");
  std::fill(out.begin(), out.end(), 0.0);

  const Sign sign = g.edge_sign(*edge);
  if (sign != Sign::Hidden) {
    encode_into(encoding, node_type_distribution(g.tally(x), global),
                node_type_distribution(g.tally(y), global), 1.0, out);
    return;
  }

  // Hidden edge: mix the two sign hypotheses with the global prior. Under
  // each hypothesis the edge counts as observed in both endpoint tallies.
  for (Sign hyp : {Sign::Positive, Sign::Negative}) {
    const double weight = hyp == Sign::Positive ? global.positive : global.negative;
    const DegreeTally tx = reveal_hidden_out(g.tally(x), hyp);
    const DegreeTally ty = reveal_hidden_in(g.tally(y), hyp);
    encode_into(encoding, node_type_distribution(tx, global),
                node_type_distribution(ty, global), weight, out);
  }
}

std::vector<double> edge_type_features(const SignedDigraph& g, NodeId x, NodeId y,
                                       const SignPrior& global, TypeEncoding encoding) {
  std::vector<double> out(encoding_dimension(encoding));
  edge_type_features(g, x, y, global, encoding, out);
  return out;
}

std::array<double, 8> edge_property_features(const SignedDigraph& g, NodeId x, NodeId y,
                                             const SignPrior& global) {
  const BayesNodeProperties px = bayes_node_properties(g.tally(x), global);
  const BayesNodeProperties py = bayes_node_properties(g.tally(y), global);
  return {px.in_pos, px.in_neg, px.out_pos, px.out_neg,
          py.in_pos, py.in_neg, py.out_pos, py.out_neg};
}

}  // namespace signet
