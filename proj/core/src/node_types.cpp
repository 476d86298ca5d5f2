#include "signet/node_types.hpp"

namespace signet {

namespace {

constexpr double kEpsilon = 1e-10;

// (incoming, outgoing) class pair of each type, index = id - 1.
constexpr EdgeClass kIncoming[16] = {
    EdgeClass::None,        EdgeClass::None,        EdgeClass::None,        EdgeClass::AllPositive,
    EdgeClass::AllNegative, EdgeClass::Mixed,       EdgeClass::AllNegative, EdgeClass::AllPositive,
    EdgeClass::AllPositive, EdgeClass::AllNegative, EdgeClass::Mixed,       EdgeClass::Mixed,
    EdgeClass::AllPositive, EdgeClass::AllNegative, EdgeClass::Mixed,       EdgeClass::None,
};
constexpr EdgeClass kOutgoing[16] = {
    EdgeClass::AllPositive, EdgeClass::AllNegative, EdgeClass::Mixed,       EdgeClass::None,
    EdgeClass::None,        EdgeClass::None,        EdgeClass::AllNegative, EdgeClass::AllPositive,
    EdgeClass::AllNegative, EdgeClass::AllPositive, EdgeClass::AllNegative, EdgeClass::AllPositive,
    EdgeClass::Mixed,       EdgeClass::Mixed,       EdgeClass::Mixed,       EdgeClass::None,
};

// id_table[incoming][outgoing], EdgeClass order: None, All+, All-, Mixed.
constexpr int kIdTable[4][4] = {
    {16, 1, 2, 3},
    {4, 8, 9, 13},
    {5, 10, 7, 14},
    {6, 12, 11, 15},
};

}  // namespace

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::None: return "none";
    case EdgeClass::AllPositive: return "all+";
    case EdgeClass::AllNegative: return "all-";
    case EdgeClass::Mixed: return "mixed";
  }
  return "?";
}

NodeType::NodeType(int id) : id_(id) {
  if (id < 1 || id > 16) throw std::invalid_argument("node type id must be in 1..16");
}

NodeType NodeType::of(EdgeClass incoming, EdgeClass outgoing) {
  return NodeType(
      kIdTable[static_cast<std::size_t>(incoming)][static_cast<std::size_t>(outgoing)]);
}

EdgeClass NodeType::incoming() const { return kIncoming[id_ - 1]; }
EdgeClass NodeType::outgoing() const { return kOutgoing[id_ - 1]; }

NodeType classify_node(const DegreeTally& tally, bool include_hidden) {
  EdgeClass in = edge_class(tally.in_pos, tally.in_neg);
  EdgeClass out = edge_class(tally.out_pos, tally.out_neg);
  if (include_hidden) {
    if (in == EdgeClass::None && tally.in_hidden > 0) in = EdgeClass::Mixed;
    if (out == EdgeClass::None && tally.out_hidden > 0) out = EdgeClass::Mixed;
  }
  return NodeType::of(in, out);
}

NodeProperties node_properties(const DegreeTally& tally) {
  const double in_den = tally.in_pos + tally.in_neg + kEpsilon;
  const double out_den = tally.out_pos + tally.out_neg + kEpsilon;
  return {tally.in_pos / in_den, tally.in_neg / in_den, tally.out_pos / out_den,
          tally.out_neg / out_den};
}

std::array<double, 16> type_onehot(NodeType t) {
  std::array<double, 16> v{};
  v[t.id() - 1] = 1.0;
  return v;
}

const char* to_string(SignConstraint c) {
  switch (c) {
    case SignConstraint::MustPositive: return "+";
    case SignConstraint::MustNegative: return "-";
    case SignConstraint::Undetermined: return "?";
    case SignConstraint::Forbidden: return "forbidden";
  }
  return "?";
}

SignConstraint interaction_sign(NodeType source, NodeType target) {
  const EdgeClass s = source.outgoing();
  const EdgeClass t = target.incoming();
  if (s == EdgeClass::None || t == EdgeClass::None) return SignConstraint::Forbidden;
  if ((s == EdgeClass::AllPositive && t == EdgeClass::AllNegative) ||
      (s == EdgeClass::AllNegative && t == EdgeClass::AllPositive))
    return SignConstraint::Forbidden;
  if (s == EdgeClass::AllPositive || t == EdgeClass::AllPositive)
    return SignConstraint::MustPositive;
  if (s == EdgeClass::AllNegative || t == EdgeClass::AllNegative)
    return SignConstraint::MustNegative;
  return SignConstraint::Undetermined;
}

DeterminedCensus census_determined(const SignedDigraph& g) {
  if (!g.fully_observed())
    throw GraphError("determined-edge census requires a fully observed graph");
  std::vector<NodeType> types;
  types.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) types.push_back(classify_node(g.tally(v)));

  DeterminedCensus census;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    switch (interaction_sign(types[g.edge_source(e)], types[g.edge_target(e)])) {
      case SignConstraint::MustPositive: ++census.must_positive; break;
      case SignConstraint::MustNegative: ++census.must_negative; break;
      case SignConstraint::Undetermined: ++census.undetermined; break;
      case SignConstraint::Forbidden: ++census.forbidden; break;
    }
  }
  return census;
}

std::array<double, 16> type_fractions(const SignedDigraph& g) {
  std::array<double, 16> fractions{};
  if (g.node_count() == 0) return fractions;
  for (NodeId v = 0; v < g.node_count(); ++v)
    fractions[classify_node(g.tally(v)).id() - 1] += 1.0;
  for (double& f : fractions) f /= static_cast<double>(g.node_count());
  return fractions;
}

}  // namespace signet
