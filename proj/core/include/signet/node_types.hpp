#pragma once

#include <array>
#include <cstdint>

#include "signet/graph.hpp"

namespace signet {

/// Classification of one side (incoming or outgoing) of a node by the signs
/// of its observed edges.
enum class EdgeClass : std::uint8_t {
  None = 0,         // no edges on that side
  AllPositive = 1,  // >=1 edge, all positive
  AllNegative = 2,  // >=1 edge, all negative
  Mixed = 3,        // at least one positive and one negative
};

const char* to_string(EdgeClass c);

inline EdgeClass edge_class(std::uint32_t pos, std::uint32_t neg) {
  if (pos == 0 && neg == 0) return EdgeClass::None;
  if (neg == 0) return EdgeClass::AllPositive;
  if (pos == 0) return EdgeClass::AllNegative;
  return EdgeClass::Mixed;
}

/// One of the 16 node types, defined by the (incoming, outgoing) class pair.
///
/// Canonical numbering, fixed project-wide:
///   N1=(None,All+)  N2=(None,All-)  N3=(None,Mixed)  N4=(All+,None)
///   N5=(All-,None)  N6=(Mixed,None) N7=(All-,All-)   N8=(All+,All+)
///   N9=(All+,All-)  N10=(All-,All+) N11=(Mixed,All-) N12=(Mixed,All+)
///   N13=(All+,Mixed) N14=(All-,Mixed) N15=(Mixed,Mixed) N16=(None,None)
class NodeType {
 public:
  explicit NodeType(int id);
  static NodeType of(EdgeClass incoming, EdgeClass outgoing);

  int id() const { return id_; }
  EdgeClass incoming() const;
  EdgeClass outgoing() const;

  friend bool operator==(NodeType, NodeType) = default;

 private:
  int id_;
};

/// Type from observed-sign counts; hidden edges are excluded from sign
/// classes. With include_hidden (diagnostics only) a side carrying nothing
/// but hidden edges classifies as Mixed instead of None.
NodeType classify_node(const DegreeTally& tally, bool include_hidden = false);

/// The four edge-sign ratios of a node over its observed edges.
struct NodeProperties {
  double in_pos = 0.0;
  double in_neg = 0.0;
  double out_pos = 0.0;
  double out_neg = 0.0;
};

/// Ratios d/(d_pos+d_neg+eps) with eps = 1e-10; both incoming ratios are 0
/// exactly when the node has no observed incoming edges (likewise outgoing).
NodeProperties node_properties(const DegreeTally& tally);

/// 16-d indicator vector, 1 at index id-1.
std::array<double, 16> type_onehot(NodeType t);

/// What the type pair of an edge's endpoints says about the edge's sign.
enum class SignConstraint : std::uint8_t {
  MustPositive,
  MustNegative,
  Undetermined,
  Forbidden,  // source and target classes contradict; no such edge can exist
};

const char* to_string(SignConstraint c);

/// Sign logic of a directed edge source -> target from the source's outgoing
/// class and the target's incoming class.
SignConstraint interaction_sign(NodeType source, NodeType target);

struct DeterminedCensus {
  std::uint64_t must_positive = 0;
  std::uint64_t must_negative = 0;
  std::uint64_t undetermined = 0;
  std::uint64_t forbidden = 0;  // diagnostic; zero on any consistent graph

  std::uint64_t determined() const { return must_positive + must_negative; }
};

/// Classifies every edge by interaction_sign of its endpoint types, with
/// types computed from the full graph. Requires a fully observed graph.
DeterminedCensus census_determined(const SignedDigraph& g);

/// Fraction of nodes of each type (index i holds type i+1).
std::array<double, 16> type_fractions(const SignedDigraph& g);

}  // namespace signet
