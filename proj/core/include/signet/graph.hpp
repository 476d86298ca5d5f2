#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace signet {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Sign of a directed edge. Hidden means the edge is known to exist but its
/// sign is masked.
enum class Sign : std::int8_t {
  Negative = -1,
  Hidden = 0,
  Positive = 1,
};

inline const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "-1";
    case Sign::Hidden: return "?";
    case Sign::Positive: return "1";
  }
  return "?";
}

/// Per-node edge counts split by direction, observed sign, and hidden status.
struct DegreeTally {
  std::uint32_t in_pos = 0;
  std::uint32_t in_neg = 0;
  std::uint32_t in_hidden = 0;   // u: unobserved incoming edges
  std::uint32_t out_pos = 0;
  std::uint32_t out_neg = 0;
  std::uint32_t out_hidden = 0;  // v: unobserved outgoing edges

  std::uint32_t in_total() const { return in_pos + in_neg + in_hidden; }
  std::uint32_t out_total() const { return out_pos + out_neg + out_hidden; }

  friend bool operator==(const DegreeTally&, const DegreeTally&) = default;
};

class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// Immutable signed directed graph with dense node ids 0..n-1.
///
/// Node ids are remapped densely at construction; the original ids are kept
/// for I/O. Adjacency is CSR with segments sorted by neighbor id, so edge
/// lookup is a binary search and neighbor-set intersection is a linear merge.
/// Instances are safe to share across concurrent readers; masking produces a
/// new graph that shares the topology arrays.
class SignedDigraph {
 public:
  static constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

  /// One directed edge slot in the out/in adjacency of a node.
  struct Arc {
    NodeId node;  // the other endpoint
    EdgeId edge;
  };

  /// One entry of the direction-agnostic adjacency: `out_edge` is this->node,
  /// `in_edge` is node->this; either may be kNoEdge.
  struct Link {
    NodeId node;
    EdgeId out_edge;
    EdgeId in_edge;
  };

  SignedDigraph() = default;

  std::size_t node_count() const { return topo_ ? topo_->node_count : 0; }
  std::size_t edge_count() const { return signs_.size(); }
  std::size_t observed_count() const { return positive_count_ + negative_count_; }
  std::size_t positive_count() const { return positive_count_; }
  std::size_t negative_count() const { return negative_count_; }
  std::size_t hidden_count() const { return edge_count() - observed_count(); }
  bool fully_observed() const { return hidden_count() == 0; }

  NodeId edge_source(EdgeId e) const { return topo_->sources[e]; }
  NodeId edge_target(EdgeId e) const { return topo_->targets[e]; }
  Sign edge_sign(EdgeId e) const { return signs_[e]; }

  /// Dense id -> id used in the input file.
  std::int64_t original_id(NodeId v) const { return topo_->original_ids[v]; }
  std::optional<NodeId> find_node(std::int64_t original) const;

  std::span<const Arc> out_arcs(NodeId v) const {
    return segment(topo_->out_offsets, topo_->out_arcs, v);
  }
  std::span<const Arc> in_arcs(NodeId v) const {
    return segment(topo_->in_offsets, topo_->in_arcs, v);
  }
  /// Neighbors by any direction, sorted by id, each listed once.
  std::span<const Link> links(NodeId v) const {
    return segmentl(topo_->link_offsets, topo_->links, v);
  }

  std::optional<EdgeId> find_edge(NodeId src, NodeId dst) const;

  /// Exact degree counts for `v`; throws GraphError on an unknown id.
  const DegreeTally& tally(NodeId v) const;

  /// Replaces the signs of `edges` with Hidden. Internal helper for masking.
  SignedDigraph with_signs_hidden(std::span<const EdgeId> edges) const;
  /// Restores signs for the given (edge, sign) pairs.
  SignedDigraph with_signs_restored(std::span<const std::pair<EdgeId, Sign>> assignments) const;

 private:
  friend class GraphBuilder;

  struct Topology {
    std::size_t node_count = 0;
    std::vector<std::int64_t> original_ids;
    std::unordered_map<std::int64_t, NodeId> id_lookup;
    std::vector<NodeId> sources, targets;          // per edge
    std::vector<std::size_t> out_offsets, in_offsets, link_offsets;
    std::vector<Arc> out_arcs, in_arcs;
    std::vector<Link> links;
  };

  std::span<const Arc> segment(const std::vector<std::size_t>& off,
                               const std::vector<Arc>& data, NodeId v) const {
    check_node(v);
    return {data.data() + off[v], off[v + 1] - off[v]};
  }
  std::span<const Link> segmentl(const std::vector<std::size_t>& off,
                                 const std::vector<Link>& data, NodeId v) const {
    check_node(v);
    return {data.data() + off[v], off[v + 1] - off[v]};
  }
  void check_node(NodeId v) const {
    if (!topo_ || v >= topo_->node_count)
      throw GraphError("unknown node id " + std::to_string(v));
  }
  void recount();

  std::shared_ptr<const Topology> topo_;
  std::vector<Sign> signs_;            // indexed by edge id
  std::vector<DegreeTally> tallies_;   // indexed by node id
  std::size_t positive_count_ = 0;
  std::size_t negative_count_ = 0;
};

/// Accumulates edges (with original ids) and produces a SignedDigraph.
/// Dense ids are assigned in order of first appearance.
class GraphBuilder {
 public:
  /// Throws GraphError on a self-loop or a duplicate ordered pair.
  void add_edge(std::int64_t src, std::int64_t dst, Sign sign);
  std::size_t edge_count() const { return sources_.size(); }
  SignedDigraph build() &&;

 private:
  NodeId intern(std::int64_t original);

  std::unordered_map<std::int64_t, NodeId> id_lookup_;
  std::vector<std::int64_t> original_ids_;
  std::vector<NodeId> sources_, targets_;
  std::vector<Sign> signs_;
  std::unordered_map<std::uint64_t, std::uint8_t> seen_pairs_;
};

/// Exact degree counts for `v`.
inline const DegreeTally& degree_tally(const SignedDigraph& g, NodeId v) { return g.tally(v); }

struct MaskedEdge {
  EdgeId edge;
  Sign true_sign;
};

struct MaskResult {
  SignedDigraph graph;
  std::vector<MaskedEdge> holdout;  // sorted by edge id
};

/// Hides the signs of round(fraction*m) edges chosen uniformly without
/// replacement by a deterministic generator seeded with `seed`. Ties at .5
/// round half-up. Requires a fully observed graph and fraction in [0,1].
MaskResult mask_edges(const SignedDigraph& g, double fraction, std::uint64_t seed);

/// Inverse of mask_edges given the returned holdout.
SignedDigraph restore_signs(const SignedDigraph& g, std::span<const MaskedEdge> holdout);

/// Visits, in ascending id order, every node z != x,y adjacent to both x and
/// y (either direction, any sign including hidden), passing the Link entries
/// of x-z and y-z. Throws on x == y.
template <typename Visit>
void for_each_common_link(const SignedDigraph& g, NodeId x, NodeId y, Visit&& visit) {
  if (x == y) throw std::invalid_argument("common neighbors of a node with itself");
  auto lx = g.links(x);
  auto ly = g.links(y);
  std::size_t i = 0, j = 0;
  while (i < lx.size() && j < ly.size()) {
    if (lx[i].node < ly[j].node) {
      ++i;
    } else if (ly[j].node < lx[i].node) {
      ++j;
    } else {
      NodeId z = lx[i].node;
      if (z != x && z != y) visit(lx[i], ly[j]);
      ++i;
      ++j;
    }
  }
}

/// Nodes z != x,y adjacent to both x and y by at least one edge in either
/// direction, any sign including hidden; sorted by node id. Throws on x == y.
std::vector<NodeId> common_neighbors(const SignedDigraph& g, NodeId x, NodeId y);

/// |common_neighbors(g, x, y)| without materializing the list.
std::size_t embeddedness(const SignedDigraph& g, NodeId x, NodeId y);

}  // namespace signet
