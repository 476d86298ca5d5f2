#include "signet/graph.hpp"

#include <algorithm>
#include <cmath>

#include "signet/random.hpp"

namespace signet {

std::optional<NodeId> SignedDigraph::find_node(std::int64_t original) const {
  if (!topo_) return std::nullopt;
  auto it = topo_->id_lookup.find(original);
  if (it == topo_->id_lookup.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> SignedDigraph::find_edge(NodeId src, NodeId dst) const {
  auto arcs = out_arcs(src);
  check_node(dst);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), dst,
                             [](const Arc& a, NodeId v) { return a.node < v; });
  if (it == arcs.end() || it->node != dst) return std::nullopt;
  return it->edge;
}

const DegreeTally& SignedDigraph::tally(NodeId v) const {
  check_node(v);
  return tallies_[v];
}

void SignedDigraph::recount() {
  positive_count_ = negative_count_ = 0;
  const std::size_t n = topo_->node_count;
  tallies_.assign(n, DegreeTally{});
  for (EdgeId e = 0; e < signs_.size(); ++e) {
    DegreeTally& src = tallies_[topo_->sources[e]];
    DegreeTally& dst = tallies_[topo_->targets[e]];
    switch (signs_[e]) {
      case Sign::Positive:
        ++positive_count_;
        ++src.out_pos;
        ++dst.in_pos;
        break;
      case Sign::Negative:
        ++negative_count_;
        ++src.out_neg;
        ++dst.in_neg;
        break;
      case Sign::Hidden:
        ++src.out_hidden;
        ++dst.in_hidden;
        break;
    }
  }
}

SignedDigraph SignedDigraph::with_signs_hidden(std::span<const EdgeId> edges) const {
  SignedDigraph out = *this;
  for (EdgeId e : edges) {
    if (e >= out.signs_.size()) throw GraphError("unknown edge id " + std::to_string(e));
    out.signs_[e] = Sign::Hidden;
  }
  out.recount();
  return out;
}

SignedDigraph SignedDigraph::with_signs_restored(
    std::span<const std::pair<EdgeId, Sign>> assignments) const {
  SignedDigraph out = *this;
  for (auto [e, s] : assignments) {
    if (e >= out.signs_.size()) throw GraphError("unknown edge id " + std::to_string(e));
    out.signs_[e] = s;
  }
  out.recount();
  return out;
}

NodeId GraphBuilder::intern(std::int64_t original) {
  auto [it, inserted] = id_lookup_.try_emplace(original, static_cast<NodeId>(original_ids_.size()));
  if (inserted) original_ids_.push_back(original);
  return it->second;
}

void GraphBuilder::add_edge(std::int64_t src, std::int64_t dst, Sign sign) {
  if (src == dst)
    throw GraphError("self-loop on node " + std::to_string(src));
  NodeId s = intern(src);
  NodeId d = intern(dst);
  std::uint64_t key = (static_cast<std::uint64_t>(s) << 32) | d;
  if (!seen_pairs_.try_emplace(key, 1).second)
    throw GraphError("duplicate edge " + std::to_string(src) + " -> " + std::to_string(dst));
  sources_.push_back(s);
  targets_.push_back(d);
  signs_.push_back(sign);
}

SignedDigraph GraphBuilder::build() && {
  auto topo = std::make_shared<SignedDigraph::Topology>();
  const std::size_t n = original_ids_.size();
  const std::size_t m = sources_.size();
  topo->node_count = n;
  topo->original_ids = std::move(original_ids_);
  topo->id_lookup = std::move(id_lookup_);
  topo->sources = std::move(sources_);
  topo->targets = std::move(targets_);

  // CSR construction for out-, in-, and direction-agnostic adjacency.
  topo->out_offsets.assign(n + 1, 0);
  topo->in_offsets.assign(n + 1, 0);
  for (EdgeId e = 0; e < m; ++e) {
    ++topo->out_offsets[topo->sources[e] + 1];
    ++topo->in_offsets[topo->targets[e] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    topo->out_offsets[v + 1] += topo->out_offsets[v];
    topo->in_offsets[v + 1] += topo->in_offsets[v];
  }
  topo->out_arcs.resize(m);
  topo->in_arcs.resize(m);
  {
    std::vector<std::size_t> out_fill(topo->out_offsets.begin(), topo->out_offsets.end() - 1);
    std::vector<std::size_t> in_fill(topo->in_offsets.begin(), topo->in_offsets.end() - 1);
    for (EdgeId e = 0; e < m; ++e) {
      topo->out_arcs[out_fill[topo->sources[e]]++] = {topo->targets[e], e};
      topo->in_arcs[in_fill[topo->targets[e]]++] = {topo->sources[e], e};
    }
  }
  auto by_node = [](const SignedDigraph::Arc& a, const SignedDigraph::Arc& b) {
    return a.node < b.node;
  };
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(topo->out_arcs.begin() + topo->out_offsets[v],
              topo->out_arcs.begin() + topo->out_offsets[v + 1], by_node);
    std::sort(topo->in_arcs.begin() + topo->in_offsets[v],
              topo->in_arcs.begin() + topo->in_offsets[v + 1], by_node);
  }

  // Merge the two sorted neighbor lists into one entry per distinct neighbor.
  topo->link_offsets.assign(n + 1, 0);
  topo->links.reserve(2 * m);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t oi = topo->out_offsets[v], oe = topo->out_offsets[v + 1];
    std::size_t ii = topo->in_offsets[v], ie = topo->in_offsets[v + 1];
    while (oi < oe || ii < ie) {
      SignedDigraph::Link link{0, SignedDigraph::kNoEdge, SignedDigraph::kNoEdge};
      NodeId onode = oi < oe ? topo->out_arcs[oi].node : std::numeric_limits<NodeId>::max();
      NodeId inode = ii < ie ? topo->in_arcs[ii].node : std::numeric_limits<NodeId>::max();
      if (onode <= inode) {
        link.node = onode;
        link.out_edge = topo->out_arcs[oi++].edge;
      }
      if (inode <= onode) {
        link.node = inode;
        link.in_edge = topo->in_arcs[ii++].edge;
      }
      topo->links.push_back(link);
    }
    topo->link_offsets[v + 1] = topo->links.size();
  }

  SignedDigraph g;
  g.topo_ = std::move(topo);
  g.signs_ = std::move(signs_);
  g.recount();
  return g;
}

MaskResult mask_edges(const SignedDigraph& g, double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0))
    throw std::invalid_argument("mask fraction must be in [0,1]");
  if (!g.fully_observed())
    throw GraphError("mask_edges requires a fully observed graph");

  const std::uint64_t m = g.edge_count();
  const auto k = static_cast<std::uint64_t>(std::floor(fraction * static_cast<double>(m) + 0.5));

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> picked = sample_without_replacement(rng, m, k);
  std::sort(picked.begin(), picked.end());

  std::vector<EdgeId> edges(picked.begin(), picked.end());
  MaskResult result;
  result.holdout.reserve(edges.size());
  for (EdgeId e : edges) result.holdout.push_back({e, g.edge_sign(e)});
  result.graph = g.with_signs_hidden(edges);
  return result;
}

SignedDigraph restore_signs(const SignedDigraph& g, std::span<const MaskedEdge> holdout) {
  std::vector<std::pair<EdgeId, Sign>> assignments;
  assignments.reserve(holdout.size());
  for (const MaskedEdge& h : holdout) assignments.emplace_back(h.edge, h.true_sign);
  return g.with_signs_restored(assignments);
}

std::vector<NodeId> common_neighbors(const SignedDigraph& g, NodeId x, NodeId y) {
  std::vector<NodeId> out;
  for_each_common_link(g, x, y,
                       [&](const SignedDigraph::Link& lx, const SignedDigraph::Link&) {
                         out.push_back(lx.node);
                       });
  return out;
}

std::size_t embeddedness(const SignedDigraph& g, NodeId x, NodeId y) {
  std::size_t count = 0;
  for_each_common_link(
      g, x, y, [&](const SignedDigraph::Link&, const SignedDigraph::Link&) { ++count; });
  return count;
}

}  // namespace signet
