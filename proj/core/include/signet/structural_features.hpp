#pragma once

#include <array>
#include <cstdint>

#include "signet/graph.hpp"

namespace signet {

/// Canonical order of the 16 directed-triad contexts around an edge x->y with
/// common neighbor z: the x-z configuration is the outer index over
/// {x->+z, x->-z, z->+x, z->-x} and the z-y configuration the inner index
/// over {z->+y, z->-y, y->+z, y->-z}, giving t = 4*xz + zy.
std::array<const char*, 16> triad_context_names();

/// Counts, per context, the pairs of observed-sign edges (one between x and
/// z, one between z and y) over all common neighbors z. Hidden-sign edges
/// contribute nothing; the x->y edge itself is never a context edge. When
/// reciprocal edges exist every observed pair counts. Throws on x == y.
std::array<std::uint32_t, 16> triad_counts(const SignedDigraph& g, NodeId x, NodeId y);

/// triad_counts as a feature row.
std::array<double, 16> triad_features(const SignedDigraph& g, NodeId x, NodeId y);

/// The seven degree features of the edge x->y, in order: d_in+(y), d_in-(y),
/// d_out+(x), d_out-(x), C(x,y), total out-degree of x, total in-degree of y.
/// Signed counts use observed signs only; the totals include hidden edges.
std::array<double, 7> degree_features(const SignedDigraph& g, NodeId x, NodeId y);

}  // namespace signet
