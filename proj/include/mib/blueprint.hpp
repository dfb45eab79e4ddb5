#pragma once

#include <limits>

#include "mib/graph.hpp"

namespace mib {

/// Sentinel strictly greater than every vertex ID.
inline constexpr int kNextInfinity = std::numeric_limits<int>::max();

/// Bookkeeping octuple for a growing biclique (s_i u if_i) x cc_i.
///
///   s_i   seed-set vertices already in the biclique
///   s_w   seed-set vertices still available for expansion (all later in phi)
///   s_p   seed-set vertices already considered elsewhere
///   if_i  non-seed vertices on the independent side of the biclique
///   cc_i  the completely connected side
///   if_o / cc_o  the excluded remainder pools, used for near-maximality
///   o_if  OCT vertices independent from s_i and outside the seed set
///   next  least s_w vertex that blocks maximality, or kNextInfinity
///
/// phi is ascending vertex-ID order. The crossing-biclique variant leaves
/// if_i, if_o and o_if empty.
struct Blueprint {
  VertexSet s_i, if_i, cc_i, s_w, s_p, if_o, cc_o, o_if;
  int next = kNextInfinity;
};

using McbBlueprint = Blueprint;

/// cc_i is empty.
bool is_invalid(const Blueprint& b);

/// The represented biclique cannot grow into a future-maximal one: an s_p
/// vertex fits the independent side, or a cc_o / if_o vertex fits a side
/// without removing anything.
bool not_future_max(const Graph& g, const Blueprint& b);

/// No s_w or o_if vertex fits the independent side. Valid only for blueprints
/// that are neither invalid nor not-future-maximal.
bool is_maximal(const Graph& g, const Blueprint& b);

/// phi-least member of s_w independent from if_i and completely connected to
/// cc_i, or kNextInfinity when none exists.
int compute_next(const Graph& g, const Blueprint& b);

}  // namespace mib
