#pragma once

#include <cstdint>

#include "mib/graph.hpp"
#include "mib/oct.hpp"

namespace mib {

enum class OctMode { kRandom, kIndependent, kPerfectMatching };

/// Random near-bipartite graph parameters. Vertices are laid out as
/// L = [0, n_l), R = [n_l, n_l + n_r), O = [n_l + n_r, n).
struct GenParams {
  int n_l = 0;
  int n_r = 0;
  int n_o = 0;
  double d_lr = 0.0;  // expected L-R edge density
  double d_ob = 0.0;  // expected O-(L u R) edge density
  double d_oo = 0.0;  // expected O-O edge density (random mode only)
  double cv_lr = 0.0;
  double cv_ob = 0.0;
  OctMode oct_mode = OctMode::kRandom;
  std::uint64_t seed = 0;
  bool prune_isolates = false;
};

struct GenStats {
  double d_lr = 0.0;
  double d_ob = 0.0;
  double d_oo = 0.0;
  double cv_lr = 0.0;  // cv of the smaller L/R side's cross degrees
  double cv_ob = 0.0;  // cv of O vertices' degrees into L u R
};

/// Deterministic given params: same seed, identical edge list. Cross-side
/// degrees are drawn from a rounded truncated normal (mean d * |other side|,
/// sd cv * mean) and neighbors picked uniformly without replacement; O-O
/// edges are an Erdos-Renyi process, empty, or a fixed perfect matching
/// depending on oct_mode. Throws std::invalid_argument on bad params.
std::pair<Graph, OctDecomposition> generate(const GenParams& p);

GenStats stats(const Graph& g, const OctDecomposition& d);

}  // namespace mib
