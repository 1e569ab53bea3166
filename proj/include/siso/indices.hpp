#pragma once

#include <string>
#include <vector>

#include "siso/words.hpp"

namespace siso {

// The ball of radius r around x in the orbit of the system: points reachable
// by at most r letter applications, with one edge per (point, letter) pair
// that acts there. Relations in the acting pseudogroup show up as non-tree
// edges; each contributes a reduced cycle word (recorded as data, since
// commuting translations make such relations unavoidable on interval
// systems).
struct OrbitGraph {
  struct Node {
    Loc at;
    int depth = 0;
  };
  struct Edge {
    int from = -1, to = -1;  // node indices, base side -> image side
    int letter = -1;         // positive letter index
  };

  Loc origin;
  int radius = 0;
  std::vector<Node> nodes;  // nodes[0] is the origin
  std::vector<Edge> edges;
  std::vector<Word> cycles;  // capped at cycle_cap entries
  long long cycle_edges = 0;

  static constexpr int cycle_cap = 64;

  int find(const Loc& z) const;  // node index or -1
};

OrbitGraph orbit_graph(const System& s, const Loc& x, int r, long long budget);

// Germs at orbit points, linked when a letter carries one onto another:
// (z, d) -> (a z, a*d) whenever the base of a contains z and continues
// along d. Connected components count the distinct directions at the orbit
// class of x.
struct DirectionGraph {
  struct Node {
    int orbit_node = -1;
    MetricTree::Germ germ;
  };
  struct Link {
    int from = -1, to = -1;  // direction node indices
    int letter = -1;
  };

  OrbitGraph orbit;
  std::vector<Node> nodes;
  std::vector<Link> links;
  // Component counts of the sub-ball of each radius 0..r; the full-radius
  // count is counts_by_radius.back().
  std::vector<int> counts_by_radius;
};

DirectionGraph direction_graph(const System& s, const Loc& x, int r, long long budget);

// Branching data of one orbit class. The geometric index is
// #directions - 2, computed at finite radius; `stable` marks counts that
// did not move in the last widening, so unstable values are lower-quality
// evidence. The q estimate counts boundary growth of the orbit ball
// (a line contributes 0) and is only comparable against the geometric
// index when the extremality hypothesis holds: no orbit point in the ball
// may be an extremal point of a base containing it.
struct IndexReport {
  Loc x;
  int radius = 0;
  std::vector<int> direction_counts;  // by radius 0..r
  int geometric = 0;                  // counts.back() - 2
  bool stable = false;
  int q_estimate = 0;  // boundary nodes that keep growing, minus 2
  bool hypothesis = false;
  std::string hypothesis_witness;  // first extremal orbit point, if any
};

IndexReport point_index(const System& s, const Loc& x, int r, long long budget);

// Extremal points of all letter bases and images, one Loc per distinct
// point: the candidate singular orbits.
std::vector<Loc> singular_points(const System& s);

// Sums point indices over orbit classes against the bound 2*rank - 2.
// Points already in the orbit ball of an earlier point are skipped, so each
// class is counted once. The q side clamps each summand at 0.
struct IndexBoundReport {
  int rank = 0;
  int radius = 0;
  std::vector<IndexReport> points;
  std::vector<Loc> skipped;
  long long geometric_sum = 0;
  long long q_sum = 0;
  int bound = 0;  // 2*rank - 2
  bool geometric_within = false;
  bool q_within = false;  // only over points where the hypothesis holds
};

IndexBoundReport index_bound_report(const System& s, const std::vector<Loc>& pts,
                                    int r, long long budget, int rank = 0);

}  // namespace siso
