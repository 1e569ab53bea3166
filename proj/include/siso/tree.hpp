#pragma once

#include <string>
#include <vector>

#include "siso/scalar.hpp"

namespace siso {

struct TreeEdge {
  int u = -1, v = -1;
  Scalar len;
};

// Finite metric tree: vertices 0..n-1 joined by edges of positive length.
// A single vertex with no edges is legal; induction produces such components.
class MetricTree {
public:
  // A germ is one of the two directed sides of an edge: (edge, to_v) points
  // from u toward v when to_v is true.
  struct Germ {
    int edge = -1;
    bool to_v = false;
    bool operator==(const Germ&) const = default;
    bool operator<(const Germ& o) const {
      return edge != o.edge ? edge < o.edge : to_v < o.to_v;
    }
  };

  MetricTree(int vertex_count, std::vector<TreeEdge> edges);

  int vertex_count() const { return nv_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const TreeEdge& edge(int e) const;
  const std::vector<TreeEdge>& edges() const { return edges_; }

  // Germs leaving a vertex, one per incident edge.
  const std::vector<Germ>& germs_at(int v) const;
  int degree(int v) const { return static_cast<int>(germs_at(v).size()); }
  int germ_head(Germ g) const { return g.to_v ? edge(g.edge).v : edge(g.edge).u; }
  int germ_tail(Germ g) const { return g.to_v ? edge(g.edge).u : edge(g.edge).v; }

  Scalar vdist(int u, int v) const;
  Scalar total_length() const;

  // Vertex path u -> v inclusive, with path_edges[i] joining path[i], path[i+1].
  void vertex_path(int u, int v, std::vector<int>& path, std::vector<int>& path_edges) const;

private:
  void check_vertex(int v) const;

  int nv_ = 0;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<Germ>> adj_;
  std::vector<int> parent_, parent_edge_, depth_;
};

// A location in a tree: a vertex, or a strictly interior point of an edge
// (offset measured from edge.u). Offsets 0 and len canonicalize to the
// vertex form, so operator== is genuine point equality.
class Point {
public:
  Point() = default;
  static Point vertex(int v);
  static Point interior(const MetricTree& t, int e, Scalar off);

  bool is_vertex() const { return vertex_ >= 0; }
  int vertex_id() const;
  int edge_id() const;
  const Scalar& offset() const;

  // Deterministic total order: vertices first by id, then edge points by
  // (edge, offset).
  static int compare(const Point& a, const Point& b);
  bool operator==(const Point& o) const { return compare(*this, o) == 0; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const { return compare(*this, o) < 0; }

  std::string str() const;  // "v3" or "e1@7/2"

private:
  int vertex_ = -1;
  int edge_ = -1;
  Scalar off_;
};

// A germ anchored at a point: the direction leaving `at` on the given side.
struct Direction {
  Point at;
  MetricTree::Germ germ;
  bool operator==(const Direction&) const = default;
  bool operator<(const Direction& o) const {
    int c = Point::compare(at, o.at);
    if (c != 0) return c < 0;
    return germ < o.germ;
  }
};

Scalar dist(const MetricTree& t, const Point& a, const Point& b);
bool on_segment(const MetricTree& t, const Point& z, const Point& a, const Point& b);
// One maximal straight run of a geodesic within a single edge, read from
// off_from toward off_to.
struct PathLeg {
  int edge;
  Scalar off_from, off_to;
};
// The geodesic a -> b split into legs; requires a != b.
std::vector<PathLeg> geodesic_legs(const MetricTree& t, const Point& a, const Point& b);
// The point at distance s from a along the geodesic [a, b], 0 <= s <= d(a,b).
Point point_at(const MetricTree& t, const Point& a, const Point& b, const Scalar& s);
// The germ at `from` pointing along the geodesic toward `to`; from != to.
Direction first_germ(const MetricTree& t, const Point& from, const Point& to);
// All germs anchored at p: deg(p) many for vertices, two for interior points.
std::vector<Direction> directions_at(const MetricTree& t, const Point& p);

}  // namespace siso
