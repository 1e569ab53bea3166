#pragma once

#include <optional>
#include <vector>

#include "siso/tree.hpp"

namespace siso {

// A closed region inside one metric tree: a set of flagged vertices plus,
// per edge, a sorted list of disjoint closed offset intervals. Degenerate
// intervals (lo == hi, strictly interior) represent isolated edge points;
// isolated vertex points are just flags. Closedness is an invariant: a span
// reaching offset 0 or len forces the matching vertex flag.
class SlabSet {
public:
  struct Span {
    Scalar lo, hi;
  };

  SlabSet() = default;
  explicit SlabSet(const MetricTree& t);

  bool empty() const;
  bool contains(const Point& p) const;
  bool vertex_flag(int v) const { return vflag_[v] != 0; }
  const std::vector<Span>& spans(int e) const { return spans_[e]; }
  int vertex_count() const { return static_cast<int>(vflag_.size()); }
  int edge_slots() const { return static_cast<int>(spans_.size()); }

  void add_vertex(int v);
  void add_span(const MetricTree& t, int e, Scalar lo, Scalar hi);
  void add_point(const MetricTree& t, const Point& p);
  void add_path(const MetricTree& t, const Point& a, const Point& b);
  void unite(const MetricTree& t, const SlabSet& o);

  static SlabSet intersect(const MetricTree& t, const SlabSet& a, const SlabSet& b);
  // True if every point of this set lies in o.
  bool subset_of(const SlabSet& o) const;
  bool operator==(const SlabSet& o) const;

  // Sum of span lengths (vertex points contribute 0).
  Scalar measure() const;
  // Maximal connected pieces, each again closed.
  std::vector<SlabSet> components(const MetricTree& t) const;

  // Number of directions at p along which the set continues; p must be in
  // the set. 0 = isolated point, 1 = extremal, >= 3 = branch point.
  int germ_count(const MetricTree& t, const Point& p) const;
  bool meets(const MetricTree& t, const Direction& d) const;
  // Points of the set with germ count <= 1, sorted canonically.
  std::vector<Point> extremal_points(const MetricTree& t) const;
  // Vertices of the set with germ count >= 3, sorted.
  std::vector<Point> branch_points(const MetricTree& t) const;
  // All points of the set (in canonical order) that are span ends or flagged
  // vertices; the candidate pool for extremal/branch scans.
  std::vector<Point> boundary_candidates(const MetricTree& t) const;

  std::optional<Point> single_point(const MetricTree& t) const;

private:
  void ensure_sized(const MetricTree& t);

  std::vector<char> vflag_;
  std::vector<std::vector<Span>> spans_;
};

// A nonempty closed connected region (a subtree), tagged with the component
// it lives in. Equality is slab equality; the generator list is the
// canonical sorted set of extremal points and regenerates the subtree as a
// convex hull.
class Subtree {
public:
  static Subtree hull(const MetricTree& t, int component, const std::vector<Point>& pts);
  static Subtree from_slab(const MetricTree& t, int component, SlabSet s);
  static Subtree whole(const MetricTree& t, int component);

  int component() const { return component_; }
  const SlabSet& slab() const { return slab_; }
  const std::vector<Point>& generators() const { return gens_; }

  bool degenerate() const { return gens_.size() == 1 && slab_.measure().is_zero(); }
  const Point& the_point() const;

  bool contains(const Point& p) const { return slab_.contains(p); }
  bool contains_subtree(const Subtree& o) const;
  Scalar diameter(const MetricTree& t) const;

  int germ_count(const MetricTree& t, const Point& p) const { return slab_.germ_count(t, p); }
  bool is_extremal(const MetricTree& t, const Point& p) const;
  bool meets(const MetricTree& t, const Direction& d) const { return slab_.meets(t, d); }
  std::vector<Point> branch_points(const MetricTree& t) const { return slab_.branch_points(t); }

  bool operator==(const Subtree& o) const {
    return component_ == o.component_ && slab_ == o.slab_;
  }

private:
  int component_ = -1;
  SlabSet slab_;
  std::vector<Point> gens_;
};

// Intersection of two subtrees of the same component; empty optional if the
// regions do not meet. In a tree this is automatically connected.
std::optional<Subtree> intersect(const MetricTree& t, const Subtree& a, const Subtree& b);

}  // namespace siso
