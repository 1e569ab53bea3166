#pragma once

#include <vector>

#include "siso/forest.hpp"
#include "siso/subtree.hpp"

namespace siso {

// Severs the listed germ classes at one point: every listed direction gets
// its own side, the remaining germs stay together as the residual side.
struct VertexCut {
  Loc at;
  std::vector<Direction> separated;
};

// Rebuilds a forest after cutting at points and/or discarding everything
// outside a kept region, with exact transport of points both ways.
//
// Pieces are the connected components of the result, indexed like the new
// forest's components. Piece regions are reported in old coordinates; after
// a cut, the regions of the two sides both contain the cut point (regions
// are closed), so point transport is piece-directed.
class Surgery {
public:
  // Cut only: every point survives, components multiply at the cut points.
  static Surgery cut(const Forest& f, const std::vector<VertexCut>& cuts);
  // Trim only: keep exactly the given closed region (one slab per old
  // component); pieces are its connected components.
  static Surgery trim(const Forest& f, const std::vector<SlabSet>& region);

  const Forest& result() const { return result_; }
  int piece_count() const { return result_.size(); }
  int origin_of(int piece) const;
  const std::vector<int>& pieces_of(int old_comp) const;
  const SlabSet& region_old(int piece) const;

  Point to_new(int piece, const Point& old_p) const;
  Loc to_old(int piece, const Point& new_p) const;
  bool is_cut_point(const Loc& at) const;
  // True when the piece carries the residual germ class at this cut point.
  bool residual_at(int piece, const Loc& old_cut) const;

  // Transport of a subtree contained in region_old(piece).
  Subtree transport(const Forest& old_f, int piece, const Subtree& s) const;

private:
  Surgery() = default;
  void build(const Forest& f, const std::vector<VertexCut>& cuts,
             const std::vector<SlabSet>* region);

  struct SubVertex {
    Point old_p;
    bool kept = true;
    bool is_cut = false;
    int residual_class = -1;
    // Parallel arrays over incident sub-edge ends.
    std::vector<int> inc_subedge;
    std::vector<bool> inc_toward_hi;  // germ leaves this vertex toward hi
    std::vector<int> inc_class;
    int n_classes = 1;
  };
  struct SubEdge {
    int old_edge;
    Scalar lo, hi;
    int a, b;  // subvertex at lo / at hi
    bool kept = true;
    int piece = -1, new_id = -1;
  };
  struct OldComponent {
    std::vector<SubVertex> verts;
    std::vector<SubEdge> edges;
    std::vector<int> old_vertex_sub;                 // old vertex -> subvertex
    // per old edge: subdivision vertices sorted by offset, and sub-edges
    std::vector<std::vector<std::pair<Scalar, int>>> edge_cuts;
    std::vector<std::vector<int>> edge_subedges;
  };
  struct Slot {
    int comp, subvertex, cls;
    int piece = -1, new_vertex = -1;
  };

  int slot_at(int comp, int subvertex, int cls) const;
  int find_subvertex(int comp, const Point& p) const;  // -1 if not a subvertex

  Forest old_, result_;
  std::vector<OldComponent> comps_;
  std::vector<Slot> slots_;
  std::vector<std::vector<int>> slot_index_;            // per comp: first slot of subvertex
  std::vector<int> origin_;
  std::vector<std::vector<int>> pieces_of_;
  std::vector<SlabSet> region_old_;
  // per piece: new vertex -> slot, new edge -> (comp, subedge)
  std::vector<std::vector<int>> piece_vertex_slot_;
  std::vector<std::vector<std::pair<int, int>>> piece_edge_sub_;
};

}  // namespace siso
