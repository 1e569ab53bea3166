#include "siso/cutting.hpp"

#include <algorithm>
#include <map>

#include "siso/errors.hpp"

namespace siso {

namespace {

// Union-find over atom ids.
struct DS {
  std::vector<int> p;
  explicit DS(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

Surgery Surgery::cut(const Forest& f, const std::vector<VertexCut>& cuts) {
  Surgery s;
  s.build(f, cuts, nullptr);
  return s;
}

Surgery Surgery::trim(const Forest& f, const std::vector<SlabSet>& region) {
  require(static_cast<int>(region.size()) == f.size(), Errc::usage_error,
          "trim needs one region per component");
  Surgery s;
  s.build(f, {}, &region);
  return s;
}

int Surgery::slot_at(int comp, int subvertex, int cls) const {
  int base = slot_index_[comp][subvertex];
  require(base >= 0, Errc::outside_host, "vertex was trimmed away");
  return base + cls;
}

int Surgery::find_subvertex(int comp, const Point& p) const {
  const OldComponent& oc = comps_[comp];
  if (p.is_vertex()) return oc.old_vertex_sub[p.vertex_id()];
  for (const auto& [off, sub] : oc.edge_cuts[p.edge_id()])
    if (off == p.offset()) return sub;
  return -1;
}

void Surgery::build(const Forest& f, const std::vector<VertexCut>& cuts,
                    const std::vector<SlabSet>* region) {
  old_ = f;
  comps_.resize(f.size());

  std::map<Loc, std::vector<Direction>> cut_map;
  for (const auto& c : cuts) {
    require(c.at.component >= 0 && c.at.component < f.size(), Errc::bad_index,
            "cut point component out of range");
    auto& v = cut_map[c.at];
    v.insert(v.end(), c.separated.begin(), c.separated.end());
  }

  // Subdivide: every cut point and every interior span end becomes a vertex.
  for (int c = 0; c < f.size(); ++c) {
    const MetricTree& t = f.tree(c);
    OldComponent& oc = comps_[c];
    oc.old_vertex_sub.resize(t.vertex_count());
    oc.edge_cuts.resize(t.edge_count());
    oc.edge_subedges.resize(t.edge_count());

    std::vector<std::vector<Scalar>> offs(t.edge_count());
    for (const auto& [at, seps] : cut_map)
      if (at.component == c && !at.p.is_vertex())
        offs[at.p.edge_id()].push_back(at.p.offset());
    if (region) {
      const SlabSet& R = (*region)[c];
      for (int e = 0; e < t.edge_count(); ++e)
        for (const auto& sp : R.spans(e)) {
          if (sp.lo.sign() > 0) offs[e].push_back(sp.lo);
          if (sp.hi < t.edge(e).len) offs[e].push_back(sp.hi);
        }
    }

    for (int v = 0; v < t.vertex_count(); ++v) {
      oc.old_vertex_sub[v] = static_cast<int>(oc.verts.size());
      oc.verts.push_back({Point::vertex(v), true, false, -1, {}, {}, {}, 1});
    }
    for (int e = 0; e < t.edge_count(); ++e) {
      auto& o = offs[e];
      std::sort(o.begin(), o.end());
      o.erase(std::unique(o.begin(), o.end()), o.end());
      for (const Scalar& x : o) {
        int sub = static_cast<int>(oc.verts.size());
        oc.verts.push_back({Point::interior(t, e, x), true, false, -1, {}, {}, {}, 1});
        oc.edge_cuts[e].push_back({x, sub});
      }
    }
    for (int e = 0; e < t.edge_count(); ++e) {
      int prev = oc.old_vertex_sub[t.edge(e).u];
      Scalar lo(0);
      auto emit = [&](int b, const Scalar& hi) {
        int k = static_cast<int>(oc.edges.size());
        oc.edges.push_back({e, lo, hi, prev, b, true, -1, -1});
        oc.edge_subedges[e].push_back(k);
        oc.verts[prev].inc_subedge.push_back(k);
        oc.verts[prev].inc_toward_hi.push_back(true);
        oc.verts[prev].inc_class.push_back(0);
        oc.verts[b].inc_subedge.push_back(k);
        oc.verts[b].inc_toward_hi.push_back(false);
        oc.verts[b].inc_class.push_back(0);
        prev = b;
        lo = hi;
      };
      for (const auto& [x, sub] : oc.edge_cuts[e]) emit(sub, x);
      emit(oc.old_vertex_sub[t.edge(e).v], t.edge(e).len);
    }

    if (region) {
      const SlabSet& R = (*region)[c];
      for (auto& sv : oc.verts) sv.kept = R.contains(sv.old_p);
      for (auto& se : oc.edges) {
        Scalar mid = (se.lo + se.hi) / Scalar(2);
        se.kept = R.contains(Point::interior(t, se.old_edge, mid));
        require(!se.kept || (oc.verts[se.a].kept && oc.verts[se.b].kept),
                Errc::internal_error, "kept span with trimmed end");
      }
    }
  }

  // Partition the germs at each cut point: one class per separated germ,
  // the rest together.
  for (auto& [at, seps] : cut_map) {
    int c = at.component;
    int svi = find_subvertex(c, at.p);
    require(svi >= 0, Errc::internal_error, "cut point lost in subdivision");
    SubVertex& sv = comps_[c].verts[svi];
    sv.is_cut = true;
    std::sort(seps.begin(), seps.end());
    seps.erase(std::unique(seps.begin(), seps.end()), seps.end());
    int next = 1;
    for (const Direction& d : seps) {
      require(d.at == at.p, Errc::usage_error, "direction not anchored at cut point");
      int hit = -1;
      for (size_t i = 0; i < sv.inc_subedge.size(); ++i) {
        MetricTree::Germ g{comps_[c].edges[sv.inc_subedge[i]].old_edge,
                           sv.inc_toward_hi[i]};
        if (g == d.germ && sv.inc_class[i] == 0) {
          hit = static_cast<int>(i);
          break;
        }
      }
      if (hit < 0) {
        bool dup = false;
        for (size_t i = 0; i < sv.inc_subedge.size(); ++i)
          if (MetricTree::Germ{comps_[c].edges[sv.inc_subedge[i]].old_edge,
                               sv.inc_toward_hi[i]} == d.germ)
            dup = true;
        if (dup) continue;  // same germ listed twice
        fail(Errc::usage_error, "separated germ does not leave the cut point");
      }
      sv.inc_class[hit] = next++;
    }
    bool has_residual = false;
    for (int cl : sv.inc_class)
      if (cl == 0) has_residual = true;
    if (!has_residual && next > 1) {
      for (auto& cl : sv.inc_class) --cl;
      sv.residual_class = -1;
      sv.n_classes = next - 1;
    } else {
      sv.residual_class = 0;
      sv.n_classes = next;
    }
  }

  // One slot per (kept vertex, germ class).
  slot_index_.resize(f.size());
  std::vector<int> edge_atom_base(f.size());
  for (int c = 0; c < f.size(); ++c) {
    slot_index_[c].assign(comps_[c].verts.size(), -1);
    for (size_t sv = 0; sv < comps_[c].verts.size(); ++sv) {
      if (!comps_[c].verts[sv].kept) continue;
      slot_index_[c][sv] = static_cast<int>(slots_.size());
      for (int cl = 0; cl < comps_[c].verts[sv].n_classes; ++cl)
        slots_.push_back({c, static_cast<int>(sv), cl, -1, -1});
    }
  }
  int n_atoms = static_cast<int>(slots_.size());
  for (int c = 0; c < f.size(); ++c) {
    edge_atom_base[c] = n_atoms;
    n_atoms += static_cast<int>(comps_[c].edges.size());
  }

  DS ds(n_atoms);
  auto end_class = [&](int c, int k, bool at_a) -> int {
    const SubEdge& se = comps_[c].edges[k];
    const SubVertex& sv = comps_[c].verts[at_a ? se.a : se.b];
    for (size_t i = 0; i < sv.inc_subedge.size(); ++i)
      if (sv.inc_subedge[i] == k && sv.inc_toward_hi[i] == at_a)
        return sv.inc_class[i];
    fail(Errc::internal_error, "sub-edge missing from incidence");
  };
  for (int c = 0; c < f.size(); ++c)
    for (size_t k = 0; k < comps_[c].edges.size(); ++k) {
      const SubEdge& se = comps_[c].edges[k];
      if (!se.kept) continue;
      ds.unite(slot_at(c, se.a, end_class(c, static_cast<int>(k), true)),
               edge_atom_base[c] + static_cast<int>(k));
      ds.unite(slot_at(c, se.b, end_class(c, static_cast<int>(k), false)),
               edge_atom_base[c] + static_cast<int>(k));
    }

  // Sweep atoms edge by edge so piece ids follow the geometry, then pick up
  // isolated points.
  std::vector<int> root_piece(n_atoms, -1);
  pieces_of_.resize(f.size());
  auto piece_of_atom = [&](int c, int atom) {
    int r = ds.find(atom);
    if (root_piece[r] < 0) {
      root_piece[r] = static_cast<int>(origin_.size());
      origin_.push_back(c);
      pieces_of_[c].push_back(root_piece[r]);
      piece_vertex_slot_.emplace_back();
      piece_edge_sub_.emplace_back();
    }
    return root_piece[r];
  };
  auto place_slot = [&](int c, int sub, int cls) {
    int sid = slot_at(c, sub, cls);
    if (slots_[sid].piece >= 0) return;
    int p = piece_of_atom(c, sid);
    slots_[sid].piece = p;
    slots_[sid].new_vertex = static_cast<int>(piece_vertex_slot_[p].size());
    piece_vertex_slot_[p].push_back(sid);
  };
  for (int c = 0; c < f.size(); ++c) {
    for (size_t k = 0; k < comps_[c].edges.size(); ++k) {
      SubEdge& se = comps_[c].edges[k];
      if (!se.kept) continue;
      place_slot(c, se.a, end_class(c, static_cast<int>(k), true));
      int atom = edge_atom_base[c] + static_cast<int>(k);
      se.piece = piece_of_atom(c, atom);
      se.new_id = static_cast<int>(piece_edge_sub_[se.piece].size());
      piece_edge_sub_[se.piece].push_back({c, static_cast<int>(k)});
      place_slot(c, se.b, end_class(c, static_cast<int>(k), false));
    }
    for (size_t sv = 0; sv < comps_[c].verts.size(); ++sv) {
      if (!comps_[c].verts[sv].kept) continue;
      for (int cl = 0; cl < comps_[c].verts[sv].n_classes; ++cl)
        place_slot(c, static_cast<int>(sv), cl);
    }
  }
  require(!origin_.empty(), Errc::empty_output, "nothing survived the surgery");

  // Assemble the new forest and the old-coordinate regions.
  std::map<int, int> piece_local;  // per-origin counter for names
  for (size_t p = 0; p < origin_.size(); ++p) {
    int c = origin_[p];
    std::vector<TreeEdge> edges;
    for (auto [cc, k] : piece_edge_sub_[p]) {
      const SubEdge& se = comps_[cc].edges[k];
      edges.push_back({slots_[slot_at(cc, se.a, end_class(cc, k, true))].new_vertex,
                       slots_[slot_at(cc, se.b, end_class(cc, k, false))].new_vertex,
                       se.hi - se.lo});
    }
    result_.trees.emplace_back(static_cast<int>(piece_vertex_slot_[p].size()),
                               std::move(edges));
    int local = piece_local[c]++;
    result_.names.push_back(pieces_of_[c].size() == 1
                                ? f.name(c)
                                : f.name(c) + "." + std::to_string(local));

    SlabSet reg(f.tree(c));
    for (int sid : piece_vertex_slot_[p])
      reg.add_point(f.tree(c), comps_[c].verts[slots_[sid].subvertex].old_p);
    for (auto [cc, k] : piece_edge_sub_[p]) {
      const SubEdge& se = comps_[cc].edges[k];
      reg.add_span(f.tree(c), se.old_edge, se.lo, se.hi);
    }
    region_old_.push_back(std::move(reg));
  }
}

int Surgery::origin_of(int piece) const {
  require(piece >= 0 && piece < static_cast<int>(origin_.size()), Errc::bad_index,
          "no such piece");
  return origin_[piece];
}

const std::vector<int>& Surgery::pieces_of(int old_comp) const {
  require(old_comp >= 0 && old_comp < static_cast<int>(pieces_of_.size()),
          Errc::bad_index, "no such component");
  return pieces_of_[old_comp];
}

const SlabSet& Surgery::region_old(int piece) const {
  require(piece >= 0 && piece < static_cast<int>(region_old_.size()), Errc::bad_index,
          "no such piece");
  return region_old_[piece];
}

Point Surgery::to_new(int piece, const Point& old_p) const {
  int c = origin_of(piece);
  const OldComponent& oc = comps_[c];
  int sv = find_subvertex(c, old_p);
  if (sv >= 0) {
    int base = slot_index_[c][sv];
    require(base >= 0, Errc::outside_host, "point was trimmed away");
    for (int cl = 0; cl < oc.verts[sv].n_classes; ++cl)
      if (slots_[base + cl].piece == piece)
        return Point::vertex(slots_[base + cl].new_vertex);
    fail(Errc::outside_host, "point not in this piece");
  }
  int e = old_p.edge_id();
  for (int k : oc.edge_subedges[e]) {
    const SubEdge& se = oc.edges[k];
    if (se.lo < old_p.offset() && old_p.offset() < se.hi) {
      require(se.kept && se.piece == piece, Errc::outside_host,
              "point not in this piece");
      return Point::interior(result_.tree(piece), se.new_id, old_p.offset() - se.lo);
    }
  }
  fail(Errc::outside_host, "point not in this piece");
}

Loc Surgery::to_old(int piece, const Point& new_p) const {
  int c = origin_of(piece);
  if (new_p.is_vertex()) {
    int sid = piece_vertex_slot_[piece].at(new_p.vertex_id());
    return {c, comps_[c].verts[slots_[sid].subvertex].old_p};
  }
  auto [cc, k] = piece_edge_sub_[piece].at(new_p.edge_id());
  const SubEdge& se = comps_[cc].edges[k];
  return {c, Point::interior(old_.tree(c), se.old_edge, se.lo + new_p.offset())};
}

bool Surgery::is_cut_point(const Loc& at) const {
  if (at.component < 0 || at.component >= static_cast<int>(comps_.size()))
    return false;
  int sv = find_subvertex(at.component, at.p);
  return sv >= 0 && comps_[at.component].verts[sv].is_cut;
}

bool Surgery::residual_at(int piece, const Loc& old_cut) const {
  int c = origin_of(piece);
  require(old_cut.component == c, Errc::host_mismatch,
          "cut point lies in a different component");
  int sv = find_subvertex(c, old_cut.p);
  require(sv >= 0 && comps_[c].verts[sv].is_cut, Errc::usage_error,
          "not a cut point");
  int base = slot_index_[c][sv];
  for (int cl = 0; cl < comps_[c].verts[sv].n_classes; ++cl)
    if (slots_[base + cl].piece == piece)
      return cl == comps_[c].verts[sv].residual_class;
  return false;
}

Subtree Surgery::transport(const Forest& old_f, int piece, const Subtree& s) const {
  require(s.component() == origin_of(piece), Errc::host_mismatch,
          "subtree lives in a different component");
  (void)old_f;
  std::vector<Point> pts;
  for (const Point& g : s.generators()) pts.push_back(to_new(piece, g));
  return Subtree::hull(result_.tree(piece), piece, pts);
}

}  // namespace siso
