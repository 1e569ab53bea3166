#include "siso/subtree.hpp"

#include <algorithm>

#include "siso/errors.hpp"

namespace siso {

SlabSet::SlabSet(const MetricTree& t) { ensure_sized(t); }

void SlabSet::ensure_sized(const MetricTree& t) {
  if (static_cast<int>(vflag_.size()) < t.vertex_count()) vflag_.resize(t.vertex_count(), 0);
  if (static_cast<int>(spans_.size()) < t.edge_count()) spans_.resize(t.edge_count());
}

bool SlabSet::empty() const {
  for (char f : vflag_)
    if (f) return false;
  for (const auto& s : spans_)
    if (!s.empty()) return false;
  return true;
}

bool SlabSet::contains(const Point& p) const {
  if (p.is_vertex()) {
    int v = p.vertex_id();
    return v < static_cast<int>(vflag_.size()) && vflag_[v];
  }
  int e = p.edge_id();
  if (e >= static_cast<int>(spans_.size())) return false;
  for (const Span& s : spans_[e])
    if (s.lo <= p.offset() && p.offset() <= s.hi) return true;
  return false;
}

void SlabSet::add_vertex(int v) {
  require(v >= 0, Errc::bad_index, "negative vertex id");
  if (v >= static_cast<int>(vflag_.size())) vflag_.resize(v + 1, 0);
  vflag_[v] = 1;
}

void SlabSet::add_span(const MetricTree& t, int e, Scalar lo, Scalar hi) {
  ensure_sized(t);
  if (hi < lo) std::swap(lo, hi);
  const TreeEdge& ed = t.edge(e);
  require(lo.sign() >= 0 && hi <= ed.len, Errc::outside_host,
          "span outside edge " + std::to_string(e));
  if (lo.sign() == 0) add_vertex(ed.u);
  if (hi == ed.len) add_vertex(ed.v);
  if (lo == hi && (lo.sign() == 0 || hi == ed.len)) return;  // vertex flag covers it
  auto& list = spans_[e];
  list.push_back({std::move(lo), std::move(hi)});
  std::sort(list.begin(), list.end(),
            [](const Span& a, const Span& b) { return a.lo < b.lo; });
  std::vector<Span> merged;
  for (Span& s : list) {
    if (!merged.empty() && s.lo <= merged.back().hi) {
      if (merged.back().hi < s.hi) merged.back().hi = s.hi;
    } else {
      merged.push_back(s);
    }
  }
  list = std::move(merged);
}

void SlabSet::add_point(const MetricTree& t, const Point& p) {
  ensure_sized(t);
  if (p.is_vertex())
    add_vertex(p.vertex_id());
  else
    add_span(t, p.edge_id(), p.offset(), p.offset());
}

void SlabSet::add_path(const MetricTree& t, const Point& a, const Point& b) {
  ensure_sized(t);
  if (a == b) {
    add_point(t, a);
    return;
  }
  if (a.is_vertex()) add_vertex(a.vertex_id());
  if (b.is_vertex()) add_vertex(b.vertex_id());
  for (const PathLeg& leg : geodesic_legs(t, a, b))
    add_span(t, leg.edge, leg.off_from, leg.off_to);
}

void SlabSet::unite(const MetricTree& t, const SlabSet& o) {
  ensure_sized(t);
  for (int v = 0; v < static_cast<int>(o.vflag_.size()); ++v)
    if (o.vflag_[v]) add_vertex(v);
  for (int e = 0; e < static_cast<int>(o.spans_.size()); ++e)
    for (const Span& s : o.spans_[e]) add_span(t, e, s.lo, s.hi);
}

SlabSet SlabSet::intersect(const MetricTree& t, const SlabSet& a, const SlabSet& b) {
  SlabSet out(t);
  int nv = t.vertex_count();
  for (int v = 0; v < nv; ++v)
    if (v < static_cast<int>(a.vflag_.size()) && v < static_cast<int>(b.vflag_.size()) &&
        a.vflag_[v] && b.vflag_[v])
      out.vflag_[v] = 1;
  for (int e = 0; e < t.edge_count(); ++e) {
    if (e >= static_cast<int>(a.spans_.size()) || e >= static_cast<int>(b.spans_.size())) continue;
    const TreeEdge& ed = t.edge(e);
    for (const Span& x : a.spans_[e]) {
      for (const Span& y : b.spans_[e]) {
        Scalar lo = max(x.lo, y.lo);
        Scalar hi = min(x.hi, y.hi);
        if (hi < lo) continue;
        if (lo == hi && (lo.sign() == 0 || hi == ed.len)) continue;  // vertex flags decide
        out.spans_[e].push_back({std::move(lo), std::move(hi)});
      }
    }
    std::sort(out.spans_[e].begin(), out.spans_[e].end(),
              [](const Span& p, const Span& q) { return p.lo < q.lo; });
  }
  return out;
}

bool SlabSet::subset_of(const SlabSet& o) const {
  for (int v = 0; v < static_cast<int>(vflag_.size()); ++v) {
    if (!vflag_[v]) continue;
    if (v >= static_cast<int>(o.vflag_.size()) || !o.vflag_[v]) return false;
  }
  for (int e = 0; e < static_cast<int>(spans_.size()); ++e) {
    for (const Span& s : spans_[e]) {
      bool covered = false;
      if (e < static_cast<int>(o.spans_.size())) {
        for (const Span& w : o.spans_[e]) {
          if (w.lo <= s.lo && s.hi <= w.hi) {
            covered = true;
            break;
          }
        }
      }
      if (!covered) return false;
    }
  }
  return true;
}

bool SlabSet::operator==(const SlabSet& o) const {
  return subset_of(o) && o.subset_of(*this);
}

Scalar SlabSet::measure() const {
  Scalar m;
  for (const auto& list : spans_)
    for (const Span& s : list) m += s.hi - s.lo;
  return m;
}

std::vector<SlabSet> SlabSet::components(const MetricTree& t) const {
  // Union-find over atoms: vertices 0..nv-1, then one atom per span.
  int nv = t.vertex_count();
  int n_span = 0;
  for (const auto& list : spans_) n_span += static_cast<int>(list.size());
  std::vector<int> uf(nv + n_span);
  for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto link = [&](int x, int y) { uf[find(x)] = find(y); };

  int span_base = nv;
  std::vector<std::pair<int, int>> span_atoms;  // (edge, index in list)
  for (int e = 0; e < static_cast<int>(spans_.size()); ++e) {
    const TreeEdge& ed = t.edge(e);
    for (int i = 0; i < static_cast<int>(spans_[e].size()); ++i) {
      const Span& s = spans_[e][i];
      int atom = span_base + static_cast<int>(span_atoms.size());
      span_atoms.emplace_back(e, i);
      if (s.lo.sign() == 0) link(atom, ed.u);
      if (s.hi == ed.len) link(atom, ed.v);
    }
  }

  // Group atoms in first-appearance order: vertices, then spans.
  std::vector<int> group_of(uf.size(), -1);
  std::vector<SlabSet> out;
  auto group_for = [&](int atom) {
    int r = find(atom);
    if (group_of[r] < 0) {
      group_of[r] = static_cast<int>(out.size());
      out.emplace_back(t);
    }
    return group_of[r];
  };
  for (int v = 0; v < nv; ++v)
    if (vflag_[v]) out[group_for(v)].vflag_[v] = 1;
  for (int k = 0; k < n_span; ++k) {
    auto [e, i] = span_atoms[k];
    const Span& s = spans_[e][i];
    out[group_for(span_base + k)].spans_[e].push_back(s);
  }
  return out;
}

bool SlabSet::meets(const MetricTree& t, const Direction& d) const {
  const Point& p = d.at;
  const TreeEdge& ed = t.edge(d.germ.edge);
  if (p.is_vertex()) {
    int v = p.vertex_id();
    require(v == ed.u || v == ed.v, Errc::bad_index, "germ not anchored at its point");
    if (d.germ.edge >= static_cast<int>(spans_.size())) return false;
    bool from_u = (t.germ_tail(d.germ) == ed.u);
    for (const Span& s : spans_[d.germ.edge]) {
      if (from_u && s.lo.sign() == 0 && s.hi.sign() > 0) return true;
      if (!from_u && s.hi == ed.len && s.lo < ed.len) return true;
    }
    return false;
  }
  require(p.edge_id() == d.germ.edge, Errc::bad_index, "germ not anchored at its point");
  if (d.germ.edge >= static_cast<int>(spans_.size())) return false;
  for (const Span& s : spans_[d.germ.edge]) {
    if (s.lo <= p.offset() && p.offset() <= s.hi) {
      if (d.germ.to_v && s.hi > p.offset()) return true;
      if (!d.germ.to_v && s.lo < p.offset()) return true;
    }
  }
  return false;
}

int SlabSet::germ_count(const MetricTree& t, const Point& p) const {
  require(contains(p), Errc::outside_host, "germ count at a point outside the set");
  int n = 0;
  for (const Direction& d : directions_at(t, p))
    if (meets(t, d)) ++n;
  return n;
}

std::vector<Point> SlabSet::boundary_candidates(const MetricTree& t) const {
  std::vector<Point> pts;
  for (int v = 0; v < static_cast<int>(vflag_.size()); ++v)
    if (vflag_[v]) pts.push_back(Point::vertex(v));
  for (int e = 0; e < static_cast<int>(spans_.size()); ++e) {
    for (const Span& s : spans_[e]) {
      pts.push_back(Point::interior(t, e, s.lo));
      pts.push_back(Point::interior(t, e, s.hi));
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<Point> SlabSet::extremal_points(const MetricTree& t) const {
  std::vector<Point> out;
  for (const Point& p : boundary_candidates(t))
    if (germ_count(t, p) <= 1) out.push_back(p);
  return out;
}

std::vector<Point> SlabSet::branch_points(const MetricTree& t) const {
  std::vector<Point> out;
  for (int v = 0; v < static_cast<int>(vflag_.size()); ++v)
    if (vflag_[v] && germ_count(t, Point::vertex(v)) >= 3) out.push_back(Point::vertex(v));
  return out;
}

std::optional<Point> SlabSet::single_point(const MetricTree& t) const {
  std::optional<Point> found;
  for (int v = 0; v < static_cast<int>(vflag_.size()); ++v) {
    if (!vflag_[v]) continue;
    if (found) return std::nullopt;
    found = Point::vertex(v);
  }
  for (int e = 0; e < static_cast<int>(spans_.size()); ++e) {
    for (const Span& s : spans_[e]) {
      if (found || s.lo != s.hi) return std::nullopt;
      found = Point::interior(t, e, s.lo);
    }
  }
  return found;
}

Subtree Subtree::hull(const MetricTree& t, int component, const std::vector<Point>& pts) {
  require(!pts.empty(), Errc::bad_index, "hull of an empty point set");
  SlabSet s(t);
  for (const Point& p : pts) s.add_path(t, pts.front(), p);
  return from_slab(t, component, std::move(s));
}

Subtree Subtree::whole(const MetricTree& t, int component) {
  SlabSet s(t);
  for (int v = 0; v < t.vertex_count(); ++v) s.add_vertex(v);
  for (int e = 0; e < t.edge_count(); ++e) s.add_span(t, e, Scalar(0), t.edge(e).len);
  return from_slab(t, component, std::move(s));
}

Subtree Subtree::from_slab(const MetricTree& t, int component, SlabSet s) {
  require(!s.empty(), Errc::internal_error, "subtree from an empty slab");
  Subtree out;
  out.component_ = component;
  out.slab_ = std::move(s);
  out.gens_ = out.slab_.extremal_points(t);
  require(!out.gens_.empty(), Errc::internal_error, "subtree with no extremal points");
  return out;
}

const Point& Subtree::the_point() const {
  require(degenerate(), Errc::internal_error, "the_point on a non-degenerate subtree");
  return gens_.front();
}

bool Subtree::contains_subtree(const Subtree& o) const {
  return component_ == o.component_ && o.slab_.subset_of(slab_);
}

Scalar Subtree::diameter(const MetricTree& t) const {
  Scalar d;
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j) d = max(d, dist(t, gens_[i], gens_[j]));
  return d;
}

bool Subtree::is_extremal(const MetricTree& t, const Point& p) const {
  return contains(p) && germ_count(t, p) <= 1;
}

std::optional<Subtree> intersect(const MetricTree& t, const Subtree& a, const Subtree& b) {
  require(a.component() == b.component(), Errc::host_mismatch,
          "intersecting subtrees of different components");
  SlabSet s = SlabSet::intersect(t, a.slab(), b.slab());
  if (s.empty()) return std::nullopt;
  return Subtree::from_slab(t, a.component(), std::move(s));
}

}  // namespace siso
