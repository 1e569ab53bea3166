#include "siso/tree.hpp"

#include <algorithm>
#include <deque>

#include "siso/errors.hpp"

namespace siso {

MetricTree::MetricTree(int vertex_count, std::vector<TreeEdge> edges)
    : nv_(vertex_count), edges_(std::move(edges)) {
  require(nv_ >= 1, Errc::bad_index, "tree needs at least one vertex");
  adj_.assign(nv_, {});
  for (int e = 0; e < edge_count(); ++e) {
    const TreeEdge& ed = edges_[e];
    require(ed.u >= 0 && ed.u < nv_ && ed.v >= 0 && ed.v < nv_, Errc::bad_index,
            "edge " + std::to_string(e) + " endpoint out of range");
    require(ed.u != ed.v, Errc::cycle_detected,
            "edge " + std::to_string(e) + " is a loop");
    require(ed.len.sign() > 0, Errc::non_positive_length,
            "edge " + std::to_string(e) + " has non-positive length");
    adj_[ed.u].push_back(Germ{e, true});
    adj_[ed.v].push_back(Germ{e, false});
  }
  parent_.assign(nv_, -1);
  parent_edge_.assign(nv_, -1);
  depth_.assign(nv_, -1);
  std::deque<int> q{0};
  depth_[0] = 0;
  int seen = 1;
  while (!q.empty()) {
    int w = q.front();
    q.pop_front();
    for (Germ g : adj_[w]) {
      int h = germ_head(g);
      if (depth_[h] >= 0) continue;
      depth_[h] = depth_[w] + 1;
      parent_[h] = w;
      parent_edge_[h] = g.edge;
      ++seen;
      q.push_back(h);
    }
  }
  require(seen == nv_, Errc::disconnected, "tree vertex set is not connected");
  require(edge_count() == nv_ - 1, Errc::cycle_detected, "tree edge set contains a cycle");
}

const TreeEdge& MetricTree::edge(int e) const {
  require(e >= 0 && e < edge_count(), Errc::bad_index, "edge id out of range");
  return edges_[e];
}

const std::vector<MetricTree::Germ>& MetricTree::germs_at(int v) const {
  check_vertex(v);
  return adj_[v];
}

void MetricTree::check_vertex(int v) const {
  require(v >= 0 && v < nv_, Errc::bad_index, "vertex id out of range");
}

Scalar MetricTree::vdist(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Scalar d;
  while (depth_[u] > depth_[v]) {
    d += edges_[parent_edge_[u]].len;
    u = parent_[u];
  }
  while (depth_[v] > depth_[u]) {
    d += edges_[parent_edge_[v]].len;
    v = parent_[v];
  }
  while (u != v) {
    d += edges_[parent_edge_[u]].len + edges_[parent_edge_[v]].len;
    u = parent_[u];
    v = parent_[v];
  }
  return d;
}

Scalar MetricTree::total_length() const {
  Scalar d;
  for (const TreeEdge& e : edges_) d += e.len;
  return d;
}

void MetricTree::vertex_path(int u, int v, std::vector<int>& path,
                             std::vector<int>& path_edges) const {
  check_vertex(u);
  check_vertex(v);
  path.clear();
  path_edges.clear();
  std::vector<int> left, left_e, right, right_e;
  int a = u, b = v;
  while (depth_[a] > depth_[b]) {
    left.push_back(a);
    left_e.push_back(parent_edge_[a]);
    a = parent_[a];
  }
  while (depth_[b] > depth_[a]) {
    right.push_back(b);
    right_e.push_back(parent_edge_[b]);
    b = parent_[b];
  }
  while (a != b) {
    left.push_back(a);
    left_e.push_back(parent_edge_[a]);
    a = parent_[a];
    right.push_back(b);
    right_e.push_back(parent_edge_[b]);
    b = parent_[b];
  }
  path = left;
  path.push_back(a);
  for (size_t i = right.size(); i-- > 0;) path.push_back(right[i]);
  path_edges = left_e;
  for (size_t i = right_e.size(); i-- > 0;) path_edges.push_back(right_e[i]);
}

Point Point::vertex(int v) {
  require(v >= 0, Errc::bad_index, "negative vertex id");
  Point p;
  p.vertex_ = v;
  return p;
}

Point Point::interior(const MetricTree& t, int e, Scalar off) {
  const TreeEdge& ed = t.edge(e);
  require(off.sign() >= 0 && off <= ed.len, Errc::outside_host,
          "offset " + off.str() + " outside edge " + std::to_string(e));
  if (off.sign() == 0) return vertex(ed.u);
  if (off == ed.len) return vertex(ed.v);
  Point p;
  p.edge_ = e;
  p.off_ = std::move(off);
  return p;
}

int Point::vertex_id() const {
  require(is_vertex(), Errc::internal_error, "not a vertex point");
  return vertex_;
}

int Point::edge_id() const {
  require(!is_vertex(), Errc::internal_error, "not an edge point");
  return edge_;
}

const Scalar& Point::offset() const {
  require(!is_vertex(), Errc::internal_error, "not an edge point");
  return off_;
}

int Point::compare(const Point& a, const Point& b) {
  if (a.is_vertex() != b.is_vertex()) return a.is_vertex() ? -1 : 1;
  if (a.is_vertex()) return a.vertex_ == b.vertex_ ? 0 : (a.vertex_ < b.vertex_ ? -1 : 1);
  if (a.edge_ != b.edge_) return a.edge_ < b.edge_ ? -1 : 1;
  if (a.off_ == b.off_) return 0;
  return a.off_ < b.off_ ? -1 : 1;
}

std::string Point::str() const {
  if (is_vertex()) return "v" + std::to_string(vertex_);
  return "e" + std::to_string(edge_) + "@" + off_.str();
}

Scalar dist(const MetricTree& t, const Point& a, const Point& b) {
  if (a == b) return Scalar(0);
  if (a.is_vertex() && b.is_vertex()) return t.vdist(a.vertex_id(), b.vertex_id());
  if (!a.is_vertex()) {
    if (!b.is_vertex() && a.edge_id() == b.edge_id()) return abs(a.offset() - b.offset());
    const TreeEdge& e = t.edge(a.edge_id());
    Scalar via_u = a.offset() + dist(t, Point::vertex(e.u), b);
    Scalar via_v = (e.len - a.offset()) + dist(t, Point::vertex(e.v), b);
    return min(via_u, via_v);
  }
  return dist(t, b, a);
}

bool on_segment(const MetricTree& t, const Point& z, const Point& a, const Point& b) {
  return dist(t, a, z) + dist(t, z, b) == dist(t, a, b);
}

namespace {

Scalar vertex_offset(const TreeEdge& e, int v) {
  return v == e.u ? Scalar(0) : e.len;
}

}  // namespace

std::vector<PathLeg> geodesic_legs(const MetricTree& t, const Point& a, const Point& b) {
  std::vector<PathLeg> legs;
  if (!a.is_vertex() && !b.is_vertex() && a.edge_id() == b.edge_id()) {
    legs.push_back({a.edge_id(), a.offset(), b.offset()});
    return legs;
  }
  Scalar total = dist(t, a, b);
  int va, vb;
  if (a.is_vertex()) {
    va = a.vertex_id();
  } else {
    const TreeEdge& e = t.edge(a.edge_id());
    bool via_u = a.offset() + dist(t, Point::vertex(e.u), b) == total;
    va = via_u ? e.u : e.v;
    legs.push_back({a.edge_id(), a.offset(), vertex_offset(e, va)});
  }
  if (b.is_vertex()) {
    vb = b.vertex_id();
  } else {
    const TreeEdge& e = t.edge(b.edge_id());
    bool via_u = b.offset() + dist(t, Point::vertex(e.u), a) == total;
    vb = via_u ? e.u : e.v;
  }
  std::vector<int> path, path_edges;
  t.vertex_path(va, vb, path, path_edges);
  for (size_t i = 0; i < path_edges.size(); ++i) {
    const TreeEdge& e = t.edge(path_edges[i]);
    legs.push_back({path_edges[i], vertex_offset(e, path[i]), vertex_offset(e, path[i + 1])});
  }
  if (!b.is_vertex()) {
    const TreeEdge& e = t.edge(b.edge_id());
    legs.push_back({b.edge_id(), vertex_offset(e, vb), b.offset()});
  }
  return legs;
}

Point point_at(const MetricTree& t, const Point& a, const Point& b, const Scalar& s) {
  Scalar total = dist(t, a, b);
  require(s.sign() >= 0 && s <= total, Errc::outside_host,
          "distance " + s.str() + " not within segment of length " + total.str());
  if (s.sign() == 0) return a;
  if (s == total) return b;
  Scalar acc;
  for (const PathLeg& leg : geodesic_legs(t, a, b)) {
    Scalar len = abs(leg.off_to - leg.off_from);
    if (s <= acc + len) {
      Scalar inside = s - acc;
      Scalar off = leg.off_from < leg.off_to ? leg.off_from + inside : leg.off_from - inside;
      return Point::interior(t, leg.edge, off);
    }
    acc += len;
  }
  fail(Errc::internal_error, "geodesic shorter than its own length");
}

Direction first_germ(const MetricTree& t, const Point& from, const Point& to) {
  require(from != to, Errc::bad_index, "no germ from a point to itself");
  std::vector<PathLeg> legs = geodesic_legs(t, from, to);
  const PathLeg& first = legs.front();
  return Direction{from, MetricTree::Germ{first.edge, first.off_from < first.off_to}};
}

std::vector<Direction> directions_at(const MetricTree& t, const Point& p) {
  std::vector<Direction> out;
  if (p.is_vertex()) {
    for (MetricTree::Germ g : t.germs_at(p.vertex_id())) out.push_back({p, g});
  } else {
    out.push_back({p, {p.edge_id(), false}});
    out.push_back({p, {p.edge_id(), true}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace siso
