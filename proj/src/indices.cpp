#include "siso/indices.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "siso/errors.hpp"

namespace siso {

namespace {

Word free_reduce(Word w) {
  Word out;
  for (FormalLetter x : w) {
    if (!out.empty() && out.back() == x.inverse())
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

// A point of the slab strictly beyond z along g; z must sit on the germ's
// edge (or be its tail vertex).
std::optional<Point> germ_witness(const MetricTree& t, const SlabSet& slab,
                                  const Point& z, MetricTree::Germ g) {
  Scalar len = t.edge(g.edge).len;
  Scalar pos;
  if (z.is_vertex()) {
    if (z.vertex_id() != t.germ_tail(g)) return std::nullopt;
    pos = g.to_v ? Scalar(0) : len;
  } else {
    if (z.edge_id() != g.edge) return std::nullopt;
    pos = z.offset();
  }
  Scalar half = Scalar::ratio(1, 2);
  for (const auto& sp : slab.spans(g.edge)) {
    if (pos < sp.lo || sp.hi < pos) continue;
    if (g.to_v && pos < sp.hi)
      return Point::interior(t, g.edge, (pos + sp.hi) * half);
    if (!g.to_v && sp.lo < pos)
      return Point::interior(t, g.edge, (pos + sp.lo) * half);
  }
  return std::nullopt;
}

}  // namespace

int OrbitGraph::find(const Loc& z) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].at == z) return static_cast<int>(i);
  return -1;
}

OrbitGraph orbit_graph(const System& s, const Loc& x, int r, long long budget) {
  require(r >= 0, Errc::bad_index, "radius must be nonnegative");
  require(s.forest().tree(x.component).vertex_count() > 0, Errc::bad_index,
          "empty component");
  OrbitGraph g;
  g.origin = x;
  g.radius = r;
  g.nodes.push_back({x, 0});
  std::map<std::pair<int, Point>, int> seen{{{x.component, x.p}, 0}};
  std::vector<Word> root_word(1);
  std::set<std::tuple<int, int, int>> edge_set;
  long long work = 0;
  for (size_t head = 0; head < g.nodes.size(); ++head) {
    // nodes only grow at the back, so indexing by head stays valid
    Loc z = g.nodes[head].at;
    int depth = g.nodes[head].depth;
    for (FormalLetter f : s.formal_letters()) {
      if (!s.defined_at(f, z)) continue;
      require(++work <= budget, Errc::budget_exceeded, "orbit budget");
      Loc w{s.image_of(f).component(), s.apply(f, z.p)};
      auto it = seen.find({w.component, w.p});
      int wid;
      bool fresh = it == seen.end();
      if (fresh) {
        if (depth + 1 > r) continue;
        wid = static_cast<int>(g.nodes.size());
        g.nodes.push_back({w, depth + 1});
        seen.emplace(std::make_pair(w.component, w.p), wid);
        Word ww = root_word[head];
        ww.push_back(f);
        root_word.push_back(std::move(ww));
      } else {
        wid = it->second;
      }
      int from = f.inv ? wid : static_cast<int>(head);
      int to = f.inv ? static_cast<int>(head) : wid;
      if (!edge_set.emplace(from, to, f.idx).second) continue;
      g.edges.push_back({from, to, f.idx});
      if (!fresh) {
        ++g.cycle_edges;
        if (static_cast<int>(g.cycles.size()) < OrbitGraph::cycle_cap) {
          Word cyc = root_word[from];
          cyc.push_back({f.idx, false});
          Word back = word_inverse(root_word[to]);
          cyc.insert(cyc.end(), back.begin(), back.end());
          g.cycles.push_back(free_reduce(std::move(cyc)));
        }
      }
    }
  }
  return g;
}

DirectionGraph direction_graph(const System& s, const Loc& x, int r,
                               long long budget) {
  DirectionGraph dg;
  dg.orbit = orbit_graph(s, x, r, budget);
  std::map<std::pair<int, MetricTree::Germ>, int> id;
  for (size_t k = 0; k < dg.orbit.nodes.size(); ++k) {
    const Loc& z = dg.orbit.nodes[k].at;
    for (const Direction& d : directions_at(s.forest().tree(z.component), z.p)) {
      id[{static_cast<int>(k), d.germ}] = static_cast<int>(dg.nodes.size());
      dg.nodes.push_back({static_cast<int>(k), d.germ});
    }
  }
  std::set<std::tuple<int, int, int>> link_set;
  for (const OrbitGraph::Edge& e : dg.orbit.edges) {
    FormalLetter a{e.letter, false};
    const Loc& zu = dg.orbit.nodes[e.from].at;
    const Loc& zv = dg.orbit.nodes[e.to].at;
    const MetricTree& tu = s.forest().tree(zu.component);
    const MetricTree& tv = s.forest().tree(zv.component);
    const Subtree& base = s.base_of(a);
    for (const Direction& d : directions_at(tu, zu.p)) {
      if (!base.meets(tu, {zu.p, d.germ})) continue;
      auto w = germ_witness(tu, base.slab(), zu.p, d.germ);
      require(w.has_value(), Errc::internal_error, "germ met without witness");
      Direction out = first_germ(tv, zv.p, s.apply(a, *w));
      int from = id.at({e.from, d.germ});
      int to = id.at({e.to, out.germ});
      if (link_set.emplace(from, to, e.letter).second)
        dg.links.push_back({from, to, e.letter});
    }
  }
  // Component counts ball by ball; a link needs both orbit endpoints inside.
  for (int k = 0; k <= r; ++k) {
    std::vector<int> up(dg.nodes.size());
    for (size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i);
    auto find = [&](int a1) {
      while (up[a1] != a1) a1 = up[a1] = up[up[a1]];
      return a1;
    };
    auto inside = [&](int dn) {
      return dg.orbit.nodes[dg.nodes[dn].orbit_node].depth <= k;
    };
    for (const auto& ln : dg.links)
      if (inside(ln.from) && inside(ln.to)) up[find(ln.from)] = find(ln.to);
    std::set<int> roots;
    for (size_t i = 0; i < dg.nodes.size(); ++i)
      if (inside(static_cast<int>(i))) roots.insert(find(static_cast<int>(i)));
    dg.counts_by_radius.push_back(static_cast<int>(roots.size()));
  }
  return dg;
}

namespace {

IndexReport report_from(const System& s, const DirectionGraph& dg) {
  IndexReport rep;
  rep.x = dg.orbit.origin;
  rep.radius = dg.orbit.radius;
  rep.direction_counts = dg.counts_by_radius;
  rep.geometric = dg.counts_by_radius.back() - 2;
  int r = dg.orbit.radius;
  rep.stable = r >= 1 && dg.counts_by_radius[r] == dg.counts_by_radius[r - 1];

  // Boundary growth: nodes one layer in that still sprout outward.
  std::set<int> growing;
  for (const OrbitGraph::Edge& e : dg.orbit.edges) {
    int df = dg.orbit.nodes[e.from].depth, dt = dg.orbit.nodes[e.to].depth;
    if (df == r - 1 && dt == r) growing.insert(e.from);
    if (dt == r - 1 && df == r) growing.insert(e.to);
  }
  rep.q_estimate = static_cast<int>(growing.size()) - 2;

  rep.hypothesis = true;
  for (const OrbitGraph::Node& n : dg.orbit.nodes) {
    for (FormalLetter f : s.formal_letters()) {
      if (!s.defined_at(f, n.at)) continue;
      const Subtree& base = s.base_of(f);
      if (base.is_extremal(s.forest().tree(n.at.component), n.at.p)) {
        rep.hypothesis = false;
        rep.hypothesis_witness = s.forest().name(n.at.component) + ":" +
                                 n.at.p.str() + " extremal in the base of " +
                                 s.formal_name(f);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace

IndexReport point_index(const System& s, const Loc& x, int r, long long budget) {
  return report_from(s, direction_graph(s, x, r, budget));
}

std::vector<Loc> singular_points(const System& s) {
  std::vector<Loc> out;
  for (FormalLetter f : s.formal_letters()) {
    const Subtree& base = s.base_of(f);
    const MetricTree& t = s.forest().tree(base.component());
    for (const Point& p : base.slab().extremal_points(t))
      out.push_back({base.component(), p});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IndexBoundReport index_bound_report(const System& s, const std::vector<Loc>& pts,
                                    int r, long long budget, int rank) {
  IndexBoundReport out;
  out.rank = rank > 0 ? rank : gamma_graph(s).b1();
  out.radius = r;
  out.bound = 2 * out.rank - 2;
  std::vector<DirectionGraph> kept;
  for (const Loc& z : pts) {
    bool dup = false;
    for (const DirectionGraph& dg : kept)
      if (dg.orbit.find(z) >= 0) {
        dup = true;
        break;
      }
    if (dup) {
      out.skipped.push_back(z);
      continue;
    }
    kept.push_back(direction_graph(s, z, r, budget));
    IndexReport rep = report_from(s, kept.back());
    out.geometric_sum += rep.geometric;
    if (rep.hypothesis && rep.q_estimate > 0) out.q_sum += rep.q_estimate;
    out.points.push_back(std::move(rep));
  }
  out.geometric_within = out.geometric_sum <= out.bound;
  out.q_within = out.q_sum <= out.bound;
  return out;
}

}  // namespace siso
