#include "siso/induction.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "siso/errors.hpp"
#include "siso/words.hpp"

namespace siso {

namespace {

GraphMap identity_fold(const System& s) {
  GraphMap g;
  for (int c = 0; c < s.forest().size(); ++c) g.vertex_image.push_back(c);
  for (int li = 0; li < s.letter_count(); ++li)
    g.edge_image.push_back({FormalLetter{li, false}});
  return g;
}

// The piece a degenerate base lands in: the one keeping the residual germ
// class at a cut point, otherwise the first piece containing the point.
int designated_piece(const Surgery& sg, int comp, const Point& p) {
  int first = -1;
  bool cut = sg.is_cut_point({comp, p});
  for (int P : sg.pieces_of(comp)) {
    if (!sg.region_old(P).contains(p)) continue;
    if (first < 0) first = P;
    if (cut && sg.residual_at(P, {comp, p})) return P;
  }
  require(first >= 0, Errc::internal_error, "point lost by surgery");
  return first;
}

struct RebuiltLetters {
  std::vector<Letter> letters;
  std::vector<FormalLetter> parents;
  std::vector<std::string> dropped;
  std::vector<std::string> shared_base_notes;
};

// Maximal restrictions of every letter to pairs of pieces. Trimming keeps
// restrictions that collapse to a point; splitting discards them (they are
// an artifact of the cut) except that a base that already was a point
// follows the residual side of the cut.
RebuiltLetters rebuild_letters(const System& s, const Surgery& surg,
                               bool keep_degenerate,
                               const std::vector<Loc>* cut_locs) {
  const Forest& f = s.forest();
  const Forest& nf = surg.result();
  RebuiltLetters out;
  for (int li = 0; li < s.letter_count(); ++li) {
    const Letter& L = s.letter(li);
    const Subtree& dom = L.iso.dom();
    const Subtree& im = L.iso.im();
    const MetricTree& td = f.tree(dom.component());
    const MetricTree& ti = f.tree(im.component());

    struct Frag {
      int P, Q;
      Subtree d_old, i_old;
    };
    std::vector<Frag> frags;
    for (int P : surg.pieces_of(dom.component())) {
      SlabSet d1 = SlabSet::intersect(td, dom.slab(), surg.region_old(P));
      if (d1.empty()) continue;
      Subtree D1 = Subtree::from_slab(td, dom.component(), std::move(d1));
      Subtree I1 = L.iso.apply(f, D1);
      for (int Q : surg.pieces_of(im.component())) {
        SlabSet i2 = SlabSet::intersect(ti, I1.slab(), surg.region_old(Q));
        if (i2.empty()) continue;
        Subtree I2 = Subtree::from_slab(ti, im.component(), std::move(i2));
        Subtree D2 = L.iso.apply_inverse(f, I2);
        if (D2.degenerate() && !keep_degenerate) {
          if (!dom.degenerate()) continue;
          if (P != designated_piece(surg, dom.component(), dom.the_point()))
            continue;
          if (Q != designated_piece(surg, im.component(), im.the_point()))
            continue;
        }
        frags.push_back({P, Q, std::move(D2), std::move(I2)});
      }
    }
    if (frags.empty()) {
      out.dropped.push_back(L.name);
      continue;
    }
    // at most one fragment per piece pair, so this order is total
    std::sort(frags.begin(), frags.end(), [](const Frag& x, const Frag& y) {
      return x.P != y.P ? x.P < y.P : x.Q < y.Q;
    });
    bool multi = frags.size() > 1;
    for (size_t k = 0; k < frags.size(); ++k) {
      const Frag& fr = frags[k];
      std::vector<Point> aps = fr.d_old.generators();
      for (const Point& bp : fr.d_old.branch_points(td)) aps.push_back(bp);
      std::vector<AnchorPair> anchors;
      for (const Point& p : aps)
        anchors.push_back({surg.to_new(fr.P, p),
                           surg.to_new(fr.Q, L.iso.apply(f, p))});
      PartialIso iso(nf, surg.transport(f, fr.P, fr.d_old),
                     surg.transport(f, fr.Q, fr.i_old), std::move(anchors));
      out.letters.push_back(
          {multi ? L.name + "." + std::to_string(k) : L.name, std::move(iso)});
      out.parents.push_back({li, false});
    }
    if (cut_locs && multi) {
      int touched = 0;
      for (const Loc& loc : *cut_locs) {
        if (loc.component == dom.component() && dom.contains(loc.p)) ++touched;
        if (loc.component == im.component() && im.contains(loc.p)) ++touched;
      }
      if (touched >= 2)
        out.shared_base_notes.push_back(
            L.name + ": base touched by " + std::to_string(touched) +
            " cut points, subdivided in one pass");
    }
  }
  return out;
}

GraphMap fold_from(const Surgery& surg, const std::vector<FormalLetter>& parents) {
  GraphMap g;
  for (int p = 0; p < surg.piece_count(); ++p)
    g.vertex_image.push_back(surg.origin_of(p));
  for (const FormalLetter& a : parents) g.edge_image.push_back({a});
  return g;
}

}  // namespace

StepMetrics measure_system(const System& s) {
  StepMetrics m;
  const Forest& f = s.forest();
  m.components = f.size();
  m.total_length = f.total_length();
  m.max_diameter = Scalar(0);
  for (int c = 0; c < f.size(); ++c) {
    Scalar d = Subtree::whole(f.tree(c), c).diameter(f.tree(c));
    if (m.max_diameter < d) m.max_diameter = d;
  }
  m.base_measure = s.total_base_measure();
  return m;
}

RipsResult rips_step(const System& s) {
  const Forest& f = s.forest();
  StepMetrics before = measure_system(s);
  auto fl = s.formal_letters();

  std::vector<SlabSet> region;
  for (int c = 0; c < f.size(); ++c) region.emplace_back(f.tree(c));
  for (size_t i = 0; i < fl.size(); ++i)
    for (size_t j = i + 1; j < fl.size(); ++j) {
      const Subtree& A = s.base_of(fl[i]);
      const Subtree& B = s.base_of(fl[j]);
      if (A.component() != B.component()) continue;
      const MetricTree& t = f.tree(A.component());
      if (auto M = intersect(t, A, B)) region[A.component()].unite(t, M->slab());
    }

  bool halt = true;
  for (int c = 0; c < f.size(); ++c)
    if (!(region[c] == Subtree::whole(f.tree(c), c).slab())) {
      halt = false;
      break;
    }
  if (halt)
    return {s, true, identity_fold(s), {}, std::nullopt, before, before};

  Surgery surg = Surgery::trim(f, region);
  RebuiltLetters rl = rebuild_letters(s, surg, true, nullptr);
  System ns(surg.result(), std::move(rl.letters), s.rank_hint());
  StepMetrics after = measure_system(ns);
  return {std::move(ns), false, fold_from(surg, rl.parents),
          std::move(rl.dropped), std::move(surg), before, after};
}

std::vector<SplittingPoint> find_splitting_points(const System& s) {
  const Forest& f = s.forest();
  auto fl = s.formal_letters();
  std::vector<SplittingPoint> out;
  for (int c = 0; c < f.size(); ++c) {
    const MetricTree& t = f.tree(c);
    std::vector<Point> cands;
    for (const auto& a : fl)
      if (s.base_of(a).component() == c)
        for (const Point& g : s.base_of(a).generators()) cands.push_back(g);
    for (int v = 0; v < t.vertex_count(); ++v)
      if (t.degree(v) >= 3) cands.push_back(Point::vertex(v));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    for (const Point& x : cands) {
      int deg = x.is_vertex() ? t.degree(x.vertex_id()) : 2;
      if (deg < 2) continue;  // extremal in its component
      for (const auto& a0 : fl) {
        const Subtree& B0 = s.base_of(a0);
        if (B0.component() != c || !B0.contains(x)) continue;
        if (B0.germ_count(t, x) != 1) continue;  // needs a lone inward germ
        Direction d;
        bool found = false;
        for (const Direction& dd : directions_at(t, x))
          if (B0.meets(t, dd)) {
            d = dd;
            found = true;
            break;
          }
        require(found, Errc::internal_error, "extremal germ not found");
        std::vector<FormalLetter> others;
        for (const auto& b : fl) {
          if (b == a0) continue;
          const Subtree& Bb = s.base_of(b);
          if (Bb.component() != c || !Bb.contains(x)) continue;
          if (Bb.meets(t, d)) others.push_back(b);
        }
        if (others.size() != 1) continue;
        if (s.base_of(others[0]).germ_count(t, x) < 2) continue;
        out.push_back({{c, x}, d, a0, others[0]});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SplittingPoint& a, const SplittingPoint& b) {
    if (!(a.at == b.at)) return a.at < b.at;
    if (!(a.dir == b.dir)) return a.dir < b.dir;
    return a.a0 < b.a0;
  });
  return out;
}

namespace {

SplitResult split_worker(const System& s, std::vector<SplittingPoint> used) {
  StepMetrics before = measure_system(s);
  std::map<Loc, std::vector<Direction>> by_loc;
  for (const auto& p : used) by_loc[p.at].push_back(p.dir);
  std::vector<VertexCut> cuts;
  std::vector<Loc> locs;
  for (auto& [at, seps] : by_loc) {
    cuts.push_back({at, seps});
    locs.push_back(at);
  }
  Surgery surg = Surgery::cut(s.forest(), cuts);
  RebuiltLetters rl = rebuild_letters(s, surg, false, &locs);
  System ns(surg.result(), std::move(rl.letters), s.rank_hint());
  StepMetrics after = measure_system(ns);
  return {std::move(ns),       fold_from(surg, rl.parents),
          std::move(used),     std::move(rl.shared_base_notes),
          std::move(surg),     before,
          after};
}

}  // namespace

SplitResult split_at(const System& s, const SplittingPoint& p) {
  auto all = find_splitting_points(s);
  bool ok = false;
  for (const auto& q : all)
    if (q == p) ok = true;
  require(ok, Errc::not_a_splitting_point,
          "the splitting conditions do not hold at " + p.at.str());
  return split_worker(s, {p});
}

SplitResult split_all(const System& s) {
  auto all = find_splitting_points(s);
  if (all.empty()) {
    StepMetrics m = measure_system(s);
    return {s, identity_fold(s), {}, {}, std::nullopt, m, m};
  }
  return split_worker(s, std::move(all));
}

DirectionReport check_surface_directions(const System& s) {
  const Forest& f = s.forest();
  auto fl = s.formal_letters();
  DirectionReport rep;
  rep.pass = true;
  for (int c = 0; c < f.size(); ++c) {
    const MetricTree& t = f.tree(c);
    std::vector<Point> pts;
    for (const auto& a : fl)
      if (s.base_of(a).component() == c)
        for (const Point& g : s.base_of(a).generators()) pts.push_back(g);
    for (int v = 0; v < t.vertex_count(); ++v)
      if (t.degree(v) >= 3) pts.push_back(Point::vertex(v));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const Point& x : pts)
      for (const Direction& d : directions_at(t, x)) {
        DirectionCount dc{{c, x}, d, {}};
        for (const auto& a : fl) {
          const Subtree& B = s.base_of(a);
          if (B.component() == c && B.meets(t, d)) dc.letters.push_back(a);
        }
        if (dc.letters.size() != 2) {
          rep.pass = false;
          if (rep.witness.empty())
            rep.witness = Loc{c, x}.str() + " germ e" +
                          std::to_string(d.germ.edge) +
                          (d.germ.to_v ? "+" : "-") + " has " +
                          std::to_string(dc.letters.size()) + " letters";
        }
        rep.entries.push_back(std::move(dc));
      }
  }
  return rep;
}

const char* step_kind_name(StepKind k) {
  return k == StepKind::trim ? "Rips" : "Split";
}

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::surface: return "Surface";
    case Classification::levitt_evidence: return "LevittEvidence";
    default: return "Unknown";
  }
}

namespace {

Classification classify_nonhalting(const InductionHistory& h) {
  int n = static_cast<int>(h.component_series.size()) - 1;
  if (n <= 0) return Classification::unknown;
  int w = std::min(10, n);
  int inc = 0;
  for (int i = n - w; i < n; ++i)
    if (h.component_series[i + 1] > h.component_series[i]) ++inc;
  bool growth = 10 * inc >= 9 * w;
  bool shrink =
      h.diameter_series.back() * Scalar(2) <= h.diameter_series.front();
  return growth && shrink ? Classification::levitt_evidence
                          : Classification::unknown;
}

}  // namespace

InductionHistory run_induction(const System& s0, const RunConfig& cfg) {
  InductionHistory h;
  h.budget = cfg.max_steps;
  System cur = s0;
  StepMetrics m0 = measure_system(cur);
  h.component_series.push_back(m0.components);
  h.diameter_series.push_back(m0.max_diameter);
  int steps = 0;

  auto record = [&](StepKind kind, System output, GraphMap fold,
                    std::vector<SplittingPoint> sd,
                    std::vector<std::string> dropped, StepMetrics after) {
    h.steps.push_back({kind, cur, output, std::move(fold), std::move(sd),
                       std::move(dropped), after});
    h.component_series.push_back(after.components);
    h.diameter_series.push_back(after.max_diameter);
    cur = std::move(output);
    ++steps;
  };

  bool fixed = false;
  while (steps < cfg.max_steps) {
    RipsResult r = rips_step(cur);
    if (r.halted) {
      fixed = true;
      break;
    }
    record(StepKind::trim, std::move(r.system), std::move(r.fold), {},
           std::move(r.dropped_letters), r.after);
  }
  h.reached_fixed_point = fixed;
  if (!fixed) {
    h.budget_exhausted = true;
    h.classification = classify_nonhalting(h);
    h.note = cfg.max_steps == 0 ? "no budget" : "no fixed point within budget";
    return h;
  }

  h.classification = Classification::surface;
  while (steps < cfg.max_steps) {
    auto pts = find_splitting_points(cur);
    if (pts.empty()) {
      h.note = "no splitting points available";
      break;
    }
    SplitResult sr = cfg.strategy == SplitStrategy::all_simultaneous
                         ? split_all(cur)
                         : split_at(cur, pts.back());
    record(StepKind::split, std::move(sr.system), std::move(sr.fold),
           std::move(sr.used), {}, sr.after);
    while (steps < cfg.max_steps) {
      RipsResult r = rips_step(cur);
      if (r.halted) break;
      record(StepKind::trim, std::move(r.system), std::move(r.fold), {},
             std::move(r.dropped_letters), r.after);
    }
    if (steps >= cfg.max_steps) {
      h.budget_exhausted = true;
      break;
    }
  }
  if (steps >= cfg.max_steps) h.budget_exhausted = true;
  return h;
}

namespace {

struct ReturnBranch {
  Scalar dom_lo, im_lo, length;
};

struct ReturnProbe {
  std::vector<ReturnBranch> branches;  // sorted by domain position
  Scalar covered;
  bool complete = true;
};

// Position of a point along a 2-vertex segment component, from vertex 0.
Scalar segment_pos(const MetricTree& t, const Point& p) {
  require(t.vertex_count() == 2 && t.edge_count() == 1, Errc::internal_error,
          "not a segment component");
  if (!p.is_vertex()) return p.offset();
  return p.vertex_id() == t.edge(0).u ? Scalar(0) : t.edge(0).len;
}

// Forward first-return branches of one segment component: positive letters
// only, breadth-first; a branch is emitted when its image lands back in the
// component. Degenerate branches carry no length and are skipped.
ReturnProbe return_branches(const System& s, int comp) {
  ReturnProbe out;
  out.covered = Scalar(0);
  const MetricTree& t = s.forest().tree(comp);
  int cap = 2 * s.forest().size() + 4;
  std::deque<std::pair<Composition, int>> q;
  for (int li = 0; li < s.letter_count(); ++li) {
    if (s.letter(li).iso.dom().component() != comp) continue;
    Composition c = compose(s, Word{FormalLetter{li, false}});
    if (c.map) q.push_back({std::move(c), 1});
  }
  while (!q.empty()) {
    auto [c, len] = std::move(q.front());
    q.pop_front();
    if (c.map->dom().degenerate()) continue;
    int imc = c.map->im().component();
    if (imc == comp) {
      Scalar dlo = t.edge(0).len, ilo = t.edge(0).len;
      for (const Point& g : c.map->dom().generators()) {
        Scalar o = segment_pos(t, g);
        if (o < dlo) dlo = o;
      }
      for (const Point& g : c.map->im().generators()) {
        Scalar o = segment_pos(t, g);
        if (o < ilo) ilo = o;
      }
      Scalar L = c.map->dom().slab().measure();
      out.covered = out.covered + L;
      out.branches.push_back({std::move(dlo), std::move(ilo), std::move(L)});
      continue;
    }
    if (len >= cap) {
      out.complete = false;
      continue;
    }
    for (int li = 0; li < s.letter_count(); ++li) {
      if (s.letter(li).iso.dom().component() != imc) continue;
      Composition ext = compose_extend(s, c, FormalLetter{li, false});
      if (ext.map) q.push_back({std::move(ext), len + 1});
    }
  }
  std::sort(out.branches.begin(), out.branches.end(),
            [](const ReturnBranch& a, const ReturnBranch& b) {
              return a.dom_lo < b.dom_lo;
            });
  return out;
}

}  // namespace

CompareResult compare_inductions(const IntervalExchange& e0, int steps,
                                 bool corrupt_cut_choice) {
  e0.validate();
  {
    System s0 = iet_to_system(e0);
    RipsResult r0 = rips_step(s0);
    require(r0.halted, Errc::invalid_iet,
            "exchange suspension is not a fixed point of the trimming move");
  }
  CompareResult out;
  IntervalExchange derived = e0;
  IntervalExchange cls = e0;

  for (int i = 1; i <= steps; ++i) {
    CompareStep st;
    st.index = i;
    RauzyStep cstep = rauzy_step(cls);
    st.classical_kind = cstep.kind;
    st.classical_removed = cstep.removed;

    // Suspend the current derived exchange and split once. The classical
    // induction then corresponds to zipping the exiled band back up: the
    // next exchange is the first-return system of the piece holding the
    // left end.
    System cur = iet_to_system(derived);
    {
      RipsResult r0 = rips_step(cur);
      if (!r0.halted) {
        st.detail = "derived suspension is not fixed under trimming";
        out.steps.push_back(std::move(st));
        out.steps_done = i;
        out.first_divergence = "step " + std::to_string(i) + ": " + out.steps.back().detail;
        return out;
      }
    }
    auto pts = find_splitting_points(cur);
    if (pts.empty()) {
      st.detail = "no splitting point in the suspension";
      out.steps.push_back(std::move(st));
      out.steps_done = i;
      out.first_divergence = "step " + std::to_string(i) + ": " + out.steps.back().detail;
      return out;
    }
    Loc target = corrupt_cut_choice ? pts.front().at : pts.back().at;
    SplittingPoint use = pts.front();
    for (const auto& p : pts)
      if (p.at == target) {
        use = p;
        break;
      }

    st.derived_kind = use.a1.inv ? RauzyKind::bottom : RauzyKind::top;
    st.kind_match = st.derived_kind == cstep.kind;

    SplitResult sr = split_at(cur, use);
    const Point marker = Point::vertex(0);
    int nactive = -1;
    for (int P : sr.surgery->pieces_of(0))
      if (sr.surgery->region_old(P).contains(marker)) {
        nactive = P;
        break;
      }
    require(nactive >= 0, Errc::internal_error, "marker lost by the split");

    const MetricTree& at = sr.system.forest().tree(nactive);
    Scalar after_len = at.total_length();
    st.derived_removed = cur.forest().tree(0).total_length() - after_len;
    st.length_match = st.derived_removed == cstep.removed;

    ReturnProbe rp = return_branches(sr.system, nactive);
    IntervalExchange next;
    bool shape_ok = rp.complete && rp.covered == after_len &&
                    static_cast<int>(rp.branches.size()) == cstep.after.size();
    if (shape_ok) {
      std::vector<Scalar> ilos;
      for (const auto& b : rp.branches) {
        next.lengths.push_back(b.length);
        ilos.push_back(b.im_lo);
      }
      for (const auto& b : rp.branches) {
        int slot = 0;
        for (const Scalar& o : ilos)
          if (o < b.im_lo) ++slot;
        next.perm.push_back(slot);
      }
      st.return_match = next.perm == cstep.after.perm;
      if (st.return_match)
        for (int k = 0; k < next.size(); ++k)
          if (!(next.lengths[k] == cstep.after.lengths[k]))
            st.return_match = false;
    }

    if (!st.kind_match)
      st.detail = "kind: classical " +
                  std::string(rauzy_kind_name(st.classical_kind)) +
                  ", derived " + rauzy_kind_name(st.derived_kind);
    else if (!st.length_match)
      st.detail = "removed length: classical " + st.classical_removed.str() +
                  ", derived " + st.derived_removed.str();
    else if (!st.return_match)
      st.detail = shape_ok
                      ? "first-return system disagrees with the classical output"
                      : "first-return system has the wrong shape";

    bool all = st.kind_match && st.length_match && st.return_match;
    out.steps.push_back(std::move(st));
    out.steps_done = i;
    if (!all) {
      out.first_divergence =
          "step " + std::to_string(i) + ": " + out.steps.back().detail;
      return out;
    }
    derived = std::move(next);
    cls = std::move(cstep.after);
  }
  out.match = true;
  return out;
}

}  // namespace siso
