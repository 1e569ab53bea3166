#include "siso/report.hpp"

#include <sstream>

namespace siso {

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string germ_str(MetricTree::Germ g) {
  return "e" + std::to_string(g.edge) + (g.to_v ? "+" : "-");
}

std::string loc_str(const System& s, const Loc& x) {
  return s.forest().name(x.component) + ":" + x.p.str();
}

std::string region_str(const System& s, const Subtree& sub) {
  std::string out = s.forest().name(sub.component()) + " [";
  const auto& gens = sub.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    out += (i ? " " : "") + gens[i].str();
  return out + "]";
}

std::string metrics_arrow(const StepMetrics& a, const StepMetrics& b) {
  std::ostringstream os;
  os << "components = " << a.components << " -> " << b.components << "\n"
     << "total length = " << a.total_length.str() << " -> "
     << b.total_length.str() << "\n"
     << "base measure = " << a.base_measure.str() << " -> "
     << b.base_measure.str() << "\n";
  return os.str();
}

std::string scalar_list(const std::vector<Scalar>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + xs[i].str();
  return out;
}

std::string perm_list(const std::vector<int>& perm) {
  std::string out;
  for (size_t i = 0; i < perm.size(); ++i)
    out += (i ? " " : "") + std::to_string(perm[i] + 1);
  return out;
}

}  // namespace

std::string describe_system(const System& s) {
  std::ostringstream os;
  GammaGraph g = gamma_graph(s);
  os << "components = " << s.forest().size() << "\n"
     << "letters = " << s.letter_count() << "\n"
     << "graph rank = " << g.b1() << "\n"
     << "total length = " << s.forest().total_length().str() << "\n"
     << "base measure = " << s.total_base_measure().str() << "\n";
  for (int c = 0; c < s.forest().size(); ++c) {
    const MetricTree& t = s.forest().tree(c);
    os << "component " << s.forest().name(c) << " = " << t.vertex_count()
       << " vertices, " << t.edge_count() << " edges, length "
       << t.total_length().str() << "\n";
  }
  for (int i = 0; i < s.letter_count(); ++i) {
    const Letter& l = s.letter(i);
    os << "letter " << l.name << " = " << region_str(s, l.iso.dom()) << " -> "
       << region_str(s, l.iso.im()) << "\n";
  }
  return os.str();
}

std::string describe_gamma(const System& s) {
  std::ostringstream os;
  GammaGraph g = gamma_graph(s);
  std::vector<int> val = g.valences();
  os << "vertices = " << g.vertices << "\n"
     << "edges = " << g.edges.size() << "\n"
     << "graph components = " << g.graph_components() << "\n"
     << "rank = " << g.b1() << "\n";
  for (int c = 0; c < g.vertices; ++c)
    os << "vertex " << s.forest().name(c) << " = valence " << val[c] << "\n";
  for (const GammaGraph::Edge& e : g.edges)
    os << "edge " << s.letter(e.letter).name << " = " << s.forest().name(e.from)
       << " -> " << s.forest().name(e.to) << "\n";
  return os.str();
}

std::string describe_iet(const IntervalExchange& e) {
  std::ostringstream os;
  os << "intervals = " << e.size() << "\n"
     << "total = " << e.total().str() << "\n"
     << "lengths = " << scalar_list(e.lengths) << "\n"
     << "permutation = " << perm_list(e.perm) << "\n"
     << "irreducible = " << yn(e.irreducible()) << "\n";
  return os.str();
}

std::string describe_rips(const RipsResult& r) {
  std::ostringstream os;
  os << "move = Rips\n"
     << "halted = " << yn(r.halted) << "\n"
     << metrics_arrow(r.before, r.after);
  os << "dropped letters = ";
  if (r.dropped_letters.empty()) {
    os << "(none)\n";
  } else {
    for (size_t i = 0; i < r.dropped_letters.size(); ++i)
      os << (i ? " " : "") << r.dropped_letters[i];
    os << "\n";
  }
  return os.str();
}

std::string describe_split(const System& before, const SplitResult& r) {
  std::ostringstream os;
  os << "move = Split\n"
     << "splitting points = " << r.used.size() << "\n";
  for (size_t i = 0; i < r.used.size(); ++i) {
    const SplittingPoint& p = r.used[i];
    os << "point " << i + 1 << " = " << loc_str(before, p.at) << " germ "
       << germ_str(p.dir.germ) << ", base end of " << before.formal_name(p.a0)
       << ", interior to base of " << before.formal_name(p.a1) << "\n";
  }
  os << metrics_arrow(r.before, r.after);
  for (const std::string& n : r.shared_base_notes) os << "note = " << n << "\n";
  return os.str();
}

std::string describe_induction(const InductionHistory& h) {
  std::ostringstream os;
  os << "budget = " << h.budget << "\n"
     << "steps completed = " << h.steps.size() << "\n";
  for (size_t i = 0; i < h.steps.size(); ++i) {
    const InductionStep& st = h.steps[i];
    os << "step " << i + 1 << " = " << step_kind_name(st.kind)
       << ", components " << st.after.components << ", length "
       << st.after.total_length.str() << "\n";
  }
  os << "fixed point = " << yn(h.reached_fixed_point) << "\n"
     << "budget exhausted = " << yn(h.budget_exhausted) << "\n"
     << "classification = " << classification_name(h.classification) << "\n";
  if (!h.note.empty()) os << "note = " << h.note << "\n";
  return os.str();
}

std::string describe_directions(const System& s, const DirectionReport& dr) {
  std::ostringstream os;
  os << "surface two-cover = " << (dr.pass ? "PASS" : "FAIL") << "\n"
     << "directions checked = " << dr.entries.size() << "\n";
  if (!dr.witness.empty()) os << "witness = " << dr.witness << "\n";
  for (const DirectionCount& dc : dr.entries) {
    os << "direction " << loc_str(s, dc.at) << " " << germ_str(dc.dir.germ) << " =";
    for (const FormalLetter& a : dc.letters) os << " " << s.formal_name(a);
    os << "\n";
  }
  return os.str();
}

std::string describe_train_track(const System& s, const TrainTrack& tt) {
  std::ostringstream os;
  os << "legality depth = " << tt.depth_used << "\n"
     << "witness words = " << tt.witnesses << "\n"
     << "legal turns = " << tt.legal.size() << "\n";
  for (const Turn& t : tt.legal) os << "turn = " << turn_name(s, t) << "\n";
  return os.str();
}

std::string describe_whitehead(const System& s, const WhiteheadReport& wr) {
  std::ostringstream os;
  os << "legality depth = " << wr.depth_used << "\n"
     << "connected everywhere = " << yn(wr.all_connected) << "\n";
  for (const WhiteheadVertex& wv : wr.vertices) {
    os << "vertex " << s.forest().name(wv.vertex) << " = " << wv.nodes.size()
       << " nodes, " << wv.links.size() << " links, " << wv.pieces
       << " pieces\n";
    if (!wv.connected) {
      os << "split side =";
      for (const FormalLetter& a : wv.witness_side)
        os << " " << s.formal_name(a);
      os << "\n";
    }
  }
  return os.str();
}

std::string describe_minimality(const System& s, const MinimalityReport& mr) {
  std::ostringstream os;
  os << "recurrence = " << recurrence_name(mr.verdict) << "\n"
     << "window = " << mr.n << "\n"
     << "depth = " << mr.R << "\n";
  os << "complexity =";
  for (long long c : mr.complexity) os << " " << c;
  os << "\n";
  os << "eventually periodic = " << yn(mr.eventually_periodic);
  if (mr.eventually_periodic) os << " (first drop at " << mr.periodicity_at << ")";
  os << "\n";
  if (mr.verdict == Recurrence::fail)
    os << "missing = " << word_name(s, mr.missing) << "\n"
       << "host = " << word_name(s, mr.host) << "\n";
  if (!mr.note.empty()) os << "note = " << mr.note << "\n";
  return os.str();
}

std::string describe_leaf_closure(const System& s, const LeafSet& in,
                                  const LeafSet& closed) {
  std::ostringstream os;
  os << "halves = " << in.halves.size() << "\n";
  for (size_t i = 0; i < in.halves.size(); ++i)
    os << "half " << i << " = " << loc_str(s, in.halves[i].basepoint) << " "
       << word_name(s, in.halves[i].word) << "\n";
  os << "pairs = " << in.pairs.size() << "\n"
     << "closure pairs = " << closed.pairs.size() << "\n"
     << "diagonal pairs added = " << closed.pairs.size() - in.pairs.size()
     << "\n";
  return os.str();
}

std::string describe_index_bounds(const System& s, const IndexBoundReport& br) {
  std::ostringstream os;
  os << "rank = " << br.rank << "\n"
     << "bound = " << br.bound << "\n"
     << "radius = " << br.radius << "\n"
     << "orbit classes = " << br.points.size() << "\n"
     << "skipped points = " << br.skipped.size() << "\n";
  for (const IndexReport& rep : br.points) {
    os << "point " << loc_str(s, rep.x) << " = index " << rep.geometric << " ("
       << (rep.stable ? "stable" : "unstable") << "), q estimate "
       << rep.q_estimate << ", hypothesis " << yn(rep.hypothesis) << "\n";
    if (!rep.hypothesis_witness.empty())
      os << "hypothesis witness = " << rep.hypothesis_witness << "\n";
  }
  os << "geometric sum = " << br.geometric_sum
     << " (within bound: " << yn(br.geometric_within) << ")\n"
     << "q sum = " << br.q_sum << " (within bound: " << yn(br.q_within)
     << ")\n";
  return os.str();
}

std::string describe_rauzy_run(const IntervalExchange& start,
                               const RauzyRun& run) {
  std::ostringstream os;
  os << "intervals = " << start.size() << "\n"
     << "lengths = " << scalar_list(start.lengths) << "\n"
     << "permutation = " << perm_list(start.perm) << "\n"
     << "steps completed = " << run.steps.size() << "\n";
  for (size_t i = 0; i < run.steps.size(); ++i) {
    const RauzyStep& st = run.steps[i];
    os << "step " << i + 1 << " = " << rauzy_kind_name(st.kind) << ", winner "
       << st.winner + 1 << ", loser " << st.loser + 1 << ", removed "
       << st.removed.str() << "\n";
  }
  if (!run.steps.empty()) {
    const IntervalExchange& last = run.steps.back().after;
    os << "final lengths = " << scalar_list(last.lengths) << "\n"
       << "final permutation = " << perm_list(last.perm) << "\n";
  }
  os << "keane stop = " << yn(run.keane_stop) << "\n";
  if (!run.note.empty()) os << "note = " << run.note << "\n";
  return os.str();
}

std::string describe_comparison(const CompareResult& cr) {
  std::ostringstream os;
  os << "match = " << yn(cr.match) << "\n"
     << "steps compared = " << cr.steps_done << "\n";
  for (const CompareStep& st : cr.steps) {
    os << "step " << st.index << " = " << rauzy_kind_name(st.classical_kind)
       << ", removed " << st.classical_removed.str() << ", kind "
       << (st.kind_match ? "ok" : "MISMATCH") << ", length "
       << (st.length_match ? "ok" : "MISMATCH") << ", return system "
       << (st.return_match ? "ok" : "MISMATCH") << "\n";
  }
  if (!cr.first_divergence.empty())
    os << "first divergence = " << cr.first_divergence << "\n";
  return os.str();
}

std::string dot_gamma(const System& s) {
  std::ostringstream os;
  os << "digraph gamma {\n";
  for (int c = 0; c < s.forest().size(); ++c)
    os << "  \"" << s.forest().name(c) << "\";\n";
  for (int i = 0; i < s.letter_count(); ++i) {
    const Letter& l = s.letter(i);
    os << "  \"" << s.forest().name(l.iso.dom().component()) << "\" -> \""
       << s.forest().name(l.iso.im().component()) << "\" [label=\"" << l.name
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string dot_orbit(const System& s, const OrbitGraph& g) {
  std::ostringstream os;
  os << "digraph orbit {\n";
  for (size_t i = 0; i < g.nodes.size(); ++i)
    os << "  \"" << loc_str(s, g.nodes[i].at) << "\" [label=\""
       << loc_str(s, g.nodes[i].at) << " d" << g.nodes[i].depth << "\"];\n";
  for (const OrbitGraph::Edge& e : g.edges)
    os << "  \"" << loc_str(s, g.nodes[e.from].at) << "\" -> \""
       << loc_str(s, g.nodes[e.to].at) << "\" [label=\""
       << s.letter(e.letter).name << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string dot_whitehead(const System& s, const WhiteheadReport& wr) {
  std::ostringstream os;
  os << "graph whitehead {\n";
  for (const WhiteheadVertex& wv : wr.vertices) {
    const std::string& vn = s.forest().name(wv.vertex);
    for (const FormalLetter& a : wv.nodes)
      os << "  \"" << vn << ":" << s.formal_name(a) << "\";\n";
    for (const Turn& t : wv.links)
      os << "  \"" << vn << ":" << s.formal_name(t.e) << "\" -- \"" << vn
         << ":" << s.formal_name(t.f) << "\" [legal=true];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace siso
