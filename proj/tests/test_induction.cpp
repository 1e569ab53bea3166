#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "siso/errors.hpp"
#include "siso/induction.hpp"
#include "siso/words.hpp"

using namespace siso;

namespace {

Scalar phi() { return corpus::phi(); }

Point seg_at(const System& s, int comp, const Scalar& x) {
  return Point::interior(s.forest().tree(comp), 0, x);
}

// Segment subtree of component comp between local coordinates lo and hi.
Subtree seg(const System& s, int comp, const Scalar& lo, const Scalar& hi) {
  const MetricTree& t = s.forest().tree(comp);
  Scalar len = t.edge(0).len;
  auto pt = [&](const Scalar& x) {
    if (x.is_zero()) return Point::vertex(t.edge(0).u);
    if (x == len) return Point::vertex(t.edge(0).v);
    return Point::interior(t, 0, x);
  };
  return Subtree::hull(t, comp, {pt(lo), pt(hi)});
}

const Letter& named(const System& s, const std::string& name) {
  int i = s.find_letter(name);
  REQUIRE(i >= 0);
  return s.letter(i);
}

bool no_low_valence(const System& s) {
  for (int v : gamma_graph(s).valences())
    if (v < 2) return false;
  return true;
}

int high_valence_count(const System& s) {
  int n = 0;
  for (int v : gamma_graph(s).valences())
    if (v >= 3) ++n;
  return n;
}

}  // namespace

TEST_CASE("exchange suspensions are already trim-fixed") {
  for (const auto& e : corpus::full_corpus()) {
    if (e.name.find("overhang") != std::string::npos) continue;
    RipsResult r = rips_step(e.system);
    CHECK_MESSAGE(r.halted, e.name);
    CHECK_FALSE(r.surgery.has_value());
    CHECK(r.dropped_letters.empty());
    CHECK(r.system.letter_count() == e.system.letter_count());
    CHECK(r.before.total_length == r.after.total_length);
  }
}

TEST_CASE("a lone overhanging letter trims to a degenerate pin, then dies") {
  // a: [0,2] -> [1,3] on [0,3]. Only [1,2] is doubly covered, and there the
  // letter survives just at the single point 1 -> 2.
  System s = corpus::segment_system(Scalar(3), {{"a", Scalar(0), Scalar(2), Scalar(1)}});
  RipsResult r1 = rips_step(s);
  CHECK_FALSE(r1.halted);
  CHECK(r1.dropped_letters.empty());
  REQUIRE(r1.system.forest().size() == 1);
  CHECK(r1.system.forest().tree(0).total_length() == Scalar(1));
  const Letter& a = named(r1.system, "a");
  CHECK(a.iso.dom().degenerate());
  CHECK(a.iso.im().degenerate());
  // The degenerate bases meet nothing, so the next trim has no support left.
  try {
    rips_step(r1.system);
    FAIL("expected empty_output");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_output);
  }
}

TEST_CASE("overhang systems trim to the exact suspension in one pass") {
  System s = corpus::golden_overhang_system();
  RipsResult r = rips_step(s);
  CHECK_FALSE(r.halted);
  CHECK(r.system.forest().size() == 1);
  CHECK(r.system.forest().tree(0).total_length() == phi() * phi());
  CHECK(named(r.system, "a").iso.dom().slab().measure() == Scalar(1));
  CHECK(named(r.system, "b").iso.dom().slab().measure() == phi());
  CHECK(rips_step(r.system).halted);
  // Projection data points every surviving letter at its parent.
  REQUIRE(r.fold.edge_image.size() == 2);
  CHECK(r.fold.edge_image[0].size() == 1);
  CHECK(r.fold.edge_image[1].size() == 1);
}

TEST_CASE("splitting points of the golden suspension") {
  System s = corpus::golden_system();
  const MetricTree& t = s.forest().tree(0);
  auto pts = find_splitting_points(s);
  REQUIRE(pts.size() == 4);

  Point one = seg_at(s, 0, Scalar(1));
  Point fee = seg_at(s, 0, phi());
  FormalLetter a{0, false}, A{0, true}, b{1, false}, B{1, true};
  MetricTree::Germ left{0, false}, right{0, true};
  CHECK(pts[0] == SplittingPoint{{0, one}, {one, left}, a, B});
  CHECK(pts[1] == SplittingPoint{{0, one}, {one, right}, b, B});
  CHECK(pts[2] == SplittingPoint{{0, fee}, {fee, left}, B, b});
  CHECK(pts[3] == SplittingPoint{{0, fee}, {fee, right}, A, b});
  (void)t;
}

TEST_CASE("simultaneous split of the golden suspension, two rounds") {
  System s = corpus::golden_system();
  SplitResult s1 = split_all(s);
  CHECK(s1.used.size() == 4);
  REQUIRE(s1.system.forest().size() == 3);

  const System& n1 = s1.system;
  CHECK(n1.forest().name(0) == "T0.0");
  CHECK(n1.forest().name(1) == "T0.1");
  CHECK(n1.forest().name(2) == "T0.2");
  CHECK(n1.forest().tree(0).total_length() == Scalar(1));
  CHECK(n1.forest().tree(1).total_length() == phi() - Scalar(1));
  CHECK(n1.forest().tree(2).total_length() == Scalar(1));

  // a survives whole; b breaks at both marks into three translated pieces.
  CHECK(n1.letter_count() == 4);
  CHECK(named(n1, "a").iso.dom() == seg(n1, 0, Scalar(0), Scalar(1)));
  CHECK(named(n1, "a").iso.im() == seg(n1, 2, Scalar(0), Scalar(1)));
  CHECK(named(n1, "b.0").iso.dom() == seg(n1, 1, Scalar(0), phi() - Scalar(1)));
  CHECK(named(n1, "b.0").iso.im() == seg(n1, 0, Scalar(0), phi() - Scalar(1)));
  CHECK(named(n1, "b.1").iso.dom() == seg(n1, 2, Scalar(0), Scalar(2) - phi()));
  CHECK(named(n1, "b.1").iso.im() == seg(n1, 0, phi() - Scalar(1), Scalar(1)));
  CHECK(named(n1, "b.2").iso.dom() == seg(n1, 2, Scalar(2) - phi(), Scalar(1)));
  CHECK(named(n1, "b.2").iso.im() == seg(n1, 1, Scalar(0), phi() - Scalar(1)));

  GammaGraph g1 = gamma_graph(n1);
  CHECK(g1.b1() == 2);
  CHECK(g1.valences() == std::vector<int>{3, 2, 3});
  REQUIRE(s1.shared_base_notes.size() == 1);
  CHECK(s1.shared_base_notes[0] == "b: base touched by 4 cut points, subdivided in one pass");
  CHECK(rips_step(n1).halted);

  // Round two: the a side shatters, every b piece now maps whole segments.
  SplitResult s2 = split_all(n1);
  const System& n2 = s2.system;
  REQUIRE(n2.forest().size() == 5);
  Scalar u = phi() - Scalar(1), v = Scalar(2) - phi();
  CHECK(n2.forest().tree(0).total_length() == u);
  CHECK(n2.forest().tree(1).total_length() == v);
  CHECK(n2.forest().tree(2).total_length() == u);
  CHECK(n2.forest().tree(3).total_length() == v);
  CHECK(n2.forest().tree(4).total_length() == u);
  CHECK(named(n2, "a.0").iso.dom() == seg(n2, 0, Scalar(0), v));
  CHECK(named(n2, "a.1").iso.dom() == seg(n2, 0, v, u));
  CHECK(named(n2, "a.2").iso.dom() == seg(n2, 1, Scalar(0), v));
  CHECK(named(n2, "b.0").iso.dom() == seg(n2, 2, Scalar(0), u));
  CHECK(named(n2, "b.0").iso.im() == seg(n2, 0, Scalar(0), u));
  GammaGraph g2 = gamma_graph(n2);
  CHECK(g2.b1() == 2);
  CHECK(g2.valences() == std::vector<int>{3, 2, 2, 2, 3});
  CHECK(rips_step(n2).halted);
}

TEST_CASE("single split at the rightmost point") {
  System s = corpus::golden_system();
  auto pts = find_splitting_points(s);
  SplitResult r = split_at(s, pts.back());
  REQUIRE(r.system.forest().size() == 2);
  const System& n = r.system;
  CHECK(n.forest().tree(0).total_length() == phi());
  CHECK(n.forest().tree(1).total_length() == Scalar(1));
  CHECK(named(n, "a").iso.dom() == seg(n, 0, Scalar(0), Scalar(1)));
  CHECK(named(n, "a").iso.im() == seg(n, 1, Scalar(0), Scalar(1)));
  CHECK(named(n, "b.0").iso.dom() == seg(n, 0, Scalar(1), phi()));
  CHECK(named(n, "b.0").iso.im() == seg(n, 0, Scalar(0), phi() - Scalar(1)));
  CHECK(named(n, "b.1").iso.dom() == seg(n, 1, Scalar(0), Scalar(1)));
  CHECK(named(n, "b.1").iso.im() == seg(n, 0, phi() - Scalar(1), phi()));
  CHECK(gamma_graph(n).valences() == std::vector<int>{4, 2});
  CHECK(gamma_graph(n).b1() == 2);
}

TEST_CASE("split_at rejects a point failing the side conditions") {
  System s = corpus::golden_system();
  Point mid = seg_at(s, 0, Scalar::ratio(1, 2));
  SplittingPoint bogus{{0, mid}, {mid, {0, false}}, {0, false}, {1, false}};
  try {
    split_at(s, bogus);
    FAIL("expected not_a_splitting_point");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_splitting_point);
  }
}

TEST_CASE("simultaneous split of a three-letter suspension") {
  System s = iet_to_system(corpus::three_rot_iet());
  CHECK(gamma_graph(s).b1() == 3);
  SplitResult r = split_all(s);
  CHECK(r.used.size() == 8);
  CHECK(r.system.forest().size() == 5);
  CHECK(gamma_graph(r.system).b1() == 3);
  CHECK(no_low_valence(r.system));
  CHECK(rips_step(r.system).halted);
}

TEST_CASE("surface direction counts") {
  DirectionReport ok = check_surface_directions(corpus::golden_system());
  CHECK(ok.pass);
  CHECK(ok.entries.size() == 6);
  for (const auto& e : ok.entries) CHECK(e.letters.size() == 2);
  CHECK(ok.witness.empty());

  // Post-split systems stay exactly doubly covered.
  CHECK(check_surface_directions(split_all(corpus::golden_system()).system).pass);

  // two_zone leaves single-covered stretches between the zones.
  DirectionReport bad = check_surface_directions(corpus::two_zone_system());
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("cutting a tripod duplicates the center") {
  Forest f;
  f.trees.push_back(MetricTree(4, {{0, 1, Scalar(1)}, {0, 2, Scalar(2)}, {0, 3, Scalar(3)}}));
  f.names = {"Y"};
  const MetricTree& t = f.trees[0];
  Direction toward1 = first_germ(t, Point::vertex(0), Point::vertex(1));
  Surgery su = Surgery::cut(f, {{Loc{0, Point::vertex(0)}, {toward1}}});

  REQUIRE(su.piece_count() == 2);
  CHECK(su.result().name(0) == "Y.0");
  CHECK(su.result().name(1) == "Y.1");
  CHECK(su.result().tree(0).total_length() == Scalar(1));
  CHECK(su.result().tree(1).total_length() == Scalar(5));
  CHECK(su.is_cut_point({0, Point::vertex(0)}));
  CHECK_FALSE(su.residual_at(0, {0, Point::vertex(0)}));
  CHECK(su.residual_at(1, {0, Point::vertex(0)}));

  // Both sides own a copy of the cut point; degrees 1 and 2.
  for (int p = 0; p < 2; ++p) {
    CHECK(su.region_old(p).contains(Point::vertex(0)));
    Point np = su.to_new(p, Point::vertex(0));
    REQUIRE(np.is_vertex());
    CHECK(su.result().tree(p).degree(np.vertex_id()) == (p == 0 ? 1 : 2));
    Loc back = su.to_old(p, np);
    CHECK(back.component == 0);
    CHECK(back.p == Point::vertex(0));
  }
  CHECK(su.region_old(0).contains(Point::vertex(1)));
  CHECK_FALSE(su.region_old(0).contains(Point::vertex(2)));

  Subtree legs = Subtree::hull(t, 0, {Point::vertex(2), Point::vertex(3)});
  Subtree moved = su.transport(f, 1, legs);
  CHECK(moved.component() == 1);
  CHECK(moved.diameter(su.result().tree(1)) == Scalar(5));
}

TEST_CASE("trimming can keep an isolated point as its own component") {
  Forest f;
  f.trees.push_back(MetricTree(2, {{0, 1, Scalar(4)}}));
  f.names = {"S"};
  const MetricTree& t = f.trees[0];
  SlabSet keep(t);
  keep.add_point(t, Point::interior(t, 0, Scalar(1)));
  keep.add_span(t, 0, Scalar(2), Scalar(3));
  Surgery su = Surgery::trim(f, {keep});
  REQUIRE(su.piece_count() == 2);
  CHECK(su.result().name(0) == "S.0");
  CHECK(su.result().tree(0).total_length() == Scalar(1));
  CHECK(su.result().tree(1).vertex_count() == 1);
  CHECK(su.result().tree(1).total_length() == Scalar(0));
  CHECK(su.to_old(1, Point::vertex(0)).p == Point::interior(t, 0, Scalar(1)));
}

TEST_CASE("induction run on the golden suspension is all splits") {
  InductionHistory h = run_induction(corpus::golden_system(), {8, SplitStrategy::all_simultaneous});
  CHECK(h.reached_fixed_point);
  CHECK(h.budget_exhausted);  // splitting a surface system never ends
  CHECK(h.classification == Classification::surface);
  REQUIRE(h.steps.size() == 8);
  CHECK(h.component_series ==
        std::vector<int>{1, 3, 5, 7, 9, 11, 13, 15, 17});
  CHECK(h.diameter_series[0] == phi() * phi());
  CHECK(h.diameter_series[1] == Scalar(1));
  CHECK(h.diameter_series[2] == phi() - Scalar(1));
  for (const auto& st : h.steps) {
    CHECK(st.kind == StepKind::split);
    CHECK(gamma_graph(st.output).b1() == 2);
    CHECK(no_low_valence(st.output));
    CHECK(high_valence_count(st.output) <= 2);  // 2N-2 with N = 2
    // Folds read each new letter as exactly one old letter.
    for (const auto& path : st.fold.edge_image) CHECK(path.size() == 1);
  }
}

TEST_CASE("induction run with no budget says so") {
  InductionHistory h = run_induction(corpus::golden_system(), {0, SplitStrategy::all_simultaneous});
  CHECK(h.steps.empty());
  CHECK_FALSE(h.reached_fixed_point);
  CHECK(h.budget_exhausted);
  CHECK(h.classification == Classification::unknown);
  CHECK(h.note == "no budget");
}

TEST_CASE("eroding system never fixes and reads as Levitt evidence") {
  InductionHistory h = run_induction(corpus::shrinking_system(), {24, SplitStrategy::all_simultaneous});
  CHECK_FALSE(h.reached_fixed_point);
  CHECK(h.budget_exhausted);
  CHECK(h.classification == Classification::levitt_evidence);
  for (const auto& st : h.steps) CHECK(st.kind == StepKind::trim);
  REQUIRE(h.component_series.size() == 25);
  for (size_t i = 15; i + 1 < h.component_series.size(); ++i)
    CHECK(h.component_series[i] < h.component_series[i + 1]);
  CHECK(h.diameter_series.back() * Scalar(2) <= h.diameter_series.front());
}

TEST_CASE("the two-zone system trims apart and keeps its rank") {
  System s = corpus::two_zone_system();
  CHECK(gamma_graph(s).b1() == 4);
  RipsResult r = rips_step(s);
  CHECK_FALSE(r.halted);
  CHECK(r.system.forest().size() == 2);
  CHECK(gamma_graph(r.system).b1() == 4);
  CHECK(rips_step(r.system).halted);
}

TEST_CASE("trim steps preserve the admissible language") {
  // One genuine trim: project the new words down and compare against the
  // old language; middles of longer old words must still be readable.
  System s = corpus::shrinking_system();
  RipsResult r = rips_step(s);
  REQUIRE_FALSE(r.halted);

  auto before = admissible_language(s, 6, 2'000'000, false, false);
  auto after = admissible_language(r.system, 4, 2'000'000, false, false);
  std::set<Word> old_words, mids, projected;
  for (const auto& en : before.words) {
    old_words.insert(en.word);
    if (en.word.size() == 6) mids.insert(Word(en.word.begin() + 1, en.word.end() - 1));
  }
  for (const auto& en : after.words) {
    Word w;
    for (FormalLetter fl : en.word) {
      REQUIRE(r.fold.edge_image[fl.idx].size() == 1);
      FormalLetter p = r.fold.edge_image[fl.idx][0];
      w.push_back(fl.inv ? p.inverse() : p);
    }
    projected.insert(w);
  }
  CHECK_FALSE(projected.empty());
  CHECK_FALSE(mids.empty());
  for (const auto& w : projected)
    if (w.size() <= 4) CHECK(old_words.count(w) == 1);
  for (const auto& m : mids) CHECK(projected.count(m) == 1);
}

TEST_CASE("splitting reproduces classical exchange induction") {
  CHECK(compare_inductions(corpus::golden_iet(), 10).match);
  CHECK(compare_inductions(corpus::silver_iet(), 10).match);
  CHECK(compare_inductions(corpus::three_rev_iet(), 10).match);
  CHECK(compare_inductions(corpus::three_rot_iet(), 10).match);
  CHECK(compare_inductions(corpus::four_rev_iet(), 10).match);
}

TEST_CASE("the corrupt cut choice is caught at step one") {
  CompareResult r = compare_inductions(corpus::golden_iet(), 10, true);
  CHECK_FALSE(r.match);
  CHECK(r.steps_done == 1);
  REQUIRE(r.steps.size() == 1);
  CHECK_FALSE(r.steps[0].kind_match);
  CHECK(r.steps[0].detail == "kind: classical top, derived bottom");
  CHECK(r.first_divergence.find("step 1") != std::string::npos);
}

TEST_CASE("system metrics") {
  StepMetrics m = measure_system(corpus::golden_system());
  CHECK(m.components == 1);
  CHECK(m.total_length == phi() * phi());
  CHECK(m.max_diameter == phi() * phi());
  CHECK(m.base_measure == Scalar(2) * phi() * phi());
}
