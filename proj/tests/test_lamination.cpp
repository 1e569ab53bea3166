#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "oracle.hpp"
#include "siso/errors.hpp"
#include "siso/induction.hpp"
#include "siso/lamination.hpp"

using namespace siso;

namespace {

FormalLetter fl(int idx, bool inv = false) { return {idx, inv}; }

Word parse_word(const System& s, const std::vector<std::string>& names) {
  Word w;
  for (const auto& nm : names) {
    bool inv = nm.size() > 1 && nm.substr(nm.size() - 3) == "^-1";
    int i = s.find_letter(inv ? nm.substr(0, nm.size() - 3) : nm);
    REQUIRE(i >= 0);
    w.push_back({i, inv});
  }
  return w;
}

std::set<Word> half_words(const LeafSet& ls) {
  std::set<Word> out;
  for (const auto& h : ls.halves) out.insert(h.word);
  return out;
}

int half_index(const System& s, const LeafSet& ls,
               const std::vector<std::string>& names) {
  Word w = parse_word(s, names);
  for (size_t i = 0; i < ls.halves.size(); ++i)
    if (ls.halves[i].word == w) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("legal turns on the golden system") {
  System s = corpus::golden_system();
  TrainTrack tt = legal_turns(s, 10, 100000);
  CHECK(tt.depth_used == 10);
  CHECK(tt.witnesses == 46);  // 2*(2L+3) golden words of length 2L+2
  CHECK(tt.graph.b1() == 2);

  Turn ab = Turn::make(s, fl(0), fl(1, true));       // {a, b^-1}
  Turn a_b = Turn::make(s, fl(0, true), fl(1));      // {a^-1, b}
  Turn bb = Turn::make(s, fl(1), fl(1, true));       // {b, b^-1}
  Turn aa = Turn::make(s, fl(0), fl(0, true));       // {a, a^-1}
  CHECK(tt.legal == std::vector<Turn>{ab, a_b, bb});
  CHECK(tt.has(ab));
  CHECK(!tt.has(aa));
  CHECK(turn_name(s, ab) == "{a,b^-1}@T0");

  // Orientation of the arguments does not matter.
  CHECK(Turn::make(s, fl(1, true), fl(0)) == ab);
}

TEST_CASE("turn construction rejects bad edge pairs") {
  System s = corpus::golden_system();
  CHECK_THROWS_WITH_AS(Turn::make(s, fl(0), fl(0)), doctest::Contains("distinct"),
                       Error);

  // After one splitting pass the letters leave different vertices.
  SplitResult r = split_all(s);
  REQUIRE(r.system.forest().size() == 3);
  FormalLetter a = fl(r.system.find_letter("a"));
  FormalLetter b2 = fl(r.system.find_letter("b.2"));
  REQUIRE(r.system.base_of(a).component() !=
          r.system.base_of(b2).component());
  CHECK_THROWS_AS((void)Turn::make(r.system, a, b2), Error);
}

TEST_CASE("legality is monotone in the witness depth") {
  System s = corpus::golden_system();
  std::vector<Turn> prev;
  for (int L = 2; L <= 10; ++L) {
    TrainTrack tt = legal_turns(s, L, 100000);
    CHECK(tt.legal.size() == 3);  // golden: constant from the start
    if (L > 2)
      CHECK(std::includes(prev.begin(), prev.end(), tt.legal.begin(),
                          tt.legal.end()));
    prev = tt.legal;
  }

  System tz = corpus::two_zone_system();
  prev.clear();
  for (int L = 2; L <= 5; ++L) {
    TrainTrack tt = legal_turns(tz, L, 400000);
    if (L > 2)
      CHECK(std::includes(prev.begin(), prev.end(), tt.legal.begin(),
                          tt.legal.end()));
    prev = tt.legal;
  }
}

TEST_CASE("whitehead graph of the golden system is connected") {
  System s = corpus::golden_system();
  WhiteheadReport wr = whitehead_report(s, legal_turns(s, 10, 100000));
  CHECK(wr.all_connected);
  CHECK(wr.depth_used == 10);
  REQUIRE(wr.vertices.size() == 1);
  const WhiteheadVertex& wv = wr.vertices[0];
  CHECK(wv.nodes.size() == 4);
  CHECK(wv.links.size() == 3);
  CHECK(wv.pieces == 1);
  CHECK(wv.connected);
  CHECK(wv.witness_side.empty());
}

TEST_CASE("whitehead graph splits for two independent zones") {
  System s = corpus::two_zone_system();
  WhiteheadReport wr = whitehead_report(s, legal_turns(s, 2, 400000));
  CHECK(!wr.all_connected);
  REQUIRE(wr.vertices.size() == 1);
  const WhiteheadVertex& wv = wr.vertices[0];
  CHECK(wv.nodes.size() == 8);
  CHECK(wv.pieces == 2);
  // The witness side is exactly one zone's letters.
  CHECK(wv.witness_side ==
        std::vector<FormalLetter>{fl(0), fl(0, true), fl(1), fl(1, true)});
}

TEST_CASE("carried subgraphs and the proper free factor test") {
  System s = corpus::golden_system();
  CarriedSubgraph only_b = carried_subgraph(s, {Word{fl(1)}});
  CHECK(only_b.vertices == std::vector<int>{0});
  CHECK(only_b.letters == std::vector<int>{1});
  CHECK(only_b.b1 == 1);
  CHECK(only_b.proper);
  CHECK(only_b.proper_free_factor);

  CarriedSubgraph both = carried_subgraph(s, {Word{fl(0)}, Word{fl(1)}});
  CHECK(both.b1 == 2);
  CHECK(!both.proper);
  CHECK(!both.proper_free_factor);

  System tz = corpus::two_zone_system();
  CarriedSubgraph zone = carried_subgraph(tz, {Word{fl(0), fl(1)}});
  CHECK(zone.letters == std::vector<int>{0, 1});
  CHECK(zone.b1 == 2);
  CHECK(zone.proper_free_factor);  // 2 < 4

  CHECK_THROWS_AS((void)carried_subgraph(s, {Word{fl(0), fl(0, true)}}), Error);
}

TEST_CASE("minimality diagnostic: golden passes with Sturmian complexity") {
  System s = corpus::golden_system();
  MinimalityReport mr = minimality_diagnostic(s, 3, 20, 1000000);
  CHECK(mr.verdict == Recurrence::pass);
  CHECK(recurrence_name(mr.verdict) == std::string("PASS"));
  CHECK(!mr.eventually_periodic);
  CHECK(mr.periodicity_at == -1);
  REQUIRE(mr.complexity.size() == 20);
  for (int m = 1; m <= 20; ++m)
    CHECK(mr.complexity[m - 1] == 2 * (m + 1));  // both reading directions

  // Cross-check the counts against a brute-force orbit coding.
  auto w = oracle::iet_orbit_coding(corpus::golden_iet(), Scalar::ratio(1, 2), 400);
  for (int m = 1; m <= 12; ++m)
    CHECK(oracle::factor_count(w, m) == m + 1);
  CHECK(oracle::uniformly_recurrent(w, 3, 20));
}

TEST_CASE("minimality diagnostic: rational exchange is eventually periodic") {
  System s = iet_to_system(corpus::rational_iet());
  MinimalityReport mr = minimality_diagnostic(s, 3, 20, 1000000);
  CHECK(mr.verdict == Recurrence::pass);  // periodic words still recur
  CHECK(mr.eventually_periodic);
  CHECK(mr.periodicity_at == 2);
  CHECK(mr.complexity[0] == 4);
  CHECK(mr.complexity[1] == 6);
  CHECK(mr.complexity[10] == 6);

  auto w = oracle::iet_orbit_coding(corpus::rational_iet(), Scalar::ratio(1, 2), 60);
  CHECK(oracle::factor_count(w, 4) == 3);  // (bab)^infinity
  CHECK(oracle::factor_count(w, 5) == 3);
}

TEST_CASE("minimality diagnostic: two zones fail recurrence") {
  System s = corpus::two_zone_system();
  MinimalityReport mr = minimality_diagnostic(s, 3, 12, 1000000);
  CHECK(mr.verdict == Recurrence::fail);
  CHECK(mr.missing.size() == 3);
  CHECK(mr.host.size() == 12);
  // The witness verifies itself: neither the missing word nor its reverse
  // inverse shows up as a window of the host.
  Word rev = word_inverse(mr.missing);
  for (size_t i = 0; i + 3 <= mr.host.size(); ++i) {
    Word win(mr.host.begin() + i, mr.host.begin() + i + 3);
    CHECK(!(win == mr.missing));
    CHECK(!(win == rev));
  }
}

TEST_CASE("minimality diagnostic edge cases") {
  System s = corpus::golden_system();
  CHECK_THROWS_AS((void)minimality_diagnostic(s, 5, 3, 1000), Error);

  MinimalityReport tiny = minimality_diagnostic(s, 3, 20, 10);
  CHECK(tiny.verdict == Recurrence::inconclusive);
  CHECK(tiny.note == "language budget exhausted");

  // One letter shifted along a segment: the regular language dies at length 3.
  System dying = corpus::segment_system(
      Scalar(3), {{"a", Scalar(0), Scalar(2), Scalar(1)}});
  MinimalityReport mr = minimality_diagnostic(dying, 1, 3, 1000);
  CHECK(mr.verdict == Recurrence::inconclusive);
  CHECK(mr.note == "no regular words of length R");
  CHECK(mr.complexity == std::vector<long long>{2, 2, 0});
}

TEST_CASE("one leaf passes through a generic point") {
  System s = corpus::golden_system();
  Loc x{0, Point::interior(s.forest().tree(0), 0, Scalar::ratio(1, 2))};
  LeafSet ls = leaf_set_at(s, x, 3, 10000);
  REQUIRE(ls.halves.size() == 2);
  CHECK(ls.halves[0].word == parse_word(s, {"a", "b", "b"}));
  CHECK(ls.halves[1].word == parse_word(s, {"b^-1", "b^-1", "a^-1"}));
  CHECK(ls.halves[0].basepoint.component == 0);
  CHECK(ls.halves[0].basepoint.p == x.p);
  CHECK(ls.pairs.size() == 2);
  CHECK(ls.has_pair(0, 1));
  CHECK(ls.has_pair(1, 0));

  // Already diagonally closed.
  LeafSet cl = diagonal_closure(ls);
  CHECK(cl.pairs == ls.pairs);
}

TEST_CASE("diagonal closure adds the singular-point diagonals") {
  System s = corpus::golden_system();
  Loc x{0, Point::interior(s.forest().tree(0), 0, Scalar(1))};
  LeafSet ls = leaf_set_at(s, x, 3, 10000);
  REQUIRE(ls.halves.size() == 5);
  CHECK(half_words(ls) ==
        std::set<Word>{parse_word(s, {"a", "b", "a^-1"}),
                       parse_word(s, {"a", "b", "b"}),
                       parse_word(s, {"b", "a", "b"}),
                       parse_word(s, {"b", "a", "b^-1"}),
                       parse_word(s, {"b^-1", "a^-1", "b^-1"})});
  CHECK(ls.pairs.size() == 16);

  int aba = half_index(s, ls, {"a", "b", "a^-1"});
  int abb = half_index(s, ls, {"a", "b", "b"});
  int bab = half_index(s, ls, {"b", "a", "b"});
  int babi = half_index(s, ls, {"b", "a", "b^-1"});
  CHECK(!ls.has_pair(aba, abb));  // same first letter: not a direct pair

  // Chaining through the other halves forces the diagonal pairs.
  LeafSet cl = diagonal_closure(ls);
  CHECK(cl.pairs.size() == 20);
  CHECK(cl.has_pair(aba, abb));
  CHECK(cl.has_pair(abb, aba));
  CHECK(cl.has_pair(bab, babi));
  CHECK(cl.has_pair(babi, bab));
  for (auto [i, j] : ls.pairs) CHECK(cl.has_pair(i, j));
  CHECK(diagonal_closure(cl).pairs == cl.pairs);
}

TEST_CASE("diagonal closure rejects mixed basepoints") {
  System s = corpus::golden_system();
  Loc x{0, Point::interior(s.forest().tree(0), 0, Scalar::ratio(1, 2))};
  LeafSet bad;
  bad.halves.push_back({x, Word{fl(0)}});
  bad.halves.push_back({Loc{0, Point::vertex(0)}, Word{fl(1, true)}});
  bad.pairs.push_back({0, 1});
  CHECK_THROWS_WITH_AS((void)diagonal_closure(bad),
                       doctest::Contains("basepoints"), Error);
}

TEST_CASE("diagonal closure is idempotent and flip-closed on random inputs") {
  System s = corpus::golden_system();
  Loc x{0, Point::vertex(0)};
  std::mt19937 rng(20260814);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    LeafSet ls;
    for (int i = 0; i < n; ++i)
      ls.halves.push_back({x, Word{fl(static_cast<int>(rng() % 2))}});
    int m = static_cast<int>(rng() % (2 * n));
    for (int k = 0; k < m; ++k) {
      int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
      if (i != j) ls.pairs.push_back({i, j});
    }
    LeafSet cl = diagonal_closure(ls);
    for (auto [i, j] : ls.pairs) CHECK(cl.has_pair(i, j));
    for (auto [i, j] : cl.pairs) CHECK(cl.has_pair(j, i));
    LeafSet cl2 = diagonal_closure(cl);
    CHECK(cl2.pairs == cl.pairs);
  }
}

TEST_CASE("regular word enumeration guards") {
  System s = corpus::golden_system();
  CHECK_THROWS_AS((void)regular_words(s, 0, 100), Error);
  CHECK_THROWS_WITH_AS((void)regular_words(s, 8, 3),
                       doctest::Contains("budget"), Error);
  LanguageResult lr = regular_words(s, 4, 100000);
  CHECK(lr.words.size() == 10);  // 2*(4+1)
  for (const auto& en : lr.words) {
    CHECK(en.word.size() == 4);
    CHECK(!en.degenerate);
  }
}
