#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "siso/errors.hpp"
#include "siso/system.hpp"

using namespace siso;

namespace {

Scalar phi() { return corpus::phi(); }

// A point of the golden segment by coordinate.
Point at(const System& s, const Scalar& x) {
  return Point::interior(s.forest().tree(0), 0, x);
}

}  // namespace

TEST_CASE("golden system validates and exposes its letters") {
  System s = corpus::golden_system();
  CHECK_NOTHROW(validate_system(s));
  CHECK(s.letter_count() == 2);
  CHECK(s.find_letter("a") == 0);
  CHECK(s.find_letter("b") == 1);
  CHECK(s.find_letter("z") == -1);
  CHECK(s.forest().size() == 1);
  CHECK(s.forest().tree(0).total_length() == phi() * phi());

  // a translates [0,1] by phi; b translates [1, phi^2] by -1.
  CHECK(s.apply({0, false}, at(s, Scalar::ratio(1, 2))) == at(s, phi() + Scalar::ratio(1, 2)));
  CHECK(s.apply({0, false}, Point::vertex(0)) == at(s, phi()));
  CHECK(s.apply({1, false}, at(s, phi())) == at(s, phi() - Scalar(1)));
  CHECK(s.apply({1, true}, Point::vertex(0)) == at(s, Scalar(1)));

  // Formal letters come in canonical order with the right bases.
  auto fl = s.formal_letters();
  REQUIRE(fl.size() == 4);
  CHECK(s.formal_name(fl[0]) == "a");
  CHECK(s.formal_name(fl[1]) == "a^-1");
  CHECK(s.base_of(fl[0]).contains(at(s, Scalar::ratio(1, 2))));
  CHECK_FALSE(s.base_of(fl[0]).contains(at(s, phi())));
  CHECK(s.base_of(fl[1]).contains(at(s, phi())));  // dom(a^-1) = im(a)
  CHECK(s.image_of(fl[1]) == s.base_of(fl[0]));
}

TEST_CASE("gamma graph of a one-component system is a rose") {
  System s = corpus::golden_system();
  GammaGraph g = gamma_graph(s);
  CHECK(g.vertices == 1);
  CHECK(g.edges.size() == 2);
  CHECK(g.graph_components() == 1);
  CHECK(g.b1() == 2);
  CHECK(g.valences() == std::vector<int>{4});
}

TEST_CASE("gamma graph across components") {
  // Two segments, one letter from each side: a path graph, b1 = 0 until a
  // second letter closes a loop.
  Forest f;
  f.trees.push_back(MetricTree(2, {{0, 1, Scalar(2)}}));
  f.trees.push_back(MetricTree(2, {{0, 1, Scalar(2)}}));
  f.names = {"T0", "T1"};
  const MetricTree& t0 = f.trees[0];
  const MetricTree& t1 = f.trees[1];
  Point a0 = Point::vertex(0), a1 = Point::interior(t0, 0, Scalar(1));
  Point b0 = Point::interior(t1, 0, Scalar(1)), b1v = Point::vertex(1);
  Subtree dom = Subtree::hull(t0, 0, {a0, a1});
  Subtree im = Subtree::hull(t1, 1, {b0, b1v});
  PartialIso cross(f, dom, im, {{a0, b0}, {a1, b1v}});
  System s(f, {{"x", cross}});
  CHECK_NOTHROW(validate_system(s));
  GammaGraph g = gamma_graph(s);
  CHECK(g.vertices == 2);
  CHECK(g.b1() == 0);
  CHECK(g.valences() == std::vector<int>{1, 1});

  System s2(f, {{"x", cross}, {"y", cross.inverse()}});
  GammaGraph g2 = gamma_graph(s2);
  CHECK(g2.b1() == 1);
  CHECK(g2.valences() == std::vector<int>{2, 2});
}

TEST_CASE("anchor pairs that stretch distances are rejected") {
  Forest f;
  f.trees.push_back(MetricTree(2, {{0, 1, Scalar(4)}}));
  f.names = {"T0"};
  const MetricTree& t = f.trees[0];
  Point p0 = Point::vertex(0), p1 = Point::interior(t, 0, Scalar(1));
  Point q0 = Point::interior(t, 0, Scalar(2)), q1 = Point::interior(t, 0, Scalar(4));
  Subtree dom = Subtree::hull(t, 0, {p0, p1});
  Subtree im = Subtree::hull(t, 0, {q0, q1});
  try {
    PartialIso bad(f, dom, im, {{p0, q0}, {p1, q1}});
    FAIL("expected isometry_violation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::isometry_violation);
  }
}

TEST_CASE("missing anchors on branch or extremal points are rejected") {
  Forest f;
  f.trees.push_back(MetricTree(4, {{0, 1, Scalar(1)}, {0, 2, Scalar(1)}, {0, 3, Scalar(1)}}));
  f.names = {"T0"};
  const MetricTree& t = f.trees[0];
  Subtree tri = Subtree::hull(t, 0, {Point::vertex(1), Point::vertex(2), Point::vertex(3)});
  // Identity map but with only two of the three tips anchored.
  try {
    PartialIso bad(f, tri, tri,
                   {{Point::vertex(1), Point::vertex(1)}, {Point::vertex(2), Point::vertex(2)}});
    FAIL("expected anchor_deficit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::anchor_deficit);
  }
  // All tips given: fine, even though the branch point is implied. The
  // branch point itself also needs a pin once it is listed as required.
  CHECK_NOTHROW(PartialIso(f, tri, tri,
                           {{Point::vertex(1), Point::vertex(1)},
                            {Point::vertex(2), Point::vertex(2)},
                            {Point::vertex(3), Point::vertex(3)},
                            {Point::vertex(0), Point::vertex(0)}}));
}

TEST_CASE("anchor sources outside the domain are rejected") {
  System g = corpus::golden_system();
  const Forest& f = g.forest();
  const MetricTree& t = f.tree(0);
  Point d0 = Point::vertex(0), d1 = Point::interior(t, 0, Scalar(1));
  Point far = Point::interior(t, 0, Scalar(2));
  Subtree dom = Subtree::hull(t, 0, {d0, d1});
  try {
    PartialIso bad(f, dom, dom, {{d0, d0}, {far, d1}});
    FAIL("expected outside_host");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::outside_host);
  }
}

TEST_CASE("declared image must match the mapped domain") {
  System g = corpus::golden_system();
  const Forest& f = g.forest();
  const MetricTree& t = f.tree(0);
  Point d0 = Point::vertex(0), d1 = Point::interior(t, 0, Scalar(1));
  Subtree dom = Subtree::hull(t, 0, {d0, d1});
  Subtree too_big = Subtree::hull(t, 0, {d0, Point::interior(t, 0, Scalar(2))});
  try {
    PartialIso bad(f, dom, too_big, {{d0, d0}, {d1, d1}});
    FAIL("expected isometry_violation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::isometry_violation);
  }
}

TEST_CASE("validate_system rejects duplicate letter names") {
  System g = corpus::golden_system();
  std::vector<Letter> twice = {{"a", g.letter(0).iso}, {"a", g.letter(1).iso}};
  System bad(g.forest(), twice);
  CHECK_THROWS_AS(validate_system(bad), Error);
}

TEST_CASE("apply preserves distances and inverts cleanly") {
  // Intent: spot-check the isometry property on random interior points.
  System s = corpus::golden_system();
  const MetricTree& t = s.forest().tree(0);
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> num(0, 64);
  for (int it = 0; it < 200; ++it) {
    for (FormalLetter a : s.formal_letters()) {
      const Subtree& dom = s.base_of(a);
      // Random points of the domain segment.
      auto g = dom.generators();
      Scalar d = dist(t, g[0], g[1]);
      Scalar s1 = d * Scalar::ratio(num(rng), 64);
      Scalar s2 = d * Scalar::ratio(num(rng), 64);
      Point z1 = point_at(t, g[0], g[1], s1);
      Point z2 = point_at(t, g[0], g[1], s2);
      Point w1 = s.apply(a, z1), w2 = s.apply(a, z2);
      CHECK(dist(t, w1, w2) == dist(t, z1, z2));
      CHECK(s.apply(a.inverse(), w1) == z1);
    }
  }
}

TEST_CASE("apply on subtrees commutes with hulls") {
  System s = corpus::golden_system();
  const Forest& f = s.forest();
  const MetricTree& t = f.tree(0);
  const PartialIso& a = s.letter(0).iso;
  Subtree seg = Subtree::hull(t, 0, {Point::interior(t, 0, Scalar::ratio(1, 4)),
                                     Point::interior(t, 0, Scalar::ratio(3, 4))});
  Subtree img = a.apply(f, seg);
  CHECK(img.contains(Point::interior(t, 0, phi() + Scalar::ratio(1, 2))));
  CHECK(img.diameter(t) == Scalar::ratio(1, 2));
  CHECK(a.apply_inverse(f, img) == seg);
  // Degenerate subtree maps to a degenerate subtree.
  Subtree pt = Subtree::hull(t, 0, {Point::interior(t, 0, Scalar::ratio(1, 3))});
  Subtree ipt = a.apply(f, pt);
  CHECK(ipt.degenerate());
  CHECK(ipt.the_point() == Point::interior(t, 0, phi() + Scalar::ratio(1, 3)));
}
