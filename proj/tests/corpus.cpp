#include "corpus.hpp"

using namespace siso;

namespace corpus {

Scalar phi() { return Scalar::quadratic(Rational(1, 2), Rational(1, 2), 5); }
Scalar root(int d) { return Scalar::quadratic(0, 1, d); }

IntervalExchange golden_iet() { return {{Scalar(1), phi()}, {1, 0}}; }
IntervalExchange silver_iet() { return {{Scalar(1), root(2)}, {1, 0}}; }
IntervalExchange sqrt3_iet() { return {{Scalar(1), root(3)}, {1, 0}}; }

IntervalExchange three_rev_iet() {
  // (1/2, 1/3, 1/6 + sqrt(2)/100) with the full reversal.
  Scalar eps = root(2) / Scalar(100);
  return {{Scalar::ratio(1, 2), Scalar::ratio(1, 3), Scalar::ratio(1, 6) + eps}, {2, 1, 0}};
}

IntervalExchange three_rot_iet() {
  // Rotation-like permutation; the 2/5 keeps mark orbits off the marks
  // (1/2 or 1/3 in that slot would hit the mark at 1 within three steps).
  return {{Scalar(1), phi() - Scalar(1), Scalar::ratio(2, 5)}, {1, 2, 0}};
}

IntervalExchange four_rev_iet() {
  return {{Scalar(1), root(2) / Scalar(2), Scalar::ratio(3, 2), root(2) / Scalar(3)},
          {3, 2, 1, 0}};
}

IntervalExchange rational_iet() { return {{Scalar::ratio(1, 3), Scalar::ratio(2, 3)}, {1, 0}}; }

System segment_system(const Scalar& len, const std::vector<SegLetter>& letters) {
  MetricTree seg(2, {{0, 1, len}});
  Forest f;
  f.trees.push_back(seg);
  f.names.push_back("T0");
  const MetricTree& t = f.trees[0];
  std::vector<Letter> out;
  for (const SegLetter& l : letters) {
    Point d0 = Point::interior(t, 0, l.lo);
    Point d1 = Point::interior(t, 0, l.hi);
    Point i0 = Point::interior(t, 0, l.lo + l.t);
    Point i1 = Point::interior(t, 0, l.hi + l.t);
    Subtree dom = Subtree::hull(t, 0, {d0, d1});
    Subtree im = Subtree::hull(t, 0, {i0, i1});
    out.push_back({l.name, PartialIso(f, std::move(dom), std::move(im), {{d0, i0}, {d1, i1}})});
  }
  return System(std::move(f), std::move(out));
}

System golden_system() { return iet_to_system(golden_iet()); }
System silver_system() { return iet_to_system(silver_iet()); }

System golden_overhang_system() {
  // Coordinates shifted by delta = 1/10: the segment is [-delta, phi^2],
  // letter a overhangs the left end; one trim recovers the golden system.
  Scalar delta = Scalar::ratio(1, 10);
  Scalar p2 = phi() * phi();
  return segment_system(p2 + delta, {{"a", Scalar(0), Scalar(1) + delta, phi()},
                                     {"b", Scalar(1) + delta, p2 + delta, Scalar(-1)}});
}

System silver_overhang_system() {
  Scalar delta = Scalar::ratio(1, 8);
  Scalar total = Scalar(1) + root(2);
  return segment_system(total + delta, {{"a", Scalar(0), Scalar(1) + delta, root(2)},
                                        {"b", Scalar(1) + delta, total + delta, Scalar(-1)}});
}

System three_rev_overhang_system() {
  // The three-letter reversal with letter a's domain and image extended
  // delta to the left of the heart.
  IntervalExchange e = three_rev_iet();
  Scalar delta = Scalar::ratio(1, 12);
  std::vector<Scalar> xs = e.top_marks();
  std::vector<Scalar> ys = e.bottom_marks();
  std::vector<SegLetter> letters;
  for (int j = 0; j < e.size(); ++j) {
    Scalar lo = xs[j] + delta, hi = xs[j + 1] + delta;
    Scalar t = (ys[e.perm[j]] + delta) - lo;
    if (j == 0) lo = Scalar(0);  // overhang: reaches delta past the heart edge
    letters.push_back({std::string(1, static_cast<char>('a' + j)), lo, hi, t});
  }
  return segment_system(e.total() + delta, letters);
}

System two_zone_system() {
  // {a, b} swap pieces of [0, 3]; {c, d} swap pieces of [7, 10]; nothing
  // connects the zones.
  return segment_system(Scalar(10),
                        {{"a", Scalar(0), root(2), Scalar(3) - root(2)},
                         {"b", root(2), Scalar(3), -root(2)},
                         {"c", Scalar(7), Scalar(7) + root(2), Scalar(3) - root(2)},
                         {"d", Scalar(7) + root(2), Scalar(10), -root(2)}});
}

System shrinking_system() {
  // Interval-translation dynamics: domains partition [0, 1] but the images
  // stack up over the left part, so trimming erodes the support forever.
  // c's rational landing point 1/4 keeps the defect orbit from closing up
  // against the sqrt-2 marks (s/2 or 3-2*sqrt(2) there reach fixed points).
  Scalar s = root(2) - Scalar(1);           // ~0.4142
  Scalar one(1);
  return segment_system(one, {{"a", Scalar(0), s, one - s},          // [0,s] -> [1-s,1]
                              {"b", s, Scalar(2) * s, -s},           // [s,2s] -> [0,s]
                              {"c", Scalar(2) * s, one,
                               Scalar::ratio(1, 4) - Scalar(2) * s}});  // -> [1/4, ...]
}

std::vector<CorpusEntry> full_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back({"golden", golden_system(), true});
  out.push_back({"silver", silver_system(), true});
  out.push_back({"sqrt3", iet_to_system(sqrt3_iet()), true});
  out.push_back({"three_rev", iet_to_system(three_rev_iet()), true});
  out.push_back({"three_rot", iet_to_system(three_rot_iet()), true});
  out.push_back({"four_rev", iet_to_system(four_rev_iet()), true});
  out.push_back({"golden_overhang", golden_overhang_system(), true});
  out.push_back({"silver_overhang", silver_overhang_system(), true});
  out.push_back({"three_rev_overhang", three_rev_overhang_system(), true});
  out.push_back({"sqrt3_shifted", iet_to_system({{root(3) - Scalar(1), Scalar(1)}, {1, 0}}), true});
  return out;
}

}  // namespace corpus
