#pragma once

#include <string>
#include <vector>

#include "siso/words.hpp"

namespace siso {

// Admissible words of length exactly n whose composition keeps a
// nondegenerate domain at every prefix: the finite-depth witnesses of
// regular leaves. Subwords of regular words are again regular, so the
// enumeration prunes exactly.
LanguageResult regular_words(const System& s, int n, long long budget);

// An unordered pair of distinct directed letter-edges leaving one vertex of
// the associated graph.
struct Turn {
  int vertex = -1;
  FormalLetter e, f;  // normalized: e < f

  static Turn make(const System& s, FormalLetter a, FormalLetter b);
  bool operator==(const Turn&) const = default;
  bool operator<(const Turn& o) const {
    if (vertex != o.vertex) return vertex < o.vertex;
    if (!(e == o.e)) return e < o.e;
    return f < o.f;
  }
};

std::string turn_name(const System& s, const Turn& t);

// The turns crossed by some regular word u.(e-bar)(e').v with |u| = |v| = L.
struct TrainTrack {
  GammaGraph graph;
  std::vector<Turn> legal;  // sorted, unique
  int depth_used = 0;
  long long witnesses = 0;  // regular words of length 2L+2 inspected

  bool has(const Turn& t) const;
};
TrainTrack legal_turns(const System& s, int L, long long budget);

// One Whitehead graph: nodes are the directed letters leaving the vertex,
// links the legal turns between them.
struct WhiteheadVertex {
  int vertex = -1;
  std::vector<FormalLetter> nodes;
  std::vector<Turn> links;
  bool connected = false;
  int pieces = 0;
  // One side of a split when disconnected; empty otherwise.
  std::vector<FormalLetter> witness_side;
};
struct WhiteheadReport {
  std::vector<WhiteheadVertex> vertices;
  bool all_connected = false;
  int depth_used = 0;
};
WhiteheadReport whitehead_report(const System& s, const TrainTrack& tt);

// The smallest subgraph of the associated graph containing the edge images
// of the given words, with the proper-free-factor test on its rank.
struct CarriedSubgraph {
  std::vector<int> vertices;  // component ids touched
  std::vector<int> letters;   // letter indices used
  int b1 = 0;
  bool proper = false;
  bool proper_free_factor = false;  // proper and b1 < b1(whole graph)
};
CarriedSubgraph carried_subgraph(const System& s, const std::vector<Word>& words);

// One-sided admissible word anchored at a point of the forest.
struct Half {
  Loc basepoint;
  Word word;
  bool operator==(const Half&) const = default;
};

// Finitely many halves through shared basepoints plus ordered pairs of
// them (two-sided leaves); pair sets are kept flip-closed.
struct LeafSet {
  std::vector<Half> halves;
  std::vector<std::pair<int, int>> pairs;  // indices into halves

  bool has_pair(int i, int j) const;
};

// Halves of depth n at the point x, paired whenever they leave x by
// different first letters (a genuine two-sided leaf germ).
LeafSet leaf_set_at(const System& s, const Loc& x, int n, long long budget);

// Chaining closure: (X1,X2),(X2,X3) force (X1,X3). The result is every
// ordered pair of distinct halves in the same chaining class, flip-closed
// and idempotent. Mismatched basepoints inside one pair are rejected.
LeafSet diagonal_closure(const LeafSet& ls);

enum class Recurrence { pass, fail, inconclusive };
const char* recurrence_name(Recurrence r);

// Finite-depth minimality evidence: uniform recurrence of the regular
// language (every regular word of length R contains every regular word of
// length n, up to reading direction), plus an eventual-periodicity flag
// from the complexity counts.
struct MinimalityReport {
  Recurrence verdict = Recurrence::inconclusive;
  int n = 0, R = 0;
  std::vector<long long> complexity;  // regular word counts, lengths 1..R
  bool eventually_periodic = false;
  int periodicity_at = -1;  // first m with p(m+1) <= p(m)
  Word missing, host;       // FAIL witness: `missing` is in no window of `host`
  std::string note;
};
MinimalityReport minimality_diagnostic(const System& s, int n, int R, long long budget);

}  // namespace siso
