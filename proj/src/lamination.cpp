#include "siso/lamination.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "siso/errors.hpp"

namespace siso {

LanguageResult regular_words(const System& s, int n, long long budget) {
  require(n >= 1, Errc::bad_index, "depth must be at least 1");
  return admissible_language(s, n, budget, true, true);
}

Turn Turn::make(const System& s, FormalLetter a, FormalLetter b) {
  require(!(a == b), Errc::bad_index, "a turn needs two distinct edges");
  int va = s.base_of(a).component();
  int vb = s.base_of(b).component();
  require(va == vb, Errc::host_mismatch, "turn edges leave different vertices");
  Turn t;
  t.vertex = va;
  t.e = std::min(a, b);
  t.f = std::max(a, b);
  return t;
}

std::string turn_name(const System& s, const Turn& t) {
  return "{" + s.formal_name(t.e) + "," + s.formal_name(t.f) + "}@" +
         s.forest().name(t.vertex);
}

bool TrainTrack::has(const Turn& t) const {
  return std::binary_search(legal.begin(), legal.end(), t);
}

TrainTrack legal_turns(const System& s, int L, long long budget) {
  require(L >= 1, Errc::bad_index, "legality depth must be at least 1");
  TrainTrack tt;
  tt.graph = gamma_graph(s);
  tt.depth_used = L;
  LanguageResult words = admissible_language(s, 2 * L + 2, budget, true, true);
  tt.witnesses = static_cast<long long>(words.words.size());
  std::set<Turn> legal;
  for (const auto& en : words.words) {
    FormalLetter x = en.word[L], y = en.word[L + 1];
    legal.insert(Turn::make(s, x.inverse(), y));
  }
  tt.legal.assign(legal.begin(), legal.end());
  return tt;
}

WhiteheadReport whitehead_report(const System& s, const TrainTrack& tt) {
  WhiteheadReport out;
  out.depth_used = tt.depth_used;
  out.all_connected = true;
  int nv = s.forest().size();
  for (int v = 0; v < nv; ++v) {
    WhiteheadVertex wv;
    wv.vertex = v;
    for (FormalLetter a : s.formal_letters())
      if (s.base_of(a).component() == v) wv.nodes.push_back(a);
    for (const Turn& t : tt.legal)
      if (t.vertex == v) wv.links.push_back(t);

    // Union-find over the nodes through the links.
    std::map<FormalLetter, int> id;
    for (size_t i = 0; i < wv.nodes.size(); ++i) id[wv.nodes[i]] = static_cast<int>(i);
    std::vector<int> up(wv.nodes.size());
    for (size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i);
    auto find = [&](int a) {
      while (up[a] != a) a = up[a] = up[up[a]];
      return a;
    };
    for (const Turn& t : wv.links) up[find(id.at(t.e))] = find(id.at(t.f));
    std::set<int> roots;
    for (size_t i = 0; i < up.size(); ++i) roots.insert(find(static_cast<int>(i)));
    wv.pieces = static_cast<int>(roots.size());
    wv.connected = wv.pieces <= 1;
    if (!wv.connected) {
      int side = find(0);
      for (size_t i = 0; i < wv.nodes.size(); ++i)
        if (find(static_cast<int>(i)) == side) wv.witness_side.push_back(wv.nodes[i]);
    }
    out.all_connected = out.all_connected && wv.connected;
    out.vertices.push_back(std::move(wv));
  }
  return out;
}

CarriedSubgraph carried_subgraph(const System& s, const std::vector<Word>& words) {
  CarriedSubgraph out;
  std::set<int> verts, lets;
  for (const Word& w : words) {
    require(is_reduced(w), Errc::unreduced_word, "carried words must be reduced");
    for (FormalLetter a : w) {
      lets.insert(a.idx);
      verts.insert(s.base_of(a).component());
      verts.insert(s.image_of(a).component());
    }
  }
  out.vertices.assign(verts.begin(), verts.end());
  out.letters.assign(lets.begin(), lets.end());

  // b1 of the subgraph: edges - vertices + components.
  std::map<int, int> id;
  for (size_t i = 0; i < out.vertices.size(); ++i) id[out.vertices[i]] = static_cast<int>(i);
  std::vector<int> up(out.vertices.size());
  for (size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i);
  auto find = [&](int a) {
    while (up[a] != a) a = up[a] = up[up[a]];
    return a;
  };
  for (int li : out.letters) {
    int u = id.at(s.letter(li).iso.dom().component());
    int v = id.at(s.letter(li).iso.im().component());
    up[find(u)] = find(v);
  }
  std::set<int> roots;
  for (size_t i = 0; i < up.size(); ++i) roots.insert(find(static_cast<int>(i)));
  out.b1 = static_cast<int>(out.letters.size()) - static_cast<int>(out.vertices.size()) +
           static_cast<int>(roots.size());
  out.proper = static_cast<int>(out.letters.size()) < s.letter_count() ||
               static_cast<int>(out.vertices.size()) < s.forest().size();
  out.proper_free_factor = out.proper && out.b1 < gamma_graph(s).b1();
  return out;
}

bool LeafSet::has_pair(int i, int j) const {
  return std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) != pairs.end();
}

LeafSet leaf_set_at(const System& s, const Loc& x, int n, long long budget) {
  require(n >= 1, Errc::bad_index, "depth must be at least 1");
  LeafSet out;
  // Depth-first over words defined at x itself (not just nonempty domains).
  struct Node {
    Loc z;
    Word w;
  };
  long long visited = 0;
  std::vector<Node> stack{{x, {}}};
  while (!stack.empty()) {
    Node cur = std::move(stack.back());
    stack.pop_back();
    if (static_cast<int>(cur.w.size()) == n) {
      out.halves.push_back({x, cur.w});
      continue;
    }
    for (FormalLetter a : s.formal_letters()) {
      if (!cur.w.empty() && a == cur.w.back().inverse()) continue;
      if (!s.defined_at(a, cur.z)) continue;
      require(++visited <= budget, Errc::budget_exceeded, "leaf enumeration budget");
      Node nxt;
      nxt.z = Loc{s.image_of(a).component(), s.apply(a, cur.z.p)};
      nxt.w = cur.w;
      nxt.w.push_back(a);
      stack.push_back(std::move(nxt));
    }
  }
  std::sort(out.halves.begin(), out.halves.end(),
            [](const Half& a, const Half& b) { return word_compare(a.word, b.word) < 0; });
  // Two halves make a leaf exactly when they leave x along different first
  // letters; one shared first letter would fold back on itself.
  for (size_t i = 0; i < out.halves.size(); ++i)
    for (size_t j = 0; j < out.halves.size(); ++j)
      if (i != j && !(out.halves[i].word[0] == out.halves[j].word[0]))
        out.pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
  return out;
}

LeafSet diagonal_closure(const LeafSet& ls) {
  int n = static_cast<int>(ls.halves.size());
  std::vector<int> up(n);
  for (int i = 0; i < n; ++i) up[i] = i;
  auto find = [&](int a) {
    while (up[a] != a) a = up[a] = up[up[a]];
    return a;
  };
  for (auto [i, j] : ls.pairs) {
    require(i >= 0 && i < n && j >= 0 && j < n, Errc::bad_index, "pair index out of range");
    require(ls.halves[i].basepoint.component == ls.halves[j].basepoint.component &&
                ls.halves[i].basepoint.p == ls.halves[j].basepoint.p,
            Errc::host_mismatch, "leaf halves anchored at different basepoints");
    up[find(i)] = find(j);
  }
  LeafSet out;
  out.halves = ls.halves;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && find(i) == find(j)) out.pairs.push_back({i, j});
  return out;
}

const char* recurrence_name(Recurrence r) {
  switch (r) {
    case Recurrence::pass: return "PASS";
    case Recurrence::fail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

namespace {

// Reading direction is immaterial for a leaf, so subword matching folds a
// word with its reversed inverse.
Word canonical_read(const Word& w) {
  Word rev = word_inverse(w);
  return word_compare(w, rev) <= 0 ? w : rev;
}

}  // namespace

MinimalityReport minimality_diagnostic(const System& s, int n, int R, long long budget) {
  require(n >= 1 && n <= R, Errc::bad_index, "need 1 <= n <= R");
  MinimalityReport out;
  out.n = n;
  out.R = R;
  LanguageResult lang;
  try {
    lang = admissible_language(s, R, budget, true, false);
  } catch (const Error& e) {
    if (e.code() != Errc::budget_exceeded) throw;
    out.verdict = Recurrence::inconclusive;
    out.note = "language budget exhausted";
    return out;
  }

  out.complexity.assign(R, 0);
  std::set<Word> need;
  std::vector<const Word*> hosts;
  for (const auto& en : lang.words) {
    int len = static_cast<int>(en.word.size());
    ++out.complexity[len - 1];
    if (len == n) need.insert(canonical_read(en.word));
    if (len == R) hosts.push_back(&en.word);
  }
  for (int m = 0; m + 1 < R; ++m)
    if (out.complexity[m + 1] <= out.complexity[m]) {
      out.eventually_periodic = true;
      out.periodicity_at = m + 1;
      break;
    }
  if (hosts.empty()) {
    out.verdict = Recurrence::inconclusive;
    out.note = "no regular words of length R";
    return out;
  }

  for (const Word* host : hosts) {
    std::set<Word> seen;
    for (int i = 0; i + n <= R; ++i)
      seen.insert(canonical_read(Word(host->begin() + i, host->begin() + i + n)));
    for (const Word& u : need)
      if (!seen.count(u)) {
        out.verdict = Recurrence::fail;
        out.missing = u;
        out.host = *host;
        return out;
      }
  }
  out.verdict = Recurrence::pass;
  return out;
}

}  // namespace siso
