#include "siso/words.hpp"

#include <algorithm>

#include "siso/errors.hpp"

namespace siso {

Word word_inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

bool is_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == w[i].inverse()) return false;
  return true;
}

std::string word_name(const System& s, const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += s.formal_name(w[i]);
  }
  return out;
}

int word_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Composition compose_extend(const System& s, const Composition& c, FormalLetter a) {
  Composition out;
  if (c.empty()) return out;
  PartialIso next = s.formal_iso(a);
  if (c.identity) {
    out.map = std::move(next);
    return out;
  }
  const PartialIso& cur = *c.map;
  if (cur.im().component() != next.dom().component()) return out;
  const Forest& f = s.forest();
  const MetricTree& mid = f.tree(next.dom().component());
  std::optional<Subtree> meet = intersect(mid, cur.im(), next.dom());
  if (!meet) return out;
  Subtree new_dom = cur.apply_inverse(f, *meet);
  Subtree new_im = next.apply(f, *meet);
  const MetricTree& td = f.tree(new_dom.component());
  std::vector<Point> keys = new_dom.generators();
  for (const Point& b : new_dom.branch_points(td)) keys.push_back(b);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<AnchorPair> anchors;
  for (const Point& p : keys) anchors.push_back({p, next.apply(f, cur.apply(f, p))});
  out.map = PartialIso(f, std::move(new_dom), std::move(new_im), std::move(anchors));
  return out;
}

Composition compose(const System& s, const Word& w) {
  require(is_reduced(w), Errc::unreduced_word, "word is not reduced: " + word_name(s, w));
  Composition c;
  c.identity = true;
  for (FormalLetter a : w) {
    c = compose_extend(s, c, a);
    if (c.empty()) break;
  }
  return c;
}

namespace {

struct LangState {
  const System& s;
  std::vector<FormalLetter> alphabet;
  int n;
  long long budget;
  bool regular_only, exact_only;
  LanguageResult out;
  Word current;

  void dfs(const Composition& c) {
    if (static_cast<int>(current.size()) == n) return;
    for (FormalLetter a : alphabet) {
      if (!current.empty() && a == current.back().inverse()) continue;
      Composition next = compose_extend(s, c, a);
      if (next.empty()) continue;
      if (regular_only && next.degenerate()) continue;
      if (++out.visited > budget)
        fail(Errc::budget_exceeded,
             "word enumeration exceeded budget " + std::to_string(budget));
      current.push_back(a);
      if (!exact_only || static_cast<int>(current.size()) == n)
        out.words.push_back({current, next.degenerate()});
      dfs(next);
      current.pop_back();
    }
  }
};

}  // namespace

LanguageResult admissible_language(const System& s, int n, long long budget,
                                   bool regular_only, bool exact_only) {
  require(n >= 1, Errc::usage_error, "word length must be at least 1");
  LangState st{s, s.formal_letters(), n, budget, regular_only, exact_only, {}, {}};
  Composition root;
  root.identity = true;
  st.dfs(root);
  std::stable_sort(st.out.words.begin(), st.out.words.end(),
                   [](const LanguageEntry& a, const LanguageEntry& b) {
                     return word_compare(a.word, b.word) < 0;
                   });
  return std::move(st.out);
}

}  // namespace siso
