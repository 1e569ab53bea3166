#pragma once

#include <optional>
#include <vector>

#include "siso/system.hpp"

namespace siso {

// Reduced words over the formal letters, applied left to right: the domain
// of w = x1 x2 ... xn is the set of points whose orbit under x1, then x2,
// and so on stays inside the successive bases.
using Word = std::vector<FormalLetter>;

Word word_inverse(const Word& w);
bool is_reduced(const Word& w);
std::string word_name(const System& s, const Word& w);

// Lexicographic order in the canonical letter order, shorter words first.
int word_compare(const Word& a, const Word& b);

struct Composition {
  bool identity = false;             // the empty word
  std::optional<PartialIso> map;     // absent when the domain is empty
  bool empty() const { return !identity && !map; }
  bool degenerate() const { return map && map->dom().degenerate(); }
};

// Composes a reduced word; throws unreduced_word otherwise.
Composition compose(const System& s, const Word& w);
// One-letter extension of a partial composition.
Composition compose_extend(const System& s, const Composition& c, FormalLetter a);

struct LanguageEntry {
  Word word;
  bool degenerate;  // composition defined on a single point only
};

struct LanguageResult {
  std::vector<LanguageEntry> words;  // grouped by length, lex inside a length
  long long visited = 0;             // DFS nodes explored
};

// Admissible reduced words of length 1..n; with exact_only just length n.
// With regular_only, only words whose every prefix composes to a map with a
// nondegenerate domain (prefix domains only shrink, so pruning is safe).
// Visiting more than `budget` DFS nodes raises budget_exceeded.
LanguageResult admissible_language(const System& s, int n, long long budget,
                                   bool regular_only, bool exact_only);

}  // namespace siso
