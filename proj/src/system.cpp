#include "siso/system.hpp"

#include <algorithm>
#include <set>

#include "siso/errors.hpp"

namespace siso {

System::System(Forest f, std::vector<Letter> letters, int rank_hint)
    : forest_(std::move(f)), letters_(std::move(letters)), rank_hint_(rank_hint) {
  require(forest_.size() > 0, Errc::bad_index, "system needs at least one component");
  if (forest_.names.size() != forest_.trees.size()) {
    forest_.names.resize(forest_.trees.size());
    for (int c = 0; c < forest_.size(); ++c)
      if (forest_.names[c].empty()) forest_.names[c] = "T" + std::to_string(c);
  }
  for (const Letter& l : letters_) {
    require(l.iso.dom().component() >= 0 && l.iso.dom().component() < forest_.size(),
            Errc::containment_violation, "letter " + l.name + " domain component missing");
    require(l.iso.im().component() >= 0 && l.iso.im().component() < forest_.size(),
            Errc::containment_violation, "letter " + l.name + " image component missing");
  }
}

const Letter& System::letter(int i) const {
  require(i >= 0 && i < letter_count(), Errc::bad_index, "letter id out of range");
  return letters_[i];
}

int System::find_letter(const std::string& name) const {
  for (int i = 0; i < letter_count(); ++i)
    if (letters_[i].name == name) return i;
  return -1;
}

std::vector<FormalLetter> System::formal_letters() const {
  std::vector<FormalLetter> out;
  for (int i = 0; i < letter_count(); ++i) {
    out.push_back({i, false});
    out.push_back({i, true});
  }
  return out;
}

const Subtree& System::base_of(FormalLetter a) const {
  const Letter& l = letter(a.idx);
  return a.inv ? l.iso.im() : l.iso.dom();
}

const Subtree& System::image_of(FormalLetter a) const {
  const Letter& l = letter(a.idx);
  return a.inv ? l.iso.dom() : l.iso.im();
}

Point System::apply(FormalLetter a, const Point& z) const {
  const Letter& l = letter(a.idx);
  return a.inv ? l.iso.apply_inverse(forest_, z) : l.iso.apply(forest_, z);
}

PartialIso System::formal_iso(FormalLetter a) const {
  const Letter& l = letter(a.idx);
  return a.inv ? l.iso.inverse() : l.iso;
}

std::string System::formal_name(FormalLetter a) const {
  return letter(a.idx).name + (a.inv ? "^-1" : "");
}

bool System::defined_at(FormalLetter a, const Loc& at) const {
  const Subtree& b = base_of(a);
  return b.component() == at.component && b.contains(at.p);
}

Scalar System::total_base_measure() const {
  Scalar m;
  for (const Letter& l : letters_) {
    m += l.iso.dom().slab().measure();
    m += l.iso.im().slab().measure();
  }
  return m;
}

void validate_system(const System& s) {
  std::set<std::string> names;
  for (int i = 0; i < s.letter_count(); ++i) {
    const Letter& l = s.letter(i);
    require(!l.name.empty(), Errc::usage_error, "letter with an empty name");
    require(names.insert(l.name).second, Errc::usage_error,
            "duplicate letter name " + l.name);
    const PartialIso& iso = l.iso;
    try {
      // Rebuilding re-runs every anchor, coverage and image check.
      PartialIso(s.forest(), iso.dom(), iso.im(), iso.anchors());
    } catch (const Error& e) {
      fail(e.code(), "letter " + l.name + ": " + e.what());
    }
  }
}

int GammaGraph::graph_components() const {
  std::vector<int> uf(vertices);
  for (int i = 0; i < vertices; ++i) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const Edge& e : edges) uf[find(e.from)] = find(e.to);
  int n = 0;
  for (int i = 0; i < vertices; ++i)
    if (find(i) == i) ++n;
  return n;
}

int GammaGraph::b1() const {
  return static_cast<int>(edges.size()) - vertices + graph_components();
}

std::vector<int> GammaGraph::valences() const {
  std::vector<int> val(vertices, 0);
  for (const Edge& e : edges) {
    ++val[e.from];
    ++val[e.to];
  }
  return val;
}

GammaGraph gamma_graph(const System& s) {
  GammaGraph g;
  g.vertices = s.forest().size();
  for (int i = 0; i < s.letter_count(); ++i) {
    const Letter& l = s.letter(i);
    g.edges.push_back({l.iso.dom().component(), l.iso.im().component(), i});
  }
  return g;
}

}  // namespace siso
