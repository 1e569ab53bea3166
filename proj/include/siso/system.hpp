#pragma once

#include <string>
#include <vector>

#include "siso/isometry.hpp"

namespace siso {

// A letter index with an orientation; inverses are formally distinct letters.
struct FormalLetter {
  int idx = -1;
  bool inv = false;

  FormalLetter inverse() const { return {idx, !inv}; }
  bool operator==(const FormalLetter&) const = default;
  bool operator<(const FormalLetter& o) const {
    return idx != o.idx ? idx < o.idx : inv < o.inv;
  }
};

struct Letter {
  std::string name;
  PartialIso iso;
};

// Finitely many partial isometries acting on a metric forest.
class System {
public:
  System(Forest f, std::vector<Letter> letters, int rank_hint = 0);

  const Forest& forest() const { return forest_; }
  int letter_count() const { return static_cast<int>(letters_.size()); }
  const Letter& letter(int i) const;
  int rank_hint() const { return rank_hint_; }
  int find_letter(const std::string& name) const;

  std::vector<FormalLetter> formal_letters() const;
  const Subtree& base_of(FormalLetter a) const;   // domain of the formal letter
  const Subtree& image_of(FormalLetter a) const;
  Point apply(FormalLetter a, const Point& z) const;
  PartialIso formal_iso(FormalLetter a) const;
  std::string formal_name(FormalLetter a) const;  // "b" / "b^-1"

  bool defined_at(FormalLetter a, const Loc& at) const;
  // Sum over all formal letters of the length measure of their domains.
  Scalar total_base_measure() const;

private:
  Forest forest_;
  std::vector<Letter> letters_;
  int rank_hint_;
};

// Re-checks every structural invariant and throws the first violation.
void validate_system(const System& s);

// The finite graph underlying a system: one vertex per component, one edge
// per letter, drawn from the domain component to the image component.
struct GammaGraph {
  int vertices = 0;
  struct Edge {
    int from, to, letter;
  };
  std::vector<Edge> edges;

  int graph_components() const;
  int b1() const;  // edges - vertices + components
  std::vector<int> valences() const;
};

GammaGraph gamma_graph(const System& s);

// Projection data produced by an induction step: where each new component
// sits inside the old forest and the old letter path each new letter reads.
struct GraphMap {
  std::vector<int> vertex_image;
  std::vector<std::vector<FormalLetter>> edge_image;
};

}  // namespace siso
