#pragma once

#include <string>
#include <vector>

#include "siso/tree.hpp"

namespace siso {

// Disjoint union of metric trees; component id = index.
struct Forest {
  std::vector<MetricTree> trees;
  std::vector<std::string> names;

  int size() const { return static_cast<int>(trees.size()); }
  const MetricTree& tree(int c) const;
  const std::string& name(int c) const;
  Scalar total_length() const;
};

// A point tagged with the component it lives in.
struct Loc {
  int component = -1;
  Point p;
  bool operator==(const Loc&) const = default;
  bool operator<(const Loc& o) const {
    if (component != o.component) return component < o.component;
    return p < o.p;
  }
  std::string str() const;
};

}  // namespace siso
