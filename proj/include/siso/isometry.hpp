#pragma once

#include "siso/forest.hpp"
#include "siso/subtree.hpp"

namespace siso {

struct AnchorPair {
  Point src, dst;
};

// A distance-preserving bijection between two subtrees, pinned down by
// anchor pairs. Anchors must cover every extremal point and every branch
// point of the domain; together with the pairwise-distance check this
// determines the map uniquely, and construction validates all of it.
class PartialIso {
public:
  PartialIso(const Forest& f, Subtree dom, Subtree im, std::vector<AnchorPair> anchors);

  const Subtree& dom() const { return dom_; }
  const Subtree& im() const { return im_; }
  const std::vector<AnchorPair>& anchors() const { return anchors_; }

  Point apply(const Forest& f, const Point& z) const;
  Point apply_inverse(const Forest& f, const Point& z) const;
  Subtree apply(const Forest& f, const Subtree& s) const;
  Subtree apply_inverse(const Forest& f, const Subtree& s) const;

  PartialIso inverse() const;
  // Restriction to a subtree of the domain; anchors are regenerated.
  PartialIso restrict(const Forest& f, const Subtree& new_dom) const;

private:
  Subtree dom_, im_;
  std::vector<AnchorPair> anchors_;
};

}  // namespace siso
