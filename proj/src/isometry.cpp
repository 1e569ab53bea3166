#include "siso/isometry.hpp"

#include <algorithm>

#include "siso/errors.hpp"

namespace siso {

PartialIso::PartialIso(const Forest& f, Subtree dom, Subtree im,
                       std::vector<AnchorPair> anchors)
    : dom_(std::move(dom)), im_(std::move(im)), anchors_(std::move(anchors)) {
  const MetricTree& td = f.tree(dom_.component());
  const MetricTree& ti = f.tree(im_.component());
  require(!anchors_.empty(), Errc::anchor_deficit, "isometry with no anchor pairs");
  std::sort(anchors_.begin(), anchors_.end(),
            [](const AnchorPair& a, const AnchorPair& b) { return a.src < b.src; });
  anchors_.erase(std::unique(anchors_.begin(), anchors_.end(),
                             [](const AnchorPair& a, const AnchorPair& b) {
                               return a.src == b.src && a.dst == b.dst;
                             }),
                 anchors_.end());
  for (const AnchorPair& a : anchors_) {
    require(dom_.contains(a.src), Errc::outside_host,
            "anchor source " + a.src.str() + " outside the domain");
    require(im_.contains(a.dst), Errc::outside_host,
            "anchor image " + a.dst.str() + " outside the image");
  }
  for (size_t i = 0; i < anchors_.size(); ++i) {
    for (size_t j = i + 1; j < anchors_.size(); ++j) {
      require(anchors_[i].src != anchors_[j].src, Errc::isometry_violation,
              "anchor source " + anchors_[i].src.str() + " mapped to two points");
      Scalar ds = dist(td, anchors_[i].src, anchors_[j].src);
      Scalar di = dist(ti, anchors_[i].dst, anchors_[j].dst);
      require(ds == di, Errc::isometry_violation,
              "anchors " + anchors_[i].src.str() + ", " + anchors_[j].src.str() +
                  " change distance " + ds.str() + " to " + di.str());
    }
  }
  // Coverage: every extremal and branch point of the domain must be pinned.
  std::vector<Point> needed = dom_.generators();
  for (const Point& b : dom_.branch_points(td)) needed.push_back(b);
  for (const Point& p : needed) {
    bool pinned = std::any_of(anchors_.begin(), anchors_.end(),
                              [&](const AnchorPair& a) { return a.src == p; });
    require(pinned, Errc::anchor_deficit,
            "domain point " + p.str() + " has no anchor");
  }
  // The image subtree must be exactly the anchor image hull.
  std::vector<Point> gen_images;
  for (const Point& g : dom_.generators())
    for (const AnchorPair& a : anchors_)
      if (a.src == g) gen_images.push_back(a.dst);
  Subtree hull = Subtree::hull(ti, im_.component(), gen_images);
  require(hull == im_, Errc::isometry_violation,
          "declared image does not match the image of the domain");
}

Point PartialIso::apply(const Forest& f, const Point& z) const {
  const MetricTree& td = f.tree(dom_.component());
  const MetricTree& ti = f.tree(im_.component());
  require(dom_.contains(z), Errc::outside_host,
          "point " + z.str() + " outside the domain");
  if (dom_.degenerate()) return im_.the_point();
  for (size_t i = 0; i < anchors_.size(); ++i) {
    for (size_t j = i + 1; j < anchors_.size(); ++j) {
      if (on_segment(td, z, anchors_[i].src, anchors_[j].src)) {
        return point_at(ti, anchors_[i].dst, anchors_[j].dst,
                        dist(td, anchors_[i].src, z));
      }
    }
  }
  fail(Errc::internal_error, "anchors do not span the domain");
}

Point PartialIso::apply_inverse(const Forest& f, const Point& z) const {
  const MetricTree& td = f.tree(dom_.component());
  const MetricTree& ti = f.tree(im_.component());
  require(im_.contains(z), Errc::outside_host,
          "point " + z.str() + " outside the image");
  if (im_.degenerate()) return dom_.the_point();
  for (size_t i = 0; i < anchors_.size(); ++i) {
    for (size_t j = i + 1; j < anchors_.size(); ++j) {
      if (on_segment(ti, z, anchors_[i].dst, anchors_[j].dst)) {
        return point_at(td, anchors_[i].src, anchors_[j].src,
                        dist(ti, anchors_[i].dst, z));
      }
    }
  }
  fail(Errc::internal_error, "anchor images do not span the image");
}

Subtree PartialIso::apply(const Forest& f, const Subtree& s) const {
  require(dom_.contains_subtree(s), Errc::outside_host,
          "subtree not contained in the domain");
  std::vector<Point> images;
  for (const Point& g : s.generators()) images.push_back(apply(f, g));
  return Subtree::hull(f.tree(im_.component()), im_.component(), images);
}

Subtree PartialIso::apply_inverse(const Forest& f, const Subtree& s) const {
  require(im_.contains_subtree(s), Errc::outside_host,
          "subtree not contained in the image");
  std::vector<Point> preimages;
  for (const Point& g : s.generators()) preimages.push_back(apply_inverse(f, g));
  return Subtree::hull(f.tree(dom_.component()), dom_.component(), preimages);
}

PartialIso PartialIso::inverse() const {
  PartialIso out = *this;
  std::swap(out.dom_, out.im_);
  for (AnchorPair& a : out.anchors_) std::swap(a.src, a.dst);
  std::sort(out.anchors_.begin(), out.anchors_.end(),
            [](const AnchorPair& a, const AnchorPair& b) { return a.src < b.src; });
  return out;
}

PartialIso PartialIso::restrict(const Forest& f, const Subtree& new_dom) const {
  require(dom_.contains_subtree(new_dom), Errc::outside_host,
          "restriction target not contained in the domain");
  const MetricTree& td = f.tree(dom_.component());
  std::vector<Point> keys = new_dom.generators();
  for (const Point& b : new_dom.branch_points(td)) keys.push_back(b);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<AnchorPair> na;
  for (const Point& p : keys) na.push_back({p, apply(f, p)});
  Subtree nim = apply(f, new_dom);
  return PartialIso(f, new_dom, std::move(nim), std::move(na));
}

}  // namespace siso
