#include "siso/iet.hpp"

#include <algorithm>

#include "siso/errors.hpp"

namespace siso {

Scalar IntervalExchange::total() const {
  Scalar s;
  for (const Scalar& l : lengths) s += l;
  return s;
}

void IntervalExchange::validate() const {
  require(size() >= 1, Errc::invalid_iet, "exchange needs at least one interval");
  require(static_cast<int>(perm.size()) == size(), Errc::invalid_iet,
          "permutation size does not match interval count");
  for (const Scalar& l : lengths)
    require(l.sign() > 0, Errc::invalid_iet, "interval lengths must be positive");
  std::vector<char> seen(size(), 0);
  for (int p : perm) {
    require(p >= 0 && p < size(), Errc::invalid_iet, "permutation entry out of range");
    require(!seen[p], Errc::invalid_iet, "permutation entry repeated");
    seen[p] = 1;
  }
}

bool IntervalExchange::irreducible() const {
  for (int k = 0; k + 1 < size(); ++k) {
    int hi = -1;
    for (int j = 0; j <= k; ++j) hi = std::max(hi, perm[j]);
    if (hi == k) return false;
  }
  return true;
}

std::vector<Scalar> IntervalExchange::top_marks() const {
  std::vector<Scalar> xs{Scalar(0)};
  for (const Scalar& l : lengths) xs.push_back(xs.back() + l);
  return xs;
}

std::vector<int> IntervalExchange::bottom_order() const {
  std::vector<int> order(size());
  for (int j = 0; j < size(); ++j) order[perm[j]] = j;
  return order;
}

std::vector<Scalar> IntervalExchange::bottom_marks() const {
  std::vector<Scalar> ys{Scalar(0)};
  for (int label : bottom_order()) ys.push_back(ys.back() + lengths[label]);
  return ys;
}

Scalar IntervalExchange::translation(int j) const {
  require(j >= 0 && j < size(), Errc::bad_index, "interval label out of range");
  return bottom_marks()[perm[j]] - top_marks()[j];
}

int IntervalExchange::interval_of(const Scalar& x) const {
  std::vector<Scalar> xs = top_marks();
  require(x.sign() >= 0 && x < xs.back(), Errc::outside_host,
          "point " + x.str() + " outside [0, total)");
  for (int j = 0; j < size(); ++j)
    if (x < xs[j + 1]) return j;
  fail(Errc::internal_error, "marks do not cover the interval");
}

Scalar IntervalExchange::apply(const Scalar& x) const {
  return x + translation(interval_of(x));
}

const char* rauzy_kind_name(RauzyKind k) { return k == RauzyKind::top ? "top" : "bottom"; }

RauzyStep rauzy_step(const IntervalExchange& e) {
  e.validate();
  require(e.size() >= 2, Errc::invalid_iet, "induction needs at least two intervals");
  int r = e.size();
  int top_label = r - 1;
  std::vector<int> order = e.bottom_order();
  int bot_label = order.back();
  require(top_label != bot_label, Errc::invalid_iet,
          "rightmost top and bottom intervals coincide (reducible exchange)");
  const Scalar& lt = e.lengths[top_label];
  const Scalar& lb = e.lengths[bot_label];
  require(lt != lb, Errc::keane_violation,
          "rightmost lengths tie at " + lt.str());

  RauzyStep out;
  if (lt > lb) {
    // Top interval wins: it absorbs the bottom-rightmost interval.
    out.kind = RauzyKind::top;
    out.winner = top_label;
    out.loser = bot_label;
    out.removed = lb;
    IntervalExchange n = e;
    n.lengths[top_label] = lt - lb;
    // Bottom row: the loser leaves the end and lands right after the winner.
    order.pop_back();
    auto pos = std::find(order.begin(), order.end(), top_label);
    order.insert(pos + 1, bot_label);
    for (int slot = 0; slot < r; ++slot) n.perm[order[slot]] = slot;
    out.after = std::move(n);
  } else {
    // Bottom interval wins; the top row is reordered, so labels shift to
    // keep the convention that labels equal top positions.
    out.kind = RauzyKind::bottom;
    out.winner = bot_label;
    out.loser = top_label;
    out.removed = lt;
    std::vector<int> relabel(r);
    for (int j = 0; j < r; ++j) {
      if (j <= bot_label)
        relabel[j] = j;
      else if (j == r - 1)
        relabel[j] = bot_label + 1;
      else
        relabel[j] = j + 1;
    }
    IntervalExchange n;
    n.lengths.assign(r, Scalar(0));
    n.perm.assign(r, 0);
    for (int j = 0; j < r; ++j) {
      Scalar len = e.lengths[j];
      if (j == bot_label) len = len - lt;
      n.lengths[relabel[j]] = std::move(len);
    }
    for (int slot = 0; slot < r; ++slot) order[slot] = relabel[order[slot]];
    for (int slot = 0; slot < r; ++slot) n.perm[order[slot]] = slot;
    out.after = std::move(n);
  }
  out.after.validate();
  return out;
}

RauzyRun rauzy_run(const IntervalExchange& e, int max_steps) {
  RauzyRun run;
  IntervalExchange cur = e;
  for (int i = 0; i < max_steps; ++i) {
    try {
      RauzyStep st = rauzy_step(cur);
      cur = st.after;
      run.steps.push_back(std::move(st));
    } catch (const Error& err) {
      if (err.code() == Errc::keane_violation) {
        run.keane_stop = true;
        run.note = "stopped at step " + std::to_string(i + 1) + ": " + err.what();
        break;
      }
      throw;
    }
  }
  return run;
}

std::optional<KeaneWitness> keane_check(const IntervalExchange& e, int depth) {
  e.validate();
  std::vector<Scalar> xs = e.top_marks();
  // Forward orbits of the interior discontinuities.
  for (int i = 1; i < e.size(); ++i) {
    Scalar x = xs[i];
    for (int step = 1; step <= depth; ++step) {
      x = e.apply(x);
      for (int j = 1; j < e.size(); ++j) {
        if (x == xs[j]) return KeaneWitness{i, step, j};
      }
    }
  }
  return std::nullopt;
}

System iet_to_system(const IntervalExchange& e) {
  e.validate();
  Scalar total = e.total();
  MetricTree seg(2, {{0, 1, total}});
  Forest f;
  f.trees.push_back(seg);
  f.names.push_back("T0");
  const MetricTree& t = f.trees[0];
  std::vector<Scalar> xs = e.top_marks();
  std::vector<Scalar> ys = e.bottom_marks();
  std::vector<Letter> letters;
  for (int j = 0; j < e.size(); ++j) {
    Point d0 = Point::interior(t, 0, xs[j]);
    Point d1 = Point::interior(t, 0, xs[j + 1]);
    Scalar y0 = ys[e.perm[j]];
    Point i0 = Point::interior(t, 0, y0);
    Point i1 = Point::interior(t, 0, y0 + e.lengths[j]);
    Subtree dom = Subtree::hull(t, 0, {d0, d1});
    Subtree im = Subtree::hull(t, 0, {i0, i1});
    PartialIso iso(f, std::move(dom), std::move(im), {{d0, i0}, {d1, i1}});
    std::string name;
    if (e.size() <= 26) {
      name = std::string(1, static_cast<char>('a' + j));
    } else {
      name = "t" + std::to_string(j);
    }
    letters.push_back({std::move(name), std::move(iso)});
  }
  return System(std::move(f), std::move(letters));
}

}  // namespace siso
