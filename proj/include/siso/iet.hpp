#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siso/system.hpp"

namespace siso {

// Interval exchange on [0, total): the i-th top interval (0-based, left to
// right) is translated into bottom slot perm[i]. Lengths are exact scalars.
struct IntervalExchange {
  std::vector<Scalar> lengths;
  std::vector<int> perm;

  int size() const { return static_cast<int>(lengths.size()); }
  Scalar total() const;
  void validate() const;     // invalid_iet on malformed data
  bool irreducible() const;  // no proper top prefix maps onto itself

  std::vector<Scalar> top_marks() const;     // 0 = x_0 < ... < x_r = total
  std::vector<Scalar> bottom_marks() const;
  std::vector<int> bottom_order() const;     // label occupying bottom slot k
  Scalar translation(int j) const;
  Scalar apply(const Scalar& x) const;       // right-open intervals
  int interval_of(const Scalar& x) const;
};

enum class RauzyKind { top, bottom };
const char* rauzy_kind_name(RauzyKind k);

struct RauzyStep {
  RauzyKind kind;
  int winner, loser;   // labels before the step
  Scalar removed;      // the loser's length, subtracted from the winner
  IntervalExchange after;
};

// One classical induction step on the rightmost pair; keane_violation when
// the two rightmost lengths tie.
RauzyStep rauzy_step(const IntervalExchange& e);

struct RauzyRun {
  std::vector<RauzyStep> steps;
  bool keane_stop = false;   // run ended early on a tie
  std::string note;
};
RauzyRun rauzy_run(const IntervalExchange& e, int max_steps);

// Orbit search for a discontinuity hitting another one (Keane's condition
// fails iff such a hit exists); checks forward orbits up to `depth` steps.
struct KeaneWitness {
  int from_mark = -1, steps = 0, to_mark = -1;
};
std::optional<KeaneWitness> keane_check(const IntervalExchange& e, int depth);

// The system of partial isometries attached to the exchange: one segment
// component, one letter per interval, domains closed.
System iet_to_system(const IntervalExchange& e);

}  // namespace siso
