#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siso/cutting.hpp"
#include "siso/iet.hpp"
#include "siso/system.hpp"

namespace siso {

struct StepMetrics {
  int components = 0;
  Scalar total_length;
  Scalar max_diameter;
  Scalar base_measure;
};
StepMetrics measure_system(const System& s);

// One pass of the trimming move: keep exactly the points covered by at
// least two letter bases (domains and images both count), restrict every
// letter maximally to the surviving pieces.
struct RipsResult {
  System system;
  bool halted = false;  // the region was everything; system == input
  GraphMap fold;
  std::vector<std::string> dropped_letters;
  std::optional<Surgery> surgery;  // absent when halted
  StepMetrics before, after;
};
RipsResult rips_step(const System& s);

// A point where one base ends against exactly one crossing letter: the
// data needed to perform a splitting move there. Conditions checked:
// the point is not extremal in its component, it is extremal in the
// nondegenerate base of a0 with lone inward germ `dir`, exactly one other
// formal letter a1 is defined there with base meeting `dir`, and the point
// is interior to base(a1).
struct SplittingPoint {
  Loc at;
  Direction dir;
  FormalLetter a0, a1;
  bool operator==(const SplittingPoint&) const = default;
};
std::vector<SplittingPoint> find_splitting_points(const System& s);

struct SplitResult {
  System system;
  GraphMap fold;
  std::vector<SplittingPoint> used;
  std::vector<std::string> shared_base_notes;  // bases cut at several points
  std::optional<Surgery> surgery;
  StepMetrics before, after;
};
// Severs the lone germ side of used[0] from the rest of its component (the
// cut point is duplicated into both sides) and restricts letters.
SplitResult split_at(const System& s, const SplittingPoint& p);
// The same surgery at every splitting point simultaneously; identity step
// when there are none.
SplitResult split_all(const System& s);

// At every branch point and base-extremal point, counts the formal letters
// defined along each germ; surface-type fixed systems show exactly 2.
struct DirectionCount {
  Loc at;
  Direction dir;
  std::vector<FormalLetter> letters;
};
struct DirectionReport {
  bool pass = false;
  std::vector<DirectionCount> entries;
  std::string witness;  // first offending direction, if any
};
DirectionReport check_surface_directions(const System& s);

enum class StepKind { trim, split };
enum class SplitStrategy { all_simultaneous, rightmost_single };
enum class Classification { surface, levitt_evidence, unknown };
const char* step_kind_name(StepKind k);
const char* classification_name(Classification c);

struct RunConfig {
  int max_steps = 24;
  SplitStrategy strategy = SplitStrategy::all_simultaneous;
};

struct InductionStep {
  StepKind kind;
  System input, output;
  GraphMap fold;
  std::vector<SplittingPoint> split_data;
  std::vector<std::string> dropped_letters;
  StepMetrics after;
};

struct InductionHistory {
  std::vector<InductionStep> steps;
  Classification classification = Classification::unknown;
  bool reached_fixed_point = false;
  bool budget_exhausted = false;
  int budget = 0;
  std::string note;
  // Component count and max diameter: initial value, then one entry per step.
  std::vector<int> component_series;
  std::vector<Scalar> diameter_series;
};

// Trims until the system is fixed (classification Surface), then splits
// repeatedly, re-trimming whenever a split breaks the two-cover property.
// If the budget runs out before the fixed point, inspects the recorded
// metrics for the shrinking pattern (component count strictly increasing in
// at least 90% of the last 10 trims AND max diameter halved over the run)
// and classifies LevittEvidence or Unknown.
InductionHistory run_induction(const System& s, const RunConfig& cfg);

// Step-by-step correspondence between the splitting move and classical
// interval-exchange induction. Each step suspends the current exchange,
// splits once at the rightmost splitting point and checks the move kind
// implied by the crossing letter plus the removed length; the classical
// move also zips the exiled band back up, so the derived next exchange is
// read off as the first-return system of the piece holding the left end
// and must equal the classical output slot for slot. corrupt_cut_choice
// picks the leftmost candidate instead, a deliberate mismatch control for
// the harness.
struct CompareStep {
  int index = 0;
  RauzyKind classical_kind, derived_kind;
  Scalar classical_removed, derived_removed;
  bool kind_match = false, length_match = false, return_match = false;
  std::string detail;
};
struct CompareResult {
  bool match = false;
  int steps_done = 0;
  std::vector<CompareStep> steps;
  std::string first_divergence;
};
CompareResult compare_inductions(const IntervalExchange& e, int steps,
                                 bool corrupt_cut_choice = false);

}  // namespace siso
