#pragma once

#include <string>

#include "siso/indices.hpp"
#include "siso/induction.hpp"
#include "siso/lamination.hpp"

namespace siso {

// Plain-text reports ("key = value" lines) for every analysis the tool
// exposes, plus Graphviz exports. All output is deterministic.
std::string describe_system(const System& s);
std::string describe_gamma(const System& s);
std::string describe_iet(const IntervalExchange& e);
std::string describe_rips(const RipsResult& r);
std::string describe_split(const System& before, const SplitResult& r);
std::string describe_induction(const InductionHistory& h);
std::string describe_directions(const System& s, const DirectionReport& dr);
std::string describe_train_track(const System& s, const TrainTrack& tt);
std::string describe_whitehead(const System& s, const WhiteheadReport& wr);
std::string describe_minimality(const System& s, const MinimalityReport& mr);
std::string describe_leaf_closure(const System& s, const LeafSet& in,
                                  const LeafSet& closed);
std::string describe_index_bounds(const System& s, const IndexBoundReport& br);
std::string describe_rauzy_run(const IntervalExchange& start,
                               const RauzyRun& run);
std::string describe_comparison(const CompareResult& cr);

std::string dot_gamma(const System& s);
std::string dot_orbit(const System& s, const OrbitGraph& g);
std::string dot_whitehead(const System& s, const WhiteheadReport& wr);

}  // namespace siso
