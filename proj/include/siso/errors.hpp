#pragma once

#include <stdexcept>
#include <string>

namespace siso {

// Every failure the library can signal. The C API exposes these as integers,
// so the order here is ABI: append only.
enum class Errc {
  none = 0,
  field_mismatch,        // mixing two different quadratic fields
  division_by_zero,
  not_square_free,       // sqrt(d) with d divisible by a square
  non_positive_length,   // edge or interval of length <= 0
  cycle_detected,        // edge set of a tree contains a cycle
  disconnected,          // tree edges do not connect the vertex set
  bad_index,             // vertex/edge/letter id out of range
  host_mismatch,         // operation across two different trees/components
  outside_host,          // point or interval not inside the tree / subtree
  isometry_violation,    // anchor pairs do not preserve distances
  containment_violation, // base not contained in a single component
  anchor_deficit,        // anchors fail to pin down the map on its domain
  unreduced_word,        // word contains x followed by x^{-1}
  budget_exceeded,       // enumeration exceeded the configured cap
  empty_output,          // operation would produce a system with no support
  not_a_splitting_point,
  freeness_violation,    // orbit relation found where a tree was required
  keane_violation,       // tie between the two rightmost interval lengths
  invalid_iet,           // lengths/permutation malformed
  parse_error,
  io_error,
  usage_error,
  internal_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc c, std::string msg) : std::runtime_error(std::move(msg)), code_(c) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) {
  throw Error(c, msg);
}

inline void require(bool ok, Errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

}  // namespace siso
