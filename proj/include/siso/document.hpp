#pragma once

#include <optional>
#include <string>

#include "siso/iet.hpp"
#include "siso/system.hpp"

namespace siso {

// On-disk form of a system or an interval exchange. Line oriented:
//
//   field rational          | field quadratic 5
//   rank 2                  (optional)
//   component T0 {
//     vertices 2
//     edge 0 1 1/2+1/2*sqrt(5)
//   }
//   letter a {
//     domain T0 v0 e0@1
//     image T0 e0@1/2+1/2*sqrt(5) v1
//     map v0 -> e0@1/2+1/2*sqrt(5)
//   }
//
// or, for a bare exchange (permutation written 1-based),
//
//   iet {
//     lengths 1 1/2+1/2*sqrt(5)
//     permutation 2 1
//   }
//
// Domain and image list the generating points of the subtree (its extremal
// points); map lines are the anchor pairs pinning the isometry. '#' starts
// a comment. Scalars use the canonical printed form, and the declared field
// is the only one the scalar tokens may live in.
struct Document {
  std::optional<System> system;
  std::optional<IntervalExchange> iet;
};

// Syntax errors throw Errc::parse_error with "line L, col C: ..."; semantic
// violations keep their native error codes.
Document parse_document(const std::string& text);
Document read_document(const std::string& path);

// Canonical emission; parse(emit(d)) reproduces the text byte for byte.
std::string emit_document(const Document& d);
std::string emit_system(const System& s);
std::string emit_iet(const IntervalExchange& e);
void write_document(const std::string& path, const Document& d);

// The system either stored directly or suspended from the exchange.
System document_system(const Document& d);

}  // namespace siso
