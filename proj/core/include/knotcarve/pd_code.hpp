#pragma once

#include <string>

#include "knotcarve/diagram.hpp"

namespace knotcarve {

// Planar-diagram code.  One 4-tuple of edge labels per crossing, listed
// counterclockwise starting from the incoming under-strand:
//
//     X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]
//
// Labels are positive integers and each one names an edge, so it appears in
// exactly two slots overall.  Accepted spellings per crossing:
// "X[a,b,c,d]", "X(a,b,c,d)" or a bare "a b c d" line.
//
// The under-strand runs through tuple slots 0 and 2, the over-strand through
// slots 1 and 3.  The rotation at the crossing is the tuple itself, so the
// code fixes the embedding; parsing checks that the resulting rotation
// system is spherical and that the diagram closes into a single knot.
Diagram parse_pd(const std::string& text);

// Inverse of parse_pd up to relabeling: emit_pd(parse_pd(s)) is stable under
// further round trips.  Requires at least one crossing.
std::string emit_pd(const Diagram& d);

}  // namespace knotcarve
