#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcarve/planar_map.hpp"

namespace knotcarve {

enum class VertexKind : unsigned char { crossing, subdivision };

// A knot diagram: a connected 4-valent multigraph embedded in the 2-sphere
// with over/under data at the crossings.  Vertices of valence two are
// allowed so that diagrams such as the round unknot have a graph at all.
//
// At a crossing the two strands occupy opposite rotation slots: the strand
// through slots {0,2} of rot[v] and the strand through slots {1,3}.
// over_pair[v] records which of the two passes over (0 or 1).
struct Diagram {
    PlanarMap map;
    std::vector<VertexKind> kind;
    std::vector<unsigned char> over_pair;  // meaningful only at crossings
    std::optional<std::string> orientation_note;  // free-form strand orientation metadata

    int crossing_count() const;

    // Opposite slot when the knot passes straight through vertex v entering
    // at rotation slot s.
    int through_slot(int v, int s) const;

    // Walks the knot: returns the darts traversed, in order, starting from
    // dart `start` (moving from its origin towards its head).  Every edge is
    // traversed exactly once iff the diagram has one component.
    std::vector<int> trace_strand(int start) const;

    // Number of closed curves obtained by passing straight through every
    // vertex.  A knot diagram has exactly one.
    int component_count() const;

    // Full invariant check: degrees, rotation consistency, connectivity,
    // Euler characteristic 2 (spherical embedding), single component.
    // Throws errc::validation with a description of the first failure.
    void validate() const;

    // Face count via the rotation system.
    int face_count() const { return static_cast<int>(map.faces().size()); }
};

// Boundary walks of all faces of the diagram's underlying map.
inline std::vector<std::vector<int>> faces(const Diagram& d) { return d.map.faces(); }

// Round unknot diagram: a cycle of n >= 3 subdivision vertices.
Diagram unknot_diagram(int n = 3);

// One-crossing unknot: a single crossing with two loops (reducible).
Diagram one_crossing_unknot();

}  // namespace knotcarve
