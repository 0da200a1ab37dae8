#pragma once

#include <vector>

namespace knotcarve {

// Combinatorial map on the 2-sphere.
//
// Edge e owns the two darts 2e and 2e+1 (a dart is a directed half-edge,
// leaving its origin vertex).  The embedding is the rotation system: rot[v]
// lists the darts leaving v in counterclockwise order as seen from outside
// the sphere.  Faces are traced with next(d) = rot_next(twin(d)); the map is
// spherical exactly when V - E + F = 2.
struct PlanarMap {
    std::vector<std::vector<int>> rot;  // per vertex, darts in ccw order
    std::vector<int> dart_origin;       // origin vertex of each dart

    static constexpr int twin(int d) { return d ^ 1; }
    static constexpr int edge_of(int d) { return d >> 1; }

    int vertex_count() const { return static_cast<int>(rot.size()); }
    int dart_count() const { return static_cast<int>(dart_origin.size()); }
    int edge_count() const { return dart_count() / 2; }

    int head(int e) const { return dart_origin[2 * e + 1]; }  // dart 2e runs tail->head
    int tail(int e) const { return dart_origin[2 * e]; }
    int degree(int v) const { return static_cast<int>(rot[v].size()); }

    // Position of dart d in rot[origin(d)].
    int slot_of(int d) const;
    // Dart after d (ccw) around its origin.
    int rot_next(int d) const;

    // Checks structural consistency: every dart appears exactly once in the
    // rotation of its origin.  Throws errc::validation.
    void check_consistent() const;

    bool connected() const;

    // Face walks; each dart lies on exactly one walk.
    std::vector<std::vector<int>> faces() const;
    // face id per dart, aligned with faces().
    std::vector<int> face_of_dart() const;

    int euler_characteristic() const;  // V - E + F

    // Geometric dual: one vertex per face, same dart/edge identifiers, the
    // rotation of a dual vertex is its face walk.  Dualizing twice gets back
    // the primal up to renaming vertices.
    PlanarMap dual() const;
};

}  // namespace knotcarve
