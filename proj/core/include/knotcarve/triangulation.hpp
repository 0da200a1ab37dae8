#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "knotcarve/graph.hpp"

namespace knotcarve {

// Permutation of {0,1,2,3}; gluing maps send all four vertex labels of a
// tetrahedron to the partner's labels, carrying face f to face perm[f].
struct Perm4 {
    std::array<uint8_t, 4> img{0, 1, 2, 3};
    static Perm4 identity() { return {}; }
    uint8_t operator[](int i) const { return img[i]; }
    Perm4 inverse() const {
        Perm4 p;
        for (int i = 0; i < 4; ++i) p.img[img[i]] = static_cast<uint8_t>(i);
        return p;
    }
    Perm4 after(const Perm4& first) const {  // (*this) ∘ first
        Perm4 p;
        for (int i = 0; i < 4; ++i) p.img[i] = img[first.img[i]];
        return p;
    }
    bool operator==(const Perm4& o) const { return img == o.img; }
};

// the 6 edges of a tetrahedron as vertex pairs, fixed order
constexpr std::array<std::array<int, 2>, 6> kTetEdges = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
int tet_edge_index(int a, int b);

// Generalized (semi-simplicial) triangulation: tetrahedra with face
// identifications.  Self-gluings of a tetrahedron to itself along two
// distinct faces are allowed; a face is never glued to itself.
struct Triangulation {
    struct Gluing {
        int tet = -1;  // -1: boundary face
        Perm4 perm;
        bool glued() const { return tet >= 0; }
    };
    std::vector<std::array<Gluing, 4>> tets;

    int tet_count() const { return static_cast<int>(tets.size()); }
    int add_tet() {
        tets.push_back({});
        return tet_count() - 1;
    }
    void glue(int t1, int f1, int t2, int f2, const Perm4& p);
    void unglue(int t, int f);

    // involution + no face glued to itself; throws errc::validation
    void check_valid() const;

    // tetrahedra can be oriented so that every gluing permutation is odd
    bool orientable() const;

    // global census by union-find over (tet, vertex) / (tet, edge) slots
    int count_vertices() const;
    int count_edges() const;
    int count_faces() const;  // glued pairs count once, boundary faces once
    int boundary_face_count() const;
    // V - E + F - T; 0 for a compact 3-manifold whose boundary is all tori
    int euler_characteristic() const;

    // edge-class id per (tet, edge slot), slot index = tet*6 + edge
    std::vector<int> edge_classes() const;

    struct BoundaryComponent {
        std::vector<std::pair<int, int>> faces;  // (tet, face)
        int vertices = 0, edges = 0;
        int euler() const { return vertices - edges + static_cast<int>(faces.size()); }
        bool is_torus() const { return euler() == 0; }
        bool is_standard_torus() const {
            return faces.size() == 2 && edges == 3 && vertices == 1;
        }
    };
    std::vector<BoundaryComponent> boundary_components() const;

    // multigraph: one vertex per tetrahedron, one edge per glued face pair
    // (self-gluings give loops)
    Graph face_pairing_graph() const;

    // documented line format: "tet <i>: <gluing|bdry> x4"
    std::string interchange_text() const;
};

// Width of the caterpillar carving over the given tetrahedron order on the
// face-pairing graph: max over prefix cuts and single-vertex cuts, loops
// ignored.  This is the path-shaped upper bound used for the constant
// tree-width checks.
int path_carving_width(const Graph& fpg, const std::vector<int>& order);

}  // namespace knotcarve
