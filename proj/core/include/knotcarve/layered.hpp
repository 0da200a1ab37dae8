#pragma once

#include <array>

#include "knotcarve/triangulation.hpp"

namespace knotcarve {

// Crossing numbers of a boundary curve with the three edges (a, b, c) of a
// one-vertex torus boundary.  For layered solid tori the meridian satisfies
// c = a + b with gcd(a, b) = 1.
struct SlopeTriple {
    long a = 0, b = 0, c = 0;
    bool farey() const { return c == a + b; }
};

// labels index the boundary edge classes; each is stored as one (tet*6+edge)
// slot whose global edge class carries the label
using LabelSlots = std::array<int, 3>;  // [a, b, c]

struct LayeredTorus {
    Triangulation tri;
    SlopeTriple meridian;  // (p, u, p+u)
    LabelSlots labels;
};

// Layered solid torus of slope p/u (0 < u < p after reduction mod p,
// gcd(p,u) = 1): start from the one-tetrahedron fold and layer along the
// subtractive euclidean path from (2,1) up to (p,u).  The boundary is a
// one-vertex torus, the meridian crosses (a,b,c) exactly (p,u,p+u) times and
// the face-pairing graph is a daisy chain.
LayeredTorus layered_solid_torus(int p, int u);

struct ProductBlock {
    Triangulation tri;
    LabelSlots top;     // labels on T x {1}
    LabelSlots bottom;  // labels on T x {-1}
};

// T x [-1,1] as two triangular prisms of three tetrahedra each; both
// boundary tori carry the standard one-vertex triangulation with matching
// (a,b,c) labels.
ProductBlock prism_block();

struct DrilledBlock {
    Triangulation tri;
    LabelSlots top;     // upper torus, standard
    LabelSlots bottom;  // lower torus, standard
    int drill_faces = 0;  // triangles on the boundary of the drilled tube
};

// Q = (T x [-1,1]) minus an open tube around a class-a curve at level 0.
// Built from two collared prism blocks glued along an annulus: the collar
// refines each middle torus (two stellar moves and two flips) until the
// complement of the tube is a subcomplex annulus, and the tube side is left
// unglued.  Size is a fixed constant; upper and lower boundaries stay
// standard with labels preserved.
DrilledBlock drilled_block();

struct TorusComplement {
    Triangulation tri;
    int p = 0, q = 0, u = 0, v = 0;  // pv - qu = 1
    SlopeTriple mu, nu;              // meridian triples of the two solid tori
};

// X(p,q): layered solid tori of slopes p/u and q/v glued to the drilled
// block along the (a,b,c) labels, with (u,v) the least Bezout pair for
// pv - qu = 1.
TorusComplement torus_complement(int p, int q);

// least u in [1, p) with q*u = -1 (mod p), and v = (1 + q*u) / p
std::pair<int, int> bezout_pair(int p, int q);

// daisy chain: a path of tetrahedra joined by double gluings with the fold's
// self-loop at one end (a single tetrahedron with a self-loop qualifies)
bool is_daisy_chain(const Graph& fpg);

struct FacePairingWidth {
    Graph graph;
    int width = 0;  // caterpillar bound over the construction order
};
FacePairingWidth face_pairing_width(const Triangulation& t);

}  // namespace knotcarve
