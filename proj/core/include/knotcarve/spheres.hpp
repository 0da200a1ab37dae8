#pragma once

#include <string>
#include <vector>

#include "knotcarve/curves.hpp"
#include "knotcarve/diagram.hpp"

namespace knotcarve {

// A sphere-decomposition of a knot: disjoint spheres meeting the knot
// transversely so that every complementary piece is a ball carrying a
// trivial tangle or a solid pants carrying a flat tangle.  Spheres are kept
// combinatorially as their equatorial curves; the weight of a sphere is the
// number of knot points on it, which is the number of diagram-graph edges
// its curve crosses.
struct SphereDecomposition {
    struct Sphere {
        int weight = 0;
        std::vector<int> equator;      // graph edges crossed (may be empty for templates)
        int tree_a = -1, tree_b = -1;  // carving-tree edge, when carving-derived
        bool around_subdivision = false;  // bounds a leaf ball with a bare arc
    };

    // a strand of a pants tangle, named by the two boundary spheres it joins
    struct Strand {
        int sphere_a = -1, sphere_b = -1;
        bool essential = true;  // joins distinct circles, or separates the other two
    };

    struct Component {
        bool is_ball = true;
        std::vector<int> spheres;   // boundary spheres: 1 for a ball, 3 for a pants
        std::vector<int> vertices;  // graph vertices inside (informational)
        int bridges = 0;            // ball: strands of the trivial tangle
        std::vector<Strand> strands;  // pants: flat tangle strands
        std::string note;
    };

    std::vector<Sphere> spheres;
    std::vector<Component> components;

    int cost() const;
    std::vector<int> width_list() const;         // weights, non-increasing
    std::vector<int> width_list_pruned() const;  // without around_subdivision spheres
};

// Result of re-deriving a component's classification from its raw data.
struct ComponentClassification {
    bool is_ball = false;
    bool is_pants = false;
    int bridges = 0;
    int strand_count = 0;
    bool flat_ok = true;  // pants only: no loops recorded, all strands essential
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

// Checks the component against the ball/pants tangle rules: a ball must
// carry at least one bridge; a pants must have only essential strands, where
// a strand joining two distinct boundary spheres is always essential and a
// strand returning to one sphere counts as essential only if it was recorded
// as separating the other two.  A component bounded by 2 or >= 4 spheres is
// rejected outright.
ComponentClassification classify_component(const SphereDecomposition& sd, int comp);

struct SphereReport {
    bool ok = true;
    std::vector<std::string> failures;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

// Structural validation of any sphere-decomposition: positive even weights,
// spheres and components forming a tree with every sphere between exactly
// two components, all classifications passing.
SphereReport validate_spheres(const SphereDecomposition& sd);

// Builds the sphere-decomposition induced by a realized bond carving: one
// sphere per curve (weight = middle-set size), leaf components are balls
// around single vertices, internal components are pants whose strands follow
// the carving-tree paths of the graph edges.  Cost never exceeds the carving
// width.  Throws errc::validation if some pants tangle ends up with an
// inessential strand (reported, not repaired).
SphereDecomposition spheres_from_carving(const Diagram& d, const SimpleDiagramGraph& g,
                                         const CarvingDecomposition& dec,
                                         const CurveFamily& fam);

// Template: the decomposition of a b-bridge position.  The diagram is a
// round unknot with max(2b, 3) subdivision vertices and the single sphere
// crosses 2b of its edges, leaving a trivial b-bridge tangle on each side.
std::pair<Diagram, SphereDecomposition> bridge_sphere_decomposition(int b);

}  // namespace knotcarve
