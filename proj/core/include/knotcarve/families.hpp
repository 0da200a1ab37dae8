#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotcarve/spheres.hpp"

namespace knotcarve {

// Closed-braid diagram for a braid word on `strands` strands.  Letter +j
// crosses positions j and j+1 (1-based) with the NW-SE strand on top, -j
// with the other strand on top.  Crossings are created in word order, which
// is also the sweep order used by the carving heuristics.
Diagram braid_closure_diagram(int strands, const std::vector<int>& word);

// Plat closure on an even number of strands: adjacent pairs are capped at
// the top and the bottom.
Diagram plat_closure_diagram(int strands, const std::vector<int>& word);

// Standard diagram of the torus knot T(p,q): the q-strand closed braid
// (s1 ... s_{q-1})^p with p(q-1) crossings.  Requires coprime p, q >= 2.
Diagram torus_diagram(int p, int q);

// Pretzel diagram P(a,b,c) (three vertical twist regions of |a|,|b|,|c|
// crossings) together with its natural sphere-decomposition: one sphere of
// weight 4 around each twist region, giving width {4,4,4}.  Throws
// errc::unsupported when the parameters give a link.
std::pair<Diagram, SphereDecomposition> pretzel_diagram(int a, int b, int c);

// Connected sum of n trefoils in a linear chain; 3n crossings.
Diagram trefoil_connect_sum(int n);

// Two-bridge diagram from a continued fraction [a1,...,am]: the 4-strand
// plat of s2^{a1} s1^{a2} s2^{a3} ...  Entries must be nonzero; throws when
// the fraction closes into a two-component link.
Diagram two_bridge_diagram(const std::vector<int>& cf);

// Seeded small random knot diagram (closed braid on 2..3 strands) whose
// subdivided graph is 2-connected; deterministic for a given seed.
Diagram random_knot_diagram(uint64_t seed);

// Diagrammatic tree-width lower bound for T(p,q) by the contrapositive of
// the main chain: with no essential planar meridional surface (Tsau) and
// bridge number min(p,q) (Schubert), every diagram of T(p,q) has tree-width
// >= ceil((min(p,q) - 4) / 4).
struct TorusLowerBound {
    int p = 0, q = 0;
    int bridge_number = 0;  // min(p,q), external theorem input
    int tw_lower = 0;
    std::string text() const;
};
TorusLowerBound tw_lower_bound_report(int p, int q);

// Parsed family request, e.g. "torus(9,7)", "pretzel(-2,3,7)", "sum(4)",
// "two-bridge(2,2)".
struct FamilySpec {
    enum class Kind { torus, pretzel, trefoil_sum, two_bridge } kind;
    std::vector<int> params;
    static FamilySpec parse(const std::string& text);
    Diagram build() const;  // natural decompositions are dropped here
    std::string name() const;
};

}  // namespace knotcarve
