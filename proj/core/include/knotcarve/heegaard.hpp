#pragma once

#include <string>
#include <vector>

#include "knotcarve/spheres.hpp"

namespace knotcarve {

// Lexicographic width of a splitting: the multiset of thick-surface
// complexities (genus, intersections with the knot), non-increasing.  All
// surfaces here are spheres, so every genus entry is 0.
struct SplittingWidth {
    std::vector<std::pair<int, int>> complexities;
    int cost = 0;
    // lexicographic comparison; +1 when a > b
    static int compare(const SplittingWidth& a, const SplittingWidth& b);
};

// Multiple Heegaard splitting obtained from a sphere-decomposition by adding
// one thick sphere per complementary piece: a push-off of the boundary in
// each ball, and in each pants a tube joining two of its boundary spheres
// along a connecting strand.  Every compression body between the resulting
// surfaces is a ball, a shell or a solid pants carrying a trivial tangle.
struct MultipleHeegaardSplitting {
    enum class ThickKind : unsigned char { pushoff, tube };
    struct ThickSphere {
        int weight = 0;
        int component = -1;  // complementary piece of the sphere-decomposition
        ThickKind kind = ThickKind::pushoff;
        int tube_a = -1, tube_b = -1;  // thin spheres joined (tube)
        int pushoff_of = -1;           // thin sphere copied (pushoff)
    };
    enum class BodyKind : unsigned char { ball, shell, pants };
    struct CompressionBody {
        BodyKind kind = BodyKind::ball;
        int dplus = -1;            // thick sphere
        std::vector<int> dminus;   // thin spheres
        int vertical = 0;          // strand census of the trivial tangle
        int bridges = 0;
        int component = -1;
        std::string proof_case;
    };

    std::vector<ThickSphere> thick;
    std::vector<CompressionBody> bodies;
    std::vector<int> thin_weights;  // copied from the sphere-decomposition

    int cost() const;
    SplittingWidth width() const;
};

// The strand a pants component is tubed along: among the pairs of distinct
// boundary spheres joined by some strand, take the pair with the smallest
// weight sum, ties to the smaller sphere ids.  Throws errc::unsupported when
// no strand joins two distinct spheres (cannot happen for a flat tangle with
// positive boundary weights).
struct TubeChoice {
    int sphere_a = -1, sphere_b = -1;
    int strand_index = -1;
};
TubeChoice choose_tube_strand(const SphereDecomposition& sd, int comp);

MultipleHeegaardSplitting tube(const SphereDecomposition& sd);

struct SplittingReport {
    bool ok = true;
    std::vector<std::string> failures;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

// Re-checks the splitting against the definition: every thick sphere bounds
// exactly two compression bodies, every thin sphere separates two bodies,
// each body's strand census matches its surfaces and its kind matches one of
// the four cases of the tubing analysis.
SplittingReport validate_splitting(const MultipleHeegaardSplitting& mhs,
                                   const SphereDecomposition& sd);

// Verdicts for the main chain of inequalities on one diagram:
//   sphere cost <= cw <= 4(k+1),  splitting cost <= 2 sphere cost <= 8k+8.
struct TheoremMainReport {
    int k = 0;             // tree-width bound used
    bool k_supplied = false;
    int cw_used = 0;       // carving width of the decomposition actually used
    bool cw_exact = false;
    int max_degree = 0;
    int tw_lower = 0, tw_upper = 0;
    int sphere_cost = 0;
    std::vector<int> sphere_width;
    int splitting_cost = 0;
    bool ok_sphere = false;     // sphere cost <= 4k+4
    bool ok_splitting = false;  // splitting cost <= 8k+8
    bool ok_chain = false;      // sphere cost <= cw_used and splitting <= 2 sphere cost
    int bound_meridional() const { return 8 * k + 8; }
    int bound_bridge() const { return 4 * k + 4; }
    bool all_ok() const { return ok_sphere && ok_splitting && ok_chain; }
    std::string text() const;
    std::string markdown() const;
};

// Runs the whole pipeline on a diagram (exact bond carving when the
// subdivided graph fits under `exact_cap`, heuristic bond carving
// otherwise), then fills the report.  When `tw_bound` is supplied it is used
// as k; otherwise k is the Theorem-CW upper bound derived from the carving.
TheoremMainReport theorem_main_report(const Diagram& d, int exact_cap = 16, int tw_bound = -1);

}  // namespace knotcarve
