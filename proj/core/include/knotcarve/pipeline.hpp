#pragma once

#include <optional>
#include <string>

#include "knotcarve/carving_solve.hpp"
#include "knotcarve/curves.hpp"
#include "knotcarve/heegaard.hpp"
#include "knotcarve/spheres.hpp"

namespace knotcarve {

struct PipelineOptions {
    int exact_cap = 16;         // vertex cap for the exact solver
    bool exact_only = false;    // fail instead of falling back to heuristics
    int threads = 1;
};

// One full run: subdivide, carve (bond), realize curves, build spheres,
// tube.  The carving is exact when the subdivided graph fits under the cap
// and heuristic otherwise; either way it is a bond decomposition, which the
// subdivided diagram graph admits as long as it is 2-connected.
struct PipelineResult {
    SimpleDiagramGraph graph;
    CarvingDecomposition carving;
    bool carving_exact = false;
    int carving_width_used = 0;
    CurveFamily curves;
    SphereDecomposition spheres;
    MultipleHeegaardSplitting splitting;
    TheoremMainReport report;
};

PipelineResult run_pipeline(const Diagram& d, const PipelineOptions& opts = {});

}  // namespace knotcarve
