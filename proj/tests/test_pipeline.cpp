#include <doctest.h>

#include "knotcarve/error.hpp"
#include "knotcarve/export.hpp"
#include "knotcarve/families.hpp"
#include "knotcarve/json_io.hpp"
#include "knotcarve/layered.hpp"
#include "knotcarve/pd_code.hpp"
#include "knotcarve/pipeline.hpp"

using namespace knotcarve;

TEST_CASE("diagram JSON round trip") {
    Diagram d = torus_diagram(5, 3);
    auto j = to_json(d);
    Diagram back = diagram_from_json(j);
    CHECK(back.map.rot == d.map.rot);
    CHECK(back.kind == d.kind);
    CHECK(back.over_pair == d.over_pair);
}

TEST_CASE("pipeline output is byte-identical across runs") {
    Diagram d = torus_diagram(4, 3);
    auto a = run_pipeline(d);
    auto b = run_pipeline(d);
    CHECK(to_json(a.curves).dump() == to_json(b.curves).dump());
    CHECK(to_json(a.spheres).dump() == to_json(b.spheres).dump());
    CHECK(to_json(a.splitting).dump() == to_json(b.splitting).dump());
    CHECK(to_json(a.report).dump() == to_json(b.report).dump());
}

TEST_CASE("pipeline rejects diagrams with nugatory crossings") {
    CHECK_THROWS_AS(run_pipeline(one_crossing_unknot()), error);
}

TEST_CASE("exact-only mode refuses large graphs with the cap error") {
    Diagram d = torus_diagram(9, 7);
    PipelineOptions opts;
    opts.exact_only = true;
    try {
        run_pipeline(d, opts);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.kind == errc::solver_cap);
    }
}

TEST_CASE("serialized carving knows its width and bond flag") {
    Diagram d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    auto res = run_pipeline(d);
    auto plain = res.graph.to_graph();
    auto j = to_json(res.carving, plain);
    CHECK(j["width"].get<int>() == res.carving_width_used);
    CHECK(j["bond"].get<bool>());
    CHECK(j["parent"].size() == res.carving.nbrs.size());
}

TEST_CASE("exports produce non-trivial documents") {
    Diagram d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    auto res = run_pipeline(d);
    CHECK(dot_graph(d).find("graph") == 0);
    CHECK(dot_carving(res.graph.to_graph(), res.carving).find("label=") != std::string::npos);
    auto svg = svg_curves(res.graph, res.curves);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("polyline") != std::string::npos);
    auto tree = dot_component_tree(res.spheres);
    CHECK(tree.find("pants") != std::string::npos);
}

TEST_CASE("triangulation JSON carries the gluing permutations") {
    auto lst = layered_solid_torus(3, 2);
    auto j = to_json(lst.tri);
    CHECK(j["tets"].size() == static_cast<size_t>(lst.tri.tet_count()));
}
