#include "knotcarve/json_io.hpp"

#include "knotcarve/error.hpp"

namespace knotcarve {

using nlohmann::json;

json to_json(const Diagram& d) {
    json vertices = json::array();
    for (int v = 0; v < d.map.vertex_count(); ++v) {
        json jv;
        jv["kind"] = d.kind[v] == VertexKind::crossing ? "crossing" : "subdivision";
        jv["rotation"] = d.map.rot[v];
        if (d.kind[v] == VertexKind::crossing) jv["over_pair"] = static_cast<int>(d.over_pair[v]);
        vertices.push_back(std::move(jv));
    }
    json j;
    j["schema"] = "knotcarve.diagram/1";
    j["edges"] = d.map.edge_count();
    j["vertices"] = std::move(vertices);
    return j;
}

Diagram diagram_from_json(const json& j) {
    require(j.value("schema", "") == std::string("knotcarve.diagram/1"), errc::parse,
            "unexpected diagram schema tag");
    Diagram d;
    int edges = j.at("edges").get<int>();
    d.map.dart_origin.assign(2 * edges, -1);
    int v = 0;
    for (const auto& jv : j.at("vertices")) {
        std::string kind = jv.at("kind").get<std::string>();
        d.kind.push_back(kind == "crossing" ? VertexKind::crossing : VertexKind::subdivision);
        d.over_pair.push_back(static_cast<unsigned char>(jv.value("over_pair", 0)));
        std::vector<int> rot = jv.at("rotation").get<std::vector<int>>();
        for (int dart : rot) {
            require(dart >= 0 && dart < 2 * edges, errc::parse, "dart id out of range");
            d.map.dart_origin[dart] = v;
        }
        d.map.rot.push_back(std::move(rot));
        v++;
    }
    d.validate();
    return d;
}

json to_json(const SimpleDiagramGraph& g) {
    json j;
    j["schema"] = "knotcarve.simple_graph/1";
    j["edges"] = json::array();
    for (int e = 0; e < g.map.edge_count(); ++e)
        j["edges"].push_back({g.map.tail(e), g.map.head(e)});
    json rot = json::array();
    for (const auto& r : g.map.rot) rot.push_back(r);
    j["rotation"] = std::move(rot);
    j["source_vertex"] = g.source_vertex;
    j["source_edge"] = g.source_edge;
    j["edge_source"] = g.edge_source;
    j["added_vertices"] = g.added_vertices;
    return j;
}

json to_json(const CarvingDecomposition& dec, const Graph& g) {
    // rooted form: parent array over tree nodes, bfs from the leaf of vertex 0
    json j;
    j["schema"] = "knotcarve.carving/1";
    int root = dec.vertex_leaf.empty() ? 0 : dec.vertex_leaf[0];
    std::vector<int> parent(dec.node_count(), -2);
    std::vector<int> order;
    parent[root] = -1;
    order.push_back(root);
    for (size_t i = 0; i < order.size(); ++i)
        for (int y : dec.nbrs[order[i]])
            if (parent[y] == -2) {
                parent[y] = order[i];
                order.push_back(y);
            }
    j["root"] = root;
    j["parent"] = parent;
    j["leaf_vertex"] = dec.leaf_vertex;
    j["width"] = carving_width(g, dec);
    j["middle_sizes"] = middle_sizes(g, dec);
    j["bond"] = is_bond(g, dec);
    return j;
}

json to_json(const CurveFamily& fam) {
    json j;
    j["schema"] = "knotcarve.curves/1";
    j["curves"] = json::array();
    for (const auto& c : fam.curves) {
        json jc;
        jc["tree_edge"] = {c.tree_a, c.tree_b};
        jc["edges"] = c.edge_cycle;
        jc["faces"] = c.face_cycle;
        j["curves"].push_back(std::move(jc));
    }
    j["crossing_order"] = fam.crossing_order;
    return j;
}

json to_json(const SphereDecomposition& sd) {
    json j;
    j["schema"] = "knotcarve.spheres/1";
    j["spheres"] = json::array();
    for (const auto& s : sd.spheres) {
        json js;
        js["weight"] = s.weight;
        js["equator_edges"] = s.equator;
        if (s.tree_a >= 0) js["tree_edge"] = {s.tree_a, s.tree_b};
        js["around_subdivision"] = s.around_subdivision;
        j["spheres"].push_back(std::move(js));
    }
    j["components"] = json::array();
    for (const auto& c : sd.components) {
        json jc;
        jc["kind"] = c.is_ball ? "ball" : "pants";
        jc["spheres"] = c.spheres;
        jc["vertices"] = c.vertices;
        if (c.is_ball) jc["bridges"] = c.bridges;
        if (!c.is_ball) {
            jc["strands"] = json::array();
            for (const auto& s : c.strands)
                jc["strands"].push_back({{"spheres", {s.sphere_a, s.sphere_b}},
                                         {"essential", s.essential}});
        }
        if (!c.note.empty()) jc["note"] = c.note;
        j["components"].push_back(std::move(jc));
    }
    j["cost"] = sd.cost();
    j["width"] = sd.width_list();
    j["width_pruned"] = sd.width_list_pruned();
    return j;
}

json to_json(const MultipleHeegaardSplitting& mhs) {
    json j;
    j["schema"] = "knotcarve.splitting/1";
    j["thin_weights"] = mhs.thin_weights;
    j["thick"] = json::array();
    for (const auto& t : mhs.thick) {
        json jt;
        jt["weight"] = t.weight;
        jt["component"] = t.component;
        if (t.kind == MultipleHeegaardSplitting::ThickKind::tube)
            jt["tube_of"] = {t.tube_a, t.tube_b};
        else
            jt["pushoff_of"] = t.pushoff_of;
        j["thick"].push_back(std::move(jt));
    }
    j["bodies"] = json::array();
    for (const auto& b : mhs.bodies) {
        json jb;
        jb["kind"] = b.kind == MultipleHeegaardSplitting::BodyKind::ball     ? "ball"
                     : b.kind == MultipleHeegaardSplitting::BodyKind::shell ? "shell"
                                                                            : "pants";
        jb["thick"] = b.dplus;
        jb["thin"] = b.dminus;
        jb["vertical"] = b.vertical;
        jb["bridges"] = b.bridges;
        jb["case"] = b.proof_case;
        j["bodies"].push_back(std::move(jb));
    }
    j["cost"] = mhs.cost();
    json w = json::array();
    for (auto [g, c] : mhs.width().complexities) w.push_back({g, c});
    j["width"] = std::move(w);
    return j;
}

json to_json(const Triangulation& t) {
    json j;
    j["schema"] = "knotcarve.triangulation/1";
    j["tets"] = json::array();
    for (int i = 0; i < t.tet_count(); ++i) {
        json jt = json::array();
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.tets[i][f];
            if (!g.glued()) {
                jt.push_back(nullptr);
            } else {
                jt.push_back({{"tet", g.tet},
                              {"perm", {g.perm[0], g.perm[1], g.perm[2], g.perm[3]}}});
            }
        }
        j["tets"].push_back(std::move(jt));
    }
    return j;
}

json to_json(const TheoremMainReport& r) {
    json j;
    j["schema"] = "knotcarve.report/1";
    j["k"] = r.k;
    j["k_supplied"] = r.k_supplied;
    j["carving_width"] = r.cw_used;
    j["carving_exact"] = r.cw_exact;
    j["max_degree"] = r.max_degree;
    j["tw_interval"] = {r.tw_lower, r.tw_upper};
    j["sphere_cost"] = r.sphere_cost;
    j["sphere_width"] = r.sphere_width;
    j["splitting_cost"] = r.splitting_cost;
    j["bound_bridge"] = r.bound_bridge();
    j["bound_meridional"] = r.bound_meridional();
    j["ok_sphere"] = r.ok_sphere;
    j["ok_splitting"] = r.ok_splitting;
    j["ok_chain"] = r.ok_chain;
    return j;
}

}  // namespace knotcarve
