#include "knotcarve/subdivide.hpp"

#include <algorithm>
#include <map>

#include "knotcarve/error.hpp"

namespace knotcarve {

SimpleDiagramGraph subdivide_to_simple(const Diagram& d) {
    const PlanarMap& m = d.map;
    int nv = m.vertex_count();
    int ne = m.edge_count();

    // decide how many interior vertices each diagram edge receives
    std::vector<int> pieces(ne, 1);
    std::map<std::pair<int, int>, std::vector<int>> parallel;
    for (int e = 0; e < ne; ++e) {
        int u = m.tail(e), v = m.head(e);
        if (u == v) {
            pieces[e] = 3;  // loop: two interior vertices
        } else {
            auto key = std::minmax(u, v);
            parallel[{key.first, key.second}].push_back(e);
        }
    }
    for (auto& [key, cls] : parallel) {
        // one member of the class may stay whole
        for (size_t i = 1; i < cls.size(); ++i) pieces[cls[i]] = 2;
    }

    SimpleDiagramGraph g;
    for (int v = 0; v < nv; ++v) {
        g.source_vertex.push_back(v);
        g.source_edge.push_back(-1);
        g.sweep_key.push_back(static_cast<double>(v));
    }

    // allocate interior vertices and the chain of segment edges per edge
    std::vector<std::vector<int>> chain_vertices(ne);  // interior only
    std::vector<std::vector<int>> chain_edges(ne);
    int next_v = nv;
    int next_e = 0;
    for (int e = 0; e < ne; ++e) {
        for (int k = 1; k < pieces[e]; ++k) {
            chain_vertices[e].push_back(next_v++);
            double a = g.sweep_key[m.tail(e)], b = g.sweep_key[m.head(e)];
            g.source_vertex.push_back(-1);
            g.source_edge.push_back(e);
            g.sweep_key.push_back(std::min(a, b) + static_cast<double>(k) / pieces[e]);
        }
        for (int k = 0; k < pieces[e]; ++k) {
            chain_edges[e].push_back(next_e++);
            g.edge_source.push_back(e);
        }
    }
    g.added_vertices = next_v - nv;

    g.map.rot.assign(next_v, {});
    g.map.dart_origin.assign(2 * next_e, -1);

    // the dart of segment k of edge e facing the same way as diagram dart 2e
    auto seg_dart_fwd = [&](int e, int k) { return 2 * chain_edges[e][k]; };

    // original vertices keep their rotation, each diagram dart replaced by
    // the matching end segment
    for (int v = 0; v < nv; ++v) {
        for (int dart : m.rot[v]) {
            int e = PlanarMap::edge_of(dart);
            int nd;
            if (dart % 2 == 0) {
                nd = seg_dart_fwd(e, 0);
            } else {
                nd = PlanarMap::twin(seg_dart_fwd(e, pieces[e] - 1));
            }
            g.map.rot[v].push_back(nd);
            g.map.dart_origin[nd] = v;
        }
    }
    // interior vertices: incoming segment, outgoing segment
    for (int e = 0; e < ne; ++e) {
        for (int k = 0; k < static_cast<int>(chain_vertices[e].size()); ++k) {
            int v = chain_vertices[e][k];
            int din = PlanarMap::twin(seg_dart_fwd(e, k));
            int dout = seg_dart_fwd(e, k + 1);
            g.map.rot[v] = {din, dout};
            g.map.dart_origin[din] = v;
            g.map.dart_origin[dout] = v;
        }
    }

    g.map.check_consistent();
    for (int v = 0; v < next_v; ++v) g.degree.push_back(g.map.degree(v));

    Graph plain = g.to_graph();
    require(plain.is_simple(), errc::internal, "subdivision left a loop or parallel pair");
    require(g.map.euler_characteristic() == 2, errc::internal,
            "subdivision broke the spherical embedding");
    return g;
}

Graph SimpleDiagramGraph::to_graph() const {
    Graph g;
    g.n = map.vertex_count();
    for (int e = 0; e < map.edge_count(); ++e) g.add_edge(map.tail(e), map.head(e));
    return g;
}

std::vector<int> SimpleDiagramGraph::sweep_order() const {
    std::vector<int> order(map.vertex_count());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sweep_key[a] < sweep_key[b]; });
    return order;
}

bool SimpleDiagramGraph::is_crossing_vertex(int v, const Diagram& d) const {
    int sv = source_vertex[v];
    return sv >= 0 && d.kind[sv] == VertexKind::crossing;
}

std::vector<std::pair<int, int>> contract_degree_two(const SimpleDiagramGraph& g) {
    // follow each diagram edge's chain from its forward end
    std::map<int, std::vector<int>> by_source;
    for (int e = 0; e < g.map.edge_count(); ++e) by_source[g.edge_source[e]].push_back(e);
    std::vector<std::pair<int, int>> out;
    for (auto& [src, segs] : by_source) {
        // segments were allocated in order along the chain
        int u = g.map.tail(segs.front());
        int v = g.map.head(segs.back());
        out.push_back({u, v});
    }
    return out;
}

PlanarMap dual_graph(const SimpleDiagramGraph& g) { return g.map.dual(); }

}  // namespace knotcarve
