#include "knotcarve/export.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace knotcarve {

namespace {

void dot_edges(std::ostringstream& os, const PlanarMap& m) {
    for (int e = 0; e < m.edge_count(); ++e)
        os << "  v" << m.tail(e) << " -- v" << m.head(e) << " [label=\"e" << e << "\"];\n";
}

}  // namespace

std::string dot_graph(const Diagram& d) {
    std::ostringstream os;
    os << "graph diagram {\n  node [shape=circle];\n";
    for (int v = 0; v < d.map.vertex_count(); ++v)
        os << "  v" << v << " ["
           << (d.kind[v] == VertexKind::crossing ? "style=filled, fillcolor=gray"
                                                 : "style=dotted")
           << "];\n";
    dot_edges(os, d.map);
    os << "}\n";
    return os.str();
}

std::string dot_graph(const SimpleDiagramGraph& g) {
    std::ostringstream os;
    os << "graph simple_diagram {\n  node [shape=circle];\n";
    for (int v = 0; v < g.map.vertex_count(); ++v)
        os << "  v" << v << (g.source_vertex[v] >= 0 ? " [style=filled, fillcolor=gray]" : "")
           << ";\n";
    dot_edges(os, g.map);
    os << "}\n";
    return os.str();
}

std::string dot_dual(const SimpleDiagramGraph& g) {
    PlanarMap dual = g.map.dual();
    std::ostringstream os;
    os << "graph dual {\n  node [shape=box];\n";
    dot_edges(os, dual);
    os << "}\n";
    return os.str();
}

std::string dot_carving(const Graph& g, const CarvingDecomposition& dec) {
    std::ostringstream os;
    os << "graph carving {\n";
    for (int x = 0; x < dec.node_count(); ++x) {
        if (dec.leaf_vertex[x] >= 0)
            os << "  n" << x << " [shape=box, label=\"v" << dec.leaf_vertex[x] << "\"];\n";
        else
            os << "  n" << x << " [shape=point];\n";
    }
    for (auto [a, b] : dec.tree_edges())
        os << "  n" << a << " -- n" << b << " [label=\""
           << middle_set(g, dec, a, b).size() << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string dot_face_pairing(const Graph& fpg) {
    std::ostringstream os;
    os << "graph face_pairing {\n  node [shape=circle];\n";
    for (int v = 0; v < fpg.n; ++v) os << "  t" << v << ";\n";
    for (auto [a, b] : fpg.edges) os << "  t" << a << " -- t" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string dot_component_tree(const SphereDecomposition& sd) {
    std::ostringstream os;
    os << "graph components {\n";
    for (int ci = 0; ci < static_cast<int>(sd.components.size()); ++ci) {
        const auto& c = sd.components[ci];
        os << "  c" << ci << " [shape=" << (c.is_ball ? "box" : "ellipse") << ", label=\""
           << (c.is_ball ? "ball" : "pants") << " " << ci << "\"];\n";
    }
    // each sphere joins its two components
    for (int s = 0; s < static_cast<int>(sd.spheres.size()); ++s) {
        int first = -1;
        for (int ci = 0; ci < static_cast<int>(sd.components.size()); ++ci)
            for (int cs : sd.components[ci].spheres)
                if (cs == s) {
                    if (first < 0)
                        first = ci;
                    else
                        os << "  c" << first << " -- c" << ci << " [label=\"w="
                           << sd.spheres[s].weight << "\"];\n";
                }
    }
    os << "}\n";
    return os.str();
}

namespace {

struct Layout {
    std::vector<double> x, y;
};

// Tutte-style barycentric layout: pin the largest face on a circle, relax
// everything else.  Good enough for schematic figures.
Layout layout_graph(const PlanarMap& m) {
    auto faces = m.faces();
    size_t outer = 0;
    for (size_t f = 1; f < faces.size(); ++f)
        if (faces[f].size() > faces[outer].size()) outer = f;

    int n = m.vertex_count();
    Layout ly;
    ly.x.assign(n, 0.0);
    ly.y.assign(n, 0.0);
    std::vector<char> pinned(n, 0);
    std::vector<int> ring;
    for (int dart : faces[outer]) {
        int v = m.dart_origin[dart];
        if (!pinned[v]) {
            pinned[v] = 1;
            ring.push_back(v);
        }
    }
    const double pi = 3.14159265358979323846;
    for (size_t i = 0; i < ring.size(); ++i) {
        double ang = 2 * pi * static_cast<double>(i) / static_cast<double>(ring.size());
        ly.x[ring[i]] = 500 + 450 * std::cos(ang);
        ly.y[ring[i]] = 500 + 450 * std::sin(ang);
    }
    for (int v = 0; v < n; ++v)
        if (!pinned[v]) {
            ly.x[v] = 500;
            ly.y[v] = 500;
        }
    for (int iter = 0; iter < 600; ++iter) {
        for (int v = 0; v < n; ++v) {
            if (pinned[v] || m.rot[v].empty()) continue;
            double sx = 0, sy = 0;
            for (int dart : m.rot[v]) {
                int w = m.dart_origin[PlanarMap::twin(dart)];
                sx += ly.x[w];
                sy += ly.y[w];
            }
            ly.x[v] = sx / m.rot[v].size();
            ly.y[v] = sy / m.rot[v].size();
        }
    }
    return ly;
}

const char* kCurveColors[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                              "#d35400", "#16a085", "#7f8c8d", "#2c3e50"};

std::string svg_render(const SimpleDiagramGraph& g, const CurveFamily& fam,
                       const SphereDecomposition* sd) {
    Layout ly = layout_graph(g.map);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    for (int e = 0; e < g.map.edge_count(); ++e) {
        int u = g.map.tail(e), v = g.map.head(e);
        os << "<line x1=\"" << ly.x[u] << "\" y1=\"" << ly.y[u] << "\" x2=\"" << ly.x[v]
           << "\" y2=\"" << ly.y[v] << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (int v = 0; v < g.map.vertex_count(); ++v) {
        bool big = g.source_vertex[v] >= 0;
        os << "<circle cx=\"" << ly.x[v] << "\" cy=\"" << ly.y[v] << "\" r=\""
           << (big ? 7 : 3) << "\" fill=\"" << (big ? "black" : "gray") << "\"/>\n";
    }
    // crossing points along each edge, ordered tail to head
    auto point_on_edge = [&](int e, int rank, int of) {
        int u = g.map.tail(e), v = g.map.head(e);
        double t = static_cast<double>(rank + 1) / (of + 1);
        return std::pair{ly.x[u] + t * (ly.x[v] - ly.x[u]), ly.y[u] + t * (ly.y[v] - ly.y[u])};
    };
    std::vector<std::map<int, int>> rank(g.map.edge_count());
    for (int e = 0; e < g.map.edge_count(); ++e)
        for (int i = 0; i < static_cast<int>(fam.crossing_order[e].size()); ++i)
            rank[e][fam.crossing_order[e][i]] = i;
    for (int t = 0; t < static_cast<int>(fam.curves.size()); ++t) {
        const auto& cyc = fam.curves[t].edge_cycle;
        std::ostringstream pts;
        for (int i = 0; i <= static_cast<int>(cyc.size()); ++i) {
            int e = cyc[i % cyc.size()];
            auto [px, py] = point_on_edge(e, rank[e][t],
                                          static_cast<int>(fam.crossing_order[e].size()));
            pts << (i ? " " : "") << px << "," << py;
        }
        os << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\""
           << kCurveColors[t % 8] << "\" stroke-width=\"1.5\" stroke-dasharray=\"6,3\"/>\n";
        if (sd) {
            int e0 = cyc[0];
            auto [px, py] =
                point_on_edge(e0, rank[e0][t], static_cast<int>(fam.crossing_order[e0].size()));
            os << "<text x=\"" << px + 4 << "\" y=\"" << py - 4 << "\" font-size=\"12\" fill=\""
               << kCurveColors[t % 8] << "\">w=" << sd->spheres[t].weight << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string svg_curves(const SimpleDiagramGraph& g, const CurveFamily& fam) {
    return svg_render(g, fam, nullptr);
}

std::string svg_spheres(const SimpleDiagramGraph& g, const CurveFamily& fam,
                        const SphereDecomposition& sd) {
    return svg_render(g, fam, &sd);
}

}  // namespace knotcarve
