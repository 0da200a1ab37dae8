#include "knotcarve/curves.hpp"

#include <algorithm>
#include <map>

#include "knotcarve/error.hpp"

namespace knotcarve {

std::vector<std::pair<int, int>> tree_path_edges(const CarvingDecomposition& dec, int u, int v) {
    int from = dec.vertex_leaf[u], to = dec.vertex_leaf[v];
    // BFS parents from `to`, then walk up from `from`
    std::vector<int> parent(dec.node_count(), -2);
    std::vector<int> queue = {to};
    parent[to] = -1;
    for (size_t i = 0; i < queue.size(); ++i) {
        int x = queue[i];
        for (int y : dec.nbrs[x])
            if (parent[y] == -2) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    std::vector<std::pair<int, int>> path;
    int x = from;
    while (parent[x] != -1) {
        path.push_back({x, parent[x]});
        x = parent[x];
    }
    return path;
}

namespace {

int tree_edge_index(const std::vector<std::pair<int, int>>& edges, int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
    require(it != edges.end() && *it == std::make_pair(a, b), errc::internal,
            "unknown carving tree edge");
    return static_cast<int>(it - edges.begin());
}

}  // namespace

CurveFamily realize(const SimpleDiagramGraph& g, const CarvingDecomposition& dec) {
    Graph plain = g.to_graph();
    dec.validate(plain.n);
    require(!plain.has_bridge(), errc::unsupported, "realize needs a bridgeless graph");

    auto face_of = g.map.face_of_dart();
    auto tedges = dec.tree_edges();
    std::sort(tedges.begin(), tedges.end());

    CurveFamily fam;
    fam.crossing_order.assign(plain.edge_count(), {});
    fam.curves.resize(tedges.size());

    for (int t = 0; t < static_cast<int>(tedges.size()); ++t) {
        auto [a, b] = tedges[t];
        auto mid = middle_set(plain, dec, a, b);
        require(!mid.empty(), errc::internal, "empty middle set on a connected graph");

        // The cut's dual edges must form a simple cycle: every incident face
        // is met exactly twice.  Walk it.
        std::map<int, std::vector<int>> at_face;  // face -> incident cut edges
        for (int e : mid) {
            at_face[face_of[2 * e]].push_back(e);
            at_face[face_of[2 * e + 1]].push_back(e);
        }
        for (auto& [f, es] : at_face)
            require(es.size() == 2, errc::unsupported,
                    "cut is not a simple dual cycle (carving is not bond)");

        int start = *std::min_element(mid.begin(), mid.end());
        std::vector<int> cycle, fcycle;
        int cur = start;
        // deterministic direction: leave through the smaller-id face side
        int face = std::min(face_of[2 * start], face_of[2 * start + 1]);
        do {
            cycle.push_back(cur);
            fcycle.push_back(face);
            const auto& pair = at_face[face];
            int nxt = pair[0] == cur ? pair[1] : pair[0];
            int f1 = face_of[2 * nxt], f2 = face_of[2 * nxt + 1];
            face = (f1 == face) ? f2 : f1;
            cur = nxt;
        } while (cur != start);
        require(cycle.size() == mid.size(), errc::unsupported,
                "cut dual cycle does not traverse the whole middle set (not bond)");
        fam.curves[t] = {a, b, std::move(cycle), std::move(fcycle)};
    }

    // order curves along each graph edge by the carving-tree path between
    // the endpoints' leaves
    for (int e = 0; e < plain.edge_count(); ++e) {
        int u = plain.edges[e].first, v = plain.edges[e].second;
        for (auto [x, y] : tree_path_edges(dec, u, v)) {
            int t = tree_edge_index(tedges, x, y);
            // not every path edge cuts e... but every tree edge on the path
            // separates u from v, so e is in its middle set by definition
            fam.crossing_order[e].push_back(t);
        }
    }
    return fam;
}

namespace {

// one crossing point of a curve on the boundary walk of a face
struct ChordEnd {
    size_t walk_pos;   // index into the face's dart walk
    int along;         // rank along the edge, oriented by the walk direction
    int curve;
};

}  // namespace

CurveReport validate(const CurveFamily& fam, const SimpleDiagramGraph& g,
                     const CarvingDecomposition& dec) {
    CurveReport rep;
    Graph plain = g.to_graph();
    auto tedges = dec.tree_edges();
    std::sort(tedges.begin(), tedges.end());
    rep.expect(fam.curves.size() == tedges.size(), "one curve per carving tree edge");
    if (!rep.ok) return rep;

    // each curve crosses exactly mid(e), once each
    for (int t = 0; t < static_cast<int>(fam.curves.size()); ++t) {
        const auto& c = fam.curves[t];
        auto mid = middle_set(plain, dec, c.tree_a, c.tree_b);
        auto sorted_cycle = c.edge_cycle;
        std::sort(sorted_cycle.begin(), sorted_cycle.end());
        bool once = std::adjacent_find(sorted_cycle.begin(), sorted_cycle.end()) ==
                    sorted_cycle.end();
        rep.expect(once && sorted_cycle == mid,
                   "curve " + std::to_string(t) + " crosses exactly its middle set");

        // separation: removing mid splits the graph into the leaf bipartition
        auto in = dec.side(c.tree_a, c.tree_b);
        std::vector<char> mark(plain.n, 0);
        std::vector<int> st;
        int s0 = -1;
        for (int v = 0; v < plain.n; ++v)
            if (in[v]) s0 = v;
        if (s0 >= 0) {
            st.push_back(s0);
            mark[s0] = 1;
            std::vector<char> cut_edge(plain.edge_count(), 0);
            for (int e : mid) cut_edge[e] = 1;
            while (!st.empty()) {
                int v = st.back();
                st.pop_back();
                for (int e = 0; e < plain.edge_count(); ++e) {
                    if (cut_edge[e]) continue;
                    auto [x, y] = plain.edges[e];
                    int w = x == v ? y : (y == v ? x : -1);
                    if (w >= 0 && !mark[w]) {
                        mark[w] = 1;
                        st.push_back(w);
                    }
                }
            }
            bool sep = true;
            for (int v = 0; v < plain.n; ++v)
                if (static_cast<bool>(mark[v]) != static_cast<bool>(in[v])) sep = false;
            rep.expect(sep, "curve " + std::to_string(t) + " separates the leaf bipartition");
        }
    }

    // crossing orders are permutations of the curves through each edge
    std::vector<std::map<int, int>> rank(plain.edge_count());  // edge -> curve -> rank
    for (int e = 0; e < plain.edge_count(); ++e) {
        const auto& ord = fam.crossing_order[e];
        std::vector<int> expect;
        for (int t = 0; t < static_cast<int>(fam.curves.size()); ++t)
            for (int ce : fam.curves[t].edge_cycle)
                if (ce == e) expect.push_back(t);
        auto sorted_ord = ord;
        std::sort(sorted_ord.begin(), sorted_ord.end());
        std::sort(expect.begin(), expect.end());
        rep.expect(sorted_ord == expect,
                   "edge " + std::to_string(e) + " crossing order lists exactly its curves");
        for (int i = 0; i < static_cast<int>(ord.size()); ++i) rank[e][ord[i]] = i;
    }
    if (!rep.ok) return rep;

    // laminarity: within each face, chords of distinct curves do not
    // interleave.  A curve's chord in a face joins its two crossing points
    // on the boundary walk; points on a shared edge are ordered by the
    // crossing ranks, flipped when the walk runs against the edge.
    auto faces = g.map.faces();
    auto face_of = g.map.face_of_dart();
    std::vector<std::vector<ChordEnd>> ends(faces.size());
    for (int t = 0; t < static_cast<int>(fam.curves.size()); ++t) {
        const auto& cyc = fam.curves[t].edge_cycle;
        const auto& fcyc = fam.curves[t].face_cycle;
        int m = static_cast<int>(cyc.size());
        rep.expect(fcyc.size() == cyc.size(), "curve records a face between crossings");
        if (fcyc.size() != cyc.size()) continue;
        for (int i = 0; i < m; ++i) {
            int e1 = cyc[i], e2 = cyc[(i + 1) % m];
            int f = fcyc[i];
            bool f_ok = (face_of[2 * e1] == f || face_of[2 * e1 + 1] == f) &&
                        (face_of[2 * e2] == f || face_of[2 * e2 + 1] == f);
            rep.expect(f_ok, "recorded face touches both consecutive crossings");
            if (!f_ok) continue;
            for (int e : {e1, e2}) {
                // locate e on the walk of f
                const auto& walk = faces[f];
                for (size_t p = 0; p < walk.size(); ++p) {
                    if (PlanarMap::edge_of(walk[p]) != e) continue;
                    bool forward = walk[p] % 2 == 0;  // dart 2e runs tail->head
                    int r = rank[e][t];
                    int along = forward ? r : static_cast<int>(rank[e].size()) - 1 - r;
                    ends[f].push_back({p, along, t});
                }
            }
        }
    }
    for (size_t f = 0; f < faces.size(); ++f) {
        auto& pts = ends[f];
        std::sort(pts.begin(), pts.end(), [](const ChordEnd& a, const ChordEnd& b) {
            if (a.walk_pos != b.walk_pos) return a.walk_pos < b.walk_pos;
            return a.along < b.along;
        });
        // pair up each curve's two points, then check non-interleaving
        std::map<int, std::vector<int>> pos;
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) pos[pts[i].curve].push_back(i);
        for (auto& [t, ps] : pos)
            rep.expect(ps.size() == 2, "curve visits face at most once");
        for (auto it1 = pos.begin(); it1 != pos.end(); ++it1)
            for (auto it2 = std::next(it1); it2 != pos.end(); ++it2) {
                if (it1->second.size() != 2 || it2->second.size() != 2) continue;
                int a1 = it1->second[0], b1 = it1->second[1];
                int c = it2->second[0], d = it2->second[1];
                bool c_in = a1 < c && c < b1, d_in = a1 < d && d < b1;
                rep.expect(c_in == d_in, "chords of curves " + std::to_string(it1->first) +
                                             " and " + std::to_string(it2->first) +
                                             " interleave in face " + std::to_string(f));
            }
    }
    return rep;
}

}  // namespace knotcarve
