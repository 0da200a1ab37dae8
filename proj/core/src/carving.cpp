#include "knotcarve/carving.hpp"

#include <algorithm>

#include "knotcarve/error.hpp"

namespace knotcarve {

std::vector<std::pair<int, int>> CarvingDecomposition::tree_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < node_count(); ++a)
        for (int b : nbrs[a])
            if (a < b) out.push_back({a, b});
    return out;
}

std::vector<char> CarvingDecomposition::side(int a, int b) const {
    std::vector<char> in(vertex_leaf.size(), 0);
    std::vector<int> stack = {a};
    std::vector<char> vis(node_count(), 0);
    vis[a] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (leaf_vertex[x] >= 0) in[leaf_vertex[x]] = 1;
        for (int y : nbrs[x]) {
            if ((x == a && y == b) || vis[y]) continue;
            vis[y] = 1;
            stack.push_back(y);
        }
    }
    return in;
}

void CarvingDecomposition::validate(int graph_vertex_count) const {
    require(static_cast<int>(vertex_leaf.size()) == graph_vertex_count, errc::validation,
            "carving: leaf map size differs from vertex count");
    int leaves = 0;
    for (int x = 0; x < node_count(); ++x) {
        int deg = static_cast<int>(nbrs[x].size());
        if (leaf_vertex[x] >= 0) {
            leaves++;
            require(deg <= 1, errc::validation, "carving: leaf with tree degree > 1");
            require(vertex_leaf[leaf_vertex[x]] == x, errc::validation,
                    "carving: leaf map is not a bijection");
        } else {
            require(deg == 3, errc::validation, "carving: internal node degree != 3");
        }
    }
    require(leaves == graph_vertex_count, errc::validation,
            "carving: leaf count differs from vertex count");
    // connectivity of the tree
    if (node_count() > 0) {
        std::vector<char> vis(node_count(), 0);
        std::vector<int> st = {0};
        vis[0] = 1;
        int cnt = 1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : nbrs[x])
                if (!vis[y]) {
                    vis[y] = 1;
                    cnt++;
                    st.push_back(y);
                }
        }
        require(cnt == node_count(), errc::validation, "carving: tree is disconnected");
    }
}

std::vector<int> middle_set(const Graph& g, const CarvingDecomposition& dec, int a, int b) {
    auto in = dec.side(a, b);
    std::vector<int> mid;
    for (int e = 0; e < g.edge_count(); ++e)
        if (in[g.edges[e].first] != in[g.edges[e].second]) mid.push_back(e);
    return mid;
}

std::vector<int> middle_sizes(const Graph& g, const CarvingDecomposition& dec) {
    std::vector<int> out;
    for (auto [a, b] : dec.tree_edges())
        out.push_back(static_cast<int>(middle_set(g, dec, a, b).size()));
    return out;
}

int carving_width(const Graph& g, const CarvingDecomposition& dec) {
    int w = 0;
    for (int s : middle_sizes(g, dec)) w = std::max(w, s);
    return w;
}

namespace {

bool side_connected(const Graph& g, const std::vector<char>& in, char want) {
    auto adj = g.adjacency();
    int start = -1, total = 0;
    for (int v = 0; v < g.n; ++v)
        if (in[v] == want) {
            if (start < 0) start = v;
            total++;
        }
    if (total == 0) return true;
    std::vector<char> vis(g.n, 0);
    std::vector<int> st = {start};
    vis[start] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : adj[v])
            if (in[w] == want && !vis[w]) {
                vis[w] = 1;
                cnt++;
                st.push_back(w);
            }
    }
    return cnt == total;
}

}  // namespace

bool is_bond(const Graph& g, const CarvingDecomposition& dec) {
    for (auto [a, b] : dec.tree_edges()) {
        auto in = dec.side(a, b);
        if (!side_connected(g, in, 1) || !side_connected(g, in, 0)) return false;
    }
    return true;
}

WidthBounds tw_bounds_from_cw(int cw, int d) {
    require(cw >= 1 && d >= 1, errc::unsupported, "tw_bounds_from_cw needs cw >= 1, d >= 1");
    WidthBounds b;
    b.cw = cw;
    b.max_degree = d;
    b.tw_lower = (cw + d - 1) / d - 1;   // ceil(cw/d) - 1
    b.tw_upper = (3 * cw) / 2 - 1;       // floor(3 cw / 2) - 1
    return b;
}

}  // namespace knotcarve
