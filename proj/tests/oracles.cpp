#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracles {

using knotcarve::Graph;

std::vector<Tree> all_carving_trees(int n) {
    std::vector<Tree> trees;
    if (n == 1) {
        trees.push_back({});
        return trees;
    }
    trees.push_back({{0, 1}});
    int internal_base = n;  // internal nodes use ids n, n+1, ...
    for (int leaf = 2; leaf < n; ++leaf) {
        std::vector<Tree> next;
        for (const Tree& t : trees) {
            for (size_t e = 0; e < t.size(); ++e) {
                Tree grown = t;
                auto [a, b] = grown[e];
                int mid = internal_base + leaf - 2;  // one new internal per insertion
                grown[e] = {a, mid};
                grown.push_back({mid, b});
                grown.push_back({mid, leaf});
                next.push_back(std::move(grown));
            }
        }
        trees = std::move(next);
    }
    return trees;
}

namespace {

// leaves on the a-side of edge index e
std::vector<char> side_of(const Tree& t, size_t e, int leaves) {
    int max_node = leaves;
    for (auto [a, b] : t) max_node = std::max({max_node, a + 1, b + 1});
    std::vector<std::vector<int>> adj(max_node);
    for (size_t i = 0; i < t.size(); ++i) {
        if (i == e) continue;
        adj[t[i].first].push_back(t[i].second);
        adj[t[i].second].push_back(t[i].first);
    }
    std::vector<char> in(leaves, 0);
    std::vector<char> vis(max_node, 0);
    std::vector<int> st = {t[e].first};
    vis[t[e].first] = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        if (x < leaves) in[x] = 1;
        for (int y : adj[x])
            if (!vis[y]) {
                vis[y] = 1;
                st.push_back(y);
            }
    }
    return in;
}

bool part_connected(const Graph& g, const std::vector<char>& in, char want) {
    auto adj = g.adjacency();
    int start = -1, total = 0;
    for (int v = 0; v < g.n; ++v)
        if (in[v] == want) {
            if (start < 0) start = v;
            total++;
        }
    if (total <= 1) return true;
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

int tree_width_of_carving(const Graph& g, const Tree& t, int leaves) {
    int width = 0;
    for (size_t e = 0; e < t.size(); ++e) {
        auto in = side_of(t, e, leaves);
        width = std::max(width, g.cut_size(in));
    }
    return width;
}

bool tree_is_bond(const Graph& g, const Tree& t, int leaves) {
    for (size_t e = 0; e < t.size(); ++e) {
        auto in = side_of(t, e, leaves);
        if (!part_connected(g, in, 1) || !part_connected(g, in, 0)) return false;
    }
    return true;
}

int brute_carving_width(const Graph& g) {
    auto trees = all_carving_trees(g.n);
    int best = -1;
    for (const Tree& t : trees) {
        int w = tree_width_of_carving(g, t, g.n);
        if (best < 0 || w < best) best = w;
    }
    return best;
}

int brute_bond_carving_width(const Graph& g) {
    auto trees = all_carving_trees(g.n);
    int best = -1;
    for (const Tree& t : trees) {
        if (!tree_is_bond(g, t, g.n)) continue;
        int w = tree_width_of_carving(g, t, g.n);
        if (best < 0 || w < best) best = w;
    }
    return best;
}

int brute_tree_width(const Graph& g) {
    int n = g.n;
    if (n == 1) return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;  // tree-width is at most n-1
    auto base = g.adjacency();
    do {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
        std::vector<char> gone(n, 0);
        int width = 0;
        for (int v : order) {
            std::vector<int> nb;
            for (int w = 0; w < n; ++w)
                if (!gone[w] && w != v && adj[v][w]) nb.push_back(w);
            width = std::max(width, static_cast<int>(nb.size()));
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j)
                    adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = 1;
            gone[v] = 1;
            if (width >= best) break;
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace oracles
