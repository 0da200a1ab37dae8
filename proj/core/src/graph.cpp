#include "knotcarve/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "knotcarve/error.hpp"

namespace knotcarve {

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        deg[u]++;
        deg[v]++;
    }
    return deg;
}

int Graph::max_degree() const {
    auto d = degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

bool Graph::is_simple() const {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) return false;
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) return false;
    }
    return true;
}

bool Graph::connected() const {
    if (n == 0) return true;
    auto adj = adjacency();
    std::vector<char> vis(n, 0);
    std::vector<int> st = {0};
    vis[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                cnt++;
                st.push_back(w);
            }
    }
    return cnt == n;
}

namespace {

// single DFS computing bridges and cut vertices
struct LowlinkDfs {
    const std::vector<std::vector<std::pair<int, int>>>& adj;  // (nbr, edge id)
    std::vector<int> disc, low;
    int timer = 0;
    bool bridge = false;
    std::vector<char> cut;

    explicit LowlinkDfs(const std::vector<std::vector<std::pair<int, int>>>& a)
        : adj(a), disc(a.size(), -1), low(a.size(), 0), cut(a.size(), 0) {}

    void run(int v, int parent_edge) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (auto [w, eid] : adj[v]) {
            if (eid == parent_edge) continue;
            if (disc[w] == -1) {
                children++;
                run(w, eid);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) bridge = true;
                if (parent_edge != -1 && low[w] >= disc[v]) cut[v] = 1;
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent_edge == -1 && children > 1) cut[v] = 1;
    }
};

std::vector<std::vector<std::pair<int, int>>> adjacency_with_ids(const Graph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges[i];
        adj[u].push_back({v, i});
        adj[v].push_back({u, i});
    }
    return adj;
}

}  // namespace

bool Graph::has_bridge() const {
    if (n == 0) return false;
    auto adj = adjacency_with_ids(*this);
    LowlinkDfs dfs(adj);
    dfs.run(0, -1);
    return dfs.bridge;
}

bool Graph::biconnected() const {
    if (n < 3) return false;
    if (!connected()) return false;
    for (auto [u, v] : edges)
        if (u == v) return false;
    auto adj = adjacency_with_ids(*this);
    LowlinkDfs dfs(adj);
    dfs.run(0, -1);
    return std::none_of(dfs.cut.begin(), dfs.cut.end(), [](char c) { return c != 0; });
}

int Graph::cut_size(const std::vector<char>& side) const {
    int c = 0;
    for (auto [u, v] : edges)
        if (side[u] != side[v]) c++;
    return c;
}

namespace {

using Mask = uint32_t;  // adjacency over vertex pairs, n <= 8

int pair_index(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    // index of {i,j} in lexicographic pair order
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// pair_tables[t][idx] = image of pair slot idx under permutation t
std::vector<std::vector<int>> pair_permutation_tables(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> tables;
    do {
        std::vector<int> tab(n * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                tab[pair_index(i, j, n)] = pair_index(p[i], p[j], n);
        tables.push_back(std::move(tab));
    } while (std::next_permutation(p.begin(), p.end()));
    return tables;
}

Mask canonical_mask(Mask m, const std::vector<std::vector<int>>& tables) {
    Mask best = ~Mask(0);
    for (const auto& tab : tables) {
        Mask img = 0;
        Mask rest = m;
        while (rest) {
            int idx = std::countr_zero(rest);
            rest &= rest - 1;
            img |= Mask(1) << tab[idx];
        }
        best = std::min(best, img);
    }
    return best;
}

bool mask_connected(Mask m, int n) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m & (Mask(1) << pair_index(i, j, n))) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<char> vis(n, 0);
    std::vector<int> st = {0};
    vis[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                cnt++;
                st.push_back(w);
            }
    }
    return cnt == n;
}

}  // namespace

std::vector<Graph> connected_graph_census(int n) {
    require(n >= 1 && n <= 8, errc::unsupported, "graph census supports 1..8 vertices");

    // grow all graphs (connected or not) up to isomorphism by attaching one
    // vertex at a time with every possible neighbourhood, then filter
    std::set<Mask> level = {0};  // the 1-vertex graph
    for (int k = 2; k <= n; ++k) {
        auto tables = pair_permutation_tables(k);
        std::set<Mask> next_level;
        for (Mask m : level) {
            // re-index the (k-1)-graph's pairs into k-vertex pair space
            Mask base = 0;
            for (int i = 0; i < k - 1; ++i)
                for (int j = i + 1; j < k - 1; ++j)
                    if (m & (Mask(1) << pair_index(i, j, k - 1)))
                        base |= Mask(1) << pair_index(i, j, k);
            for (Mask nb = 0; nb < (Mask(1) << (k - 1)); ++nb) {
                Mask g = base;
                for (int i = 0; i < k - 1; ++i)
                    if (nb & (Mask(1) << i)) g |= Mask(1) << pair_index(i, k - 1, k);
                next_level.insert(canonical_mask(g, tables));
            }
        }
        level = std::move(next_level);
    }

    std::vector<Graph> out;
    for (Mask m : level) {
        if (!mask_connected(m, n)) continue;
        Graph g;
        g.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (m & (Mask(1) << pair_index(i, j, n))) g.add_edge(i, j);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace knotcarve
