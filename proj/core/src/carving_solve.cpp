#include "knotcarve/carving_solve.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <thread>

#include "knotcarve/error.hpp"

namespace knotcarve {

namespace {

constexpr int kHardCap = 20;  // 3^20 subset splits is the practical ceiling

// incremental builder for unrooted binary trees
struct TreeBuilder {
    CarvingDecomposition dec;

    explicit TreeBuilder(int vertices) { dec.vertex_leaf.assign(vertices, -1); }

    int leaf(int vertex) {
        int id = dec.node_count();
        dec.nbrs.push_back({});
        dec.leaf_vertex.push_back(vertex);
        dec.vertex_leaf[vertex] = id;
        return id;
    }
    int join(int a, int b) {  // internal node over two subtree roots
        int id = dec.node_count();
        dec.nbrs.push_back({});
        dec.leaf_vertex.push_back(-1);
        link(id, a);
        link(id, b);
        return id;
    }
    void link(int a, int b) {
        dec.nbrs[a].push_back(b);
        dec.nbrs[b].push_back(a);
    }
    // connect a list of subtree roots into one unrooted binary tree
    void close(std::vector<int> roots) {
        if (roots.size() <= 1) return;
        if (roots.size() == 2) {
            link(roots[0], roots[1]);
            return;
        }
        int t = join(roots[0], roots[1]);
        for (size_t i = 2; i + 1 < roots.size(); ++i) t = join(t, roots[i]);
        link(t, roots.back());
    }
};

using Mask = uint32_t;

struct SubsetTables {
    int n;
    std::vector<Mask> adj;       // neighbour mask per vertex
    std::vector<int16_t> cut;    // edge boundary size per subset
    std::vector<char> conn;      // induced subgraph connected?

    explicit SubsetTables(const Graph& g) : n(g.n) {
        adj.assign(n, 0);
        for (auto [u, v] : g.edges) {
            adj[u] |= Mask(1) << v;
            adj[v] |= Mask(1) << u;
        }
        Mask full = n == 32 ? ~Mask(0) : (Mask(1) << n) - 1;
        size_t total = size_t(1) << n;
        cut.assign(total, 0);
        conn.assign(total, 0);
        std::vector<int> deg(n);
        for (int v = 0; v < n; ++v) deg[v] = std::popcount(adj[v]);
        for (size_t s = 0; s < total; ++s) {
            Mask m = static_cast<Mask>(s);
            int c = 0;
            Mask rest = m;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                c += std::popcount(adj[v] & full & ~m);
            }
            cut[s] = static_cast<int16_t>(c);
            conn[s] = subset_connected(m);
        }
    }

    bool subset_connected(Mask m) const {
        if (m == 0) return true;
        Mask comp = Mask(1) << std::countr_zero(m);
        for (;;) {
            Mask grow = comp;
            Mask rest = comp;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                grow |= adj[v] & m;
            }
            if (grow == comp) break;
            comp = grow;
        }
        return comp == m;
    }
};

}  // namespace

ExactCarving exact_carving_width(const Graph& g, bool bond_only, int cap, int threads) {
    require(g.is_simple(), errc::unsupported, "exact solver expects a simple graph");
    require(g.connected(), errc::unsupported, "exact solver expects a connected graph");
    int n = g.n;
    if (n > cap || n > kHardCap)
        fail(errc::solver_cap, "graph has " + std::to_string(n) +
                                   " vertices, above the exact-solver cap of " +
                                   std::to_string(std::min(cap, kHardCap)) +
                                   "; use the heuristic");
    if (bond_only) {
        require(n >= 2, errc::unsupported, "bond carvings need at least two vertices");
        require(!g.has_bridge(), errc::unsupported, "bond carving requested on a graph with a bridge");
        require(n == 2 || g.biconnected(), errc::unsupported,
                "bond carving requested on a graph with a cut vertex; no bond carving exists");
        if (n == 2)
            fail(errc::unsupported, "bond carving requested on a graph with a bridge");
    }

    if (n == 1) {
        TreeBuilder tb(1);
        tb.leaf(0);
        return {0, std::move(tb.dec)};
    }

    SubsetTables tab(g);
    Mask full = (n == 32 ? ~Mask(0) : (Mask(1) << n) - 1);
    size_t total = size_t(1) << n;
    constexpr int kInf = std::numeric_limits<int>::max() / 4;

    std::vector<int> value(total, kInf);
    std::vector<Mask> choice(total, 0);

    auto valid = [&](Mask s) {
        if (!bond_only) return true;
        return tab.conn[s] && tab.conn[full & ~s];
    };

    for (int v = 0; v < n; ++v) {
        Mask s = Mask(1) << v;
        value[s] = valid(s) ? tab.cut[s] : kInf;
    }

    // subsets grouped by popcount so layers can be filled in parallel
    std::vector<std::vector<Mask>> layers(n + 1);
    for (size_t s = 1; s < total; ++s) layers[std::popcount(static_cast<Mask>(s))].push_back(s);

    auto fill_one = [&](Mask s) {
        if (!valid(s)) return;
        Mask low = Mask(1) << std::countr_zero(s);
        Mask rest = s & ~low;
        int best = kInf;
        Mask best_split = 0;
        // enumerate splits with the lowest vertex pinned to side A
        for (Mask sub = rest; sub; sub = (sub - 1) & rest) {
            Mask a = low | (s & ~(low | sub));
            Mask b = sub;
            int va = value[a], vb = value[b];
            int cand = std::max(va, vb);
            if (cand < best) {
                best = cand;
                best_split = a;
            }
        }
        {
            // the split (low | rest-complement, rest) loop above misses a = {low}
            Mask a = low, b = rest;
            int cand = std::max(value[a], value[b]);
            if (cand < best) {
                best = cand;
                best_split = a;
            }
        }
        if (best >= kInf) return;
        value[s] = std::max<int>(tab.cut[s], best);
        choice[s] = best_split;
    };

    for (int p = 2; p <= n; ++p) {
        auto& layer = layers[p];
        int use_threads = (threads > 1 && layer.size() > 4096) ? threads : 1;
        if (use_threads == 1) {
            for (Mask s : layer) fill_one(s);
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (layer.size() + use_threads - 1) / use_threads;
            for (int t = 0; t < use_threads; ++t) {
                size_t lo = t * chunk, hi = std::min(layer.size(), lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back([&, lo, hi]() {
                    for (size_t i = lo; i < hi; ++i) fill_one(layer[i]);
                });
            }
            for (auto& th : pool) th.join();
        }
    }

    if (value[full] >= kInf)
        fail(errc::unsupported, "no bond carving decomposition exists for this graph");

    // rebuild the witness tree from the stored splits
    TreeBuilder tb(n);
    auto expand = [&](auto&& self, Mask s) -> int {
        if (std::popcount(s) == 1) return tb.leaf(std::countr_zero(s));
        Mask a = choice[s], b = s & ~a;
        return tb.join(self(self, a), self(self, b));
    };
    Mask a = choice[full], b = full & ~a;
    tb.close({expand(expand, a), expand(expand, b)});
    tb.dec.validate(n);
    return {value[full], std::move(tb.dec)};
}

CarvingDecomposition caterpillar_carving(const Graph& g, const std::vector<int>& order) {
    require(static_cast<int>(order.size()) == g.n, errc::unsupported,
            "caterpillar order must list every vertex once");
    TreeBuilder tb(g.n);
    std::vector<int> roots;
    roots.reserve(order.size());
    for (int v : order) roots.push_back(tb.leaf(v));
    tb.close(std::move(roots));
    tb.dec.validate(g.n);
    return tb.dec;
}

CarvingDecomposition spanning_tree_carving(const Graph& g) {
    require(g.connected() && g.n >= 1, errc::unsupported, "need a connected graph");
    auto adj = g.adjacency();
    for (auto& a : adj) std::sort(a.begin(), a.end());
    // BFS tree from 0
    std::vector<int> parent(g.n, -2);
    std::vector<int> bfs;
    parent[0] = -1;
    bfs.push_back(0);
    for (size_t i = 0; i < bfs.size(); ++i) {
        int v = bfs[i];
        for (int w : adj[v])
            if (parent[w] == -2) {
                parent[w] = v;
                bfs.push_back(w);
            }
    }
    std::vector<std::vector<int>> kids(g.n);
    for (int v = 1; v < g.n; ++v)
        if (parent[v] >= 0) kids[parent[v]].push_back(v);

    TreeBuilder tb(g.n);
    // fold each vertex's leaf with its children's subtrees; keep one free
    // slot for the parent edge
    auto build = [&](auto&& self, int v) -> int {
        int t = tb.leaf(v);
        for (int c : kids[v]) t = tb.join(t, self(self, c));
        return t;
    };
    if (g.n == 1) {
        tb.leaf(0);
    } else {
        std::vector<int> tops;
        tops.push_back(tb.leaf(0));
        for (int c : kids[0]) tops.push_back(build(build, c));
        tb.close(std::move(tops));
    }
    tb.dec.validate(g.n);
    return tb.dec;
}

namespace {

std::vector<int> bfs_order(const Graph& g, int start) {
    auto adj = g.adjacency();
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<int> order;
    std::vector<char> vis(g.n, 0);
    order.push_back(start);
    vis[start] = 1;
    for (size_t i = 0; i < order.size(); ++i)
        for (int w : adj[order[i]])
            if (!vis[w]) {
                vis[w] = 1;
                order.push_back(w);
            }
    return order;
}

}  // namespace

CarvingDecomposition heuristic_carving(const Graph& g, const std::vector<int>* order_hint) {
    require(g.connected(), errc::unsupported, "heuristic needs a connected graph");
    std::vector<CarvingDecomposition> cands;
    if (order_hint) cands.push_back(caterpillar_carving(g, *order_hint));
    cands.push_back(caterpillar_carving(g, bfs_order(g, 0)));
    cands.push_back(spanning_tree_carving(g));
    int best = -1, bw = 0;
    for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
        int w = carving_width(g, cands[i]);
        if (best < 0 || w < bw) {
            best = i;
            bw = w;
        }
    }
    return cands[best];
}

namespace {

// connectivity of an arbitrary vertex subset, list representation
bool subset_connected_vec(const std::vector<std::vector<int>>& adj, const std::vector<char>& in) {
    int start = -1, total = 0;
    for (int v = 0; v < static_cast<int>(in.size()); ++v)
        if (in[v]) {
            if (start < 0) start = v;
            total++;
        }
    if (total <= 1) return true;
    std::vector<char> vis(in.size(), 0);
    std::vector<int> st = {start};
    vis[start] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : adj[v])
            if (in[w] && !vis[w]) {
                vis[w] = 1;
                cnt++;
                st.push_back(w);
            }
    }
    return cnt == total;
}

struct BondMergeState {
    const Graph& g;
    std::vector<std::vector<int>> adj;
    // live parts: vertex membership + current subtree root
    std::vector<std::vector<char>> member;
    std::vector<int> root;
    TreeBuilder tb;

    explicit BondMergeState(const Graph& graph) : g(graph), tb(graph.n) {
        adj = g.adjacency();
        for (int v = 0; v < g.n; ++v) {
            std::vector<char> m(g.n, 0);
            m[v] = 1;
            member.push_back(std::move(m));
            root.push_back(tb.leaf(v));
        }
    }

    bool union_valid(int i, int j) const {
        std::vector<char> u(g.n, 0), co(g.n, 1);
        for (int v = 0; v < g.n; ++v) {
            u[v] = member[i][v] | member[j][v];
            co[v] = !u[v];
        }
        return subset_connected_vec(adj, u) && subset_connected_vec(adj, co);
    }

    bool parts_adjacent(int i, int j) const {
        for (auto [u, v] : g.edges) {
            if ((member[i][u] && member[j][v]) || (member[i][v] && member[j][u])) return true;
        }
        return false;
    }

    int union_cut(int i, int j) const {
        int c = 0;
        for (auto [u, v] : g.edges) {
            bool a = member[i][u] || member[j][u];
            bool b = member[i][v] || member[j][v];
            if (a != b) c++;
        }
        return c;
    }

    void merge(int i, int j) {
        for (int v = 0; v < g.n; ++v) member[i][v] |= member[j][v];
        root[i] = tb.join(root[i], root[j]);
        member.erase(member.begin() + j);
        root.erase(root.begin() + j);
    }

    CarvingDecomposition finish() {
        require(member.size() == 2 || member.size() == 1, errc::internal, "merge incomplete");
        if (member.size() == 2) tb.link(root[0], root[1]);
        tb.dec.validate(g.n);
        return std::move(tb.dec);
    }
};

void require_bond_feasible(const Graph& g) {
    require(g.n >= 3, errc::unsupported, "bond carving needs at least three vertices");
    require(!g.has_bridge(), errc::unsupported, "bond carving on a graph with a bridge");
    require(g.biconnected(), errc::unsupported,
            "bond carving on a graph with a cut vertex; none exists");
}

}  // namespace

std::optional<CarvingDecomposition> sweep_bond_carving(const Graph& g,
                                                       const std::vector<int>& order) {
    require_bond_feasible(g);
    BondMergeState st(g);
    // parts are identified by their seed vertex; part 0 accumulates
    std::vector<int> pending(order.begin() + 1, order.end());
    // locate the part index currently holding a given seed vertex
    auto part_of = [&](int v) {
        for (int i = 0; i < static_cast<int>(st.member.size()); ++i)
            if (st.member[i][v]) return i;
        return -1;
    };
    int acc_seed = order[0];
    while (st.member.size() > 2) {
        int acc = part_of(acc_seed);
        bool merged = false;
        for (size_t k = 0; k < pending.size(); ++k) {
            int cand = part_of(pending[k]);
            if (cand == acc) continue;
            if (!st.parts_adjacent(acc, cand)) continue;
            if (!st.union_valid(acc, cand)) continue;
            if (cand < acc) std::swap(acc, cand);
            st.merge(acc, cand);
            acc_seed = order[0];
            pending.erase(pending.begin() + k);
            merged = true;
            break;
        }
        if (!merged) return std::nullopt;
    }
    return st.finish();
}

CarvingDecomposition greedy_bond_carving(const Graph& g) {
    require_bond_feasible(g);
    BondMergeState st(g);
    while (st.member.size() > 2) {
        int bi = -1, bj = -1, bcut = 0;
        int m = static_cast<int>(st.member.size());
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                if (!st.parts_adjacent(i, j)) continue;
                if (!st.union_valid(i, j)) continue;
                int c = st.union_cut(i, j);
                if (bi < 0 || c < bcut) {
                    bi = i;
                    bj = j;
                    bcut = c;
                }
            }
        require(bi >= 0, errc::internal, "greedy bond merge is stuck");
        st.merge(bi, bj);
    }
    return st.finish();
}

CarvingDecomposition heuristic_bond_carving(const Graph& g, const std::vector<int>* order_hint) {
    std::vector<CarvingDecomposition> cands;
    if (order_hint) {
        auto c = sweep_bond_carving(g, *order_hint);
        if (c) cands.push_back(std::move(*c));
    }
    {
        auto c = sweep_bond_carving(g, bfs_order(g, 0));
        if (c) cands.push_back(std::move(*c));
    }
    cands.push_back(greedy_bond_carving(g));
    int best = -1, bw = 0;
    for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
        int w = carving_width(g, cands[i]);
        if (best < 0 || w < bw) {
            best = i;
            bw = w;
        }
    }
    return cands[best];
}

}  // namespace knotcarve
