#include "knotcarve/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "knotcarve/error.hpp"

namespace knotcarve {

int tet_edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int i = 0; i < 6; ++i)
        if (kTetEdges[i][0] == a && kTetEdges[i][1] == b) return i;
    fail(errc::internal, "bad tetrahedron edge pair");
}

void Triangulation::glue(int t1, int f1, int t2, int f2, const Perm4& p) {
    require(t1 >= 0 && t1 < tet_count() && t2 >= 0 && t2 < tet_count(), errc::internal,
            "glue: tetrahedron out of range");
    require(!(t1 == t2 && f1 == f2), errc::validation, "glue: face glued to itself");
    require(p[f1] == f2, errc::internal, "glue: permutation does not carry face to face");
    require(!tets[t1][f1].glued() && !tets[t2][f2].glued(), errc::internal,
            "glue: face already glued");
    tets[t1][f1] = {t2, p};
    tets[t2][f2] = {t1, p.inverse()};
}

void Triangulation::unglue(int t, int f) {
    if (!tets[t][f].glued()) return;
    auto g = tets[t][f];
    tets[g.tet][g.perm[f]] = {};
    tets[t][f] = {};
}

void Triangulation::check_valid() const {
    for (int t = 0; t < tet_count(); ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tets[t][f];
            if (!g.glued()) continue;
            require(!(g.tet == t && g.perm[f] == f), errc::validation,
                    "face glued to itself");
            const auto& back = tets[g.tet][g.perm[f]];
            require(back.glued() && back.tet == t, errc::validation,
                    "gluing is not involutive");
            require(back.perm.after(g.perm) == Perm4::identity(), errc::validation,
                    "gluing permutations are not inverse to each other");
        }
}

namespace {

int perm_sign(const Perm4& p) {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) inv++;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

bool Triangulation::orientable() const {
    std::vector<int> sign(tet_count(), 0);
    for (int s = 0; s < tet_count(); ++s) {
        if (sign[s] != 0) continue;
        sign[s] = 1;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = tets[t][f];
                if (!g.glued()) continue;
                int want = perm_sign(g.perm) < 0 ? sign[t] : -sign[t];
                if (sign[g.tet] == 0) {
                    sign[g.tet] = want;
                    stack.push_back(g.tet);
                } else if (sign[g.tet] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

std::vector<int> Triangulation::edge_classes() const {
    UnionFind uf(tet_count() * 6);
    for (int t = 0; t < tet_count(); ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tets[t][f];
            if (!g.glued()) continue;
            for (int e = 0; e < 6; ++e) {
                auto [a, b] = kTetEdges[e];
                if (a == f || b == f) continue;  // edge not on this face
                int e2 = tet_edge_index(g.perm[a], g.perm[b]);
                uf.unite(t * 6 + e, g.tet * 6 + e2);
            }
        }
    std::vector<int> cls(tet_count() * 6);
    std::map<int, int> renumber;
    for (int i = 0; i < tet_count() * 6; ++i) {
        int r = uf.find(i);
        auto [it, fresh] = renumber.insert({r, static_cast<int>(renumber.size())});
        cls[i] = it->second;
    }
    return cls;
}

int Triangulation::count_edges() const {
    auto cls = edge_classes();
    return cls.empty() ? 0 : 1 + *std::max_element(cls.begin(), cls.end());
}

int Triangulation::count_vertices() const {
    UnionFind uf(tet_count() * 4);
    for (int t = 0; t < tet_count(); ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tets[t][f];
            if (!g.glued()) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                uf.unite(t * 4 + v, g.tet * 4 + g.perm[v]);
            }
        }
    std::set<int> reps;
    for (int i = 0; i < tet_count() * 4; ++i) reps.insert(uf.find(i));
    return static_cast<int>(reps.size());
}

int Triangulation::count_faces() const {
    int glued = 0, bdry = 0;
    for (int t = 0; t < tet_count(); ++t)
        for (int f = 0; f < 4; ++f)
            (tets[t][f].glued() ? glued : bdry)++;
    return glued / 2 + bdry;
}

int Triangulation::boundary_face_count() const {
    int bdry = 0;
    for (int t = 0; t < tet_count(); ++t)
        for (int f = 0; f < 4; ++f)
            if (!tets[t][f].glued()) bdry++;
    return bdry;
}

int Triangulation::euler_characteristic() const {
    return count_vertices() - count_edges() + count_faces() - tet_count();
}

std::vector<Triangulation::BoundaryComponent> Triangulation::boundary_components() const {
    // boundary faces and, per boundary face edge, its mate found by
    // pivoting through the interior around the tet edge
    std::vector<std::pair<int, int>> bfaces;
    std::map<std::pair<int, int>, int> bindex;
    for (int t = 0; t < tet_count(); ++t)
        for (int f = 0; f < 4; ++f)
            if (!tets[t][f].glued()) {
                bindex[{t, f}] = static_cast<int>(bfaces.size());
                bfaces.push_back({t, f});
            }
    if (bfaces.empty()) return {};

    // mate of (t, f, {a,b}): pivot to the other face of t containing {a,b},
    // cross gluings until a boundary face appears; carry the vertex map
    struct Mate {
        int face_index;
        int a, b;      // edge pair on the mate, images of the source pair
        int cross;     // image of the source face's third vertex
    };
    auto pivot = [&](int t, int f, int a, int b) -> Mate {
        int third = 6 - f - a - b;  // vertex of face f not on the edge
        int ct = t, cf = f, ca = a, cb = b, cthird = third;
        for (;;) {
            // the other face of ct containing edge {ca,cb} is opposite cthird
            int nf = cthird;
            const auto& g = tets[ct][nf];
            if (!g.glued()) return {bindex.at({ct, nf}), ca, cb, cf};
            int na = g.perm[ca], nb = g.perm[cb];
            int nface = g.perm[cf];
            // we arrive in g.tet through face g.perm[nf]
            int arrived = g.perm[nf];
            ct = g.tet;
            ca = na;
            cb = nb;
            cthird = nface;   // next pivot leaves through the old face's image
            cf = arrived;
        }
    };

    UnionFind face_uf(static_cast<int>(bfaces.size()));
    UnionFind corner_uf(static_cast<int>(bfaces.size()) * 4);  // corners by vertex slot
    for (int i = 0; i < static_cast<int>(bfaces.size()); ++i) {
        auto [t, f] = bfaces[i];
        std::array<int, 3> verts{};
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) verts[k++] = v;
        for (int e = 0; e < 3; ++e) {
            int a = verts[e], b = verts[(e + 1) % 3];
            Mate m = pivot(t, f, a, b);
            face_uf.unite(i, m.face_index);
            corner_uf.unite(i * 4 + a, m.face_index * 4 + m.a);
            corner_uf.unite(i * 4 + b, m.face_index * 4 + m.b);
        }
    }

    // group faces into components, count edge classes and corner classes
    std::map<int, BoundaryComponent> comps;
    std::map<int, int> comp_of_face;
    for (int i = 0; i < static_cast<int>(bfaces.size()); ++i) {
        int r = face_uf.find(i);
        comps[r].faces.push_back(bfaces[i]);
        comp_of_face[i] = r;
    }
    // edges: each (face, edge) slot pairs with its mate; count classes per component
    std::map<int, std::set<std::pair<int, int>>> comp_edges;  // canonical slot per pair
    for (int i = 0; i < static_cast<int>(bfaces.size()); ++i) {
        auto [t, f] = bfaces[i];
        std::array<int, 3> verts{};
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) verts[k++] = v;
        for (int e = 0; e < 3; ++e) {
            int a = verts[e], b = verts[(e + 1) % 3];
            Mate m = pivot(t, f, a, b);
            auto self_slot = std::make_pair(i, tet_edge_index(a, b));
            auto mate_slot = std::make_pair(m.face_index, tet_edge_index(m.a, m.b));
            comp_edges[comp_of_face[i]].insert(std::min(self_slot, mate_slot));
        }
    }
    std::map<int, std::set<int>> comp_corners;
    for (int i = 0; i < static_cast<int>(bfaces.size()); ++i) {
        auto [t, f] = bfaces[i];
        for (int v = 0; v < 4; ++v)
            if (v != f) comp_corners[comp_of_face[i]].insert(corner_uf.find(i * 4 + v));
    }

    std::vector<BoundaryComponent> out;
    for (auto& [rep, comp] : comps) {
        comp.edges = static_cast<int>(comp_edges[rep].size());
        comp.vertices = static_cast<int>(comp_corners[rep].size());
        std::sort(comp.faces.begin(), comp.faces.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.faces.front() < b.faces.front();
    });
    return out;
}

Graph Triangulation::face_pairing_graph() const {
    Graph g;
    g.n = tet_count();
    for (int t = 0; t < tet_count(); ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& gl = tets[t][f];
            if (!gl.glued()) continue;
            // count each glued pair once
            if (gl.tet > t || (gl.tet == t && gl.perm[f] > f)) g.add_edge(t, gl.tet);
        }
    return g;
}

std::string Triangulation::interchange_text() const {
    std::ostringstream os;
    for (int t = 0; t < tet_count(); ++t) {
        os << "tet " << t << ":";
        for (int f = 0; f < 4; ++f) {
            const auto& g = tets[t][f];
            if (!g.glued()) {
                os << " bdry";
            } else {
                os << ' ' << g.tet << '(';
                for (int i = 0; i < 4; ++i) os << static_cast<int>(g.perm[i]);
                os << ')';
            }
        }
        os << '\n';
    }
    return os.str();
}

int path_carving_width(const Graph& fpg, const std::vector<int>& order) {
    require(static_cast<int>(order.size()) == fpg.n, errc::unsupported,
            "order must list every tetrahedron");
    std::vector<int> pos(fpg.n);
    for (int i = 0; i < fpg.n; ++i) pos[order[i]] = i;
    int width = 0;
    // single-vertex cuts
    std::vector<int> deg(fpg.n, 0);
    for (auto [u, v] : fpg.edges)
        if (u != v) {
            deg[u]++;
            deg[v]++;
        }
    for (int d : deg) width = std::max(width, d);
    // prefix cuts
    for (int i = 0; i + 1 < fpg.n; ++i) {
        int cut = 0;
        for (auto [u, v] : fpg.edges)
            if (u != v && ((pos[u] <= i) != (pos[v] <= i))) cut++;
        width = std::max(width, cut);
    }
    return width;
}

}  // namespace knotcarve
