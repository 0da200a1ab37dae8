#include "knotcarve/layered.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "knotcarve/error.hpp"

namespace knotcarve {

namespace {

int class_of_slot(const std::vector<int>& cls, int tet, int a, int b) {
    return cls[tet * 6 + tet_edge_index(a, b)];
}

struct BoundaryEdgeSlot {
    int tet, face;
    int va, vb;  // the edge on that face
};

// boundary face slots whose edge lies in the given class
std::vector<BoundaryEdgeSlot> boundary_slots_of_class(const Triangulation& tri,
                                                      const std::vector<int>& cls, int cid) {
    std::vector<BoundaryEdgeSlot> out;
    for (int t = 0; t < tri.tet_count(); ++t)
        for (int f = 0; f < 4; ++f) {
            if (tri.tets[t][f].glued()) continue;
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) {
                    if (a == f || b == f) continue;
                    if (class_of_slot(cls, t, a, b) == cid) out.push_back({t, f, a, b});
                }
        }
    return out;
}

Perm4 perm_from_images(int i0, int i1, int i2, int i3) {
    Perm4 p;
    p.img = {static_cast<uint8_t>(i0), static_cast<uint8_t>(i1), static_cast<uint8_t>(i2),
             static_cast<uint8_t>(i3)};
    std::array<bool, 4> seen{};
    for (auto v : p.img) {
        require(v < 4 && !seen[v], errc::internal, "bad permutation images");
        seen[v] = true;
    }
    return p;
}

// Glues a fresh tetrahedron across the two boundary faces adjacent along
// the given edge class (a boundary flip / layering move).  The covered edge
// becomes interior; the new boundary diagonal is edge {2,3} of the new
// tetrahedron.  The second gluing's orientation is fixed by requiring the
// complex to stay orientable.
int layer_across(Triangulation& tri, int cid) {
    auto cls = tri.edge_classes();
    auto slots = boundary_slots_of_class(tri, cls, cid);
    require(slots.size() == 2, errc::internal,
            "layering target edge does not border exactly two boundary faces");
    auto [t1, f1, a1, b1] = slots[0];
    auto [t2, f2, a2, b2] = slots[1];
    int third1 = 6 - f1 - a1 - b1;
    int third2 = 6 - f2 - a2 - b2;

    int n = tri.add_tet();
    // face 3 of n = {0,1,2} onto (t1,f1), edge {0,1} covering the class
    {
        std::array<int, 4> img{};
        img[0] = a1;
        img[1] = b1;
        img[2] = third1;
        img[3] = f1;
        tri.glue(n, 3, t1, f1, perm_from_images(img[0], img[1], img[2], img[3]));
    }
    // face 2 of n = {0,1,3} onto (t2,f2); try both orientations of {0,1}
    for (int flip = 0; flip < 2; ++flip) {
        std::array<int, 4> img{};
        img[0] = flip ? b2 : a2;
        img[1] = flip ? a2 : b2;
        img[3] = third2;
        img[2] = f2;
        tri.glue(n, 2, t2, f2, perm_from_images(img[0], img[1], img[2], img[3]));
        if (tri.orientable()) return n;
        tri.unglue(n, 2);
    }
    fail(errc::internal, "no orientable layering exists across this edge");
}

bool boundary_is_single_standard_torus(const Triangulation& tri) {
    auto comps = tri.boundary_components();
    return comps.size() == 1 && comps[0].is_standard_torus();
}

int append(Triangulation& dst, const Triangulation& src) {
    int off = dst.tet_count();
    for (int t = 0; t < src.tet_count(); ++t) {
        dst.add_tet();
        for (int f = 0; f < 4; ++f) {
            auto g = src.tets[t][f];
            if (g.glued()) g.tet += off;
            dst.tets[off + t][f] = g;
        }
    }
    return off;
}

}  // namespace

std::pair<int, int> bezout_pair(int p, int q) {
    require(p >= 2 && q >= 2 && std::gcd(p, q) == 1, errc::unsupported,
            "bezout pair needs coprime p, q >= 2");
    for (int u = 1; u < p; ++u) {
        long r = (static_cast<long>(q) * u) % p;
        if (r == p - 1) {
            int v = static_cast<int>((1 + static_cast<long>(q) * u) / p);
            return {u, v};
        }
    }
    fail(errc::internal, "no bezout inverse found for coprime input");
}

LayeredTorus layered_solid_torus(int p, int u) {
    require(p >= 2, errc::unsupported, "layered solid torus needs p >= 2");
    u %= p;
    if (u < 0) u += p;
    require(u != 0 && std::gcd(p, u) == 1, errc::unsupported,
            "layered solid torus needs gcd(p,u) = 1 with u not divisible by p");

    // subtractive euclidean path from (p,u) down to {2,1}
    std::vector<std::pair<long, long>> states;
    {
        long x = p, y = u;
        states.push_back({x, y});
        while (!((x == 2 && y == 1) || (x == 1 && y == 2))) {
            if (x > y)
                x -= y;
            else
                y -= x;
            states.push_back({x, y});
        }
        std::reverse(states.begin(), states.end());
    }

    // base: the one-tetrahedron fold, faces 2 and 3 identified
    Triangulation tri;
    tri.add_tet();
    bool folded = false;
    // glue face 2 = {0,1,3} onto face 3 = {0,1,2}: images of (0,1) fix the map
    for (int i0 = 0; i0 < 3 && !folded; ++i0)
        for (int i1 = 0; i1 < 3 && !folded; ++i1) {
            if (i0 == i1) continue;
            int i3 = 3 - i0 - i1;
            tri.glue(0, 2, 0, 3, perm_from_images(i0, i1, 3, i3));
            if (boundary_is_single_standard_torus(tri) && tri.orientable() &&
                tri.euler_characteristic() == 0) {
                folded = true;
            } else {
                tri.unglue(0, 2);
            }
        }
    require(folded, errc::internal, "one-tetrahedron fold not found");

    // meridian counts per boundary edge class, keyed by a representative
    // slot; the base triple {1,2,3} is assigned in canonical class order
    std::map<long, int> rep_of_count;  // count -> representative slot id
    {
        auto cls = tri.edge_classes();
        std::map<int, int> first_slot;  // class -> min slot
        for (int t = 0; t < tri.tet_count(); ++t)
            for (int f = 0; f < 4; ++f) {
                if (tri.tets[t][f].glued()) continue;
                for (int a = 0; a < 4; ++a)
                    for (int b = a + 1; b < 4; ++b) {
                        if (a == f || b == f) continue;
                        int slot = t * 6 + tet_edge_index(a, b);
                        int c = cls[slot];
                        auto it = first_slot.find(c);
                        if (it == first_slot.end() || slot < it->second) first_slot[c] = slot;
                    }
            }
        require(first_slot.size() == 3, errc::internal, "base boundary does not have 3 edges");
        long count = 1;
        for (auto& [c, slot] : first_slot) rep_of_count[count++] = slot;
    }

    // replay the euclidean path upward by layering
    for (size_t i = 1; i < states.size(); ++i) {
        auto [a, b] = states[i - 1];
        auto [a2, b2] = states[i];
        long target, fresh;
        if (a2 == a + b && b2 == b) {
            target = a;
            fresh = a + 2 * b;
        } else if (a2 == a && b2 == a + b) {
            target = b;
            fresh = 2 * a + b;
        } else {
            fail(errc::internal, "euclidean replay steps do not chain");
        }
        auto cls = tri.edge_classes();
        int slot = rep_of_count.at(target);
        int n = layer_across(tri, cls[slot]);
        rep_of_count.erase(target);
        rep_of_count[fresh] = n * 6 + tet_edge_index(2, 3);
        require(boundary_is_single_standard_torus(tri), errc::internal,
                "layering broke the boundary torus");
    }

    LayeredTorus out;
    out.meridian = {static_cast<long>(p), static_cast<long>(u), static_cast<long>(p) + u};
    require(rep_of_count.count(p) && rep_of_count.count(u) && rep_of_count.count(p + u),
            errc::internal, "meridian triple lost during replay");
    out.labels = {rep_of_count.at(p), rep_of_count.at(u), rep_of_count.at(p + u)};
    out.tri = std::move(tri);
    require(out.tri.euler_characteristic() == 0, errc::internal, "solid torus euler check");
    return out;
}

namespace {

// tokens for the prism construction: corner in {A,B,C,D}, level in {0,1}
enum Corner { A = 0, B = 1, C = 2, D = 3 };
int tok(int corner, int level) { return corner * 2 + level; }

struct TokenTets {
    std::vector<std::array<int, 4>> tets;  // token quadruples
};

// triangulated prism over corners (c0,c1,c2); up_at_next[i] says the square
// over edge (c_i, c_{i+1}) takes the diagonal rising to c_{i+1}'s top
void add_prism(TokenTets& out, std::array<int, 3> corners, std::array<bool, 3> up_at_next) {
    int apex = -1;
    for (int k = 0; k < 3; ++k)
        if (up_at_next[(k + 2) % 3] && !up_at_next[k]) apex = k;
    require(apex >= 0, errc::internal, "prism diagonals spiral; not triangulable");
    int Z = corners[apex], X = corners[(apex + 1) % 3], Y = corners[(apex + 2) % 3];
    bool xy_up_at_y = up_at_next[(apex + 1) % 3];
    int X0 = tok(X, 0), X1 = tok(X, 1), Y0 = tok(Y, 0), Y1 = tok(Y, 1);
    int Z0 = tok(Z, 0), Z1 = tok(Z, 1);
    out.tets.push_back({X0, Y0, Z0, Z1});
    if (xy_up_at_y) {  // diagonal X0 - Y1
        out.tets.push_back({X0, Y0, Y1, Z1});
        out.tets.push_back({X0, Y1, X1, Z1});
    } else {  // diagonal Y0 - X1
        out.tets.push_back({Y0, X0, X1, Z1});
        out.tets.push_back({Y0, X1, Y1, Z1});
    }
}

struct PrismBlockData {
    Triangulation tri;
    LabelSlots top, bottom;
    std::pair<int, int> bottom_face_1, bottom_face_2;  // (tet, face) of the two bottom faces
};

// finds (tet, slot pair) for the edge joining two tokens
int slot_of_token_edge(const TokenTets& tt, int ta, int tb) {
    for (int t = 0; t < static_cast<int>(tt.tets.size()); ++t) {
        int ia = -1, ib = -1;
        for (int i = 0; i < 4; ++i) {
            if (tt.tets[t][i] == ta) ia = i;
            if (tt.tets[t][i] == tb) ib = i;
        }
        if (ia >= 0 && ib >= 0) return t * 6 + tet_edge_index(ia, ib);
    }
    fail(errc::internal, "token edge not found in any tetrahedron");
}

PrismBlockData build_prism_block() {
    // torus as the square AB x AD: t1 = (A,B,C), t2 = (A,D,C); identified
    // edges a = AB ~ DC, b = BC ~ AD, diagonal c = AC shared.
    TokenTets tt;
    // global diagonal bits (all zero): square (A,B): A0-B1; (B,C): B0-C1;
    // (A,C): A0-C1.  In prism1's cyclic order (A,B,C) that reads
    // up_at_next = (true, true, false); prism2 (A,D,C) reads the squares
    // through the torus identifications: (A,D)~(B,C) with B->A, C->D gives
    // A0-D1 (up), (D,C)~(A,B) with A->D, B->C gives D0-C1 (up), and the
    // shared (C,A) diagonal A0-C1 points up at C, not A (not up).
    add_prism(tt, {A, B, C}, {true, true, false});
    add_prism(tt, {A, D, C}, {true, true, false});

    // token correspondences across the identified squares
    auto translate = [](int token, int from_a, int from_b, int to_a, int to_b) {
        int corner = token / 2, level = token % 2;
        if (corner == from_a) return tok(to_a, level);
        if (corner == from_b) return tok(to_b, level);
        return -1;
    };

    Triangulation tri;
    for (size_t i = 0; i < tt.tets.size(); ++i) tri.add_tet();

    auto face_tokens = [&](int t, int f) {
        std::vector<int> v;
        for (int i = 0; i < 4; ++i)
            if (i != f) v.push_back(tt.tets[t][i]);
        std::sort(v.begin(), v.end());
        return v;
    };
    auto glue_by_tokens = [&](int t1, int f1, int t2, int f2,
                              const std::map<int, int>& token_map) {
        std::array<int, 4> img{};
        img[f1] = f2;
        for (int i = 0; i < 4; ++i) {
            if (i == f1) continue;
            int target = token_map.at(tt.tets[t1][i]);
            int j = -1;
            for (int k = 0; k < 4; ++k)
                if (tt.tets[t2][k] == target) j = k;
            require(j >= 0, errc::internal, "token image missing in partner tetrahedron");
            img[i] = j;
        }
        tri.glue(t1, f1, t2, f2, perm_from_images(img[0], img[1], img[2], img[3]));
    };

    // literal matches (within prisms and across the shared diagonal square)
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> by_tokens;
    for (int t = 0; t < tri.tet_count(); ++t)
        for (int f = 0; f < 4; ++f) by_tokens[face_tokens(t, f)].push_back({t, f});
    for (auto& [key, faces] : by_tokens) {
        require(faces.size() <= 2, errc::internal, "face token triple appears thrice");
        if (faces.size() == 2) {
            std::map<int, int> ident;
            for (int token : key) ident[token] = token;
            glue_by_tokens(faces[0].first, faces[0].second, faces[1].first, faces[1].second,
                           ident);
        }
    }
    // cross-square matches: (A,B) -> (D,C) and (B,C) -> (A,D)
    for (auto [fa, fb, ta, tb] : {std::array<int, 4>{A, B, D, C}, std::array<int, 4>{B, C, A, D}}) {
        for (int t = 0; t < tri.tet_count(); ++t)
            for (int f = 0; f < 4; ++f) {
                if (tri.tets[t][f].glued()) continue;
                auto toks = face_tokens(t, f);
                std::map<int, int> tmap;
                bool in_square = true;
                for (int token : toks) {
                    int img = translate(token, fa, fb, ta, tb);
                    if (img < 0) in_square = false;
                    tmap[token] = img;
                }
                if (!in_square) continue;
                std::vector<int> target;
                for (int token : toks) target.push_back(tmap[token]);
                std::sort(target.begin(), target.end());
                for (int t2 = 0; t2 < tri.tet_count(); ++t2)
                    for (int f2 = 0; f2 < 4; ++f2) {
                        if (tri.tets[t2][f2].glued()) continue;
                        if (t2 == t && f2 == f) continue;
                        if (face_tokens(t2, f2) == target) {
                            glue_by_tokens(t, f, t2, f2, tmap);
                            goto next_face;
                        }
                    }
            next_face:;
            }
    }

    PrismBlockData out;
    // locate boundary faces by tokens
    auto find_face = [&](std::vector<int> want) {
        std::sort(want.begin(), want.end());
        for (int t = 0; t < tri.tet_count(); ++t)
            for (int f = 0; f < 4; ++f)
                if (!tri.tets[t][f].glued() && face_tokens(t, f) == want) return std::pair{t, f};
        fail(errc::internal, "expected boundary face not found");
    };
    out.bottom_face_1 = find_face({tok(A, 0), tok(B, 0), tok(C, 0)});
    out.bottom_face_2 = find_face({tok(A, 0), tok(D, 0), tok(C, 0)});
    out.bottom = {slot_of_token_edge(tt, tok(A, 0), tok(B, 0)),
                  slot_of_token_edge(tt, tok(B, 0), tok(C, 0)),
                  slot_of_token_edge(tt, tok(A, 0), tok(C, 0))};
    out.top = {slot_of_token_edge(tt, tok(A, 1), tok(B, 1)),
               slot_of_token_edge(tt, tok(B, 1), tok(C, 1)),
               slot_of_token_edge(tt, tok(A, 1), tok(C, 1))};
    out.tri = std::move(tri);

    out.tri.check_valid();
    require(out.tri.orientable(), errc::internal, "prism block not orientable");
    require(out.tri.euler_characteristic() == 0, errc::internal, "prism block euler check");
    auto comps = out.tri.boundary_components();
    require(comps.size() == 2, errc::internal, "prism block must have two boundary tori");
    for (const auto& c : comps)
        require(c.is_standard_torus(), errc::internal, "prism boundary is not standard");
    {
        // the two sides of each identified square must land in one class
        auto cls = out.tri.edge_classes();
        require(cls[slot_of_token_edge(tt, tok(A, 0), tok(B, 0))] ==
                    cls[slot_of_token_edge(tt, tok(D, 0), tok(C, 0))],
                errc::internal, "bottom a-edge classes disagree");
        require(cls[slot_of_token_edge(tt, tok(B, 0), tok(C, 0))] ==
                    cls[slot_of_token_edge(tt, tok(A, 0), tok(D, 0))],
                errc::internal, "bottom b-edge classes disagree");
    }
    return out;
}

struct CollaredBlock {
    Triangulation tri;
    LabelSlots top;
    int rep_a, rep_db, rep_dc;     // bottom circles: gamma1 = {a}, gamma2 = {db, dc}
    std::pair<int, int> face_a_w2;  // bottom face on the drill side of the a-edge
};

CollaredBlock build_collared_block() {
    auto block = build_prism_block();
    Triangulation& tri = block.tri;
    int rep_a = block.bottom[0], rep_b = block.bottom[1], rep_c = block.bottom[2];

    // stellar-subdivide both bottom faces (attach one tetrahedron by one face)
    auto stellar = [&](std::pair<int, int> bf) {
        auto [t, f] = bf;
        std::array<int, 3> verts{};
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) verts[k++] = v;
        int n = tri.add_tet();
        tri.glue(n, 3, t, f, perm_from_images(verts[0], verts[1], verts[2], f));
        return n;
    };
    int s1 = stellar(block.bottom_face_1);
    int s2 = stellar(block.bottom_face_2);
    require(tri.orientable(), errc::internal, "stellar attachment broke orientability");

    // flip the b-edge and then the c-edge away; the two fresh diagonals
    // together form a second class-a circle disjoint from the original a
    auto cls = tri.edge_classes();
    int fb = layer_across(tri, cls[rep_b]);
    int rep_db = fb * 6 + tet_edge_index(2, 3);
    cls = tri.edge_classes();
    int fc = layer_across(tri, cls[rep_c]);
    int rep_dc = fc * 6 + tet_edge_index(2, 3);

    CollaredBlock out;
    out.top = block.top;
    out.rep_a = rep_a;
    out.rep_db = rep_db;
    out.rep_dc = rep_dc;

    // the a-edge borders two boundary faces after the collar: one on each
    // stellar tetrahedron; the drill side is the one on s2
    cls = tri.edge_classes();
    auto aslots = boundary_slots_of_class(tri, cls, cls[rep_a]);
    require(aslots.size() == 2, errc::internal, "a-edge must border two faces after collaring");
    int found = 0;
    for (const auto& s : aslots) {
        require(s.tet == s1 || s.tet == s2, errc::internal,
                "a-edge should border the stellar tetrahedra");
        if (s.tet == s2) {
            out.face_a_w2 = {s.tet, s.face};
            found++;
        }
    }
    require(found == 1, errc::internal, "drill-side a-face not identified");
    out.tri = std::move(tri);
    return out;
}

}  // namespace

ProductBlock prism_block() {
    auto data = build_prism_block();
    return {std::move(data.tri), data.top, data.bottom};
}

DrilledBlock drilled_block() {
    CollaredBlock plus = build_collared_block();
    Triangulation tri = plus.tri;
    int off = append(tri, plus.tri);  // the mirror copy

    // bottom boundary faces of the plus copy, split into the two annuli cut
    // out by the circles {a} and {db, dc}
    auto cls = tri.edge_classes();
    std::set<int> circle_classes = {cls[plus.rep_a], cls[plus.rep_db], cls[plus.rep_dc]};
    // collect bottom-component boundary faces of the plus copy: all unglued
    // faces of tets < off except the top torus
    std::vector<std::pair<int, int>> bottom_faces;
    {
        auto comps = plus.tri.boundary_components();
        // the component containing face_a_w2 is the collared bottom
        for (const auto& c : comps) {
            bool has = std::find(c.faces.begin(), c.faces.end(), plus.face_a_w2) != c.faces.end();
            if (has) bottom_faces = c.faces;
        }
        require(bottom_faces.size() == 6, errc::internal,
                "collared bottom should have six faces");
    }
    // face adjacency inside the bottom: two faces are neighbours when they
    // share an edge class not on the cutting circles
    auto face_classes = [&](std::pair<int, int> tf) {
        std::set<int> out;
        auto [t, f] = tf;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                if (a == f || b == f) continue;
                out.insert(class_of_slot(cls, t, a, b));
            }
        return out;
    };
    std::vector<int> annulus(bottom_faces.size(), -1);
    for (int seed = 0, label = 0; seed < static_cast<int>(bottom_faces.size()); ++seed) {
        if (annulus[seed] >= 0) continue;
        annulus[seed] = label;
        std::vector<int> st = {seed};
        while (!st.empty()) {
            int i = st.back();
            st.pop_back();
            auto ci = face_classes(bottom_faces[i]);
            for (int j = 0; j < static_cast<int>(bottom_faces.size()); ++j) {
                if (annulus[j] >= 0) continue;
                auto cj = face_classes(bottom_faces[j]);
                bool adjacent = false;
                for (int c : ci)
                    if (!circle_classes.count(c) && cj.count(c)) adjacent = true;
                if (adjacent) {
                    annulus[j] = label;
                    st.push_back(j);
                }
            }
        }
        label++;
    }
    int drill_label = -1;
    for (int i = 0; i < static_cast<int>(bottom_faces.size()); ++i)
        if (bottom_faces[i] == plus.face_a_w2) drill_label = annulus[i];
    require(drill_label >= 0, errc::internal, "drill annulus not located");
    require(*std::max_element(annulus.begin(), annulus.end()) == 1, errc::internal,
            "bottom did not split into two annuli");

    // glue the non-drill annulus to its mirror; identity vertex maps
    int glued = 0;
    for (int i = 0; i < static_cast<int>(bottom_faces.size()); ++i) {
        if (annulus[i] == drill_label) continue;
        auto [t, f] = bottom_faces[i];
        Perm4 ident = Perm4::identity();
        tri.glue(t, f, t + off, f, ident);
        glued++;
    }
    require(glued == 3, errc::internal, "the kept annulus should have three faces");
    require(tri.orientable(), errc::internal, "doubling broke orientability");
    require(tri.euler_characteristic() == 0, errc::internal, "drilled block euler check");

    DrilledBlock out;
    out.top = plus.top;
    out.bottom = {plus.top[0] + off * 6, plus.top[1] + off * 6, plus.top[2] + off * 6};
    auto comps = tri.boundary_components();
    require(comps.size() == 3, errc::internal, "drilled block must have three boundary pieces");
    int standard = 0, drilled = 0;
    for (const auto& c : comps) {
        if (c.is_standard_torus()) {
            standard++;
        } else {
            require(c.is_torus(), errc::internal, "drilled boundary is not a torus");
            require(c.faces.size() == 6, errc::internal, "drilled boundary should have 6 faces");
            out.drill_faces = static_cast<int>(c.faces.size());
            drilled++;
        }
    }
    require(standard == 2 && drilled == 1, errc::internal,
            "drilled block boundary census is off");
    out.tri = std::move(tri);
    return out;
}

namespace {

// label-respecting gluing of two standard boundary tori given by label reps
void glue_labeled_tori(Triangulation& tri, const LabelSlots& la, const LabelSlots& lb) {
    auto cls = tri.edge_classes();
    auto faces_of = [&](const LabelSlots& l) {
        std::vector<std::pair<int, int>> faces;
        auto slots = boundary_slots_of_class(tri, cls, cls[l[0]]);
        for (const auto& s : slots) {
            std::pair<int, int> tf{s.tet, s.face};
            if (std::find(faces.begin(), faces.end(), tf) == faces.end()) faces.push_back(tf);
        }
        require(faces.size() == 2, errc::internal, "labeled torus should have two faces");
        return faces;
    };
    auto label_of_pair = [&](const LabelSlots& l, int t, int a, int b) {
        int c = class_of_slot(cls, t, a, b);
        for (int i = 0; i < 3; ++i)
            if (c == cls[l[i]]) return i;
        return -1;
    };
    // vertex permutation matching edge labels between two faces
    auto face_perm = [&](std::pair<int, int> fa, const LabelSlots& la_,
                         std::pair<int, int> fb, const LabelSlots& lb_) -> std::optional<Perm4> {
        auto [t1, f1] = fa;
        auto [t2, f2] = fb;
        std::array<int, 3> va{}, vb{};
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f1) va[k++] = v;
        k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f2) vb[k++] = v;
        // each vertex of a face is the intersection of its two incident edges
        std::array<int, 4> img{};
        img[f1] = f2;
        for (int i = 0; i < 3; ++i) {
            int x = va[i];
            // labels of the two face edges at x
            std::set<int> lx;
            for (int j = 0; j < 3; ++j)
                if (va[j] != x) lx.insert(label_of_pair(la_, t1, x, va[j]));
            if (lx.count(-1)) return std::nullopt;
            int match = -1;
            for (int y : vb) {
                std::set<int> ly;
                for (int j = 0; j < 3; ++j)
                    if (vb[j] != y) ly.insert(label_of_pair(lb_, t2, y, vb[j]));
                if (ly == lx) match = y;
            }
            if (match < 0) return std::nullopt;
            img[x] = match;
        }
        std::array<bool, 4> seen{};
        for (int v : img) {
            if (seen[v]) return std::nullopt;
            seen[v] = true;
        }
        return perm_from_images(img[0], img[1], img[2], img[3]);
    };

    auto fa = faces_of(la);
    auto fb = faces_of(lb);
    for (int assign = 0; assign < 2; ++assign) {
        auto b0 = fb[assign], b1 = fb[1 - assign];
        auto p0 = face_perm(fa[0], la, b0, lb);
        auto p1 = face_perm(fa[1], la, b1, lb);
        if (!p0 || !p1) continue;
        tri.glue(fa[0].first, fa[0].second, b0.first, b0.second, *p0);
        tri.glue(fa[1].first, fa[1].second, b1.first, b1.second, *p1);
        if (tri.orientable()) return;
        tri.unglue(fa[0].first, fa[0].second);
        tri.unglue(fa[1].first, fa[1].second);
    }
    fail(errc::internal, "no label-respecting orientable torus gluing found");
}

}  // namespace

TorusComplement torus_complement(int p, int q) {
    require(p >= 2 && q >= 2 && std::gcd(p, q) == 1, errc::unsupported,
            "torus complement needs coprime p, q >= 2");
    auto [u, v] = bezout_pair(p, q);
    require(static_cast<long>(p) * v - static_cast<long>(q) * u == 1, errc::internal,
            "bezout identity violated");

    LayeredTorus U = layered_solid_torus(p, u);
    LayeredTorus V = layered_solid_torus(q, v);
    DrilledBlock Q = drilled_block();

    Triangulation tri;
    int off_u = append(tri, U.tri);
    int off_q = append(tri, Q.tri);
    int off_v = append(tri, V.tri);

    auto shift = [](const LabelSlots& l, int off) {
        return LabelSlots{l[0] + off * 6, l[1] + off * 6, l[2] + off * 6};
    };
    glue_labeled_tori(tri, shift(U.labels, off_u), shift(Q.top, off_q));
    glue_labeled_tori(tri, shift(V.labels, off_v), shift(Q.bottom, off_q));

    tri.check_valid();
    require(tri.orientable(), errc::internal, "torus complement not orientable");
    require(tri.euler_characteristic() == 0, errc::internal, "torus complement euler check");
    auto comps = tri.boundary_components();
    require(comps.size() == 1 && comps[0].is_torus(), errc::internal,
            "torus complement must have one torus boundary");

    TorusComplement out;
    out.tri = std::move(tri);
    out.p = p;
    out.q = q;
    out.u = u;
    out.v = v;
    out.mu = U.meridian;
    out.nu = V.meridian;
    return out;
}

bool is_daisy_chain(const Graph& fpg) {
    int loops = 0;
    std::map<std::pair<int, int>, int> mult;
    for (auto [a, b] : fpg.edges) {
        if (a == b) {
            loops++;
            continue;
        }
        auto key = std::minmax(a, b);
        mult[{key.first, key.second}]++;
    }
    if (fpg.n == 1) return loops >= 1 && mult.empty();
    if (loops != 1) return false;
    // the simple support must be a path with every edge doubled
    std::vector<std::vector<int>> adj(fpg.n);
    for (auto& [e, m] : mult) {
        if (m != 2) return false;
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    int ends = 0;
    for (int v = 0; v < fpg.n; ++v) {
        if (adj[v].size() == 1)
            ends++;
        else if (adj[v].size() != 2)
            return false;
    }
    if (ends != 2) return false;
    // connected path over all vertices
    std::vector<char> vis(fpg.n, 0);
    std::vector<int> st = {0};
    vis[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int y : adj[x])
            if (!vis[y]) {
                vis[y] = 1;
                cnt++;
                st.push_back(y);
            }
    }
    return cnt == fpg.n;
}

FacePairingWidth face_pairing_width(const Triangulation& t) {
    FacePairingWidth out;
    out.graph = t.face_pairing_graph();
    std::vector<int> order(t.tet_count());
    std::iota(order.begin(), order.end(), 0);
    out.width = path_carving_width(out.graph, order);
    return out;
}

}  // namespace knotcarve