#include <doctest.h>

#include <numeric>

#include "knotcarve/error.hpp"
#include "knotcarve/layered.hpp"

using namespace knotcarve;

TEST_CASE("gluings are involutive with inverse permutations") {
    auto lst = layered_solid_torus(5, 2);
    lst.tri.check_valid();  // throws if the involution breaks
    for (int t = 0; t < lst.tri.tet_count(); ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = lst.tri.tets[t][f];
            if (!g.glued()) continue;
            const auto& back = lst.tri.tets[g.tet][g.perm[f]];
            CHECK(back.tet == t);
            CHECK(back.perm.after(g.perm) == Perm4::identity());
        }
}

TEST_CASE("layered solid tori: meridian triples follow (p, u, p+u)") {
    auto a = layered_solid_torus(3, 1);
    CHECK(a.meridian.a == 3);
    CHECK(a.meridian.b == 1);
    CHECK(a.meridian.c == 4);
    auto b = layered_solid_torus(2, 1);
    CHECK(b.meridian.c == 3);
    CHECK(b.tri.tet_count() == 1);  // the minimal fold
    auto c = layered_solid_torus(5, 2);
    CHECK(c.meridian.a == 5);
    CHECK(c.meridian.b == 2);
    CHECK(c.meridian.c == 7);
    // tetrahedron count = sum of the continued fraction quotients of 5/2,
    // minus one: [2;2] gives 2+2-1 = 3
    CHECK(c.tri.tet_count() == 3);
}

TEST_CASE("layered solid torus boundaries are standard one-vertex tori") {
    for (auto [p, u] : {std::pair{2, 1}, {3, 1}, {3, 2}, {7, 3}, {13, 5}}) {
        auto lst = layered_solid_torus(p, u);
        auto comps = lst.tri.boundary_components();
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].is_standard_torus());
        CHECK(lst.tri.orientable());
        CHECK(lst.tri.euler_characteristic() == 0);
    }
}

TEST_CASE("slope invariants over all coprime pairs up to 30") {
    for (int p = 2; p <= 30; ++p)
        for (int u = 1; u < p; ++u) {
            if (std::gcd(p, u) != 1) continue;
            auto lst = layered_solid_torus(p, u);
            CHECK(lst.meridian.farey());
            CHECK(std::gcd(lst.meridian.a, lst.meridian.b) == 1);
            CHECK(is_daisy_chain(lst.tri.face_pairing_graph()));
            auto fpw = face_pairing_width(lst.tri);
            CHECK(fpw.width <= 4);
        }
}

TEST_CASE("prism block: six tetrahedra, two standard torus boundaries") {
    auto blk = prism_block();
    CHECK(blk.tri.tet_count() == 6);
    auto comps = blk.tri.boundary_components();
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) CHECK(c.is_standard_torus());
    CHECK(blk.tri.orientable());
    CHECK(blk.tri.count_vertices() == 2);
    auto fpg = blk.tri.face_pairing_graph();
    CHECK(fpg.n == 6);
    Graph g = fpg;
    CHECK(g.connected());
}

TEST_CASE("drilled block: constant size, three boundary pieces, labels kept") {
    auto q = drilled_block();
    CHECK(q.tri.tet_count() == 20);  // the frozen constant
    auto comps = q.tri.boundary_components();
    REQUIRE(comps.size() == 3);
    int standard = 0, torus = 0;
    for (const auto& c : comps) {
        if (c.is_standard_torus())
            standard++;
        else if (c.is_torus())
            torus++;
    }
    CHECK(standard == 2);
    CHECK(torus == 1);
    CHECK(q.drill_faces == 6);
    CHECK(q.tri.orientable());
    CHECK(q.tri.euler_characteristic() == 0);
}

TEST_CASE("bezout pairs: pv - qu = 1 with the least u") {
    CHECK(bezout_pair(9, 7) == std::pair{5, 4});
    CHECK(bezout_pair(3, 2) == std::pair{1, 1});
    CHECK(bezout_pair(5, 3) == std::pair{3, 2});
    for (auto [p, q] : {std::pair{9, 7}, {3, 2}, {5, 3}, {30, 29}}) {
        auto [u, v] = bezout_pair(p, q);
        CHECK(static_cast<long>(p) * v - static_cast<long>(q) * u == 1);
        CHECK(0 < u);
        CHECK(u < p);
    }
}

TEST_CASE("torus complements assemble with one torus boundary") {
    for (auto [p, q] : {std::pair{3, 2}, {5, 2}, {9, 7}}) {
        auto comp = torus_complement(p, q);
        auto comps = comp.tri.boundary_components();
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].is_torus());
        CHECK(comp.tri.orientable());
        CHECK(comp.tri.euler_characteristic() == 0);
        CHECK(comp.mu.farey());
        CHECK(comp.nu.farey());
    }
    CHECK_THROWS_AS(torus_complement(4, 2), error);
}

TEST_CASE("face pairing width stays constant across the (p,q) grid") {
    int first = -1;
    for (int p = 3; p <= 12; ++p)
        for (int q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto comp = torus_complement(p, q);
            int w = face_pairing_width(comp.tri).width;
            if (first < 0) first = w;
            CHECK(w == first);
        }
}

TEST_CASE("prism block path width is a small constant") {
    auto blk = prism_block();
    CHECK(face_pairing_width(blk.tri).width <= 4 * blk.tri.tet_count());
}

TEST_CASE("daisy chain recognizer") {
    Graph single;
    single.n = 1;
    single.add_edge(0, 0);
    CHECK(is_daisy_chain(single));

    Graph chain;
    chain.n = 3;
    chain.add_edge(0, 0);
    chain.add_edge(0, 1);
    chain.add_edge(0, 1);
    chain.add_edge(1, 2);
    chain.add_edge(1, 2);
    CHECK(is_daisy_chain(chain));

    Graph not_doubled = chain;
    not_doubled.edges.pop_back();
    CHECK_FALSE(is_daisy_chain(not_doubled));

    Graph two_loops = chain;
    two_loops.add_edge(2, 2);
    CHECK_FALSE(is_daisy_chain(two_loops));
}

TEST_CASE("interchange text lists one line per tetrahedron") {
    auto lst = layered_solid_torus(3, 1);
    auto text = lst.tri.interchange_text();
    CHECK(std::count(text.begin(), text.end(), '\n') == lst.tri.tet_count());
    CHECK(text.find("bdry") != std::string::npos);
}

TEST_CASE("layered_solid_torus rejects bad parameters") {
    CHECK_THROWS_AS(layered_solid_torus(4, 2), error);
    CHECK_THROWS_AS(layered_solid_torus(5, 0), error);
    // u is reduced mod p first
    auto lst = layered_solid_torus(5, 7);  // same as (5,2)
    CHECK(lst.meridian.b == 2);
}
