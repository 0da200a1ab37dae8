// Acceptance suite: one check per shipped claim, each printing a single
// [PASS]/[FAIL] line.  Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "knotcarve/families.hpp"
#include "knotcarve/layered.hpp"
#include "knotcarve/pd_code.hpp"
#include "knotcarve/pipeline.hpp"
#include "oracles.hpp"

using namespace knotcarve;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void verdict(int criterion, bool ok, const std::string& what) {
    std::printf("[%s] criterion %-2d %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
    if (!ok) failures++;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Diagram> corpus() {
    std::vector<Diagram> out;
    out.push_back(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));            // trefoil
    out.push_back(parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,2] X[2,7,3,8]"));  // figure-8
    for (int p = 2; p <= 5; ++p)
        for (int q = 2; q <= 5; ++q)
            if (p != q && std::gcd(p, q) == 1) out.push_back(torus_diagram(p, q));
    out.push_back(pretzel_diagram(-2, 3, 7).first);
    out.push_back(pretzel_diagram(1, 1, 1).first);
    out.push_back(pretzel_diagram(3, 3, 1).first);
    for (int n = 1; n <= 5; ++n) out.push_back(trefoil_connect_sum(n));
    for (int i = 0; i < 20; ++i) out.push_back(random_knot_diagram(7100 + i));
    return out;
}

void criterion_1_pretzel() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream note;
    try {
        auto [d, sd] = pretzel_diagram(-2, 3, 7);
        ok = ok && sd.width_list() == std::vector<int>{4, 4, 4};
        auto mhs = tube(sd);
        ok = ok && mhs.cost() == 8;
        ok = ok && validate_spheres(sd).ok && validate_splitting(mhs, sd).ok;
        double dt = seconds_since(t0);
        ok = ok && dt < 1.0;
        note << "pretzel P(-2,3,7): width {4,4,4}, tubed cost 8, " << dt << " s";
    } catch (const std::exception& e) {
        ok = false;
        note << "exception: " << e.what();
    }
    verdict(1, ok, note.str());
}

void criterion_2_bridge() {
    bool ok = true;
    std::ostringstream note;
    for (int b : {1, 2, 3, 5}) {
        auto [d, sd] = bridge_sphere_decomposition(b);
        ok = ok && sd.width_list() == std::vector<int>{2 * b};
        auto mhs = tube(sd);
        ok = ok && mhs.cost() == 2 * b;
    }
    note << "bridge templates b in {1,2,3,5}: width {2b}, splitting cost 2b";
    verdict(2, ok, note.str());
}

struct CorpusRun {
    std::vector<PipelineResult> results;
    bool ran_ok = true;
    std::string err;
};

CorpusRun run_corpus() {
    CorpusRun out;
    try {
        for (const auto& d : corpus()) out.results.push_back(run_pipeline(d));
    } catch (const std::exception& e) {
        out.ran_ok = false;
        out.err = e.what();
    }
    return out;
}

void criteria_3_4_5_11(const CorpusRun& run) {
    if (!run.ran_ok) {
        verdict(3, false, "corpus pipeline failed: " + run.err);
        verdict(4, false, "corpus pipeline failed");
        verdict(5, false, "corpus pipeline failed");
        verdict(11, false, "corpus pipeline failed");
        return;
    }
    int n = static_cast<int>(run.results.size());
    int v3 = 0, v4 = 0, v5 = 0, v11 = 0;
    for (const auto& res : run.results) {
        if (!(res.spheres.cost() <= res.carving_width_used)) v3++;

        bool tubing_ok = res.splitting.cost() <= 2 * res.spheres.cost();
        for (const auto& t : res.splitting.thick) {
            if (t.kind != MultipleHeegaardSplitting::ThickKind::tube) continue;
            int want = res.spheres.spheres[t.tube_a].weight +
                       res.spheres.spheres[t.tube_b].weight;
            if (t.weight != want) tubing_ok = false;
        }
        if (!tubing_ok) v4++;

        int k = res.report.k;
        if (!(res.spheres.cost() <= 4 * k + 4 && res.splitting.cost() <= 8 * k + 8)) v5++;

        int L = res.graph.map.vertex_count();
        int balls = 0, pants = 0;
        for (const auto& c : res.spheres.components) (c.is_ball ? balls : pants)++;
        bool census = balls == L && pants == L - 2 &&
                      static_cast<int>(res.spheres.spheres.size()) == 2 * L - 3 &&
                      static_cast<int>(res.splitting.thick.size()) == 2 * L - 2;
        bool weights_even = true;
        for (const auto& s : res.spheres.spheres)
            if (s.weight <= 0 || s.weight % 2 != 0) weights_even = false;
        bool laminar = validate(res.curves, res.graph, res.carving).ok;
        if (!(census && weights_even && laminar)) v11++;
    }
    std::ostringstream n3, n4, n5, n11;
    n3 << "Lemma-Sphere chain on " << n << " corpus diagrams: sphere cost <= carving width, "
       << v3 << " violations";
    n4 << "Lemma-Tubing chain: splitting cost <= 2x sphere cost, pants tubes weigh u+v, "
       << v4 << " violations";
    n5 << "main-theorem bounds with k = tw upper bound: cost <= 4k+4 and <= 8k+8, " << v5
       << " violations";
    n11 << "censuses #balls=L #pants=L-2 #spheres=2L-3 #thick=2L-2, even weights, laminar, "
        << v11 << " violations";
    verdict(3, v3 == 0, n3.str());
    verdict(4, v4 == 0, n4.str());
    verdict(5, v5 == 0, n5.str());
    verdict(11, v11 == 0, n11.str());
}

void criteria_6_7_census() {
    auto t0 = Clock::now();
    int checked = 0, bond_checked = 0;
    int v6 = 0, v7 = 0;
    std::vector<std::string> tw_witnesses;
    for (int n = 1; n <= 7; ++n) {
        auto census = connected_graph_census(n);
        for (const auto& g : census) {
            int exact = exact_carving_width(g, false, 8).width;
            int brute = oracles::brute_carving_width(g);
            if (exact != brute) v6++;
            checked++;
            if (n >= 3 && !g.has_bridge() && g.biconnected()) {
                int bond = exact_carving_width(g, true, 8).width;
                if (bond != exact) v6++;
                bond_checked++;
            }
            // Theorem CW sandwich against the brute-force tree-width
            if (exact >= 1 && g.max_degree() >= 1) {
                auto bounds = tw_bounds_from_cw(exact, g.max_degree());
                int tw = oracles::brute_tree_width(g);
                if (!(bounds.tw_lower <= tw && tw <= bounds.tw_upper)) {
                    v7++;
                    std::ostringstream w;
                    w << "n=" << n << " edges=" << g.edge_count() << ": tw=" << tw
                      << " outside [" << bounds.tw_lower << "," << bounds.tw_upper << "]";
                    tw_witnesses.push_back(w.str());
                }
            }
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream n6;
    n6 << "exact solver vs brute force on " << checked << " graphs (" << bond_checked
       << " bond-checked), " << v6 << " violations, " << dt << " s";
    verdict(6, v6 == 0 && dt < 600.0, n6.str());
    std::ostringstream n7;
    n7 << "Theorem-CW sandwich on the same census: " << v7 << " violations";
    for (const auto& w : tw_witnesses) n7 << "; " << w;
    if (v7 == 1 && tw_witnesses.size() == 1 && tw_witnesses[0].find("n=2") == 0)
        n7 << " [the single-edge graph: cw = tw = 1, so the quoted lower inequality"
              " 2/3(tw+1) <= cw fails on this one boundary case]";
    verdict(7, v7 == 0, n7.str());
}

void criterion_8_plateau() {
    bool ok = true;
    int base = -1;
    for (int n = 2; n <= 20; ++n) {
        auto g = subdivide_to_simple(trefoil_connect_sum(n));
        auto plain = g.to_graph();
        auto order = g.sweep_order();
        int w = carving_width(plain, heuristic_carving(plain, &order));
        if (base < 0) base = w;
        if (w != base) ok = false;
    }
    std::ostringstream note;
    note << "heuristic width of trefoil sums constant at " << base << " for n in [2,20]";
    verdict(8, ok, note.str());
}

void criterion_9_torus_triangulations() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream note;
    int width_const = -1;
    try {
        for (int p = 3; p <= 30; ++p)
            for (int q = 2; q < p; ++q) {
                if (std::gcd(p, q) != 1) continue;
                auto comp = torus_complement(p, q);
                int w = face_pairing_width(comp.tri).width;
                if (width_const < 0) width_const = w;
                if (w != width_const) ok = false;
                if (static_cast<long>(p) * comp.v - static_cast<long>(q) * comp.u != 1)
                    ok = false;
            }
        for (int p = 2; p <= 30; ++p)
            for (int u = 1; u < p; ++u) {
                if (std::gcd(p, u) != 1) continue;
                auto lst = layered_solid_torus(p, u);
                if (!is_daisy_chain(lst.tri.face_pairing_graph())) ok = false;
                if (!(lst.meridian.a == p && lst.meridian.b == u &&
                      lst.meridian.c == p + u))
                    ok = false;
            }
    } catch (const std::exception& e) {
        ok = false;
        note << "exception: " << e.what() << "; ";
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 60.0;
    note << "complement face-pairing width constant at " << width_const
         << " over coprime 2<=q<p<=30, daisy chains, exact slopes and bezout, " << dt << " s";
    verdict(9, ok, note.str());
}

void criterion_10_lower_bounds() {
    bool ok = tw_lower_bound_report(101, 100).tw_lower == 24 &&
              tw_lower_bound_report(9, 7).tw_lower == 1;
    verdict(10, ok, "lower-bound table: T(101,100) -> 24 and T(9,7) -> 1");
}

}  // namespace

int main() {
    criterion_1_pretzel();
    criterion_2_bridge();
    auto run = run_corpus();
    criteria_3_4_5_11(run);
    criteria_6_7_census();
    criterion_8_plateau();
    criterion_9_torus_triangulations();
    criterion_10_lower_bounds();
    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
