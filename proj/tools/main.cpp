// knotcarve: carving decompositions of knot diagrams, the induced sphere
// decompositions and multiple Heegaard splittings, and constant-width
// triangulations of torus-knot complements.
//
// Exit codes: 0 all checks pass, 1 validation/invariant failure,
// 2 usage/parse/io error, 3 exact-solver cap exceeded with --exact-only.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "knotcarve/error.hpp"
#include "knotcarve/export.hpp"
#include "knotcarve/families.hpp"
#include "knotcarve/json_io.hpp"
#include "knotcarve/layered.hpp"
#include "knotcarve/pd_code.hpp"
#include "knotcarve/pipeline.hpp"

namespace kc = knotcarve;
namespace fs = std::filesystem;

namespace {

struct CommonOpts {
    std::string pd;
    std::string input_file;
    std::string family;
    std::string format = "text";
    std::string out_dir;
    int exact_cap = 16;
    bool bond = false;
    bool exact_only = false;
    int threads = 1;
    unsigned long long seed = 1;
    int tw_bound = -1;
};

void add_diagram_inputs(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--pd", o.pd, "inline PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
    cmd->add_option("--in", o.input_file, "diagram file (PD text or knotcarve JSON)");
    cmd->add_option("--family", o.family,
                    "generated diagram, e.g. torus(3,2) pretzel(-2,3,7) sum(4) two-bridge(2,2)");
}

void add_pipeline_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--exact-cap", o.exact_cap, "vertex cap for the exact carving solver");
    cmd->add_flag("--exact-only", o.exact_only, "fail instead of falling back to the heuristic");
    cmd->add_option("--threads", o.threads, "worker threads");
    cmd->add_option("--out", o.out_dir, "directory for artifacts (default: stdout only)");
    cmd->add_option("--format", o.format, "output format: text|json|dot|svg|csv|md|pd");
}

kc::Diagram load_diagram(const CommonOpts& o) {
    if (!o.family.empty()) return kc::FamilySpec::parse(o.family).build();
    std::string text = o.pd;
    if (!o.input_file.empty()) {
        std::ifstream in(o.input_file);
        kc::require(in.good(), kc::errc::parse, "cannot open " + o.input_file);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    kc::require(!text.empty(), kc::errc::parse,
                "no diagram given; use --pd, --in or --family");
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return kc::diagram_from_json(nlohmann::json::parse(text));
    return kc::parse_pd(text);
}

void write_artifact(const CommonOpts& o, const std::string& name, const std::string& body) {
    if (o.out_dir.empty()) return;
    fs::create_directories(o.out_dir);
    std::ofstream out(fs::path(o.out_dir) / name);
    out << body;
}

void emit(const CommonOpts& o, const std::string& name, const std::string& body,
          bool to_stdout = true) {
    write_artifact(o, name, body);
    if (to_stdout && o.out_dir.empty()) std::cout << body;
}

int run_parse(const CommonOpts& o) {
    kc::Diagram d = load_diagram(o);
    if (o.format == "json")
        emit(o, "diagram.json", kc::to_json(d).dump(2) + "\n");
    else if (o.format == "dot")
        emit(o, "diagram.dot", kc::dot_graph(d));
    else if (o.format == "pd")
        emit(o, "diagram.pd", kc::emit_pd(d) + "\n");
    else
        std::cout << "valid diagram: " << d.crossing_count() << " crossings, "
                  << d.map.edge_count() << " edges, " << d.face_count() << " faces\n";
    return 0;
}

int run_gen(const CommonOpts& o, const kc::Diagram& d, const std::string& stem) {
    if (o.format == "json")
        emit(o, stem + ".json", kc::to_json(d).dump(2) + "\n");
    else
        emit(o, stem + ".pd", kc::emit_pd(d) + "\n");
    return 0;
}

int run_carve(const CommonOpts& o) {
    kc::Diagram d = load_diagram(o);
    auto g = kc::subdivide_to_simple(d);
    auto plain = g.to_graph();
    kc::CarvingDecomposition dec;
    bool exact = false;
    if (plain.n <= o.exact_cap) {
        auto res = kc::exact_carving_width(plain, o.bond, o.exact_cap, o.threads);
        dec = std::move(res.dec);
        exact = true;
    } else {
        kc::require(!o.exact_only, kc::errc::solver_cap,
                    "graph above the exact cap; rerun without --exact-only");
        auto order = g.sweep_order();
        dec = o.bond ? kc::heuristic_bond_carving(plain, &order)
                     : kc::heuristic_carving(plain, &order);
    }
    int width = kc::carving_width(plain, dec);
    write_artifact(o, "graph.json", kc::to_json(g).dump(2) + "\n");
    if (o.format == "dot")
        emit(o, "carving.dot", kc::dot_carving(plain, dec));
    else
        emit(o, "carving.json", kc::to_json(dec, plain).dump(2) + "\n", o.format == "json");
    auto bounds = kc::tw_bounds_from_cw(width, plain.max_degree());
    std::cout << (exact ? "exact" : "heuristic") << " carving width " << width << " ("
              << (kc::is_bond(plain, dec) ? "bond" : "not bond") << "), tree-width in ["
              << bounds.tw_lower << ", " << bounds.tw_upper << "]\n";
    return 0;
}

kc::PipelineOptions pipeline_opts(const CommonOpts& o) {
    kc::PipelineOptions p;
    p.exact_cap = o.exact_cap;
    p.exact_only = o.exact_only;
    p.threads = o.threads;
    return p;
}

int run_stage(const CommonOpts& o, const std::string& stage) {
    kc::Diagram d = load_diagram(o);
    auto res = kc::run_pipeline(d, pipeline_opts(o));
    auto plain = res.graph.to_graph();
    // artifacts first, verdicts after
    write_artifact(o, "graph.json", kc::to_json(res.graph).dump(2) + "\n");
    write_artifact(o, "carving.json", kc::to_json(res.carving, plain).dump(2) + "\n");
    write_artifact(o, "curves.json", kc::to_json(res.curves).dump(2) + "\n");
    if (stage == "realize") {
        if (o.format == "svg")
            emit(o, "curves.svg", kc::svg_curves(res.graph, res.curves));
        else
            emit(o, "curves.json", kc::to_json(res.curves).dump(2) + "\n",
                 o.format == "json");
        auto rep = kc::validate(res.curves, res.graph, res.carving);
        std::cout << "curves: " << res.curves.curves.size() << ", validation "
                  << (rep.ok ? "ok" : "FAILED") << "\n";
        return rep.ok ? 0 : 1;
    }
    write_artifact(o, "spheres.json", kc::to_json(res.spheres).dump(2) + "\n");
    if (stage == "spheres") {
        if (o.format == "svg")
            emit(o, "spheres.svg", kc::svg_spheres(res.graph, res.curves, res.spheres));
        else if (o.format == "json")
            emit(o, "spheres.json", kc::to_json(res.spheres).dump(2) + "\n");
        auto width = res.spheres.width_list();
        auto pruned = res.spheres.width_list_pruned();
        std::ostringstream line;
        line << "sphere cost " << res.spheres.cost() << ", width {";
        for (size_t i = 0; i < width.size(); ++i) line << (i ? "," : "") << width[i];
        line << "}, pruned width {";
        for (size_t i = 0; i < pruned.size(); ++i) line << (i ? "," : "") << pruned[i];
        line << "}";
        std::cout << line.str() << "\n";
        auto rep = kc::validate_spheres(res.spheres);
        std::cout << "sphere validation " << (rep.ok ? "ok" : "FAILED") << "\n";
        return rep.ok ? 0 : 1;
    }
    write_artifact(o, "splitting.json", kc::to_json(res.splitting).dump(2) + "\n");
    if (stage == "tube") {
        if (o.format == "json")
            emit(o, "splitting.json", kc::to_json(res.splitting).dump(2) + "\n");
        else if (o.format == "dot")
            emit(o, "components.dot", kc::dot_component_tree(res.spheres));
        std::cout << "splitting cost " << res.splitting.cost() << " (sphere cost "
                  << res.spheres.cost() << ")\n";
        auto rep = kc::validate_splitting(res.splitting, res.spheres);
        std::cout << "splitting validation " << (rep.ok ? "ok" : "FAILED") << "\n";
        return rep.ok ? 0 : 1;
    }
    // stage == pipeline/report
    kc::TheoremMainReport rep = res.report;
    if (o.tw_bound >= 0) {
        rep.k = o.tw_bound;
        rep.k_supplied = true;
        rep.ok_sphere = rep.sphere_cost <= 4 * rep.k + 4;
        rep.ok_splitting = rep.splitting_cost <= 8 * rep.k + 8;
    }
    write_artifact(o, "report.json", kc::to_json(rep).dump(2) + "\n");
    if (o.format == "md")
        emit(o, "report.md", rep.markdown());
    else if (o.format == "json")
        emit(o, "report.json", kc::to_json(rep).dump(2) + "\n");
    else
        std::cout << rep.text();
    return rep.all_ok() ? 0 : 1;
}

int run_triangulate(const CommonOpts& o, const std::string& what, int p, int q) {
    kc::Triangulation tri;
    std::ostringstream head;
    if (what == "complement") {
        auto comp = kc::torus_complement(p, q);
        tri = std::move(comp.tri);
        head << "torus complement X(" << p << "," << q << "): bezout (u,v)=(" << comp.u << ","
             << comp.v << "), meridian triples (" << comp.mu.a << "," << comp.mu.b << ","
             << comp.mu.c << ") and (" << comp.nu.a << "," << comp.nu.b << "," << comp.nu.c
             << ")";
    } else if (what == "lst") {
        auto lst = kc::layered_solid_torus(p, q);
        tri = std::move(lst.tri);
        head << "layered solid torus of slope " << p << "/" << q << ": meridian triple ("
             << lst.meridian.a << "," << lst.meridian.b << "," << lst.meridian.c << ")";
    } else if (what == "prism") {
        tri = kc::prism_block().tri;
        head << "prism block T x [-1,1]";
    } else if (what == "drilled") {
        auto blk = kc::drilled_block();
        head << "drilled block with " << blk.drill_faces << " tube boundary faces";
        tri = std::move(blk.tri);
    } else {
        kc::fail(kc::errc::parse, "unknown --what: " + what);
    }
    auto fpw = kc::face_pairing_width(tri);
    write_artifact(o, "triangulation.json", kc::to_json(tri).dump(2) + "\n");
    write_artifact(o, "triangulation.txt", tri.interchange_text());
    write_artifact(o, "face_pairing.dot", kc::dot_face_pairing(fpw.graph));
    if (o.format == "json")
        emit(o, "triangulation.json", kc::to_json(tri).dump(2) + "\n");
    else if (o.format == "dot")
        emit(o, "face_pairing.dot", kc::dot_face_pairing(fpw.graph));
    else if (o.out_dir.empty())
        std::cout << tri.interchange_text();
    std::cout << head.str() << "\n"
              << tri.tet_count() << " tetrahedra, path-carving width " << fpw.width << "\n";
    return 0;
}

struct GridRow {
    std::string name;
    bool ok = false;
    std::string cells;
};

int run_grid(const CommonOpts& o, const std::string& family, int pmax, int qmax, int nmax,
             int count) {
    std::vector<std::function<GridRow()>> jobs;
    std::string header;
    if (family == "torus") {
        header = "name,crossings,cw,exact,sphere_cost,splitting_cost,k,ok";
        for (int p = 2; p <= pmax; ++p)
            for (int q = 2; q <= qmax; ++q) {
                if (std::gcd(p, q) != 1 || q > p) continue;
                jobs.push_back([=]() {
                    GridRow row;
                    row.name = "torus(" + std::to_string(p) + "," + std::to_string(q) + ")";
                    auto d = kc::torus_diagram(p, q);
                    auto res = kc::run_pipeline(d, pipeline_opts(o));
                    std::ostringstream c;
                    c << d.crossing_count() << ',' << res.carving_width_used << ','
                      << (res.carving_exact ? "exact" : "heur") << ',' << res.spheres.cost()
                      << ',' << res.splitting.cost() << ',' << res.report.k << ','
                      << (res.report.all_ok() ? "pass" : "FAIL");
                    row.cells = c.str();
                    row.ok = res.report.all_ok();
                    return row;
                });
            }
    } else if (family == "triangulation") {
        header = "name,tets,face_pairing_width,bezout_ok";
        for (int p = 3; p <= pmax; ++p)
            for (int q = 2; q < p; ++q) {
                if (std::gcd(p, q) != 1) continue;
                jobs.push_back([=]() {
                    GridRow row;
                    row.name = "X(" + std::to_string(p) + "," + std::to_string(q) + ")";
                    auto comp = kc::torus_complement(p, q);
                    auto fpw = kc::face_pairing_width(comp.tri);
                    bool bez = static_cast<long>(p) * comp.v - static_cast<long>(q) * comp.u == 1;
                    std::ostringstream c;
                    c << comp.tri.tet_count() << ',' << fpw.width << ','
                      << (bez ? "pass" : "FAIL");
                    row.cells = c.str();
                    row.ok = bez;
                    return row;
                });
            }
    } else if (family == "sum") {
        header = "name,crossings,heuristic_cw";
        for (int n = 1; n <= nmax; ++n) {
            jobs.push_back([=]() {
                GridRow row;
                row.name = "sum(" + std::to_string(n) + ")";
                auto d = kc::trefoil_connect_sum(n);
                auto g = kc::subdivide_to_simple(d);
                auto plain = g.to_graph();
                auto order = g.sweep_order();
                auto dec = kc::heuristic_carving(plain, &order);
                std::ostringstream c;
                c << d.crossing_count() << ',' << kc::carving_width(plain, dec);
                row.cells = c.str();
                row.ok = true;
                return row;
            });
        }
    } else if (family == "random") {
        header = "name,crossings,cw,sphere_cost,splitting_cost,ok";
        for (int i = 0; i < count; ++i) {
            unsigned long long seed = o.seed + static_cast<unsigned long long>(i);
            jobs.push_back([=]() {
                GridRow row;
                row.name = "random(" + std::to_string(seed) + ")";
                auto d = kc::random_knot_diagram(seed);
                auto res = kc::run_pipeline(d, pipeline_opts(o));
                std::ostringstream c;
                c << d.crossing_count() << ',' << res.carving_width_used << ','
                  << res.spheres.cost() << ',' << res.splitting.cost() << ','
                  << (res.report.all_ok() ? "pass" : "FAIL");
                row.cells = c.str();
                row.ok = res.report.all_ok();
                return row;
            });
        }
    } else {
        kc::fail(kc::errc::parse, "unknown grid family: " + family);
    }

    // worker pool; rows assembled in submission order
    std::vector<GridRow> rows(jobs.size());
    if (o.threads <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) rows[i] = jobs[i]();
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < o.threads; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= jobs.size()) return;
                    rows[i] = jobs[i]();
                }
            });
        for (auto& th : pool) th.join();
    }

    std::ostringstream csv, md;
    csv << header << "\n";
    md << "| " << header << " |\n|";
    for (size_t i = 0; i < std::count(header.begin(), header.end(), ',') + 1u; ++i) md << "---|";
    md << "\n";
    bool all_ok = true;
    for (const auto& row : rows) {
        csv << row.name << ',' << row.cells << "\n";
        std::string cells = row.cells;
        for (char& ch : cells)
            if (ch == ',') ch = '|';
        md << "| " << row.name << " | " << cells << " |\n";
        all_ok = all_ok && row.ok;
    }
    write_artifact(o, "grid.csv", csv.str());
    write_artifact(o, "grid.md", md.str());
    if (o.format == "md")
        emit(o, "grid.md", md.str(), o.out_dir.empty());
    else
        emit(o, "grid.csv", csv.str(), o.out_dir.empty());
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"carving decompositions, sphere decompositions and multiple Heegaard "
                 "splittings of knot diagrams"};
    app.require_subcommand(1);
    CommonOpts o;
    app.add_option("--seed", o.seed, "seed for randomized corpora");

    auto* parse = app.add_subcommand("parse", "parse and validate a diagram");
    add_diagram_inputs(parse, o);
    add_pipeline_opts(parse, o);

    int gp = 3, gq = 2, ga = -2, gb = 3, gc = 7, gn = 2;
    std::vector<int> gcf = {2, 2};
    auto* gtorus = app.add_subcommand("gen-torus", "emit the standard T(p,q) diagram");
    gtorus->add_option("p", gp)->required();
    gtorus->add_option("q", gq)->required();
    add_pipeline_opts(gtorus, o);
    auto* gpretzel = app.add_subcommand("gen-pretzel", "emit the pretzel P(a,b,c) diagram");
    gpretzel->add_option("a", ga)->required();
    gpretzel->add_option("b", gb)->required();
    gpretzel->add_option("c", gc)->required();
    add_pipeline_opts(gpretzel, o);
    auto* gsum = app.add_subcommand("gen-sum", "emit the n-fold trefoil connect sum");
    gsum->add_option("n", gn)->required();
    add_pipeline_opts(gsum, o);
    auto* gtb = app.add_subcommand("gen-two-bridge", "emit a two-bridge plat diagram");
    gtb->add_option("cf", gcf, "continued fraction entries")->required();
    add_pipeline_opts(gtb, o);

    auto* carve = app.add_subcommand("carve", "carving decomposition and width bounds");
    add_diagram_inputs(carve, o);
    add_pipeline_opts(carve, o);
    carve->add_flag("--bond", o.bond, "restrict to bond decompositions");

    auto* realize = app.add_subcommand("realize", "realize the carving as disjoint curves");
    add_diagram_inputs(realize, o);
    add_pipeline_opts(realize, o);
    auto* spheres = app.add_subcommand("spheres", "sphere-decomposition from the carving");
    add_diagram_inputs(spheres, o);
    add_pipeline_opts(spheres, o);
    auto* tubecmd = app.add_subcommand("tube", "multiple Heegaard splitting by tubing");
    add_diagram_inputs(tubecmd, o);
    add_pipeline_opts(tubecmd, o);

    auto* report = app.add_subcommand("report", "full pipeline and the bound report");
    add_diagram_inputs(report, o);
    add_pipeline_opts(report, o);
    report->add_option("--tw-bound", o.tw_bound, "use this tree-width bound k instead");

    auto* pipeline = app.add_subcommand("pipeline", "alias of report with all artifacts");
    add_diagram_inputs(pipeline, o);
    add_pipeline_opts(pipeline, o);
    pipeline->add_option("--tw-bound", o.tw_bound, "use this tree-width bound k instead");

    std::string what = "complement";
    int tp = 3, tq = 2;
    auto* tri = app.add_subcommand("triangulate", "layered triangulations of torus knots");
    tri->add_option("p", tp)->required();
    tri->add_option("q", tq)->required();
    tri->add_option("--what", what, "complement|lst|prism|drilled");
    add_pipeline_opts(tri, o);

    std::string gfamily = "torus";
    int pmax = 9, qmax = 9, nmax = 20, count = 20;
    auto* grid = app.add_subcommand("grid", "batch tables over a parameter grid");
    grid->add_option("--family", gfamily, "torus|triangulation|sum|random");
    grid->add_option("--pmax", pmax);
    grid->add_option("--qmax", qmax);
    grid->add_option("--nmax", nmax);
    grid->add_option("--count", count);
    add_pipeline_opts(grid, o);

    auto* lower = app.add_subcommand("lower-bound", "tree-width lower bound for T(p,q)");
    int lp = 9, lq = 7;
    lower->add_option("p", lp)->required();
    lower->add_option("q", lq)->required();
    add_pipeline_opts(lower, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*parse) return run_parse(o);
        if (*gtorus) return run_gen(o, kc::torus_diagram(gp, gq), "torus");
        if (*gpretzel) return run_gen(o, kc::pretzel_diagram(ga, gb, gc).first, "pretzel");
        if (*gsum) return run_gen(o, kc::trefoil_connect_sum(gn), "sum");
        if (*gtb) return run_gen(o, kc::two_bridge_diagram(gcf), "two_bridge");
        if (*carve) return run_carve(o);
        if (*realize) return run_stage(o, "realize");
        if (*spheres) return run_stage(o, "spheres");
        if (*tubecmd) return run_stage(o, "tube");
        if (*report || *pipeline) return run_stage(o, "report");
        if (*tri) return run_triangulate(o, what, tp, tq);
        if (*grid) return run_grid(o, gfamily, pmax, qmax, nmax, count);
        if (*lower) {
            auto r = kc::tw_lower_bound_report(lp, lq);
            std::cout << r.text();
            std::cout << "tw_lower_bound = " << r.tw_lower << "\n";
            return 0;
        }
    } catch (const kc::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind) {
            case kc::errc::solver_cap:
                return 3;
            case kc::errc::parse:
                return 2;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
