#include "knotcarve/pipeline.hpp"

#include <algorithm>

#include "knotcarve/error.hpp"

namespace knotcarve {

PipelineResult run_pipeline(const Diagram& d, const PipelineOptions& opts) {
    d.validate();
    PipelineResult out;
    out.graph = subdivide_to_simple(d);
    Graph plain = out.graph.to_graph();
    require(plain.n >= 3, errc::unsupported, "pipeline needs at least three graph vertices");
    require(plain.biconnected(), errc::unsupported,
            "pipeline needs a 2-connected diagram graph (no nugatory crossings); "
            "no bond carving exists otherwise");

    auto order = out.graph.sweep_order();
    if (plain.n <= opts.exact_cap) {
        auto exact = exact_carving_width(plain, /*bond_only=*/true, opts.exact_cap, opts.threads);
        out.carving = std::move(exact.dec);
        out.carving_exact = true;
        out.carving_width_used = exact.width;
    } else {
        require(!opts.exact_only, errc::solver_cap,
                "graph has " + std::to_string(plain.n) +
                    " vertices, above the exact cap; rerun without --exact-only");
        out.carving = heuristic_bond_carving(plain, &order);
        out.carving_exact = false;
        out.carving_width_used = carving_width(plain, out.carving);
    }

    out.curves = realize(out.graph, out.carving);
    {
        auto rep = validate(out.curves, out.graph, out.carving);
        require(rep.ok, errc::internal,
                "curve family failed validation: " +
                    (rep.failures.empty() ? std::string("?") : rep.failures.front()));
    }
    out.spheres = spheres_from_carving(d, out.graph, out.carving, out.curves);
    out.splitting = tube(out.spheres);
    {
        auto rep = validate_splitting(out.splitting, out.spheres);
        require(rep.ok, errc::internal,
                "splitting failed validation: " +
                    (rep.failures.empty() ? std::string("?") : rep.failures.front()));
    }

    TheoremMainReport& r = out.report;
    r.cw_used = out.carving_width_used;
    r.cw_exact = out.carving_exact;
    r.max_degree = plain.max_degree();
    auto bounds = tw_bounds_from_cw(r.cw_used, r.max_degree);
    r.tw_lower = bounds.tw_lower;
    r.tw_upper = bounds.tw_upper;
    r.k = bounds.tw_upper;
    r.sphere_cost = out.spheres.cost();
    r.sphere_width = out.spheres.width_list();
    r.splitting_cost = out.splitting.cost();
    r.ok_sphere = r.sphere_cost <= 4 * r.k + 4;
    r.ok_splitting = r.splitting_cost <= 8 * r.k + 8;
    r.ok_chain = r.sphere_cost <= r.cw_used && r.splitting_cost <= 2 * r.sphere_cost;
    return out;
}

TheoremMainReport theorem_main_report(const Diagram& d, int exact_cap, int tw_bound) {
    PipelineOptions opts;
    opts.exact_cap = exact_cap;
    auto res = run_pipeline(d, opts);
    TheoremMainReport r = res.report;
    if (tw_bound >= 0) {
        r.k = tw_bound;
        r.k_supplied = true;
        r.ok_sphere = r.sphere_cost <= 4 * r.k + 4;
        r.ok_splitting = r.splitting_cost <= 8 * r.k + 8;
    }
    return r;
}

}  // namespace knotcarve
