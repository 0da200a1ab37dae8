#include "knotcarve/spheres.hpp"

#include <algorithm>
#include <map>

#include "knotcarve/error.hpp"

namespace knotcarve {

int SphereDecomposition::cost() const {
    int c = 0;
    for (const auto& s : spheres) c = std::max(c, s.weight);
    return c;
}

std::vector<int> SphereDecomposition::width_list() const {
    std::vector<int> w;
    for (const auto& s : spheres) w.push_back(s.weight);
    std::sort(w.rbegin(), w.rend());
    return w;
}

std::vector<int> SphereDecomposition::width_list_pruned() const {
    std::vector<int> w;
    for (const auto& s : spheres)
        if (!s.around_subdivision) w.push_back(s.weight);
    std::sort(w.rbegin(), w.rend());
    return w;
}

ComponentClassification classify_component(const SphereDecomposition& sd, int comp) {
    ComponentClassification out;
    const auto& c = sd.components[comp];
    size_t nb = c.spheres.size();
    if (nb == 1) {
        out.is_ball = true;
        out.bridges = c.bridges;
        if (c.bridges <= 0) out.issues.push_back("ball with no bridge recorded");
        // in a ball every trivial strand is a bridge with both ends on the sphere
        if (2 * c.bridges != sd.spheres[c.spheres[0]].weight)
            out.issues.push_back("ball bridge count does not match its sphere weight");
    } else if (nb == 3) {
        out.is_pants = true;
        out.strand_count = static_cast<int>(c.strands.size());
        for (const auto& s : c.strands) {
            bool on_boundary =
                std::count(c.spheres.begin(), c.spheres.end(), s.sphere_a) == 1 &&
                std::count(c.spheres.begin(), c.spheres.end(), s.sphere_b) == 1;
            if (!on_boundary) out.issues.push_back("strand attached to a foreign sphere");
            if (s.sphere_a != s.sphere_b) continue;  // joins distinct circles: essential
            if (!s.essential) {
                out.flat_ok = false;
                out.issues.push_back("inessential strand returning to one boundary sphere");
            }
        }
        // consistency of strand ends with the sphere weights
        for (int sp : c.spheres) {
            int ends = 0;
            for (const auto& s : c.strands) {
                if (s.sphere_a == sp) ends++;
                if (s.sphere_b == sp) ends++;
            }
            if (ends != sd.spheres[sp].weight)
                out.issues.push_back("strand ends do not account for sphere weight");
        }
    } else {
        out.issues.push_back("component bounded by " + std::to_string(nb) +
                             " spheres; only balls (1) and pants (3) are allowed");
    }
    return out;
}

SphereReport validate_spheres(const SphereDecomposition& sd) {
    SphereReport rep;
    for (int i = 0; i < static_cast<int>(sd.spheres.size()); ++i) {
        int w = sd.spheres[i].weight;
        rep.expect(w > 0, "sphere " + std::to_string(i) + " has positive weight");
        rep.expect(w % 2 == 0, "sphere " + std::to_string(i) + " has even weight");
    }
    // incidence: every sphere borders exactly two components and the
    // component/sphere bipartite graph is a tree
    std::vector<int> times(sd.spheres.size(), 0);
    for (const auto& c : sd.components)
        for (int s : c.spheres) times[s]++;
    for (int s = 0; s < static_cast<int>(sd.spheres.size()); ++s)
        rep.expect(times[s] == 2, "sphere " + std::to_string(s) + " bounds exactly two pieces");
    rep.expect(sd.components.size() == sd.spheres.size() + 1,
               "piece count is sphere count + 1 (tree shape)");
    // connectivity of the incidence graph
    if (!sd.components.empty()) {
        std::vector<std::vector<int>> by_sphere(sd.spheres.size());
        for (int ci = 0; ci < static_cast<int>(sd.components.size()); ++ci)
            for (int s : sd.components[ci].spheres) by_sphere[s].push_back(ci);
        std::vector<char> vis(sd.components.size(), 0);
        std::vector<int> st = {0};
        vis[0] = 1;
        int cnt = 1;
        while (!st.empty()) {
            int ci = st.back();
            st.pop_back();
            for (int s : sd.components[ci].spheres)
                for (int cj : by_sphere[s])
                    if (!vis[cj]) {
                        vis[cj] = 1;
                        cnt++;
                        st.push_back(cj);
                    }
        }
        rep.expect(cnt == static_cast<int>(sd.components.size()),
                   "complement pieces form a connected tree");
    }
    for (int ci = 0; ci < static_cast<int>(sd.components.size()); ++ci) {
        auto cls = classify_component(sd, ci);
        for (const auto& issue : cls.issues)
            rep.expect(false, "component " + std::to_string(ci) + ": " + issue);
    }
    return rep;
}

SphereDecomposition spheres_from_carving(const Diagram& d, const SimpleDiagramGraph& g,
                                         const CarvingDecomposition& dec,
                                         const CurveFamily& fam) {
    Graph plain = g.to_graph();
    auto tedges = dec.tree_edges();
    std::sort(tedges.begin(), tedges.end());
    require(fam.curves.size() == tedges.size(), errc::validation,
            "curve family does not match the carving");

    SphereDecomposition sd;
    std::map<std::pair<int, int>, int> sphere_of_tree_edge;
    for (int t = 0; t < static_cast<int>(fam.curves.size()); ++t) {
        const auto& c = fam.curves[t];
        SphereDecomposition::Sphere s;
        s.equator = c.edge_cycle;
        s.weight = static_cast<int>(c.edge_cycle.size());
        s.tree_a = c.tree_a;
        s.tree_b = c.tree_b;
        sphere_of_tree_edge[std::minmax(c.tree_a, c.tree_b)] = t;
        sd.spheres.push_back(std::move(s));
    }

    // one component per carving-tree node
    std::vector<int> comp_of_node(dec.node_count(), -1);
    for (int x = 0; x < dec.node_count(); ++x) {
        SphereDecomposition::Component c;
        for (int y : dec.nbrs[x]) c.spheres.push_back(sphere_of_tree_edge[std::minmax(x, y)]);
        if (dec.leaf_vertex[x] >= 0) {
            int v = dec.leaf_vertex[x];
            c.is_ball = true;
            c.vertices = {v};
            bool crossing = g.is_crossing_vertex(v, d);
            c.bridges = crossing ? 2 : 1;
            c.note = crossing ? "ball around one crossing" : "ball around a bare arc";
            if (!crossing && c.spheres.size() == 1)
                sd.spheres[c.spheres[0]].around_subdivision = true;
        } else {
            c.is_ball = false;
            c.note = "solid pants between three spheres";
        }
        comp_of_node[x] = static_cast<int>(sd.components.size());
        sd.components.push_back(std::move(c));
    }

    // pants strands: each graph edge contributes one strand to every
    // internal node on the carving-tree path between its endpoints' leaves,
    // joining the two path edges at that node
    for (int e = 0; e < plain.edge_count(); ++e) {
        auto [u, v] = plain.edges[e];
        auto path = tree_path_edges(dec, u, v);
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            int node = path[i].second;  // shared node of consecutive path edges
            int sa = sphere_of_tree_edge[std::minmax(path[i].first, path[i].second)];
            int sb = sphere_of_tree_edge[std::minmax(path[i + 1].first, path[i + 1].second)];
            auto& comp = sd.components[comp_of_node[node]];
            require(!comp.is_ball, errc::internal, "strand through a leaf component");
            comp.strands.push_back({sa, sb, true});
        }
    }

    // the construction only makes strands between distinct spheres; an
    // inessential strand would mean the carving was not width-minimal in the
    // proof's sense, so surface it rather than repair it
    for (int ci = 0; ci < static_cast<int>(sd.components.size()); ++ci) {
        auto cls = classify_component(sd, ci);
        require(cls.ok(), errc::validation,
                "component classification failed: " +
                    (cls.issues.empty() ? std::string("?") : cls.issues.front()));
    }
    return sd;
}

std::pair<Diagram, SphereDecomposition> bridge_sphere_decomposition(int b) {
    require(b >= 1, errc::unsupported, "bridge template needs b >= 1");
    int n = std::max(2 * b, 3);
    Diagram d = unknot_diagram(n);

    SphereDecomposition sd;
    SphereDecomposition::Sphere s;
    for (int e = 0; e < 2 * b; ++e) s.equator.push_back(e);
    s.weight = 2 * b;
    sd.spheres.push_back(std::move(s));

    // cutting the circle at 2b points yields 2b arcs, alternating sides;
    // each side is a trivial tangle of b bridges
    SphereDecomposition::Component upper, lower;
    upper.is_ball = lower.is_ball = true;
    upper.spheres = {0};
    lower.spheres = {0};
    upper.bridges = b;
    lower.bridges = b;
    for (int v = 0; v < n; ++v) {
        // vertex v sits between edges v-1 and v; side flips at each crossed edge
        int crossings_before = std::min(v, 2 * b);
        if (crossings_before % 2 == 1)
            upper.vertices.push_back(v);
        else
            lower.vertices.push_back(v);
    }
    upper.note = "bridge position, upper ball";
    lower.note = "bridge position, lower ball";
    sd.components.push_back(std::move(upper));
    sd.components.push_back(std::move(lower));
    return {std::move(d), std::move(sd)};
}

}  // namespace knotcarve
