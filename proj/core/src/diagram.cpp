#include "knotcarve/diagram.hpp"

#include <algorithm>

#include "knotcarve/error.hpp"

namespace knotcarve {

int Diagram::crossing_count() const {
    return static_cast<int>(std::count(kind.begin(), kind.end(), VertexKind::crossing));
}

int Diagram::through_slot(int v, int s) const {
    int deg = map.degree(v);
    if (deg == 2) return 1 - s;
    return (s + 2) % 4;
}

std::vector<int> Diagram::trace_strand(int start) const {
    std::vector<int> walk;
    int d = start;
    do {
        walk.push_back(d);
        int arrive = PlanarMap::twin(d);
        int v = map.dart_origin[arrive];
        int s = map.slot_of(arrive);
        d = map.rot[v][through_slot(v, s)];
    } while (d != start);
    return walk;
}

int Diagram::component_count() const {
    std::vector<char> used(map.dart_count(), 0);
    int comps = 0;
    for (int d0 = 0; d0 < map.dart_count(); ++d0) {
        if (used[d0]) continue;
        comps++;
        for (int d : trace_strand(d0)) {
            used[d] = 1;
            used[PlanarMap::twin(d)] = 1;
        }
    }
    return comps;
}

void Diagram::validate() const {
    require(map.vertex_count() > 0, errc::validation, "diagram has no vertices");
    require(static_cast<int>(kind.size()) == map.vertex_count(), errc::validation,
            "vertex kind table size mismatch");
    require(static_cast<int>(over_pair.size()) == map.vertex_count(), errc::validation,
            "over_pair table size mismatch");
    map.check_consistent();
    for (int v = 0; v < map.vertex_count(); ++v) {
        int deg = map.degree(v);
        if (kind[v] == VertexKind::crossing)
            require(deg == 4, errc::validation, "crossing vertex without valence 4");
        else
            require(deg == 2, errc::validation, "subdivision vertex without valence 2");
    }
    require(map.connected(), errc::validation, "diagram graph is disconnected");
    require(map.euler_characteristic() == 2, errc::validation,
            "rotation system is not spherical (V - E + F != 2)");
    require(component_count() == 1, errc::validation,
            "diagram encodes a link with more than one component");
}

Diagram unknot_diagram(int n) {
    require(n >= 3, errc::unsupported, "round unknot needs at least 3 subdivision vertices");
    Diagram d;
    d.map.rot.resize(n);
    d.map.dart_origin.resize(2 * n);
    // edge i joins vertex i to vertex (i+1) % n
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        d.map.dart_origin[2 * i] = i;
        d.map.dart_origin[2 * i + 1] = j;
        d.map.rot[i] = {2 * i, PlanarMap::twin(2 * ((i + n - 1) % n))};
    }
    d.kind.assign(n, VertexKind::subdivision);
    d.over_pair.assign(n, 0);
    d.validate();
    return d;
}

Diagram one_crossing_unknot() {
    Diagram d;
    // one vertex, two loop edges, each loop's ends adjacent in the rotation
    // (the interleaved rotation would be a torus embedding)
    d.map.rot = {{0, 1, 2, 3}};
    d.map.dart_origin = {0, 0, 0, 0};
    d.kind = {VertexKind::crossing};
    d.over_pair = {0};
    d.validate();
    return d;
}

}  // namespace knotcarve
