#include "knotcarve/planar_map.hpp"

#include <algorithm>

#include "knotcarve/error.hpp"

namespace knotcarve {

int PlanarMap::slot_of(int d) const {
    const auto& r = rot[dart_origin[d]];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == d) return i;
    fail(errc::validation, "dart missing from its origin rotation");
}

int PlanarMap::rot_next(int d) const {
    const auto& r = rot[dart_origin[d]];
    int i = slot_of(d);
    return r[(i + 1) % r.size()];
}

void PlanarMap::check_consistent() const {
    std::vector<int> seen(dart_count(), 0);
    for (int v = 0; v < vertex_count(); ++v) {
        for (int d : rot[v]) {
            require(d >= 0 && d < dart_count(), errc::validation, "dart id out of range");
            require(dart_origin[d] == v, errc::validation, "dart listed at a foreign vertex");
            seen[d]++;
        }
    }
    for (int d = 0; d < dart_count(); ++d)
        require(seen[d] == 1, errc::validation, "dart count in rotations is not exactly one");
}

bool PlanarMap::connected() const {
    if (vertex_count() == 0) return true;
    std::vector<char> vis(vertex_count(), 0);
    std::vector<int> stack = {0};
    vis[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : rot[v]) {
            int w = dart_origin[twin(d)];
            if (!vis[w]) {
                vis[w] = 1;
                reached++;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count();
}

std::vector<std::vector<int>> PlanarMap::faces() const {
    std::vector<char> used(dart_count(), 0);
    std::vector<std::vector<int>> out;
    for (int d0 = 0; d0 < dart_count(); ++d0) {
        if (used[d0]) continue;
        std::vector<int> walk;
        int d = d0;
        do {
            used[d] = 1;
            walk.push_back(d);
            d = rot_next(twin(d));
        } while (d != d0);
        out.push_back(std::move(walk));
    }
    return out;
}

std::vector<int> PlanarMap::face_of_dart() const {
    auto fs = faces();
    std::vector<int> fo(dart_count(), -1);
    for (int f = 0; f < static_cast<int>(fs.size()); ++f)
        for (int d : fs[f]) fo[d] = f;
    return fo;
}

int PlanarMap::euler_characteristic() const {
    return vertex_count() - edge_count() + static_cast<int>(faces().size());
}

PlanarMap PlanarMap::dual() const {
    auto fs = faces();
    PlanarMap d;
    d.rot = fs;
    d.dart_origin.assign(dart_count(), -1);
    for (int f = 0; f < static_cast<int>(fs.size()); ++f)
        for (int dart : fs[f]) d.dart_origin[dart] = f;
    return d;
}

}  // namespace knotcarve
