#include "knotcarve/pd_code.hpp"

#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "knotcarve/error.hpp"

namespace knotcarve {

namespace {

std::vector<std::array<long, 4>> tokenize_pd(const std::string& text) {
    std::vector<long> nums;
    std::vector<std::array<long, 4>> tuples;
    size_t i = 0;
    auto flush_plain = [&]() {
        // bare numbers outside X[..] groups are grouped four at a time
        for (size_t k = 0; k + 3 < nums.size(); k += 4)
            tuples.push_back({nums[k], nums[k + 1], nums[k + 2], nums[k + 3]});
        if (nums.size() % 4 != 0)
            fail(errc::parse, "PD code: dangling labels, tuples must have arity 4");
        nums.clear();
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == 'X' || c == 'x') {
            flush_plain();
            size_t open = text.find_first_of("[(", i);
            if (open == std::string::npos) fail(errc::parse, "PD code: 'X' without bracket");
            size_t close = text.find_first_of("])", open);
            if (close == std::string::npos) fail(errc::parse, "PD code: unclosed bracket");
            std::string inner = text.substr(open + 1, close - open - 1);
            for (char& ch : inner)
                if (ch == ',') ch = ' ';
            std::istringstream ss(inner);
            std::array<long, 4> t{};
            int got = 0;
            long v;
            while (ss >> v) {
                if (got < 4) t[got] = v;
                got++;
            }
            if (got != 4) fail(errc::parse, "PD code: tuple arity is not 4");
            tuples.push_back(t);
            i = close + 1;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) j++;
            nums.push_back(std::stol(text.substr(i, j - i)));
            i = j;
        } else {
            i++;
        }
    }
    flush_plain();
    return tuples;
}

}  // namespace

Diagram parse_pd(const std::string& text) {
    auto tuples = tokenize_pd(text);
    require(!tuples.empty(), errc::parse, "PD code: no crossings found");

    // map labels to edge ids in order of first appearance
    std::map<long, int> edge_id;
    std::map<long, int> uses;
    for (const auto& t : tuples)
        for (long lab : t) {
            if (!edge_id.count(lab)) edge_id[lab] = static_cast<int>(edge_id.size());
            uses[lab]++;
        }
    for (const auto& [lab, cnt] : uses)
        if (cnt != 2) {
            std::ostringstream m;
            m << "PD code: edge label " << lab << " appears " << cnt << " times, expected 2";
            fail(errc::parse, m.str());
        }
    int n = static_cast<int>(tuples.size());
    int e = static_cast<int>(edge_id.size());
    require(e == 2 * n, errc::parse, "PD code: label count does not match crossing count");

    Diagram d;
    d.map.rot.resize(n);
    d.map.dart_origin.assign(2 * e, -1);
    std::map<long, int> first_dart;  // label -> dart already placed
    for (int v = 0; v < n; ++v) {
        for (int s = 0; s < 4; ++s) {
            long lab = tuples[v][s];
            int eid = edge_id[lab];
            int dart;
            if (!first_dart.count(lab)) {
                dart = 2 * eid;
                first_dart[lab] = dart;
            } else {
                dart = PlanarMap::twin(first_dart[lab]);
            }
            d.map.dart_origin[dart] = v;
            d.map.rot[v].push_back(dart);
        }
    }
    d.kind.assign(n, VertexKind::crossing);
    // the tuple starts at the incoming under-strand, so the under-strand
    // occupies slots {0,2}: the over pair is {1,3}
    d.over_pair.assign(n, 1);
    d.validate();
    return d;
}

std::string emit_pd(const Diagram& d) {
    require(d.crossing_count() > 0, errc::unsupported, "emit_pd requires at least one crossing");
    for (auto k : d.kind)
        require(k == VertexKind::crossing, errc::unsupported,
                "emit_pd: diagram has subdivision vertices; PD codes carry crossings only");

    // orient the knot by walking from dart 0 and label edges 1.. in traversal
    // order; then every crossing is read ccw from its incoming under dart
    auto walk = d.trace_strand(0);
    std::vector<long> label(d.map.edge_count(), 0);
    long next = 1;
    for (int dart : walk) label[PlanarMap::edge_of(dart)] = next++;

    std::ostringstream out;
    std::vector<char> done(d.map.vertex_count(), 0);
    bool first = true;
    for (int dart : walk) {
        // arriving end of this dart
        int arrive = PlanarMap::twin(dart);
        int v = d.map.dart_origin[arrive];
        if (done[v]) continue;
        int s = d.map.slot_of(arrive);
        int under = d.over_pair[v] == 1 ? 0 : 1;  // parity of the under slots
        if (s % 2 != under) continue;             // over strand arrives here; wait for under
        done[v] = 1;
        if (!first) out << ' ';
        first = false;
        out << "X[";
        for (int k = 0; k < 4; ++k) {
            out << label[PlanarMap::edge_of(d.map.rot[v][(s + k) % 4])];
            if (k < 3) out << ',';
        }
        out << ']';
    }
    return out.str();
}

}  // namespace knotcarve
