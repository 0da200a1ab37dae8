#include "knotcarve/families.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

#include "knotcarve/error.hpp"
#include "knotcarve/subdivide.hpp"

namespace knotcarve {

namespace {

// generic strand router for braid-like constructions.  Ports of crossing c:
// 0 = SW, 1 = SE, 2 = NE, 3 = NW (ccw), matching Diagram's rotation slots.
struct BraidBuilder {
    struct End {
        int crossing;  // -1 while unknown
        int port;
    };
    int crossings = 0;
    std::vector<std::pair<End, End>> edges;
    std::vector<unsigned char> over;

    int add_crossing(bool positive) {
        over.push_back(positive ? 1 : 0);
        return crossings++;
    }
    int add_edge(End a, End b) {
        edges.push_back({a, b});
        return static_cast<int>(edges.size()) - 1;
    }

    Diagram finish() {
        Diagram d;
        d.map.rot.assign(crossings, {});
        d.map.dart_origin.assign(2 * edges.size(), -1);
        // port -> dart, then lay out rotations ccw by port number
        std::vector<std::array<int, 4>> port_dart(crossings, {-1, -1, -1, -1});
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            auto [a, b] = edges[e];
            require(a.crossing >= 0 && b.crossing >= 0, errc::internal, "unwired braid edge");
            port_dart[a.crossing][a.port] = 2 * e;
            port_dart[b.crossing][b.port] = 2 * e + 1;
            d.map.dart_origin[2 * e] = a.crossing;
            d.map.dart_origin[2 * e + 1] = b.crossing;
        }
        for (int c = 0; c < crossings; ++c)
            for (int p = 0; p < 4; ++p) {
                require(port_dart[c][p] >= 0, errc::internal, "crossing port left open");
                d.map.rot[c].push_back(port_dart[c][p]);
            }
        d.kind.assign(crossings, VertexKind::crossing);
        // the NW-SE strand occupies slots {1,3}
        for (int c = 0; c < crossings; ++c) d.over_pair.push_back(over[c] ? 1 : 0);
        d.validate();
        return d;
    }
};

// runs the word through the router; returns per-position first consumer and
// last producer ends for the caller to close up
struct OpenBraid {
    BraidBuilder bb;
    std::vector<BraidBuilder::End> first_in;   // per position, entry port
    std::vector<BraidBuilder::End> last_out;   // per position, exit port
};

OpenBraid route_word(int strands, const std::vector<int>& word) {
    require(strands >= 2, errc::unsupported, "braid needs at least 2 strands");
    OpenBraid ob;
    ob.first_in.assign(strands + 1, {-1, -1});
    ob.last_out.assign(strands + 1, {-1, -1});
    for (int letter : word) {
        int j = std::abs(letter);
        require(j >= 1 && j < strands, errc::unsupported, "braid letter out of range");
        int c = ob.bb.add_crossing(letter > 0);
        BraidBuilder::End nw{c, 3}, ne{c, 2}, sw{c, 0}, se{c, 1};
        for (auto [pos, in] : {std::pair{j, nw}, std::pair{j + 1, ne}}) {
            if (ob.last_out[pos].crossing >= 0)
                ob.bb.add_edge(ob.last_out[pos], in);
            else
                ob.first_in[pos] = in;
        }
        ob.last_out[j] = sw;
        ob.last_out[j + 1] = se;
    }
    return ob;
}

}  // namespace

Diagram braid_closure_diagram(int strands, const std::vector<int>& word) {
    auto ob = route_word(strands, word);
    for (int pos = 1; pos <= strands; ++pos) {
        require(ob.last_out[pos].crossing >= 0, errc::unsupported,
                "braid position " + std::to_string(pos) + " is never crossed; closure is a split link");
        ob.bb.add_edge(ob.last_out[pos], ob.first_in[pos]);
    }
    return ob.bb.finish();
}

Diagram plat_closure_diagram(int strands, const std::vector<int>& word) {
    require(strands % 2 == 0, errc::unsupported, "plat closure needs an even strand count");
    auto ob = route_word(strands, word);
    for (int pos = 1; pos <= strands; pos += 2) {
        // cap at the bottom and at the top; an uncrossed position routes its
        // cap arcs through the neighbouring pair
        auto bottom_a = ob.last_out[pos], bottom_b = ob.last_out[pos + 1];
        auto top_a = ob.first_in[pos], top_b = ob.first_in[pos + 1];
        if (bottom_a.crossing < 0 && bottom_b.crossing < 0)
            fail(errc::unsupported, "plat pair " + std::to_string(pos) +
                                        " is never crossed; closure is a split link");
        if (bottom_a.crossing < 0) {  // position pos untouched: one long arc
            ob.bb.add_edge(bottom_b, top_b);
        } else if (bottom_b.crossing < 0) {
            ob.bb.add_edge(bottom_a, top_a);
        } else {
            ob.bb.add_edge(bottom_a, bottom_b);
            ob.bb.add_edge(top_a, top_b);
        }
    }
    return ob.bb.finish();
}

Diagram torus_diagram(int p, int q) {
    require(p >= 2 && q >= 2, errc::unsupported, "torus knot parameters must be >= 2");
    require(std::gcd(p, q) == 1, errc::unsupported,
            "T(p,q) needs coprime parameters; gcd != 1 gives a torus link");
    std::vector<int> word;
    for (int rep = 0; rep < p; ++rep)
        for (int j = 1; j < q; ++j) word.push_back(j);
    return braid_closure_diagram(q, word);
}

std::pair<Diagram, SphereDecomposition> pretzel_diagram(int a, int b, int c) {
    std::array<int, 3> params = {a, b, c};
    for (int t : params)
        require(t != 0, errc::unsupported, "pretzel parameters must be nonzero");

    BraidBuilder bb;
    // region r: |params[r]| stacked crossings; record the four outer ports
    std::array<BraidBuilder::End, 3> tl, tr, bl, br;
    for (int r = 0; r < 3; ++r) {
        int t = std::abs(params[r]);
        bool positive = params[r] > 0;
        int prev = -1;
        for (int i = 0; i < t; ++i) {
            int cr = bb.add_crossing(positive);
            if (i == 0) {
                tl[r] = {cr, 3};  // NW
                tr[r] = {cr, 2};  // NE
            } else {
                bb.add_edge({prev, 0}, {cr, 3});  // SW above to NW below
                bb.add_edge({prev, 1}, {cr, 2});
            }
            prev = cr;
        }
        bl[r] = {prev, 0};
        br[r] = {prev, 1};
    }
    // standard closure: tops chained left to right, outer arc returns
    std::vector<int> top_edges, bottom_edges;
    top_edges.push_back(bb.add_edge(tr[0], tl[1]));
    top_edges.push_back(bb.add_edge(tr[1], tl[2]));
    top_edges.push_back(bb.add_edge(tl[0], tr[2]));  // around the outside
    bottom_edges.push_back(bb.add_edge(br[0], bl[1]));
    bottom_edges.push_back(bb.add_edge(br[1], bl[2]));
    bottom_edges.push_back(bb.add_edge(bl[0], br[2]));

    Diagram d;
    try {
        d = bb.finish();
    } catch (const error& e) {
        if (e.kind == errc::validation)
            fail(errc::unsupported, std::string("pretzel parameters give a link: ") + e.what());
        throw;
    }

    // natural decomposition: one sphere around each twist region crossing
    // the four arcs that enter it
    SphereDecomposition sd;
    // arcs entering region r: top edges r-1 and r... by construction: the
    // chain above places, for region r, its NW/NE ends on edges:
    //   r=0: top_edges[2] (tl) and top_edges[0] (tr)
    //   r=1: top_edges[0] (tl) and top_edges[1] (tr)
    //   r=2: top_edges[1] (tl) and top_edges[2] (tr)
    auto top_of = [&](int r, bool left) {
        if (r == 0) return left ? top_edges[2] : top_edges[0];
        if (r == 1) return left ? top_edges[0] : top_edges[1];
        return left ? top_edges[1] : top_edges[2];
    };
    auto bottom_of = [&](int r, bool left) {
        if (r == 0) return left ? bottom_edges[2] : bottom_edges[0];
        if (r == 1) return left ? bottom_edges[0] : bottom_edges[1];
        return left ? bottom_edges[1] : bottom_edges[2];
    };
    for (int r = 0; r < 3; ++r) {
        SphereDecomposition::Sphere s;
        s.equator = {top_of(r, true), top_of(r, false), bottom_of(r, false), bottom_of(r, true)};
        s.weight = 4;
        sd.spheres.push_back(std::move(s));
    }
    int cursor = 0;
    for (int r = 0; r < 3; ++r) {
        SphereDecomposition::Component ball;
        ball.is_ball = true;
        ball.spheres = {r};
        ball.bridges = 2;
        for (int i = 0; i < std::abs(params[r]); ++i) ball.vertices.push_back(cursor++);
        ball.note = "twist region with " + std::to_string(std::abs(params[r])) + " crossings";
        sd.components.push_back(std::move(ball));
    }
    SphereDecomposition::Component pants;
    pants.is_ball = false;
    pants.spheres = {0, 1, 2};
    pants.strands = {{0, 1, true}, {1, 2, true}, {0, 2, true},
                     {0, 1, true}, {1, 2, true}, {0, 2, true}};
    pants.note = "outer solid pants, six essential connecting arcs";
    sd.components.push_back(std::move(pants));

    auto rep = validate_spheres(sd);
    require(rep.ok, errc::internal, "pretzel natural decomposition failed validation: " +
                                        (rep.failures.empty() ? "?" : rep.failures.front()));
    return {std::move(d), std::move(sd)};
}

Diagram trefoil_connect_sum(int n) {
    require(n >= 1, errc::unsupported, "connect sum needs n >= 1");
    if (n == 1) return braid_closure_diagram(2, {1, 1, 1});

    // chain n open trefoils: route each copy's word, then wire position-1
    // bottom of copy t to position-1 top of copy t+1 and close position 2
    // within each copy
    BraidBuilder bb;
    std::vector<BraidBuilder::End> top1(n), bot1(n);
    for (int t = 0; t < n; ++t) {
        int c0 = bb.add_crossing(true);
        int c1 = bb.add_crossing(true);
        int c2 = bb.add_crossing(true);
        bb.add_edge({c0, 0}, {c1, 3});
        bb.add_edge({c0, 1}, {c1, 2});
        bb.add_edge({c1, 0}, {c2, 3});
        bb.add_edge({c1, 1}, {c2, 2});
        bb.add_edge({c2, 1}, {c0, 2});  // position-2 closure inside the copy
        top1[t] = {c0, 3};
        bot1[t] = {c2, 0};
    }
    for (int t = 0; t < n; ++t) bb.add_edge(bot1[t], top1[(t + 1) % n]);
    return bb.finish();
}

Diagram two_bridge_diagram(const std::vector<int>& cf) {
    require(!cf.empty(), errc::unsupported, "continued fraction must be nonempty");
    for (int a : cf)
        require(a != 0, errc::unsupported, "continued fraction entries must be nonzero");
    // the plat needs an odd number of syllables; transfer one twist off the
    // last entry ([..., a] = [..., a - sign(a), sign(a)]) and merge across a
    // zero when it appears
    std::vector<int> norm = cf;
    if (norm.size() % 2 == 0) {
        int a = norm.back();
        int s = a > 0 ? 1 : -1;
        norm.back() = a - s;
        norm.push_back(s);
        if (norm[norm.size() - 2] == 0) {
            int merged = norm[norm.size() - 3] + norm.back();
            require(merged != 0, errc::unsupported, "degenerate continued fraction");
            norm.resize(norm.size() - 3);
            norm.push_back(merged);
        }
    }
    std::vector<int> word;
    for (size_t i = 0; i < norm.size(); ++i) {
        int gen = (i % 2 == 0) ? 2 : 1;
        int t = std::abs(norm[i]);
        int sgn = norm[i] > 0 ? 1 : -1;
        for (int k = 0; k < t; ++k) word.push_back(sgn * gen);
    }
    try {
        return plat_closure_diagram(4, word);
    } catch (const error& e) {
        if (e.kind == errc::validation)
            fail(errc::unsupported,
                 std::string("continued fraction closes into a link: ") + e.what());
        throw;
    }
}

Diagram random_knot_diagram(uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        int strands = 2 + static_cast<int>(rng() % 2);
        int len = 3 + static_cast<int>(rng() % 6);
        std::vector<int> word;
        for (int i = 0; i < len; ++i) {
            int j = 1 + static_cast<int>(rng() % (strands - 1));
            word.push_back(rng() % 2 == 0 ? j : -j);
        }
        try {
            Diagram d = braid_closure_diagram(strands, word);
            auto g = subdivide_to_simple(d);
            if (!g.to_graph().biconnected()) continue;
            return d;
        } catch (const error&) {
            continue;
        }
    }
    fail(errc::internal, "random diagram search exhausted its attempts");
}

std::string TorusLowerBound::text() const {
    std::ostringstream os;
    os << "T(" << p << "," << q << "): bridge number " << bridge_number
       << " [external input: Schubert] and no essential planar meridional surface"
          " [external input: Tsau].\n";
    os << "If some diagram had tree-width k, the bridge number would be at most 4k+4;\n";
    os << "4k+4 < " << bridge_number << " fails first at k = " << tw_lower
       << ", so every diagram has tree-width >= " << tw_lower << ".\n";
    return os.str();
}

TorusLowerBound tw_lower_bound_report(int p, int q) {
    require(p >= 2 && q >= 2 && std::gcd(p, q) == 1, errc::unsupported,
            "lower bound report needs coprime p, q >= 2");
    TorusLowerBound r;
    r.p = p;
    r.q = q;
    r.bridge_number = std::min(p, q);
    int b = r.bridge_number;
    r.tw_lower = b > 4 ? (b - 4 + 3) / 4 : 0;  // ceil((b-4)/4), clamped
    return r;
}

FamilySpec FamilySpec::parse(const std::string& text) {
    std::string name;
    size_t i = 0;
    while (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) ||
                               text[i] == '_' || text[i] == '-'))
        name += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))), i++;
    std::vector<int> params;
    std::string rest = text.substr(i);
    for (char& ch : rest)
        if (ch == '(' || ch == ')' || ch == ',') ch = ' ';
    std::istringstream ss(rest);
    int v;
    while (ss >> v) params.push_back(v);

    FamilySpec spec;
    spec.params = params;
    if (name == "torus" || name == "t")
        spec.kind = Kind::torus;
    else if (name == "pretzel" || name == "p")
        spec.kind = Kind::pretzel;
    else if (name == "sum" || name == "trefoil_sum" || name == "trefoil-sum")
        spec.kind = Kind::trefoil_sum;
    else if (name == "two_bridge" || name == "two-bridge" || name == "twobridge")
        spec.kind = Kind::two_bridge;
    else
        fail(errc::parse, "unknown family '" + name + "'");
    return spec;
}

Diagram FamilySpec::build() const {
    switch (kind) {
        case Kind::torus:
            require(params.size() == 2, errc::parse, "torus(p,q) takes two parameters");
            return torus_diagram(params[0], params[1]);
        case Kind::pretzel: {
            require(params.size() == 3, errc::parse, "pretzel(a,b,c) takes three parameters");
            return pretzel_diagram(params[0], params[1], params[2]).first;
        }
        case Kind::trefoil_sum:
            require(params.size() == 1, errc::parse, "sum(n) takes one parameter");
            return trefoil_connect_sum(params[0]);
        case Kind::two_bridge:
            return two_bridge_diagram(params);
    }
    fail(errc::internal, "unreachable");
}

std::string FamilySpec::name() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::torus: os << "torus"; break;
        case Kind::pretzel: os << "pretzel"; break;
        case Kind::trefoil_sum: os << "sum"; break;
        case Kind::two_bridge: os << "two-bridge"; break;
    }
    os << '(';
    for (size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
    os << ')';
    return os.str();
}

}  // namespace knotcarve
