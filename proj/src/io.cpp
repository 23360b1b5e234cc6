#include "tropcurve/io.hpp"

#include <sstream>
#include <vector>

namespace tropcurve {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

long long parse_id(const std::string& s, int line, const char* what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size() || v < 0) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
    }
}

} // namespace

std::shared_ptr<const Model> parse_model(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int nvertices = 0;
    std::vector<Edge> edges;
    int nedges = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "vertex") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: vertex <id>");
            long long id = parse_id(toks[1], lineno, "vertex id");
            if (id != nvertices)
                throw ParseError(lineno, "vertex ids must appear in order 0,1,2,...");
            ++nvertices;
        } else if (toks[0] == "edge") {
            if (toks.size() != 5)
                throw ParseError(lineno, "expected: edge <id> <v1> <v2> <p>/<q>");
            long long id = parse_id(toks[1], lineno, "edge id");
            if (id != nedges) throw ParseError(lineno, "edge ids must appear in order 0,1,2,...");
            long long u = parse_id(toks[2], lineno, "vertex id");
            long long v = parse_id(toks[3], lineno, "vertex id");
            if (u >= nvertices || v >= nvertices)
                throw ParseError(lineno, "edge endpoint not declared");
            Rat len;
            try {
                len = parse_rat(toks[4]);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            if (len <= 0) throw ParseError(lineno, "edge length must be positive");
            edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v), len});
            ++nedges;
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (nvertices == 0) throw ParseError(lineno, "no vertices");
    try {
        return std::make_shared<Model>(nvertices, std::move(edges));
    } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
    }
}

std::string serialize_model(const Model& m) {
    std::ostringstream os;
    for (int v = 0; v < m.num_vertices(); ++v) os << "vertex " << v << "\n";
    for (int e = 0; e < m.num_edges(); ++e) {
        const Edge& ed = m.edge(e);
        os << "edge " << e << " " << ed.u << " " << ed.v << " " << rat_str(ed.length) << "\n";
    }
    return os.str();
}

Point parse_point(const Model& m, const std::string& token) {
    if (token.rfind("v:", 0) == 0) {
        long long v = parse_id(token.substr(2), 0, "vertex id");
        if (v >= m.num_vertices()) throw std::invalid_argument("vertex out of range: " + token);
        return Point::vertex(static_cast<int>(v));
    }
    if (token.rfind("e:", 0) == 0) {
        auto at = token.find('@');
        if (at == std::string::npos)
            throw std::invalid_argument("bad point token (expected e:<id>@<p>/<q>): " + token);
        long long e = parse_id(token.substr(2, at - 2), 0, "edge id");
        if (e >= m.num_edges()) throw std::invalid_argument("edge out of range: " + token);
        Rat off = parse_rat(token.substr(at + 1));
        if (off < 0 || off > m.edge(static_cast<int>(e)).length)
            throw std::invalid_argument("offset outside edge: " + token);
        return Point::on_edge(m, static_cast<int>(e), off);
    }
    throw std::invalid_argument("bad point token: " + token);
}

Divisor parse_divisor(const Model& m, const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::map<Point, Int> coeffs;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] != "chip" || toks.size() != 3)
            throw ParseError(lineno, "expected: chip <point> <integer>");
        Point p;
        Int c;
        try {
            p = parse_point(m, toks[1]);
            c = Int(toks[2]);
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
        coeffs[p] += c;
    }
    return Divisor(m, std::move(coeffs));
}

std::string serialize_divisor(const Divisor& d) {
    std::ostringstream os;
    for (const auto& [p, c] : d.coeffs()) os << "chip " << p.str() << " " << c.str() << "\n";
    return os.str();
}

namespace {

Automorphism parse_map_line(const std::shared_ptr<const AutFrame>& frame,
                            const std::vector<std::string>& toks, int lineno) {
    const Model& m = frame->base();
    std::vector<int> vimg(m.num_vertices(), -1);
    std::vector<std::pair<int, bool>> eimg(m.num_edges(), {-1, false});
    bool in_edges = false;
    for (size_t i = 1; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        if (t == ";") {
            in_edges = true;
            continue;
        }
        auto arrow = t.find("->");
        if (arrow == std::string::npos || t.size() < 4)
            throw ParseError(lineno, "bad map entry '" + t + "'");
        if (!in_edges && t[0] == 'v') {
            long long a = parse_id(t.substr(1, arrow - 1), lineno, "vertex id");
            long long b = parse_id(t.substr(arrow + 2), lineno, "vertex id");
            if (a >= m.num_vertices() || b >= m.num_vertices())
                throw ParseError(lineno, "vertex out of range in map");
            vimg[a] = static_cast<int>(b);
        } else if (in_edges && t[0] == 'e') {
            long long a = parse_id(t.substr(1, arrow - 1), lineno, "edge id");
            std::string rhs = t.substr(arrow + 2);
            bool rev = false;
            if (!rhs.empty() && (rhs.back() == '+' || rhs.back() == '-')) {
                rev = rhs.back() == '-';
                rhs.pop_back();
            }
            long long b = parse_id(rhs, lineno, "edge id");
            if (a >= m.num_edges() || b >= m.num_edges())
                throw ParseError(lineno, "edge out of range in map");
            eimg[a] = {static_cast<int>(b), rev};
        } else {
            throw ParseError(lineno, "bad map entry '" + t + "'");
        }
    }
    for (int v = 0; v < m.num_vertices(); ++v)
        if (vimg[v] < 0) throw ParseError(lineno, "map does not assign vertex " +
                                                      std::to_string(v));
    for (int e = 0; e < m.num_edges(); ++e)
        if (eimg[e].first < 0)
            throw ParseError(lineno, "map does not assign edge " + std::to_string(e));
    try {
        return Automorphism(frame, std::move(vimg), std::move(eimg));
    } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
    }
}

} // namespace

FiniteGroup parse_group(std::shared_ptr<const Model> m, const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool want_auto = false;
    std::vector<CircleGenerator> circle_gens;
    std::vector<Automorphism> map_gens;
    std::shared_ptr<const AutFrame> idframe;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "auto") {
            want_auto = true;
        } else if (toks[0] == "rotate") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: rotate <p>/<q>");
            CircleGenerator g;
            g.kind = CircleGenerator::Kind::Rotation;
            try {
                g.rotation_arc = parse_rat(toks[1]);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            circle_gens.push_back(g);
        } else if (toks[0] == "reflect") {
            if (toks.size() != 3) throw ParseError(lineno, "expected: reflect <point> <point>");
            CircleGenerator g;
            g.kind = CircleGenerator::Kind::Reflection;
            try {
                g.axis_a = parse_point(*m, toks[1]);
                g.axis_b = parse_point(*m, toks[2]);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            circle_gens.push_back(g);
        } else if (toks[0] == "map") {
            if (!idframe) idframe = AutFrame::identity_frame(m);
            map_gens.push_back(parse_map_line(idframe, toks, lineno));
        } else {
            throw ParseError(lineno, "unknown group directive '" + toks[0] + "'");
        }
    }
    if (want_auto) {
        if (!circle_gens.empty() || !map_gens.empty())
            throw ParseError(lineno, "'auto' cannot be combined with explicit generators");
        return compute_aut(m);
    }
    if (!circle_gens.empty()) {
        if (!map_gens.empty())
            throw ParseError(lineno, "circle generators cannot be mixed with 'map' lines");
        return finite_subgroup_of_circle(m, circle_gens);
    }
    if (!map_gens.empty()) return subgroup_generated(std::move(map_gens));
    return trivial_group(m);
}

std::string serialize_function(const RationalFunction& f) {
    if (f.is_bottom()) return "bottom\n";
    std::ostringstream os;
    for (int e = 0; e < static_cast<int>(f.tracks().size()); ++e) {
        os << "edge " << e;
        for (const auto& [o, v] : f.tracks()[e])
            os << " (" << rat_str(o) << "," << rat_str(v) << ")";
        os << "\n";
    }
    return os.str();
}

} // namespace tropcurve
