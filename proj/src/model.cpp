#include "tropcurve/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tropcurve {

Point Point::vertex(int v) {
    if (v < 0) throw std::invalid_argument("negative vertex id");
    Point p;
    p.vertex_ = v;
    return p;
}

Point Point::on_edge(const Model& m, int edge, const Rat& offset) {
    if (edge < 0 || edge >= m.num_edges()) throw std::invalid_argument("bad edge id");
    const Edge& e = m.edge(edge);
    if (offset < 0 || offset > e.length)
        throw std::invalid_argument("point offset outside edge");
    if (offset == 0) return vertex(e.u);
    if (offset == e.length) return vertex(e.v);
    Point p;
    p.edge_ = edge;
    p.offset_ = offset;
    return p;
}

std::string Point::str() const {
    if (is_vertex()) return "v:" + std::to_string(vertex_);
    return "e:" + std::to_string(edge_) + "@" + rat_str(offset_);
}

Model::Model(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices_ <= 0) throw std::invalid_argument("model needs at least one vertex");
    if (edges_.empty()) throw std::invalid_argument("model needs at least one edge");
    incident_.assign(num_vertices_, {});
    for (int e = 0; e < num_edges(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.u >= num_vertices_ || ed.v < 0 || ed.v >= num_vertices_)
            throw std::invalid_argument("edge endpoint out of range");
        if (ed.length <= 0) throw std::invalid_argument("edge length must be positive");
        incident_[ed.u].push_back({e, 0});
        incident_[ed.v].push_back({e, 1});
    }
    // connectivity
    std::vector<char> seen(num_vertices_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [e, end] : incident_[v]) {
            int w = end == 0 ? edges_[e].v : edges_[e].u;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("model must be connected");
}

bool Model::is_circle() const {
    for (int v = 0; v < num_vertices_; ++v)
        if (valence(v) != 2) return false;
    return true;
}

Rat Model::total_length() const {
    Rat t = 0;
    for (const Edge& e : edges_) t += e.length;
    return t;
}

bool operator==(const Model& a, const Model& b) {
    if (a.num_vertices_ != b.num_vertices_ || a.edges_.size() != b.edges_.size()) return false;
    for (size_t i = 0; i < a.edges_.size(); ++i) {
        if (a.edges_[i].u != b.edges_[i].u || a.edges_[i].v != b.edges_[i].v ||
            a.edges_[i].length != b.edges_[i].length)
            return false;
    }
    return true;
}

Int genus(const Model& m) {
    return Int(m.num_edges()) - m.num_vertices() + 1;
}

int valency(const Model& m, const Point& p) {
    if (p.is_vertex()) {
        if (p.vertex_id() >= m.num_vertices()) throw std::invalid_argument("point not on model");
        return m.valence(p.vertex_id());
    }
    if (p.edge_id() >= m.num_edges()) throw std::invalid_argument("point not on model");
    return 2;
}

Subgraph::Subgraph(const Model& m)
    : model_(&m), per_edge_(m.num_edges()), vertex_in_(m.num_vertices(), 0) {}

Subgraph Subgraph::whole(const Model& m) {
    Subgraph s(m);
    for (int e = 0; e < m.num_edges(); ++e) s.add_interval(e, Rat(0), m.edge(e).length);
    return s;
}

Subgraph Subgraph::single_point(const Model& m, const Point& p) {
    Subgraph s(m);
    s.add_point(p);
    return s;
}

void Subgraph::add_interval(int edge, const Rat& a, const Rat& b) {
    if (edge < 0 || edge >= model_->num_edges()) throw std::invalid_argument("bad edge id");
    const Rat& len = model_->edge(edge).length;
    if (a < 0 || b > len || a > b) throw std::invalid_argument("bad interval");
    per_edge_[edge].push_back({a, b});
    normalize();
}

void Subgraph::add_vertex(int v) {
    if (v < 0 || v >= model_->num_vertices()) throw std::invalid_argument("bad vertex id");
    vertex_in_[v] = 1;
}

void Subgraph::add_point(const Point& p) {
    if (p.is_vertex()) add_vertex(p.vertex_id());
    else add_interval(p.edge_id(), p.offset(), p.offset());
}

void Subgraph::normalize() {
    for (int e = 0; e < model_->num_edges(); ++e) {
        auto& iv = per_edge_[e];
        if (iv.empty()) continue;
        std::sort(iv.begin(), iv.end());
        std::vector<Interval> merged;
        for (const Interval& cur : iv) {
            if (!merged.empty() && cur.a <= merged.back().b) {
                if (cur.b > merged.back().b) merged.back().b = cur.b;
            } else {
                merged.push_back(cur);
            }
        }
        iv.clear();
        const Edge& ed = model_->edge(e);
        for (Interval& cur : merged) {
            // fold degenerate endpoint intervals into vertex membership
            if (cur.a == cur.b && cur.a == 0) { vertex_in_[ed.u] = 1; continue; }
            if (cur.a == cur.b && cur.a == ed.length) { vertex_in_[ed.v] = 1; continue; }
            if (cur.a == 0) vertex_in_[ed.u] = 1;
            if (cur.b == ed.length) vertex_in_[ed.v] = 1;
            iv.push_back(cur);
        }
    }
}

bool Subgraph::is_empty() const {
    for (const auto& iv : per_edge_)
        if (!iv.empty()) return false;
    for (char c : vertex_in_)
        if (c) return false;
    return true;
}

bool Subgraph::is_whole() const {
    for (int e = 0; e < model_->num_edges(); ++e) {
        const auto& iv = per_edge_[e];
        if (iv.size() != 1 || iv[0].a != 0 || iv[0].b != model_->edge(e).length) return false;
    }
    return true;
}

bool Subgraph::contains(const Point& p) const {
    if (p.is_vertex()) return vertex_in_[p.vertex_id()];
    for (const Interval& iv : per_edge_[p.edge_id()])
        if (iv.a <= p.offset() && p.offset() <= iv.b) return true;
    return false;
}

namespace {

// Does the subgraph cover the germ of edge e at offset t in the given
// direction (-1 toward 0, +1 toward length)?
bool covers_germ(const Subgraph& s, int e, const Rat& t, int dir) {
    for (const auto& iv : s.intervals(e)) {
        if (dir > 0 && iv.a <= t && t < iv.b) return true;
        if (dir < 0 && iv.a < t && t <= iv.b) return true;
    }
    return false;
}

} // namespace

int Subgraph::outdegree(const Point& p) const {
    if (!contains(p)) throw std::invalid_argument("outdegree: point not in subgraph");
    int out = 0;
    if (p.is_vertex()) {
        for (auto [e, end] : model_->incident_ends(p.vertex_id())) {
            const Rat& t = end == 0 ? Rat(0) : model_->edge(e).length;
            if (!covers_germ(*this, e, t, end == 0 ? +1 : -1)) ++out;
        }
    } else {
        if (!covers_germ(*this, p.edge_id(), p.offset(), -1)) ++out;
        if (!covers_germ(*this, p.edge_id(), p.offset(), +1)) ++out;
    }
    return out;
}

std::vector<Point> Subgraph::boundary_points() const {
    std::set<Point> cand;
    for (int v = 0; v < model_->num_vertices(); ++v)
        if (vertex_in_[v]) cand.insert(Point::vertex(v));
    for (int e = 0; e < model_->num_edges(); ++e) {
        for (const Interval& iv : per_edge_[e]) {
            cand.insert(Point::on_edge(*model_, e, iv.a));
            cand.insert(Point::on_edge(*model_, e, iv.b));
        }
    }
    std::vector<Point> out;
    for (const Point& p : cand)
        if (outdegree(p) >= 1) out.push_back(p);
    return out;
}

Subgraph Subgraph::united(const Subgraph& other) const {
    if (model_ != other.model_) throw std::invalid_argument("united: model mismatch");
    Subgraph s(*model_);
    s.per_edge_ = per_edge_;
    for (int e = 0; e < model_->num_edges(); ++e)
        for (const Interval& iv : other.per_edge_[e]) s.per_edge_[e].push_back(iv);
    for (int v = 0; v < model_->num_vertices(); ++v)
        s.vertex_in_[v] = vertex_in_[v] || other.vertex_in_[v];
    s.normalize();
    return s;
}

std::vector<Subgraph> Subgraph::components() const {
    // union-find over interval tokens and member vertices
    struct Tok { int edge; int idx; }; // idx < 0: vertex token -(v+1)
    std::vector<Tok> toks;
    std::map<std::pair<int, int>, int> tok_of_interval;
    std::vector<int> vtok(model_->num_vertices(), -1);
    for (int e = 0; e < model_->num_edges(); ++e)
        for (int i = 0; i < static_cast<int>(per_edge_[e].size()); ++i) {
            tok_of_interval[{e, i}] = static_cast<int>(toks.size());
            toks.push_back({e, i});
        }
    for (int v = 0; v < model_->num_vertices(); ++v)
        if (vertex_in_[v]) {
            vtok[v] = static_cast<int>(toks.size());
            toks.push_back({-1, -(v + 1)});
        }
    std::vector<int> parent(toks.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int e = 0; e < model_->num_edges(); ++e) {
        const Edge& ed = model_->edge(e);
        for (int i = 0; i < static_cast<int>(per_edge_[e].size()); ++i) {
            const Interval& iv = per_edge_[e][i];
            int t = tok_of_interval[{e, i}];
            if (iv.a == 0) unite(t, vtok[ed.u]);
            if (iv.b == ed.length) unite(t, vtok[ed.v]);
        }
    }
    std::map<int, Subgraph> comps;
    for (size_t t = 0; t < toks.size(); ++t) {
        int root = find(static_cast<int>(t));
        auto it = comps.find(root);
        if (it == comps.end()) it = comps.emplace(root, Subgraph(*model_)).first;
        if (toks[t].edge >= 0) {
            const Interval& iv = per_edge_[toks[t].edge][toks[t].idx];
            it->second.add_interval(toks[t].edge, iv.a, iv.b);
        } else {
            it->second.add_vertex(-(toks[t].idx) - 1);
        }
    }
    std::vector<Subgraph> out;
    for (auto& [root, s] : comps) out.push_back(std::move(s));
    return out;
}

bool operator==(const Subgraph& a, const Subgraph& b) {
    return a.model_ == b.model_ && a.per_edge_ == b.per_edge_ && a.vertex_in_ == b.vertex_in_;
}

std::string Subgraph::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int v = 0; v < model_->num_vertices(); ++v)
        if (vertex_in_[v]) {
            if (!first) os << ", ";
            os << "v:" << v;
            first = false;
        }
    for (int e = 0; e < model_->num_edges(); ++e)
        for (const Interval& iv : per_edge_[e]) {
            if (!first) os << ", ";
            os << "e:" << e << "[" << rat_str(iv.a) << "," << rat_str(iv.b) << "]";
            first = false;
        }
    os << "}";
    return os.str();
}

std::vector<Subgraph> components(const Subgraph& s) { return s.components(); }

int boundary_outdegree(const Model& m, const Subgraph& s, const Point& p) {
    (void)m;
    int out = s.outdegree(p);
    if (out == 0) throw std::invalid_argument("boundary_outdegree: not a boundary point");
    return out;
}

std::vector<Subgraph> complement_closure_subgraphs(const Model& m,
                                                   const std::vector<Point>& boundary_set) {
    std::set<Point> cuts(boundary_set.begin(), boundary_set.end());
    std::vector<char> vertex_cut(m.num_vertices(), 0);
    std::vector<std::vector<Rat>> edge_cuts(m.num_edges());
    for (const Point& p : cuts) {
        if (p.is_vertex()) {
            if (p.vertex_id() >= m.num_vertices()) throw std::invalid_argument("point not on model");
            vertex_cut[p.vertex_id()] = 1;
        } else {
            if (p.edge_id() >= m.num_edges()) throw std::invalid_argument("point not on model");
            edge_cuts[p.edge_id()].push_back(p.offset());
        }
    }
    // pieces: closed subintervals between consecutive interior cuts
    struct Piece { int edge; Rat a, b; };
    std::vector<Piece> pieces;
    std::vector<std::vector<int>> pieces_on_edge(m.num_edges());
    for (int e = 0; e < m.num_edges(); ++e) {
        auto& cs = edge_cuts[e];
        std::sort(cs.begin(), cs.end());
        Rat prev = 0;
        for (const Rat& c : cs) {
            pieces_on_edge[e].push_back(static_cast<int>(pieces.size()));
            pieces.push_back({e, prev, c});
            prev = c;
        }
        pieces_on_edge[e].push_back(static_cast<int>(pieces.size()));
        pieces.push_back({e, prev, m.edge(e).length});
    }
    // union-find over pieces; connect through non-cut vertices
    int np = static_cast<int>(pieces.size());
    std::vector<int> parent(np);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    std::vector<int> vertex_piece(m.num_vertices(), -1);
    for (int p = 0; p < np; ++p) {
        const Piece& pc = pieces[p];
        const Edge& ed = m.edge(pc.edge);
        if (pc.a == 0 && !vertex_cut[ed.u]) {
            if (vertex_piece[ed.u] < 0) vertex_piece[ed.u] = p;
            else unite(p, vertex_piece[ed.u]);
        }
        if (pc.b == ed.length && !vertex_cut[ed.v]) {
            if (vertex_piece[ed.v] < 0) vertex_piece[ed.v] = p;
            else unite(p, vertex_piece[ed.v]);
        }
    }
    std::map<int, Subgraph> comps;
    for (int p = 0; p < np; ++p) {
        int root = find(p);
        auto it = comps.find(root);
        if (it == comps.end()) it = comps.emplace(root, Subgraph(m)).first;
        it->second.add_interval(pieces[p].edge, pieces[p].a, pieces[p].b);
    }
    std::vector<Subgraph> out;
    for (auto& [root, s] : comps) out.push_back(std::move(s));
    return out;
}

} // namespace tropcurve
