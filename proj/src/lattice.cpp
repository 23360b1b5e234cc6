#include "tropcurve/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace tropcurve {

Subdivision::Subdivision(std::shared_ptr<const Model> base, const Rat& h)
    : base_(std::move(base)), h_(h), fine_(1, {Edge{0, 0, Rat(1)}}) {
    if (h <= 0) throw std::invalid_argument("granularity must be positive");
    const Model& m = *base_;
    for (const Edge& e : m.edges())
        if (!rat_divides(h, e.length))
            throw std::invalid_argument("granularity does not divide edge length " +
                                        rat_str(e.length));

    int n = m.num_vertices();
    points_.clear();
    for (int v = 0; v < n; ++v) points_.push_back(Point::vertex(v));
    std::vector<Edge> fedges;
    along_.assign(m.num_edges(), {});
    for (int e = 0; e < m.num_edges(); ++e) {
        const Edge& ed = m.edge(e);
        Int segs = rat_quotient(h, ed.length);
        std::vector<int>& chain = along_[e];
        chain.push_back(ed.u);
        for (Int k = 1; k < segs; ++k) {
            chain.push_back(n);
            points_.push_back(Point::on_edge(m, e, Rat(k) * h));
            ++n;
        }
        chain.push_back(ed.v);
        for (size_t i = 0; i + 1 < chain.size(); ++i)
            fedges.push_back(Edge{chain[i], chain[i + 1], h});
    }
    fine_ = Model(n, std::move(fedges));
    adj_.assign(n, {});
    deg_.assign(n, 0);
    std::vector<std::map<int, int>> nb(n);
    for (const Edge& e : fine_.edges()) {
        nb[e.u][e.v] += 1;
        nb[e.v][e.u] += 1;
        deg_[e.u] += 1;
        deg_[e.v] += 1;
    }
    for (int v = 0; v < n; ++v) adj_[v] = {nb[v].begin(), nb[v].end()};
}

std::optional<int> Subdivision::index_of(const Point& p) const {
    if (p.is_vertex()) {
        if (p.vertex_id() >= base_->num_vertices()) return std::nullopt;
        return p.vertex_id();
    }
    Rat q = p.offset() / h_;
    if (!is_integer(q)) return std::nullopt;
    Int k = numerator(q);
    return along_[p.edge_id()][k.convert_to<size_t>()];
}

Divisor Subdivision::to_divisor(const std::vector<Int>& chips) const {
    std::map<Point, Int> c;
    for (int v = 0; v < num_points(); ++v)
        if (chips[v] != 0) c[points_[v]] = chips[v];
    return Divisor(*base_, std::move(c));
}

std::vector<Int> Subdivision::to_vector(const Divisor& d) const {
    std::vector<Int> chips(num_points(), Int(0));
    for (const auto& [p, c] : d.coeffs()) {
        auto idx = index_of(p);
        if (!idx) throw std::invalid_argument("divisor support off the lattice at " + p.str());
        chips[*idx] += c;
    }
    return chips;
}

RationalFunction Subdivision::potential_function(const std::vector<Int>& potential) const {
    std::vector<RationalFunction::EdgeTrack> tracks(base_->num_edges());
    for (int e = 0; e < base_->num_edges(); ++e) {
        RationalFunction::EdgeTrack t;
        const auto& chain = along_[e];
        for (size_t i = 0; i < chain.size(); ++i)
            t.push_back({Rat(i) * h_, Rat(potential[chain[i]]) * h_});
        tracks[e] = std::move(t);
    }
    return RationalFunction::from_tracks(*base_, std::move(tracks));
}

std::vector<Rat> Subdivision::values_at_lattice(const RationalFunction& f) const {
    std::vector<Rat> vals(num_points());
    for (int v = 0; v < num_points(); ++v) vals[v] = evaluate(f, points_[v]).value();
    return vals;
}

Rat default_granularity(const Model& m, const std::vector<Divisor>& divisors,
                        const std::vector<Rat>& extra_constraints) {
    Rat g = 0;
    for (const Edge& e : m.edges()) {
        g = rat_gcd(g, e.length);
        if (e.u == e.v) g = rat_gcd(g, e.length / 2); // split loops
    }
    for (const Divisor& d : divisors)
        for (const auto& [p, c] : d.coeffs())
            if (!p.is_vertex()) g = rat_gcd(g, p.offset());
    for (const Rat& r : extra_constraints) g = rat_gcd(g, r);
    return g;
}

Subdivision subdivide(std::shared_ptr<const Model> m, const Rat& h) {
    return Subdivision(std::move(m), h);
}

std::vector<Int> fire_script(const Subdivision& s, const std::vector<Int>& chips,
                             const std::vector<Int>& script) {
    std::vector<Int> out = chips;
    for (int v = 0; v < s.num_points(); ++v) {
        for (auto [w, mult] : s.neighbors(v)) {
            // each firing of v sends `mult` chips to w; borrowings reversed
            out[v] -= script[v] * mult;
            out[w] += script[v] * mult;
        }
    }
    return out;
}

namespace {

// Dhar burning from q: returns the set (mask) of unburnt vertices.
// A vertex ignites when the number of segment ends from burnt territory
// exceeds its chip count.
std::vector<char> dhar_unburnt(const Subdivision& s, const std::vector<Int>& chips, int q) {
    int n = s.num_points();
    std::vector<char> burnt(n, 0);
    std::vector<Int> heat(n, Int(0));
    std::deque<int> queue{q};
    burnt[q] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto [w, mult] : s.neighbors(v)) {
            if (burnt[w]) continue;
            heat[w] += mult;
            if (heat[w] > chips[w]) {
                burnt[w] = 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<char> unburnt(n);
    for (int v = 0; v < n; ++v) unburnt[v] = !burnt[v];
    return unburnt;
}

} // namespace

Reduction reduce_divisor(const Subdivision& s, std::vector<Int> chips, int q) {
    int n = s.num_points();
    if (static_cast<int>(chips.size()) != n) throw std::invalid_argument("chip vector size");
    if (q < 0 || q >= n) throw std::invalid_argument("bad basepoint");
    std::vector<Int> script(n, Int(0));

    // BFS layers from q
    std::vector<int> dist(n, -1);
    std::deque<int> queue{q};
    dist[q] = 0;
    int maxd = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto [w, mult] : s.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                maxd = std::max(maxd, dist[w]);
                queue.push_back(w);
            }
        }
    }

    // Phase 1: make the divisor effective off q by firing the balls
    // B_k = {dist <= k}; ring k+1 gains mult-to-ring-k chips per firing of
    // B_k and loses to ring k+2 per firing of B_{k+1}. Choosing the firing
    // counts t_k backward (outermost ring first) satisfies every ring.
    if (maxd >= 1) {
        std::vector<Int> down(n, Int(0)), up(n, Int(0));
        for (int v = 0; v < n; ++v) {
            for (auto [w, mult] : s.neighbors(v)) {
                if (dist[w] == dist[v] - 1) down[v] += mult;
                if (dist[w] == dist[v] + 1) up[v] += mult;
            }
        }
        std::vector<Int> t(maxd, Int(0)); // t[k] = firings of B_k, k = 0..maxd-1
        for (int k = maxd - 1; k >= 0; --k) {
            Int need = 0;
            for (int v = 0; v < n; ++v) {
                if (dist[v] != k + 1) continue;
                Int later = (k + 1 < maxd) ? t[k + 1] : Int(0);
                Int deficit = later * up[v] - chips[v];
                if (deficit > 0) need = std::max(need, ceil_div(deficit, down[v]));
            }
            t[k] = need;
        }
        std::vector<Int> g(n, Int(0));
        for (int v = 0; v < n; ++v)
            for (int k = dist[v]; k < maxd; ++k) g[v] += t[k];
        chips = fire_script(s, chips, g);
        for (int v = 0; v < n; ++v) script[v] += g[v];
    }

    // Phase 2: superstabilize off q by repeatedly firing the unburnt set.
    long long guard = 0;
    while (true) {
        std::vector<char> unburnt = dhar_unburnt(s, chips, q);
        bool any = false;
        for (int v = 0; v < n; ++v)
            if (unburnt[v]) any = true;
        if (!any) break;
        std::vector<Int> g(n, Int(0));
        for (int v = 0; v < n; ++v)
            if (unburnt[v]) g[v] = 1;
        chips = fire_script(s, chips, g);
        for (int v = 0; v < n; ++v) script[v] += g[v];
        if (++guard > 10000000LL) throw std::runtime_error("reduce_divisor: did not stabilize");
    }

    // normalize the script so that script[q] = 0 (constants act trivially)
    Int base = script[q];
    for (int v = 0; v < n; ++v) script[v] -= base;
    return Reduction{std::move(chips), std::move(script)};
}

} // namespace tropcurve
