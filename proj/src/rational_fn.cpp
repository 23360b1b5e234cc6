#include "tropcurve/rational_fn.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tropcurve {

namespace {

// slope of the track segment [i, i+1]
Rat seg_slope(const RationalFunction::EdgeTrack& t, size_t i) {
    return (t[i + 1].second - t[i].second) / (t[i + 1].first - t[i].first);
}

} // namespace

RationalFunction RationalFunction::bottom(const Model& m) {
    RationalFunction f;
    f.model_ = &m;
    f.bottom_ = true;
    return f;
}

RationalFunction RationalFunction::constant(const Model& m, const Rat& value) {
    std::vector<EdgeTrack> tracks(m.num_edges());
    for (int e = 0; e < m.num_edges(); ++e)
        tracks[e] = {{Rat(0), value}, {m.edge(e).length, value}};
    return from_tracks(m, std::move(tracks));
}

RationalFunction RationalFunction::from_tracks(const Model& m, std::vector<EdgeTrack> tracks) {
    if (static_cast<int>(tracks.size()) != m.num_edges())
        throw std::invalid_argument("rational function: one track per edge required");
    for (int e = 0; e < m.num_edges(); ++e) {
        const EdgeTrack& t = tracks[e];
        if (t.size() < 2 || t.front().first != 0 || t.back().first != m.edge(e).length)
            throw std::invalid_argument("rational function: track must span the whole edge");
        for (size_t i = 0; i + 1 < t.size(); ++i) {
            if (t[i].first >= t[i + 1].first)
                throw std::invalid_argument("rational function: breakpoints must be ascending");
            if (!is_integer(seg_slope(t, i)))
                throw std::invalid_argument("rational function: non-integer slope");
        }
    }
    // continuity at shared vertices
    std::vector<Rat> vertex_value(m.num_vertices());
    std::vector<char> have(m.num_vertices(), 0);
    for (int e = 0; e < m.num_edges(); ++e) {
        const Edge& ed = m.edge(e);
        for (int side = 0; side < 2; ++side) {
            int v = side == 0 ? ed.u : ed.v;
            const Rat& val = side == 0 ? tracks[e].front().second : tracks[e].back().second;
            if (!have[v]) {
                vertex_value[v] = val;
                have[v] = 1;
            } else if (vertex_value[v] != val) {
                throw std::invalid_argument("rational function: discontinuous at a vertex");
            }
        }
    }
    RationalFunction f;
    f.model_ = &m;
    f.tracks_ = std::move(tracks);
    f.prune();
    return f;
}

RationalFunction RationalFunction::from_vertex_values(const Model& m,
                                                      const std::vector<Rat>& values) {
    if (static_cast<int>(values.size()) != m.num_vertices())
        throw std::invalid_argument("from_vertex_values: size mismatch");
    std::vector<EdgeTrack> tracks(m.num_edges());
    for (int e = 0; e < m.num_edges(); ++e) {
        const Edge& ed = m.edge(e);
        tracks[e] = {{Rat(0), values[ed.u]}, {ed.length, values[ed.v]}};
    }
    return from_tracks(m, std::move(tracks));
}

const std::vector<RationalFunction::EdgeTrack>& RationalFunction::tracks() const {
    if (bottom_) throw std::domain_error("bottom function has no tracks");
    return tracks_;
}

void RationalFunction::prune() {
    for (auto& t : tracks_) {
        EdgeTrack out;
        out.push_back(t.front());
        for (size_t i = 1; i + 1 < t.size(); ++i) {
            Rat sl = (t[i].second - out.back().second) / (t[i].first - out.back().first);
            Rat sr = seg_slope(t, i);
            if (sl != sr) out.push_back(t[i]);
        }
        out.push_back(t.back());
        t = std::move(out);
    }
}

std::string RationalFunction::str() const {
    if (bottom_) return "-inf";
    std::ostringstream os;
    for (int e = 0; e < static_cast<int>(tracks_.size()); ++e) {
        if (e) os << " ";
        os << "e" << e << ":";
        for (size_t i = 0; i < tracks_[e].size(); ++i) {
            if (i) os << ",";
            os << "(" << rat_str(tracks_[e][i].first) << ";" << rat_str(tracks_[e][i].second)
               << ")";
        }
    }
    return os.str();
}

TropScalar evaluate(const RationalFunction& f, const Point& p) {
    if (f.is_bottom()) return TropScalar::neg_inf();
    const Model& m = f.model();
    int e;
    Rat t;
    if (p.is_vertex()) {
        if (p.vertex_id() >= m.num_vertices()) throw std::invalid_argument("point not on model");
        auto [e0, end0] = m.incident_ends(p.vertex_id()).front();
        e = e0;
        t = end0 == 0 ? Rat(0) : m.edge(e0).length;
    } else {
        if (p.edge_id() >= m.num_edges()) throw std::invalid_argument("point not on model");
        e = p.edge_id();
        t = p.offset();
    }
    const auto& track = f.tracks()[e];
    for (size_t i = 0; i + 1 < track.size(); ++i) {
        if (track[i].first <= t && t <= track[i + 1].first) {
            Rat sl = (track[i + 1].second - track[i].second) /
                     (track[i + 1].first - track[i].first);
            return TropScalar(track[i].second + sl * (t - track[i].first));
        }
    }
    throw std::logic_error("evaluate: offset outside track");
}

namespace {

// outgoing slope on edge e at offset t in direction dir (+1 toward length)
Rat outgoing_slope(const RationalFunction& f, int e, const Rat& t, int dir) {
    const auto& track = f.tracks()[e];
    for (size_t i = 0; i + 1 < track.size(); ++i) {
        if (dir > 0 && track[i].first <= t && t < track[i + 1].first) {
            return (track[i + 1].second - track[i].second) /
                   (track[i + 1].first - track[i].first);
        }
        if (dir < 0 && track[i].first < t && t <= track[i + 1].first) {
            return -(track[i + 1].second - track[i].second) /
                   (track[i + 1].first - track[i].first);
        }
    }
    throw std::logic_error("outgoing_slope: offset outside track");
}

} // namespace

Int ord_at(const RationalFunction& f, const Point& p) {
    if (f.is_bottom()) throw std::domain_error("ord_at: bottom function");
    const Model& m = f.model();
    Rat total = 0;
    if (p.is_vertex()) {
        for (auto [e, end] : m.incident_ends(p.vertex_id()))
            total += outgoing_slope(f, e, end == 0 ? Rat(0) : m.edge(e).length,
                                    end == 0 ? +1 : -1);
    } else {
        total += outgoing_slope(f, p.edge_id(), p.offset(), +1);
        total += outgoing_slope(f, p.edge_id(), p.offset(), -1);
    }
    if (!is_integer(total)) throw std::logic_error("ord_at: non-integer order");
    return numerator(total);
}

std::vector<Point> breakpoints(const RationalFunction& f) {
    const Model& m = f.model();
    std::set<Point> pts;
    for (int v = 0; v < m.num_vertices(); ++v) pts.insert(Point::vertex(v));
    for (int e = 0; e < m.num_edges(); ++e) {
        const auto& track = f.tracks()[e];
        for (size_t i = 1; i + 1 < track.size(); ++i)
            pts.insert(Point::on_edge(m, e, track[i].first));
    }
    return std::vector<Point>(pts.begin(), pts.end());
}

Divisor div(const RationalFunction& f) {
    if (f.is_bottom()) throw std::domain_error("div: bottom function");
    std::map<Point, Int> coeffs;
    for (const Point& p : breakpoints(f)) {
        Int o = ord_at(f, p);
        if (o != 0) coeffs[p] = o;
    }
    return Divisor(f.model(), std::move(coeffs));
}

RationalFunction trop_sum(const RationalFunction& f, const RationalFunction& g) {
    if (&f.model() != &g.model()) throw std::invalid_argument("trop_sum: model mismatch");
    if (f.is_bottom()) return g;
    if (g.is_bottom()) return f;
    const Model& m = f.model();
    std::vector<RationalFunction::EdgeTrack> tracks(m.num_edges());
    for (int e = 0; e < m.num_edges(); ++e) {
        // merge breakpoint offsets, then insert exact crossings
        std::set<Rat> offs;
        for (const auto& [t, v] : f.tracks()[e]) offs.insert(t);
        for (const auto& [t, v] : g.tracks()[e]) offs.insert(t);
        std::vector<Rat> base(offs.begin(), offs.end());
        std::vector<Rat> full;
        for (size_t i = 0; i < base.size(); ++i) {
            full.push_back(base[i]);
            if (i + 1 == base.size()) break;
            Point a = Point::on_edge(m, e, base[i]);
            Point b = Point::on_edge(m, e, base[i + 1]);
            Rat fa = evaluate(f, a).value(), fb = evaluate(f, b).value();
            Rat ga = evaluate(g, a).value(), gb = evaluate(g, b).value();
            Rat da = fa - ga, db = fb - gb;
            if ((da > 0 && db < 0) || (da < 0 && db > 0)) {
                Rat cross = base[i] + (base[i + 1] - base[i]) * da / (da - db);
                full.push_back(cross);
            }
        }
        RationalFunction::EdgeTrack t;
        for (const Rat& o : full) {
            Point p = Point::on_edge(m, e, o);
            Rat fv = evaluate(f, p).value(), gv = evaluate(g, p).value();
            t.push_back({o, std::max(fv, gv)});
        }
        tracks[e] = std::move(t);
    }
    return RationalFunction::from_tracks(m, std::move(tracks));
}

RationalFunction scalar_shift(const TropScalar& a, const RationalFunction& f) {
    if (a.is_neg_inf() || f.is_bottom()) return RationalFunction::bottom(f.model());
    std::vector<RationalFunction::EdgeTrack> tracks = f.tracks();
    for (auto& t : tracks)
        for (auto& [o, v] : t) v += a.value();
    return RationalFunction::from_tracks(f.model(), std::move(tracks));
}

RationalFunction compose(const RationalFunction& f, const Automorphism& sigma) {
    if (&f.model() != &sigma.base_model()) throw std::invalid_argument("compose: model mismatch");
    if (f.is_bottom()) return f;
    const Model& m = f.model();
    Automorphism inv = sigma.inverse();

    // marks whose preimages are potential breakpoints of f ∘ sigma
    std::vector<Point> marks = breakpoints(f);
    std::vector<RationalFunction::EdgeTrack> tracks(m.num_edges());
    for (int e = 0; e < m.num_edges(); ++e) {
        const Rat& len = m.edge(e).length;
        std::set<Rat> offs{Rat(0), len};
        for (const Point& mark : marks) {
            Point q = act_on_point(inv, mark);
            if (!q.is_vertex() && q.edge_id() == e) offs.insert(q.offset());
        }
        RationalFunction::EdgeTrack t;
        for (const Rat& o : offs) {
            Point img = act_on_point(sigma, Point::on_edge(m, e, o));
            t.push_back({o, evaluate(f, img).value()});
        }
        tracks[e] = std::move(t);
    }
    return RationalFunction::from_tracks(m, std::move(tracks));
}

TropScalar max_value(const RationalFunction& f) {
    if (f.is_bottom()) throw std::domain_error("max_value: bottom function");
    Rat best;
    bool first = true;
    for (const auto& track : f.tracks()) {
        for (const auto& [o, v] : track) {
            if (first || v > best) {
                best = v;
                first = false;
            }
        }
    }
    return TropScalar(best);
}

RationalFunction normalize_max_zero(const RationalFunction& f) {
    return scalar_shift(TropScalar(-max_value(f).value()), f);
}

} // namespace tropcurve
