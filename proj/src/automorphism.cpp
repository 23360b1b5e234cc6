#include "tropcurve/automorphism.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tropcurve {

AutFrame::AutFrame(std::shared_ptr<const Model> base, Model frame, std::vector<SegChart> charts)
    : base_(std::move(base)), frame_(std::move(frame)), charts_(std::move(charts)) {
    by_base_edge_.assign(base_->num_edges(), {});
    by_frame_edge_.assign(frame_.num_edges(), {});
    for (int i = 0; i < static_cast<int>(charts_.size()); ++i) {
        by_base_edge_.at(charts_[i].base_edge).push_back(i);
        by_frame_edge_.at(charts_[i].frame_edge).push_back(i);
    }
    // h-lattices on the base model are stable under any simplicial frame map
    // when h divides every chart boundary and every frame edge length; the
    // half-lengths keep fixed midpoints of reversed edges representable.
    Rat g = 0;
    for (const SegChart& c : charts_) {
        g = rat_gcd(g, c.b0);
        g = rat_gcd(g, c.b1);
        g = rat_gcd(g, c.f0);
        g = rat_gcd(g, c.f0 + c.dir * (c.b1 - c.b0));
    }
    for (const Edge& e : frame_.edges()) g = rat_gcd(g, e.length / 2);
    stability_ = g;

    base_vertex_in_frame_.assign(base_->num_vertices(), Point());
    std::vector<char> have_bv(base_->num_vertices(), 0);
    frame_vertex_in_base_.assign(frame_.num_vertices(), Point());
    std::vector<char> have_fv(frame_.num_vertices(), 0);
    for (const SegChart& c : charts_) {
        const Edge& be = base_->edge(c.base_edge);
        auto note_base = [&](const Rat& t) {
            Point p = Point::on_edge(*base_, c.base_edge, t);
            Rat f = c.f0 + c.dir * (t - c.b0);
            Point fp = Point::on_edge(frame_, c.frame_edge, f);
            if (p.is_vertex() && !have_bv[p.vertex_id()]) {
                base_vertex_in_frame_[p.vertex_id()] = fp;
                have_bv[p.vertex_id()] = 1;
            }
            if (fp.is_vertex() && !have_fv[fp.vertex_id()]) {
                frame_vertex_in_base_[fp.vertex_id()] = p;
                have_fv[fp.vertex_id()] = 1;
            }
        };
        note_base(c.b0);
        note_base(c.b1);
        (void)be;
    }
    for (int v = 0; v < base_->num_vertices(); ++v)
        if (!have_bv[v]) throw std::logic_error("frame charts do not cover base vertex");
    for (int v = 0; v < frame_.num_vertices(); ++v)
        if (!have_fv[v]) throw std::logic_error("frame charts do not cover frame vertex");
}

std::shared_ptr<const AutFrame> AutFrame::identity_frame(std::shared_ptr<const Model> base) {
    Model frame = *base;
    std::vector<SegChart> charts;
    for (int e = 0; e < base->num_edges(); ++e)
        charts.push_back({e, Rat(0), base->edge(e).length, e, Rat(0), +1});
    return std::make_shared<AutFrame>(std::move(base), std::move(frame), std::move(charts));
}

Point AutFrame::to_frame(const Point& p) const {
    if (p.is_vertex()) return base_vertex_in_frame_.at(p.vertex_id());
    for (int ci : by_base_edge_.at(p.edge_id())) {
        const SegChart& c = charts_[ci];
        if (c.b0 <= p.offset() && p.offset() <= c.b1) {
            Rat f = c.f0 + c.dir * (p.offset() - c.b0);
            return Point::on_edge(frame_, c.frame_edge, f);
        }
    }
    throw std::logic_error("to_frame: point not covered by charts");
}

Point AutFrame::to_base(const Point& p) const {
    if (p.is_vertex()) return frame_vertex_in_base_.at(p.vertex_id());
    for (int ci : by_frame_edge_.at(p.edge_id())) {
        const SegChart& c = charts_[ci];
        Rat f_lo = c.f0, f_hi = c.f0 + c.dir * (c.b1 - c.b0);
        if (f_lo > f_hi) std::swap(f_lo, f_hi);
        if (f_lo <= p.offset() && p.offset() <= f_hi) {
            Rat t = c.b0 + c.dir * (p.offset() - c.f0); // dir is its own inverse
            return Point::on_edge(*base_, c.base_edge, t);
        }
    }
    throw std::logic_error("to_base: point not covered by charts");
}

Automorphism::Automorphism(std::shared_ptr<const AutFrame> frame, std::vector<int> vertex_image,
                           std::vector<std::pair<int, bool>> edge_image)
    : frame_(std::move(frame)), vimg_(std::move(vertex_image)), eimg_(std::move(edge_image)) {
    const Model& f = frame_->frame();
    if (static_cast<int>(vimg_.size()) != f.num_vertices() ||
        static_cast<int>(eimg_.size()) != f.num_edges())
        throw std::invalid_argument("automorphism: image size mismatch");
    std::vector<char> vseen(f.num_vertices(), 0), eseen(f.num_edges(), 0);
    for (int v : vimg_) {
        if (v < 0 || v >= f.num_vertices() || vseen[v])
            throw std::invalid_argument("automorphism: vertex map is not a permutation");
        vseen[v] = 1;
    }
    for (int e = 0; e < f.num_edges(); ++e) {
        auto [ie, rev] = eimg_[e];
        if (ie < 0 || ie >= f.num_edges() || eseen[ie])
            throw std::invalid_argument("automorphism: edge map is not a bijection");
        eseen[ie] = 1;
        const Edge& src = f.edge(e);
        const Edge& dst = f.edge(ie);
        if (src.length != dst.length)
            throw std::invalid_argument("automorphism is not length-preserving");
        int iu = rev ? dst.v : dst.u;
        int iv = rev ? dst.u : dst.v;
        if (vimg_[src.u] != iu || vimg_[src.v] != iv)
            throw std::invalid_argument("automorphism is not incidence-preserving");
    }
}

bool Automorphism::is_identity() const {
    for (int v = 0; v < static_cast<int>(vimg_.size()); ++v)
        if (vimg_[v] != v) return false;
    for (int e = 0; e < static_cast<int>(eimg_.size()); ++e)
        if (eimg_[e] != std::make_pair(e, false)) return false;
    return true;
}

Automorphism Automorphism::inverse() const {
    std::vector<int> vinv(vimg_.size());
    std::vector<std::pair<int, bool>> einv(eimg_.size());
    for (int v = 0; v < static_cast<int>(vimg_.size()); ++v) vinv[vimg_[v]] = v;
    for (int e = 0; e < static_cast<int>(eimg_.size()); ++e)
        einv[eimg_[e].first] = {e, eimg_[e].second};
    return Automorphism(frame_, std::move(vinv), std::move(einv));
}

std::string Automorphism::str() const {
    std::ostringstream os;
    os << "map";
    for (int v = 0; v < static_cast<int>(vimg_.size()); ++v) os << " v" << v << "->" << vimg_[v];
    os << " ;";
    for (int e = 0; e < static_cast<int>(eimg_.size()); ++e)
        os << " e" << e << "->" << eimg_[e].first << (eimg_[e].second ? "-" : "+");
    return os.str();
}

Point act_on_point(const Automorphism& sigma, const Point& p) {
    const AutFrame& fr = sigma.frame();
    Point fp = fr.to_frame(p);
    Point fq;
    if (fp.is_vertex()) {
        fq = Point::vertex(sigma.vertex_image()[fp.vertex_id()]);
    } else {
        auto [ie, rev] = sigma.edge_image()[fp.edge_id()];
        Rat t = rev ? fr.frame().edge(ie).length - fp.offset() : fp.offset();
        fq = Point::on_edge(fr.frame(), ie, t);
    }
    return fr.to_base(fq);
}

Automorphism compose(const Automorphism& sigma, const Automorphism& tau) {
    if (sigma.frame_ptr() != tau.frame_ptr())
        throw std::invalid_argument("compose: automorphisms on different frames");
    std::vector<int> vimg(tau.vertex_image().size());
    std::vector<std::pair<int, bool>> eimg(tau.edge_image().size());
    for (size_t v = 0; v < vimg.size(); ++v) vimg[v] = sigma.vertex_image()[tau.vertex_image()[v]];
    for (size_t e = 0; e < eimg.size(); ++e) {
        auto [e1, r1] = tau.edge_image()[e];
        auto [e2, r2] = sigma.edge_image()[e1];
        eimg[e] = {e2, r1 != r2};
    }
    return Automorphism(sigma.frame_ptr(), std::move(vimg), std::move(eimg));
}

FiniteGroup::FiniteGroup(std::vector<Automorphism> elements) : elems_(std::move(elements)) {
    if (elems_.empty()) throw std::invalid_argument("group must be nonempty");
    for (const Automorphism& a : elems_)
        if (a.frame_ptr() != elems_.front().frame_ptr())
            throw std::invalid_argument("group elements on different frames");
    std::map<Automorphism, int> index;
    for (int i = 0; i < order(); ++i) {
        if (!index.emplace(elems_[i], i).second)
            throw std::invalid_argument("duplicate group element");
        if (elems_[i].is_identity()) id_idx_ = i;
    }
    if (id_idx_ < 0) throw std::invalid_argument("group does not contain the identity");
    table_.assign(order(), std::vector<int>(order(), -1));
    inv_.assign(order(), -1);
    for (int i = 0; i < order(); ++i) {
        for (int j = 0; j < order(); ++j) {
            Automorphism c = compose(elems_[i], elems_[j]);
            auto it = index.find(c);
            if (it == index.end())
                throw std::invalid_argument("set is not closed under composition");
            table_[i][j] = it->second;
            if (it->second == id_idx_) inv_[i] = j;
        }
    }
    for (int i = 0; i < order(); ++i)
        if (inv_[i] < 0) throw std::invalid_argument("element without inverse");
}

CanonicalModelResult canonical_model(const Model& m) {
    std::vector<int> essential;
    for (int v = 0; v < m.num_vertices(); ++v)
        if (m.valence(v) != 2) essential.push_back(v);
    if (essential.empty())
        return CanonicalModelResult{Model(1, {Edge{0, 0, m.total_length()}}), true};
    std::vector<int> vmap(m.num_vertices(), -1);
    for (size_t i = 0; i < essential.size(); ++i) vmap[essential[i]] = static_cast<int>(i);

    // walk chains of valence-2 vertices between essential vertices
    std::vector<std::array<char, 2>> used(m.num_edges(), {0, 0});
    std::vector<Edge> cedges;
    for (int sv : essential) {
        for (auto [e0, end0] : m.incident_ends(sv)) {
            if (used[e0][end0]) continue;
            int e = e0, end = end0;
            Rat total = 0;
            int terminal = -1;
            while (true) {
                used[e][end] = 1;
                bool forward = (end == 0);
                total += m.edge(e).length;
                int w = forward ? m.edge(e).v : m.edge(e).u;
                int arrival_end = forward ? 1 : 0;
                used[e][arrival_end] = 1;
                if (vmap[w] >= 0) {
                    terminal = w;
                    break;
                }
                // valence-2 continuation through w
                int ne = -1, nend = -1;
                for (auto [e2, end2] : m.incident_ends(w)) {
                    if (e2 == e && end2 == arrival_end) continue;
                    ne = e2;
                    nend = end2;
                }
                if (ne < 0) throw std::logic_error("broken valence-2 chain");
                e = ne;
                end = nend;
            }
            cedges.push_back(Edge{vmap[sv], vmap[terminal], total});
        }
    }
    return CanonicalModelResult{Model(static_cast<int>(essential.size()), cedges), false};
}

namespace {

std::shared_ptr<const AutFrame> canonical_frame(std::shared_ptr<const Model> m) {
    std::vector<int> essential;
    for (int v = 0; v < m->num_vertices(); ++v)
        if (m->valence(v) != 2) essential.push_back(v);
    if (essential.empty()) throw std::invalid_argument("circle has no canonical frame");
    std::vector<int> vmap(m->num_vertices(), -1);
    for (size_t i = 0; i < essential.size(); ++i) vmap[essential[i]] = static_cast<int>(i);

    std::vector<std::array<char, 2>> used(m->num_edges(), {0, 0});
    std::vector<Edge> cedges;
    std::vector<SegChart> charts;
    for (int sv : essential) {
        for (auto [e0, end0] : m->incident_ends(sv)) {
            if (used[e0][end0]) continue;
            int ce = static_cast<int>(cedges.size());
            int e = e0, end = end0;
            Rat acc = 0;
            int terminal = -1;
            while (true) {
                used[e][end] = 1;
                bool forward = (end == 0);
                const Rat& len = m->edge(e).length;
                if (forward)
                    charts.push_back({e, Rat(0), len, ce, acc, +1});
                else
                    charts.push_back({e, Rat(0), len, ce, acc + len, -1});
                acc += len;
                int w = forward ? m->edge(e).v : m->edge(e).u;
                int arrival_end = forward ? 1 : 0;
                used[e][arrival_end] = 1;
                if (vmap[w] >= 0) {
                    terminal = w;
                    break;
                }
                int ne = -1, nend = -1;
                for (auto [e2, end2] : m->incident_ends(w)) {
                    if (e2 == e && end2 == arrival_end) continue;
                    ne = e2;
                    nend = end2;
                }
                if (ne < 0) throw std::logic_error("broken valence-2 chain");
                e = ne;
                end = nend;
            }
            cedges.push_back(Edge{vmap[sv], vmap[terminal], acc});
        }
    }
    Model frame(static_cast<int>(essential.size()), cedges);
    return std::make_shared<AutFrame>(std::move(m), std::move(frame), std::move(charts));
}

// All simplicial automorphisms of the frame model: backtracking over vertex
// assignments, then bijections within parallel-edge classes, then loop flips.
std::vector<Automorphism> enumerate_simplicial(const std::shared_ptr<const AutFrame>& fr) {
    const Model& f = fr->frame();
    int n = f.num_vertices();

    auto vertex_key = [&](int v) {
        std::vector<std::pair<Rat, int>> k; // (length, is_loop) of incident ends
        for (auto [e, end] : f.incident_ends(v)) {
            (void)end;
            k.push_back({f.edge(e).length, f.is_loop(e) ? 1 : 0});
        }
        std::sort(k.begin(), k.end());
        return k;
    };
    std::vector<std::vector<std::pair<Rat, int>>> vkeys(n);
    for (int v = 0; v < n; ++v) vkeys[v] = vertex_key(v);

    // edge classes keyed by (unordered endpoints, length)
    std::map<std::tuple<int, int, Rat>, std::vector<int>> classes;
    for (int e = 0; e < f.num_edges(); ++e) {
        const Edge& ed = f.edge(e);
        classes[{std::min(ed.u, ed.v), std::max(ed.u, ed.v), ed.length}].push_back(e);
    }

    std::vector<Automorphism> out;
    std::vector<int> vimg(n, -1);
    std::vector<char> taken(n, 0);

    auto emit_for_vertex_map = [&]() {
        // check class structure is preserved and collect class pairs
        std::vector<std::pair<const std::vector<int>*, const std::vector<int>*>> pairs;
        for (const auto& [key, src] : classes) {
            auto [a, b, len] = key;
            int ia = vimg[a], ib = vimg[b];
            auto it = classes.find({std::min(ia, ib), std::max(ia, ib), len});
            if (it == classes.end() || it->second.size() != src.size()) return;
            pairs.push_back({&src, &it->second});
        }
        // product over classes of all bijections, with flips for loops
        std::vector<std::pair<int, bool>> eimg(f.num_edges(), {-1, false});
        std::function<void(size_t)> rec = [&](size_t ci) {
            if (ci == pairs.size()) {
                out.push_back(Automorphism(fr, vimg, eimg));
                return;
            }
            const auto& src = *pairs[ci].first;
            std::vector<int> tgt = *pairs[ci].second;
            std::sort(tgt.begin(), tgt.end());
            do {
                bool loop_class = f.is_loop(src[0]);
                int nflips = loop_class ? static_cast<int>(src.size()) : 0;
                for (int mask = 0; mask < (1 << nflips); ++mask) {
                    for (size_t i = 0; i < src.size(); ++i) {
                        bool rev;
                        if (loop_class) {
                            rev = (mask >> i) & 1; // loop end-swap is a free choice
                        } else {
                            const Edge& s = f.edge(src[i]);
                            const Edge& d = f.edge(tgt[i]);
                            rev = (vimg[s.u] == d.v && vimg[s.v] == d.u);
                        }
                        eimg[src[i]] = {tgt[i], rev};
                    }
                    rec(ci + 1);
                }
            } while (std::next_permutation(tgt.begin(), tgt.end()));
        };
        rec(0);
    };

    std::function<void(int)> assign = [&](int v) {
        if (v == n) {
            emit_for_vertex_map();
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (taken[w] || vkeys[v] != vkeys[w]) continue;
            vimg[v] = w;
            taken[w] = 1;
            assign(v + 1);
            taken[w] = 0;
        }
        vimg[v] = -1;
    };
    assign(0);
    return out;
}

} // namespace

FiniteGroup compute_aut(std::shared_ptr<const Model> m) {
    if (m->is_circle())
        throw std::invalid_argument(
            "automorphism group of a circle is infinite; use finite_subgroup_of_circle");
    auto fr = canonical_frame(m);
    return FiniteGroup(enumerate_simplicial(fr));
}

namespace {

// Arclength coordinates on a circle model: position of each vertex along a
// fixed traversal plus the traversal direction of each edge.
struct CircleAtlas {
    Rat circumference;
    std::vector<Rat> vertex_pos;
    std::vector<std::pair<Rat, bool>> edge_start; // (start position, aligned with orientation?)
};

CircleAtlas circle_atlas(const Model& m) {
    if (!m.is_circle()) throw std::invalid_argument("model is not a circle");
    CircleAtlas at;
    at.circumference = m.total_length();
    at.vertex_pos.assign(m.num_vertices(), Rat(0));
    at.edge_start.assign(m.num_edges(), {Rat(0), true});
    Rat pos = 0;
    // start at vertex 0 along the lowest incident (edge, end)
    auto ends0 = m.incident_ends(0);
    std::sort(ends0.begin(), ends0.end());
    int e = ends0.front().first, end = ends0.front().second;
    for (int step = 0; step < m.num_edges(); ++step) {
        bool forward = (end == 0);
        at.edge_start[e] = {pos, forward};
        pos += m.edge(e).length;
        int w = forward ? m.edge(e).v : m.edge(e).u;
        int arrival_end = forward ? 1 : 0;
        if (step + 1 == m.num_edges()) break; // back at the start vertex
        at.vertex_pos[w] = pos;
        int ne = -1, nend = -1;
        for (auto [e2, end2] : m.incident_ends(w)) {
            if (e2 == e && end2 == arrival_end) continue;
            ne = e2;
            nend = end2;
        }
        if (ne < 0) throw std::logic_error("broken valence-2 chain");
        e = ne;
        end = nend;
    }
    return at;
}

Rat circle_position(const CircleAtlas& at, const Model& m, const Point& p) {
    if (p.is_vertex()) return at.vertex_pos[p.vertex_id()];
    auto [start, aligned] = at.edge_start[p.edge_id()];
    Rat off = aligned ? p.offset() : m.edge(p.edge_id()).length - p.offset();
    Rat pos = start + off;
    if (pos >= at.circumference) pos -= at.circumference;
    return pos;
}

Rat mod_c(Rat x, const Rat& c) {
    Rat q = x / c;
    Int f = numerator(q) / denominator(q);
    if (q < 0 && q != Rat(f)) f -= 1;
    return x - Rat(f) * c;
}

} // namespace

FiniteGroup finite_subgroup_of_circle(std::shared_ptr<const Model> m,
                                      const std::vector<CircleGenerator>& gens) {
    if (!m->is_circle()) throw std::invalid_argument("model is not a circle");
    CircleAtlas at = circle_atlas(*m);
    const Rat C = at.circumference;

    // granularity making every generator (and the group it generates) simplicial
    Rat h = C;
    for (const Rat& p : at.vertex_pos) h = rat_gcd(h, p);
    std::vector<std::pair<bool, Rat>> params; // (is_reflection, rotation arc | doubled axis pos)
    for (const CircleGenerator& g : gens) {
        if (g.kind == CircleGenerator::Kind::Rotation) {
            Rat r = mod_c(g.rotation_arc, C);
            h = rat_gcd(h, r);
            params.push_back({false, r});
        } else {
            Rat pa = circle_position(at, *m, g.axis_a);
            Rat pb = circle_position(at, *m, g.axis_b);
            if (mod_c(pb - pa, C) != C / 2 && mod_c(pa - pb, C) != C / 2)
                throw std::invalid_argument("reflection axis points must be antipodal");
            Rat two_a = mod_c(2 * pa, C);
            h = rat_gcd(h, two_a);
            params.push_back({true, two_a});
        }
    }

    // frame: cycle of C/h edges of length h, vertex k at position k*h
    Int nseg = rat_quotient(h, C);
    int n = nseg.convert_to<int>();
    std::vector<Edge> fedges;
    for (int i = 0; i < n; ++i) fedges.push_back(Edge{i, (i + 1) % n, h});
    Model frame(n, fedges);

    std::vector<SegChart> charts;
    for (int e = 0; e < m->num_edges(); ++e) {
        auto [start, aligned] = at.edge_start[e];
        const Rat& len = m->edge(e).length;
        Int k0 = rat_quotient(h, start);
        Int nk = rat_quotient(h, len);
        for (Int k = 0; k < nk; ++k) {
            int fe = ((k0 + k) % nseg).convert_to<int>();
            Rat seg_lo = Rat(k) * h; // position offset from the edge's start position
            if (aligned)
                charts.push_back({e, seg_lo, seg_lo + h, fe, Rat(0), +1});
            else
                charts.push_back({e, len - seg_lo - h, len - seg_lo, fe, h, -1});
        }
    }
    auto fr = std::make_shared<AutFrame>(m, std::move(frame), std::move(charts));

    auto rotation_auto = [&](const Int& k) {
        std::vector<int> vimg(n);
        std::vector<std::pair<int, bool>> eimg(n);
        for (int i = 0; i < n; ++i) {
            vimg[i] = ((Int(i) + k) % nseg).convert_to<int>();
            eimg[i] = {vimg[i], false};
        }
        return Automorphism(fr, std::move(vimg), std::move(eimg));
    };
    auto reflection_auto = [&](const Int& kk) { // pos -> kk*h - pos
        std::vector<int> vimg(n);
        std::vector<std::pair<int, bool>> eimg(n);
        for (int i = 0; i < n; ++i) {
            vimg[i] = (((kk - i) % nseg + nseg) % nseg).convert_to<int>();
            int te = (((kk - i - 1) % nseg + nseg) % nseg).convert_to<int>();
            eimg[i] = {te, true};
        }
        return Automorphism(fr, std::move(vimg), std::move(eimg));
    };

    std::vector<Automorphism> gen_autos{rotation_auto(Int(0))};
    for (auto& [is_refl, param] : params) {
        Int k = rat_quotient(h, param);
        gen_autos.push_back(is_refl ? reflection_auto(k) : rotation_auto(k));
    }
    return subgroup_generated(std::move(gen_autos));
}

FiniteGroup subgroup_generated(std::vector<Automorphism> gens, int budget) {
    if (gens.empty()) throw std::invalid_argument("subgroup_generated: no generators (use trivial_group)");
    auto fr = gens.front().frame_ptr();
    std::set<Automorphism> closure;
    // identity on the shared frame
    {
        std::vector<int> vimg(fr->frame().num_vertices());
        std::iota(vimg.begin(), vimg.end(), 0);
        std::vector<std::pair<int, bool>> eimg;
        for (int e = 0; e < fr->frame().num_edges(); ++e) eimg.push_back({e, false});
        closure.insert(Automorphism(fr, std::move(vimg), std::move(eimg)));
    }
    for (const Automorphism& g : gens) {
        closure.insert(g);
        closure.insert(g.inverse());
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Automorphism> cur(closure.begin(), closure.end());
        for (const Automorphism& a : cur) {
            for (const Automorphism& b : cur) {
                Automorphism c = compose(a, b);
                if (closure.insert(c).second) grew = true;
                if (static_cast<int>(closure.size()) > budget)
                    throw std::runtime_error("subgroup_generated: closure exceeds budget");
            }
        }
    }
    return FiniteGroup(std::vector<Automorphism>(closure.begin(), closure.end()));
}

FiniteGroup trivial_group(std::shared_ptr<const Model> m) {
    auto fr = AutFrame::identity_frame(std::move(m));
    std::vector<int> vimg(fr->frame().num_vertices());
    std::iota(vimg.begin(), vimg.end(), 0);
    std::vector<std::pair<int, bool>> eimg;
    for (int e = 0; e < fr->frame().num_edges(); ++e) eimg.push_back({e, false});
    return FiniteGroup({Automorphism(fr, std::move(vimg), std::move(eimg))});
}

Automorphism explicit_automorphism(std::shared_ptr<const Model> m, std::vector<int> vertex_image,
                                   std::vector<std::pair<int, bool>> edge_image) {
    auto fr = AutFrame::identity_frame(std::move(m));
    return Automorphism(fr, std::move(vertex_image), std::move(edge_image));
}

} // namespace tropcurve
