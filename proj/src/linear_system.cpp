#include "tropcurve/linear_system.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

namespace tropcurve {

namespace {

Rat context_granularity(const Model& m, const Divisor& d, const ContextOptions& opts) {
    if (&d.model() != &m) throw std::invalid_argument("context: divisor on a different model");
    if (opts.refine < 1) throw std::invalid_argument("refine factor must be >= 1");
    Rat h;
    if (opts.granularity) {
        h = *opts.granularity;
        if (h <= 0) throw std::invalid_argument("granularity must be positive");
    } else {
        h = default_granularity(m, {d}, opts.extra_constraints);
    }
    h /= opts.refine;
    for (const auto& [p, c] : d.coeffs())
        if (!p.is_vertex() && !rat_divides(h, p.offset()))
            throw std::invalid_argument("granularity does not divide divisor support offset");
    return h;
}

} // namespace

LinearSystemContext::LinearSystemContext(std::shared_ptr<const Model> model, Divisor d,
                                         const ContextOptions& opts)
    : model_(std::move(model)), d_(std::move(d)),
      lattice_(model_, context_granularity(*model_, d_, opts)) {}

LinearSystemContext LinearSystemContext::with_divisor(Divisor d) const {
    LinearSystemContext c = *this;
    if (&d.model() != model_.get())
        throw std::invalid_argument("with_divisor: divisor on a different model");
    c.lattice_.to_vector(d); // throws when d is off this lattice
    c.d_ = std::move(d);
    return c;
}

bool belongs(const LinearSystemContext& ctx, const RationalFunction& f) {
    if (f.is_bottom()) return true;
    if (&f.model() != &ctx.model()) throw std::invalid_argument("belongs: model mismatch");
    return ctx.divisor().plus(div(f)).is_effective();
}

bool can_fire(const Subgraph& s, const Divisor& e) {
    for (const Point& p : s.boundary_points())
        if (Int(s.outdegree(p)) > e.coeff(p)) return false;
    return true;
}

bool can_fire(const LinearSystemContext& ctx, const Subgraph& s, const Divisor& e) {
    if (&s.model() != &ctx.model() || &e.model() != &ctx.model())
        throw std::invalid_argument("can_fire: model mismatch");
    if (!e.is_effective()) throw std::invalid_argument("can_fire: divisor must be effective");
    return can_fire(s, e);
}

namespace {

bool germ_covered(const Subgraph& s, int e, const Rat& t, int dir) {
    for (const auto& iv : s.intervals(e)) {
        if (dir > 0 && iv.a <= t && t < iv.b) return true;
        if (dir < 0 && iv.a < t && t <= iv.b) return true;
    }
    return false;
}

} // namespace

bool has_firing_pair(const Model& m, const Divisor& e) {
    if (!e.is_effective()) throw std::invalid_argument("has_firing_pair: divisor not effective");
    std::vector<Point> support = e.support();
    std::vector<Subgraph> comps = complement_closure_subgraphs(m, support);
    int c = static_cast<int>(comps.size());
    // Valid pairs are unions of component closures: a side made of isolated
    // support points alone forces the other side to contain every component,
    // i.e. to be the whole graph, and extra isolated points only add firing
    // constraints. With one component no proper pair covers the graph.
    if (c <= 1) return false;
    if (c > 20) throw std::runtime_error("has_firing_pair: too many components");

    int ns = static_cast<int>(support.size());
    std::vector<std::vector<int>> att(ns, std::vector<int>(c, 0));
    std::vector<int> total(ns, 0);
    for (int i = 0; i < ns; ++i) {
        const Point& p = support[i];
        auto credit = [&](int edge, const Rat& off, int dir) {
            for (int j = 0; j < c; ++j) {
                if (germ_covered(comps[j], edge, off, dir)) {
                    ++att[i][j];
                    ++total[i];
                    return;
                }
            }
            throw std::logic_error("direction not covered by any component");
        };
        if (p.is_vertex()) {
            for (auto [edge, end] : m.incident_ends(p.vertex_id()))
                credit(edge, end == 0 ? Rat(0) : m.edge(edge).length, end == 0 ? +1 : -1);
        } else {
            credit(p.edge_id(), p.offset(), -1);
            credit(p.edge_id(), p.offset(), +1);
        }
    }
    std::vector<Int> coeff(ns);
    for (int i = 0; i < ns; ++i) coeff[i] = e.coeff(support[i]);

    // digit per component: 0 = side1 only, 1 = side2 only, 2 = both
    std::vector<int> digits(c, 0);
    long long assignments = 1;
    for (int j = 0; j < c; ++j) assignments *= 3;
    for (long long a = 0; a < assignments; ++a) {
        long long x = a;
        bool side1_all = true, side2_all = true;
        for (int j = 0; j < c; ++j) {
            digits[j] = static_cast<int>(x % 3);
            x /= 3;
            if (digits[j] == 1) side1_all = false;
            if (digits[j] == 0) side2_all = false;
        }
        if (side1_all || side2_all) continue;
        bool ok = true;
        for (int i = 0; i < ns && ok; ++i) {
            int in1 = 0, in2 = 0;
            for (int j = 0; j < c; ++j) {
                if (digits[j] != 1) in1 += att[i][j];
                if (digits[j] != 0) in2 += att[i][j];
            }
            if (in1 > 0 && Int(total[i] - in1) > coeff[i]) ok = false;
            if (in2 > 0 && Int(total[i] - in2) > coeff[i]) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

bool is_extremal(const LinearSystemContext& ctx, const RationalFunction& f) {
    if (f.is_bottom()) throw std::invalid_argument("is_extremal: bottom function");
    if (!belongs(ctx, f)) throw std::invalid_argument("is_extremal: membership violated");
    Divisor e = ctx.divisor().plus(div(f));
    return !has_firing_pair(ctx.model(), e);
}

ReducedDivisor reduced_divisor(const LinearSystemContext& ctx, const Divisor& e, const Point& q) {
    const Subdivision& s = ctx.lattice();
    auto qi = s.index_of(q);
    if (!qi) throw std::invalid_argument("reduced_divisor: basepoint off the lattice");
    Reduction r = reduce_divisor(s, s.to_vector(e), *qi);
    ReducedDivisor out{s.to_divisor(r.reduced), {}};
    for (int v = 0; v < s.num_points(); ++v)
        if (r.script[v] != 0) out.script[s.point_of(v)] = r.script[v];
    return out;
}

bool equivalent(const LinearSystemContext& ctx, const Divisor& e1, const Divisor& e2) {
    if (e1.degree() != e2.degree()) return false;
    const Subdivision& s = ctx.lattice();
    Reduction r1 = reduce_divisor(s, s.to_vector(e1), 0);
    Reduction r2 = reduce_divisor(s, s.to_vector(e2), 0);
    return r1.reduced == r2.reduced;
}

std::optional<RationalFunction> solve_equivalence(const LinearSystemContext& ctx,
                                                  const Divisor& e) {
    if (e.degree() != ctx.divisor().degree()) return std::nullopt;
    const Subdivision& s = ctx.lattice();
    Reduction rd = reduce_divisor(s, s.to_vector(ctx.divisor()), 0);
    Reduction re = reduce_divisor(s, s.to_vector(e), 0);
    if (rd.reduced != re.reduced) return std::nullopt;
    std::vector<Int> g(s.num_points());
    for (int v = 0; v < s.num_points(); ++v) g[v] = rd.script[v] - re.script[v];
    RationalFunction f = s.potential_function(g);
    if (ctx.divisor().plus(div(f)) != e)
        throw std::logic_error("solve_equivalence: potential does not certify equivalence");
    return f;
}

Int count_effective_lattice_divisors(const Subdivision& s, const Int& d) {
    if (d < 0) return Int(0);
    Int count = 1; // C(n + d - 1, d)
    for (Int i = 0; i < d; ++i) count = count * (Int(s.num_points()) + i) / (i + 1);
    return count;
}

void visit_effective_lattice_divisors(const Subdivision& s, const Int& d,
                                      const std::function<void(const std::vector<Int>&)>& fn) {
    if (d < 0) return;
    int n = s.num_points();
    if (count_effective_lattice_divisors(s, d) > 5000000)
        throw std::runtime_error("lattice divisor enumeration too large; coarsen granularity");
    std::vector<Int> cur(n, Int(0));
    std::function<void(int, const Int&)> rec = [&](int idx, const Int& left) {
        if (idx + 1 == n) {
            cur[idx] = left;
            fn(cur);
            cur[idx] = 0;
            return;
        }
        for (Int k = 0; k <= left; ++k) {
            cur[idx] = k;
            rec(idx + 1, left - k);
        }
        cur[idx] = 0;
    };
    if (n == 1) {
        cur[0] = d;
        fn(cur);
    } else {
        rec(0, d);
    }
}

std::vector<std::vector<Int>> effective_lattice_divisors(const Subdivision& s, const Int& d) {
    std::vector<std::vector<Int>> out;
    visit_effective_lattice_divisors(s, d, [&](const std::vector<Int>& c) { out.push_back(c); });
    return out;
}

namespace {

// Deterministic parallel map over an index range: results land in
// per-index slots, workers share only immutable inputs.
template <typename Fn>
void parallel_indices(long long total, Fn&& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || total < 64) {
        for (long long i = 0; i < total; ++i) fn(i);
        return;
    }
    unsigned workers = std::min<unsigned>(hw, 8);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (long long i = w; i < total; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace

GeneratingSet enumerate_extremals(const LinearSystemContext& ctx) {
    const Subdivision& s = ctx.lattice();
    Int d = ctx.divisor().degree();
    if (d < 0) throw EmptySystemError("deg D < 0: the complete linear system is empty");
    Reduction rd = reduce_divisor(s, s.to_vector(ctx.divisor()), 0);
    bool nonempty = true;
    for (const Int& c : rd.reduced)
        if (c < 0) nonempty = false;
    if (!nonempty)
        throw EmptySystemError("deg D >= 0 but |D| is empty (no effective representative)");

    struct Hit {
        RationalFunction f;
        Divisor e;
    };
    auto probe = [&](const std::vector<Int>& cand) -> std::optional<Hit> {
        Reduction re = reduce_divisor(s, cand, 0);
        if (re.reduced != rd.reduced) return std::nullopt;
        std::vector<Int> g(s.num_points());
        for (int v = 0; v < s.num_points(); ++v) g[v] = rd.script[v] - re.script[v];
        RationalFunction f = s.potential_function(g);
        Divisor e = s.to_divisor(cand);
        if (ctx.divisor().plus(div(f)) != e)
            throw std::logic_error("enumerate_extremals: inconsistent recovery");
        if (has_firing_pair(ctx.model(), e)) return std::nullopt;
        return Hit{normalize_max_zero(f), std::move(e)};
    };

    std::vector<Hit> found;
    // small candidate sets are materialized and scanned by parallel workers;
    // large ones stream through a single buffer to keep memory flat
    if (count_effective_lattice_divisors(s, d) <= 100000) {
        std::vector<std::vector<Int>> candidates = effective_lattice_divisors(s, d);
        long long total = static_cast<long long>(candidates.size());
        std::vector<std::optional<Hit>> hits(total);
        parallel_indices(total, [&](long long i) { hits[i] = probe(candidates[i]); });
        for (auto& h : hits)
            if (h) found.push_back(std::move(*h));
    } else {
        visit_effective_lattice_divisors(s, d, [&](const std::vector<Int>& cand) {
            auto h = probe(cand);
            if (h) found.push_back(std::move(*h));
        });
    }

    GeneratingSet out;
    // canonical order: by the divisor D + div(f), descending
    std::sort(found.begin(), found.end(),
              [](const Hit& a, const Hit& b) { return b.e < a.e; });
    for (auto& h : found) {
        out.functions.push_back(std::move(h.f));
        out.divisors.push_back(std::move(h.e));
    }
    if (out.functions.empty()) {
        out.generation_ok = false;
        out.warnings.push_back(
            "no lattice-representable extremal at granularity " + rat_str(s.granularity()) +
            "; refine the lattice");
        return out;
    }
    out.generation_ok = generation_check(ctx, out);
    if (!out.generation_ok)
        out.warnings.push_back("generation check failed at granularity " +
                               rat_str(s.granularity()) +
                               ": some extremal is not lattice-representable; refine");
    return out;
}

bool generation_check(const LinearSystemContext& ctx, const GeneratingSet& gens) {
    const Subdivision& s = ctx.lattice();
    Int d = ctx.divisor().degree();
    if (d < 0) return gens.functions.empty();
    Reduction rd = reduce_divisor(s, s.to_vector(ctx.divisor()), 0);

    std::vector<std::vector<Rat>> gen_values;
    for (const RationalFunction& f : gens.functions) gen_values.push_back(s.values_at_lattice(f));

    bool all_ok = true;
    visit_effective_lattice_divisors(s, d, [&](const std::vector<Int>& cand) {
        if (!all_ok) return;
        Reduction re = reduce_divisor(s, cand, 0);
        if (re.reduced != rd.reduced) return;
        std::vector<Int> g(s.num_points());
        for (int v = 0; v < s.num_points(); ++v) g[v] = rd.script[v] - re.script[v];
        RationalFunction f = s.potential_function(g);
        if (gens.functions.empty()) {
            all_ok = false;
            return;
        }
        std::vector<Rat> fv = s.values_at_lattice(f);
        // c_k = min over the graph of f - f_k; both sides are linear on
        // lattice segments, so the minimum is attained at a lattice point.
        RationalFunction combo = RationalFunction::bottom(ctx.model());
        for (size_t k = 0; k < gens.functions.size(); ++k) {
            Rat c = fv[0] - gen_values[k][0];
            for (int v = 1; v < s.num_points(); ++v)
                c = std::min(c, Rat(fv[v] - gen_values[k][v]));
            combo = trop_sum(combo, scalar_shift(TropScalar(c), gens.functions[k]));
        }
        if (combo != f) all_ok = false;
    });
    return all_ok;
}

std::optional<Divisor> invariant_representative(const LinearSystemContext& ctx,
                                                const FiniteGroup& g) {
    if (&g.base_model() != &ctx.model())
        throw std::invalid_argument("invariant_representative: model mismatch");
    const Divisor& d = ctx.divisor();
    if (d.is_effective() && is_invariant(d, g)) return d;
    const Subdivision& s = ctx.lattice();
    if (d.degree() < 0) return std::nullopt;
    Reduction rd = reduce_divisor(s, s.to_vector(d), 0);
    std::optional<Divisor> found;
    visit_effective_lattice_divisors(s, d.degree(), [&](const std::vector<Int>& cand) {
        if (found) return;
        Reduction re = reduce_divisor(s, cand, 0);
        if (re.reduced != rd.reduced) return;
        Divisor e = s.to_divisor(cand);
        if (is_invariant(e, g)) found = std::move(e);
    });
    return found;
}

GeneratingSet invariant_generating_set(const LinearSystemContext& ctx, const FiniteGroup& g) {
    if (!is_invariant(ctx.divisor(), g))
        throw std::invalid_argument("invariant_generating_set: divisor is not G-invariant");
    GeneratingSet gens = enumerate_extremals(ctx);
    // Normalized to max value zero, the extremal set is closed under
    // composition with every group element; verify it.
    for (const Automorphism& sigma : g.elements()) {
        for (const RationalFunction& f : gens.functions) {
            RationalFunction fs = normalize_max_zero(compose(f, sigma));
            if (std::find(gens.functions.begin(), gens.functions.end(), fs) ==
                gens.functions.end())
                throw std::runtime_error(
                    "invariant_generating_set: set not closed under the group at this "
                    "granularity; rebuild the context with the group's stability constraint");
        }
    }
    return gens;
}

Int rank(const LinearSystemContext& ctx) {
    const Subdivision& s = ctx.lattice();
    if (ctx.divisor().degree() < 0) return Int(-1);
    auto empty_system = [&](const Divisor& dv) {
        Reduction r = reduce_divisor(s, s.to_vector(dv), 0);
        for (const Int& c : r.reduced)
            if (c < 0) return true;
        return false;
    };
    if (empty_system(ctx.divisor())) return Int(-1);
    Int r = 0;
    while (true) {
        bool all_nonempty = true;
        visit_effective_lattice_divisors(s, r + 1, [&](const std::vector<Int>& evec) {
            if (!all_nonempty) return;
            Divisor e = s.to_divisor(evec);
            if (empty_system(ctx.divisor().minus(e))) all_nonempty = false;
        });
        if (!all_nonempty) return r;
        r += 1;
        if (r > ctx.divisor().degree())
            throw std::logic_error("rank exceeded degree"); // unreachable
    }
}

bool is_hyperelliptic(std::shared_ptr<const Model> m, const ContextOptions& opts) {
    if (genus(*m) < 2) throw std::invalid_argument("is_hyperelliptic requires genus >= 2");
    LinearSystemContext probe(m, Divisor(*m), opts);
    const Subdivision& s = probe.lattice();
    bool found = false;
    visit_effective_lattice_divisors(s, Int(2), [&](const std::vector<Int>& evec) {
        if (found) return;
        Divisor e = s.to_divisor(evec);
        LinearSystemContext ce = probe.with_divisor(e);
        if (rank(ce) >= 1) found = true;
    });
    return found;
}

} // namespace tropcurve
