#include "tropcurve/realization.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropcurve {

RationalMap::RationalMap(std::vector<RationalFunction> fs, MapMode mode)
    : fs_(std::move(fs)), mode_(mode) {
    if (fs_.empty()) throw std::invalid_argument("rational map needs at least one function");
    for (const RationalFunction& f : fs_) {
        if (f.is_bottom())
            throw std::invalid_argument("rational map members must not be the bottom function");
        if (&f.model() != &fs_.front().model())
            throw std::invalid_argument("rational map functions on different models");
    }
}

ProjPoint evaluate_map(const RationalMap& phi, const Point& p) {
    std::vector<TropScalar> coords;
    for (const RationalFunction& f : phi.functions()) coords.push_back(evaluate(f, p));
    return ProjPoint(std::move(coords));
}

std::vector<TropScalar> evaluate_map_affine(const RationalMap& phi, const Point& p) {
    std::vector<TropScalar> coords;
    for (const RationalFunction& f : phi.functions()) coords.push_back(evaluate(f, p));
    return coords;
}

std::vector<Rat> dehomogenize(const ProjPoint& q) {
    const auto& c = q.coords();
    for (const TropScalar& x : c)
        if (x.is_neg_inf())
            throw std::invalid_argument("dehomogenize: -inf coordinate");
    std::vector<Rat> out;
    for (size_t i = 0; i + 1 < c.size(); ++i) out.push_back(c[i].value() - c.back().value());
    return out;
}

namespace {

// Affine segment data of the dehomogenized map: segment of edge `edge`
// over offsets [lo, hi], with coordinates value(t) = base + (t - lo) * slope.
struct MapSegment {
    int edge;
    Rat lo, hi;
    std::vector<Rat> base;
    std::vector<Rat> slope;
};

std::vector<MapSegment> map_segments(const RationalMap& phi) {
    const Model& m = phi.model();
    int n = phi.dim();
    std::vector<MapSegment> segs;
    for (int e = 0; e < m.num_edges(); ++e) {
        std::set<Rat> offs;
        for (const RationalFunction& f : phi.functions())
            for (const auto& [o, v] : f.tracks()[e]) offs.insert(o);
        std::vector<Rat> cuts(offs.begin(), offs.end());
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            MapSegment s;
            s.edge = e;
            s.lo = cuts[i];
            s.hi = cuts[i + 1];
            Point a = Point::on_edge(m, e, s.lo);
            Point b = Point::on_edge(m, e, s.hi);
            std::vector<Rat> va = dehomogenize(evaluate_map(phi, a));
            std::vector<Rat> vb = dehomogenize(evaluate_map(phi, b));
            for (int k = 0; k < n; ++k) {
                s.base.push_back(va[k]);
                s.slope.push_back((vb[k] - va[k]) / (s.hi - s.lo));
            }
            segs.push_back(std::move(s));
        }
    }
    return segs;
}

Point segment_point(const Model& m, const MapSegment& s, const Rat& t) {
    return Point::on_edge(m, s.edge, s.lo + t);
}

// Witness search on one ordered segment pair. Parameters run in
// [0, len] relative to each segment's lo.
std::optional<std::pair<Rat, Rat>> solve_pair(const MapSegment& A, const MapSegment& B,
                                              bool same_segment) {
    int n = static_cast<int>(A.base.size());
    Rat la = A.hi - A.lo, lb = B.hi - B.lo;
    bool a_const = true, b_const = true;
    for (int k = 0; k < n; ++k) {
        if (A.slope[k] != 0) a_const = false;
        if (B.slope[k] != 0) b_const = false;
    }
    auto in_range = [](const Rat& x, const Rat& hi) { return x >= 0 && x <= hi; };
    auto consistent = [&](const Rat& t, const Rat& u) {
        for (int k = 0; k < n; ++k)
            if (A.base[k] + t * A.slope[k] != B.base[k] + u * B.slope[k]) return false;
        return true;
    };

    if (a_const && b_const) {
        if (A.base != B.base) return std::nullopt;
        if (same_segment) return std::make_pair(Rat(0), la); // whole segment collapses
        return std::make_pair(la / 2, lb / 2);
    }
    if (a_const != b_const) {
        const MapSegment& C = a_const ? B : A; // the nonconstant one
        Rat target_len = a_const ? lb : la;
        int k0 = 0;
        while (C.slope[k0] == 0) ++k0;
        const std::vector<Rat>& fixed = a_const ? A.base : B.base;
        Rat u = (fixed[k0] - C.base[k0]) / C.slope[k0];
        if (!in_range(u, target_len)) return std::nullopt;
        for (int k = 0; k < n; ++k)
            if (C.base[k] + u * C.slope[k] != fixed[k]) return std::nullopt;
        Rat t_other = a_const ? la / 2 : lb / 2;
        if (a_const) return std::make_pair(t_other, u);
        return std::make_pair(u, t_other);
    }

    // both nonconstant: look for two independent coordinates
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            Rat det = A.slope[k] * (-B.slope[l]) - A.slope[l] * (-B.slope[k]);
            if (det == 0) continue;
            Rat rk = B.base[k] - A.base[k];
            Rat rl = B.base[l] - A.base[l];
            Rat t = (rk * (-B.slope[l]) - rl * (-B.slope[k])) / det;
            Rat u = (A.slope[k] * rl - A.slope[l] * rk) / det;
            if (!in_range(t, la) || !in_range(u, lb)) return std::nullopt;
            if (!consistent(t, u)) return std::nullopt;
            if (same_segment && t == u) return std::nullopt;
            return std::make_pair(t, u);
        }
    }
    // slopes are parallel: B.slope = lambda * A.slope
    int k0 = 0;
    while (A.slope[k0] == 0 && k0 + 1 < n) ++k0;
    if (A.slope[k0] == 0) return std::nullopt; // cannot happen (nonconstant)
    Rat lambda = B.slope[k0] / A.slope[k0];
    // base difference must be parallel too: B.base - A.base = mu * A.slope
    Rat mu = (B.base[k0] - A.base[k0]) / A.slope[k0];
    for (int k = 0; k < n; ++k) {
        if (B.slope[k] != lambda * A.slope[k]) return std::nullopt;
        if (B.base[k] - A.base[k] != mu * A.slope[k]) return std::nullopt;
    }
    // solutions: t = mu + lambda * u, u in [0, lb]
    // feasible u-range from 0 <= t <= la
    Rat u_lo = 0, u_hi = lb;
    if (lambda > 0) {
        u_lo = std::max(u_lo, Rat(-mu / lambda));
        u_hi = std::min(u_hi, Rat((la - mu) / lambda));
    } else {
        u_lo = std::max(u_lo, Rat((la - mu) / lambda));
        u_hi = std::min(u_hi, Rat(-mu / lambda));
    }
    if (u_lo > u_hi) return std::nullopt;
    const Rat candidates[3] = {(u_lo + u_hi) / 2, u_lo, u_hi};
    for (const Rat& u : candidates) {
        Rat t = mu + lambda * u;
        if (same_segment && t == u) continue;
        return std::make_pair(t, u);
    }
    return std::nullopt;
}

} // namespace

InjectivityResult is_injective(const RationalMap& phi) {
    const Model& m = phi.model();
    std::vector<MapSegment> segs = map_segments(phi);
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i; j < segs.size(); ++j) {
            bool same = (i == j);
            auto sol = solve_pair(segs[i], segs[j], same);
            if (!sol) continue;
            Point pa = segment_point(m, segs[i], sol->first);
            Point pb = segment_point(m, segs[j], sol->second);
            // distinct segments meet at shared endpoints; a unique solution
            // landing there is not a collision
            if (pa == pb) continue;
            return InjectivityResult{false, std::make_pair(pa, pb)};
        }
    }
    return InjectivityResult{true, std::nullopt};
}

std::vector<int> index_permutation(const std::vector<RationalFunction>& fs,
                                   const Automorphism& sigma) {
    int n1 = static_cast<int>(fs.size());
    std::vector<int> perm(n1, -1);
    std::vector<char> used(n1, 0);
    for (int k = 0; k < n1; ++k) {
        RationalFunction fk = compose(fs[k], sigma);
        int found = -1;
        for (int l = 0; l < n1; ++l) {
            if (fs[l] == fk) {
                found = l;
                break;
            }
        }
        if (found < 0 || used[found])
            throw std::invalid_argument("generating set is not invariant under the "
                                        "automorphism (offending index " +
                                        std::to_string(k + 1) + ")");
        perm[k] = found;
        used[found] = 1;
    }
    return perm;
}

IntMatrix build_A_sigma(const std::vector<int>& perm) {
    int n1 = static_cast<int>(perm.size());
    int n = n1 - 1;
    int s = -1;
    for (int k = 0; k < n1; ++k)
        if (perm[k] == n) s = k; // preimage of the last index
    if (s < 0) throw std::invalid_argument("not a permutation");
    IntMatrix a(n, std::vector<Int>(n, Int(0)));
    for (int k = 0; k < n; ++k) {
        if (k != s) a[k][perm[k]] += 1;
        if (perm[n] != n) a[k][perm[n]] -= 1;
    }
    return a;
}

TropMatrix build_perm_matrix(const std::vector<int>& perm) {
    return TropMatrix::permutation(perm);
}

IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    IntMatrix r(n, std::vector<Int>(m, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t t = 0; t < k; ++t) r[i][j] += a[i][t] * b[t][j];
    return r;
}

Int int_mat_det(IntMatrix a) {
    // Bareiss fraction-free elimination
    int n = static_cast<int>(a.size());
    if (n == 0) return Int(1);
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Int(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<Rat> int_mat_apply(const IntMatrix& a, const std::vector<Rat>& v) {
    std::vector<Rat> out(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += Rat(a[i][j]) * v[j];
    return out;
}

CommutationReport verify_commutation(const RationalMap& phi, const Automorphism& sigma,
                                     const IntMatrix& a, const TropMatrix& p,
                                     const Subdivision& lattice) {
    for (int v = 0; v < lattice.num_points(); ++v) {
        Point x = lattice.point_of(v);
        Point sx = act_on_point(sigma, x);
        ProjPoint im = evaluate_map(phi, x);
        ProjPoint im_s = evaluate_map(phi, sx);
        // affine coordinates transform exactly
        std::vector<TropScalar> lhs = evaluate_map_affine(phi, sx);
        std::vector<TropScalar> rhs = mat_apply(p, evaluate_map_affine(phi, x));
        if (lhs != rhs) return CommutationReport{false, x};
        if (!proj_equal(im_s, ProjPoint(rhs))) return CommutationReport{false, x};
        // dehomogenized coordinates transform by the integer matrix
        std::vector<Rat> j_sx = dehomogenize(im_s);
        std::vector<Rat> j_x = dehomogenize(im);
        if (j_sx != int_mat_apply(a, j_x)) return CommutationReport{false, x};
    }
    return CommutationReport{true, std::nullopt};
}

Realization realize(const LinearSystemContext& ctx, const FiniteGroup& g) {
    if (&g.base_model() != &ctx.model())
        throw std::invalid_argument("realize: group acts on a different model");
    // a context compatible with the group's simplicial structure
    ContextOptions opts;
    opts.extra_constraints = {g.stability_granularity(), ctx.granularity()};
    LinearSystemContext work(ctx.model_ptr(), ctx.divisor(), opts);

    std::optional<Divisor> dinv = invariant_representative(work, g);
    if (!dinv)
        throw RealizationError("the invariant linear system |D|^G is empty at granularity " +
                               rat_str(work.granularity()) + "; refine the lattice");
    LinearSystemContext inv_ctx = work.with_divisor(*dinv);

    GeneratingSet gens = enumerate_extremals(inv_ctx);
    if (gens.functions.empty())
        throw RealizationError("no lattice-representable generators at granularity " +
                               rat_str(work.granularity()) + "; refine the lattice");

    Realization out;
    out.model = ctx.model_ptr();
    out.generators = gens;
    out.map_functions = gens.functions;
    out.warnings = gens.warnings;

    RationalMap phi(gens.functions);
    out.map_injectivity = is_injective(phi);

    for (const Automorphism& sigma : g.elements()) {
        ElementRealization er{index_permutation(gens.functions, sigma), {}, TropMatrix(1, 1)};
        er.a = build_A_sigma(er.perm);
        er.p = build_perm_matrix(er.perm);
        out.elements.push_back(std::move(er));
    }

    // homomorphism tables: A and P of a composition equal the products
    out.homomorphism_ok = true;
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) {
            int k = g.compose_index(i, j);
            if (!out.elements[k].a.empty() &&
                out.elements[k].a != int_mat_mul(out.elements[i].a, out.elements[j].a))
                out.homomorphism_ok = false;
            if (out.elements[k].p != mat_mul(out.elements[i].p, out.elements[j].p))
                out.homomorphism_ok = false;
        }
    }

    out.dets_ok = true;
    for (const ElementRealization& er : out.elements) {
        Int det = int_mat_det(er.a);
        if (det != 1 && det != -1) out.dets_ok = false;
    }
    out.matrices_regular = true;
    for (const ElementRealization& er : out.elements)
        if (!is_permutation_matrix(er.p) || !is_regular(er.p)) out.matrices_regular = false;

    // Psi injectivity = pairwise distinct permutations
    out.psi_injective = true;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (out.elements[i].perm == out.elements[j].perm) {
                out.psi_injective = false;
                out.psi_collisions.push_back({i, j});
            }
    if (out.map_injectivity.injective && !out.psi_injective)
        throw std::logic_error("injective map with colliding realizations");
    if (!out.map_injectivity.injective)
        out.warnings.push_back("the rational map is not injective; the group homomorphism "
                               "may collide (witness available)");

    out.commutation_ok = true;
    for (int i = 0; i < g.order(); ++i) {
        CommutationReport rep = verify_commutation(phi, g.element(i), out.elements[i].a,
                                                   out.elements[i].p, inv_ctx.lattice());
        if (!rep.ok) {
            out.commutation_ok = false;
            out.commutation_failure = rep.failure;
        }
    }
    return out;
}

Realization realize_canonical(std::shared_ptr<const Model> m, const ContextOptions& opts) {
    if (genus(*m) < 2)
        throw RealizationError("canonical realization requires genus >= 2");
    if (is_hyperelliptic(m, opts))
        throw RealizationError("the metric graph is hyperelliptic; the canonical linear "
                               "system does not separate points");
    FiniteGroup g = compute_aut(m);
    LinearSystemContext ctx(m, canonical_divisor(*m), opts);
    Realization r = realize(ctx, g);
    if (!r.map_injectivity.injective)
        throw RealizationError("canonical map not injective at granularity " +
                               rat_str(ctx.granularity()) +
                               "; this is a lattice artifact, refine the granularity");
    return r;
}

} // namespace tropcurve
