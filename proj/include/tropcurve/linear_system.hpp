/*
 * linear_system.hpp
 * -----------------
 * R(D) machinery on a lattice model: membership, the firing-subgraph
 * extremality test, linear-equivalence decisions via reduced divisors,
 * enumeration of lattice-representable extremals into a minimal generating
 * set, invariant systems, and rank / hyperellipticity searches.
 *
 * The lattice can miss extremals whose divisors are not lattice-supported;
 * the post-enumeration generation check detects that and callers can
 * refine the granularity. Rank and the hyperellipticity test quantify over
 * lattice divisors only and are reported as lattice approximations.
 */
#pragma once

#include "tropcurve/automorphism.hpp"
#include "tropcurve/divisor.hpp"
#include "tropcurve/lattice.hpp"
#include "tropcurve/model.hpp"
#include "tropcurve/rational_fn.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tropcurve {

struct ContextOptions {
    std::optional<Rat> granularity; // overrides the default gcd choice
    long long refine = 1;           // divides the granularity by this factor
    std::vector<Rat> extra_constraints; // e.g. group stability granularities
};

class LinearSystemContext {
public:
    LinearSystemContext(std::shared_ptr<const Model> model, Divisor d,
                        const ContextOptions& opts = {});

    const Model& model() const { return *model_; }
    const std::shared_ptr<const Model>& model_ptr() const { return model_; }
    const Divisor& divisor() const { return d_; }
    const Rat& granularity() const { return lattice_.granularity(); }
    const Subdivision& lattice() const { return lattice_; }

    LinearSystemContext with_divisor(Divisor d) const;

private:
    std::shared_ptr<const Model> model_;
    Divisor d_;
    Subdivision lattice_;
};

// f belongs to R(D): f is bottom or D + div(f) >= 0.
bool belongs(const LinearSystemContext& ctx, const RationalFunction& f);

// A subgraph can fire on an effective divisor when at every boundary point
// the outdegree does not exceed the divisor's coefficient there.
bool can_fire(const LinearSystemContext& ctx, const Subgraph& s, const Divisor& e);
bool can_fire(const Subgraph& s, const Divisor& e);

// Extremality test per the subgraph-pair characterization; boundary points
// are restricted to the support of D + div(f), which is lossless because a
// firing subgraph's boundary needs a positive coefficient at every
// boundary point.
bool is_extremal(const LinearSystemContext& ctx, const RationalFunction& f);

// Package used by both the fast path and test oracles.
bool has_firing_pair(const Model& m, const Divisor& e);

struct ReducedDivisor {
    Divisor reduced;
    std::map<Point, Int> script; // firing counts per lattice point
};

ReducedDivisor reduced_divisor(const LinearSystemContext& ctx, const Divisor& e, const Point& q);

bool equivalent(const LinearSystemContext& ctx, const Divisor& e1, const Divisor& e2);

// f with D + div(f) = E exactly, or nullopt when E is not equivalent to D.
std::optional<RationalFunction> solve_equivalence(const LinearSystemContext& ctx,
                                                  const Divisor& e);

struct GeneratingSet {
    std::vector<RationalFunction> functions; // normalized to max value 0, sorted
    std::vector<Divisor> divisors;           // D + div(f_k), same order
    bool generation_ok = true;               // post-hoc generation check result
    std::vector<std::string> warnings;
};

class EmptySystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All lattice-representable extremals of R(D) up to tropical scale,
// normalized to maximum value zero and canonically ordered. Throws
// EmptySystemError when |D| is empty.
GeneratingSet enumerate_extremals(const LinearSystemContext& ctx);

// Exact check that every lattice element of |D| is the tropical combination
// of the generators (with coefficients c_k = min over the graph of f - f_k).
bool generation_check(const LinearSystemContext& ctx, const GeneratingSet& gens);

// Some G-invariant effective lattice divisor equivalent to D, if any exists
// at this granularity.
std::optional<Divisor> invariant_representative(const LinearSystemContext& ctx,
                                                const FiniteGroup& g);

// Minimal generating set of R(D) for a G-invariant D; the normalized set is
// closed under f -> f ∘ sigma (verified).
GeneratingSet invariant_generating_set(const LinearSystemContext& ctx, const FiniteGroup& g);

// Lattice rank: largest r such that |D - E| is nonempty for every effective
// lattice divisor E of degree r; -1 when |D| is empty.
Int rank(const LinearSystemContext& ctx);

// Lattice search for a degree-two divisor of rank >= 1; genus >= 2 required.
bool is_hyperelliptic(std::shared_ptr<const Model> m, const ContextOptions& opts = {});

// Effective lattice divisors of degree d, enumerated deterministically.
// The vector form materializes everything (capped); the visitor streams
// with a single reusable buffer.
std::vector<std::vector<Int>> effective_lattice_divisors(const Subdivision& s, const Int& d);
void visit_effective_lattice_divisors(const Subdivision& s, const Int& d,
                                      const std::function<void(const std::vector<Int>&)>& fn);
Int count_effective_lattice_divisors(const Subdivision& s, const Int& d);

} // namespace tropcurve
