/*
 * realization.hpp
 * ---------------
 * Rational maps from generating sets, an exact injectivity decision, and
 * the three matrix realizations of a finite automorphism group: the
 * integer matrices A_sigma acting on dehomogenized coordinates, tropical
 * permutation matrices in GL_trop, and their classes in PGL_trop, together
 * with zero-tolerance commutation and homomorphism verification.
 */
#pragma once

#include "tropcurve/automorphism.hpp"
#include "tropcurve/linear_system.hpp"
#include "tropcurve/rational_fn.hpp"
#include "tropcurve/trop.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropcurve {

enum class MapMode { Projective, Affine, Euclidean };

// x -> (f_1(x) : ... : f_{n+1}(x)); no member may be the bottom function.
class RationalMap {
public:
    RationalMap(std::vector<RationalFunction> fs, MapMode mode = MapMode::Projective);
    const std::vector<RationalFunction>& functions() const { return fs_; }
    const Model& model() const { return fs_.front().model(); }
    int dim() const { return static_cast<int>(fs_.size()) - 1; } // n of TP^n
    MapMode mode() const { return mode_; }

private:
    std::vector<RationalFunction> fs_;
    MapMode mode_;
};

ProjPoint evaluate_map(const RationalMap& phi, const Point& p);
std::vector<TropScalar> evaluate_map_affine(const RationalMap& phi, const Point& p);

// (X_1 : ... : X_{n+1}) -> (X_1 - X_{n+1}, ..., X_n - X_{n+1});
// throws when any coordinate is -inf.
std::vector<Rat> dehomogenize(const ProjPoint& q);

struct InjectivityResult {
    bool injective = false;
    std::optional<std::pair<Point, Point>> witness; // phi(p) = phi(p'), p != p'
};

// Exact decision: the map is affine on each segment between breakpoints,
// and pairwise segment-image intersections are solved in dehomogenized
// coordinates over the rationals.
InjectivityResult is_injective(const RationalMap& phi);

// The unique permutation (0-based) with f_k ∘ sigma = f_{perm[k]};
// throws a non-invariance error naming the offending index otherwise.
std::vector<int> index_permutation(const std::vector<RationalFunction>& fs,
                                   const Automorphism& sigma);

using IntMatrix = std::vector<std::vector<Int>>;

// n x n integer matrix realizing the permutation on dehomogenized
// coordinates: rows k != s carry 1 at (k, perm(k)); column perm(n+1)
// carries -1 in every row; s is the preimage of n+1. When perm fixes n+1
// the -1 column is absent and the matrix is the plain permutation matrix.
IntMatrix build_A_sigma(const std::vector<int>& perm);

// (n+1) x (n+1) tropical permutation matrix P with (P ⊙ v)_k = v_{perm[k]}.
TropMatrix build_perm_matrix(const std::vector<int>& perm);

IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b);
Int int_mat_det(IntMatrix a); // exact, fraction-free elimination
std::vector<Rat> int_mat_apply(const IntMatrix& a, const std::vector<Rat>& v);

// Exact commutation check at every lattice point:
//   j(phi(sigma x)) = A_sigma * j(phi(x))      (dehomogenized / euclidean)
//   phi(sigma x) = P_sigma ⊙ phi(x)            (affine coordinates)
//   phi(sigma x) ~ P_sigma ⊙ phi(x)            (projectively)
// Returns the first failing point if any.
struct CommutationReport {
    bool ok = true;
    std::optional<Point> failure;
};

CommutationReport verify_commutation(const RationalMap& phi, const Automorphism& sigma,
                                     const IntMatrix& a, const TropMatrix& p,
                                     const Subdivision& lattice);

struct ElementRealization {
    std::vector<int> perm; // 0-based index permutation
    IntMatrix a;           // n x n integer matrix
    TropMatrix p;          // (n+1) x (n+1) tropical permutation matrix
};

struct Realization {
    std::shared_ptr<const Model> model;
    GeneratingSet generators;
    std::vector<RationalFunction> map_functions; // the phi coordinates
    std::vector<ElementRealization> elements;    // parallel to group elements

    InjectivityResult map_injectivity;
    bool psi_injective = false;                      // pairwise distinct images
    std::vector<std::pair<int, int>> psi_collisions; // element index pairs
    bool homomorphism_ok = false;                    // A and P multiply per the table
    bool dets_ok = false;                            // det A = +-1 everywhere
    bool matrices_regular = false;                   // every P is a permutation matrix
    bool commutation_ok = false;
    std::optional<Point> commutation_failure;
    std::vector<std::string> warnings;

    // Map injectivity is a hypothesis for faithfulness, reported with a
    // witness when it fails; the realization itself is sound iff these hold.
    bool all_checks_pass() const {
        return psi_injective && homomorphism_ok && dets_ok && matrices_regular &&
               commutation_ok;
    }
};

class RealizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Full pipeline: find a G-invariant representative in |D|, enumerate a
// generating set, build per-element matrices and verify everything.
// Throws RealizationError when |D|^G is empty at this granularity or when
// no generators are lattice-representable. A non-injective map is reported
// in the result (with its witness and any Psi collisions), not thrown.
Realization realize(const LinearSystemContext& ctx, const FiniteGroup& g);

// D = K_Gamma, G = Aut(Gamma); requires genus >= 2 and a non-hyperelliptic
// graph, and fails with a granularity warning if the injectivity guaranteed
// by the canonical construction is not visible at this granularity.
Realization realize_canonical(std::shared_ptr<const Model> m, const ContextOptions& opts = {});

} // namespace tropcurve
