/*
 * trop.hpp
 * --------
 * Max-plus (tropical) scalars, matrices and projective points over the
 * semifield (Q ∪ {-inf}, max, +), with exact rational entries.
 *
 * Regular (invertible) tropical matrices are exactly the generalized
 * permutation matrices; is_regular/invert implement that characterization
 * and the unit tests cross-check it against a brute-force inverse search.
 */
#pragma once

#include "tropcurve/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropcurve {

// A tropical scalar: an exact rational, or the bottom element -inf
// (neutral for max, absorbing for +).
class TropScalar {
public:
    TropScalar() : finite_(false) {}                      // -inf
    TropScalar(Rat v) : finite_(true), value_(std::move(v)) {}
    static TropScalar neg_inf() { return TropScalar(); }

    bool is_neg_inf() const { return !finite_; }
    bool is_finite() const { return finite_; }
    const Rat& value() const;

    friend bool operator==(const TropScalar& a, const TropScalar& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const TropScalar& a, const TropScalar& b) { return !(a == b); }
    // Total order with -inf below every finite value.
    friend bool operator<(const TropScalar& a, const TropScalar& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.value_ < b.value_;
    }

    std::string str() const { return finite_ ? rat_str(value_) : "-inf"; }

private:
    bool finite_;
    Rat value_;
};

TropScalar trop_add(const TropScalar& a, const TropScalar& b); // max
TropScalar trop_mul(const TropScalar& a, const TropScalar& b); // +

// Dense max-plus matrix.
class TropMatrix {
public:
    TropMatrix(int rows, int cols); // all entries -inf
    static TropMatrix identity(int n);
    // Permutation matrix P with P(k, perm[k]) = 0, so (P ⊙ v)_k = v_{perm[k]}.
    static TropMatrix permutation(const std::vector<int>& perm);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const TropScalar& at(int r, int c) const { return entries_[idx(r, c)]; }
    void set(int r, int c, TropScalar v) { entries_[idx(r, c)] = std::move(v); }

    friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const TropMatrix& a, const TropMatrix& b) { return !(a == b); }

    std::string str() const;

private:
    int idx(int r, int c) const;
    int rows_, cols_;
    std::vector<TropScalar> entries_;
};

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);

bool is_permutation_matrix(const TropMatrix& a);
bool is_generalized_permutation(const TropMatrix& a);
// Square matrices only (throws otherwise); true iff a has a two-sided
// tropical inverse, i.e. iff it is a generalized permutation matrix.
bool is_regular(const TropMatrix& a);
// Inverse of a regular matrix: finite entry c at (k, p(k)) becomes -c at (p(k), k).
TropMatrix invert(const TropMatrix& a);

// Equality in PGL_trop: both regular and b = c ⊙ a for a finite constant c.
bool pgl_equal(const TropMatrix& a, const TropMatrix& b);

// A point of TP^n: n+1 coordinates, not all -inf, modulo a global finite shift.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<TropScalar> coords);
    int dim() const { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<TropScalar>& coords() const { return coords_; }
    std::string str() const;

private:
    std::vector<TropScalar> coords_;
};

bool proj_equal(const ProjPoint& p, const ProjPoint& q);

// Tropical matrix-vector action, (a ⊙ v)_k = max_l (a_{k,l} + v_l).
std::vector<TropScalar> mat_apply(const TropMatrix& a, const std::vector<TropScalar>& v);

} // namespace tropcurve
