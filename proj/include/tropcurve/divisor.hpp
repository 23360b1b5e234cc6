/*
 * divisor.hpp
 * -----------
 * Divisors on a metric graph: finite integer-weighted point sets.
 * Canonical form stores no zero coefficients; points are in vertex-normal
 * form. All values are immutable once built.
 */
#pragma once

#include "tropcurve/automorphism.hpp"
#include "tropcurve/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace tropcurve {

class Divisor {
public:
    explicit Divisor(const Model& m) : model_(&m) {}
    Divisor(const Model& m, std::map<Point, Int> coeffs);

    const Model& model() const { return *model_; }
    const std::map<Point, Int>& coeffs() const { return coeffs_; }
    Int coeff(const Point& p) const;
    Int degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_effective() const;
    std::vector<Point> support() const;

    Divisor plus(const Divisor& other) const;
    Divisor minus(const Divisor& other) const;
    Divisor with(const Point& p, const Int& delta) const; // adds delta at p

    friend bool operator==(const Divisor& a, const Divisor& b) {
        return a.model_ == b.model_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }
    friend bool operator<(const Divisor& a, const Divisor& b) { return a.coeffs_ < b.coeffs_; }

    std::string str() const;

private:
    const Model* model_;
    std::map<Point, Int> coeffs_;
};

Int degree(const Divisor& d);
bool is_effective(const Divisor& d);

// Canonical divisor K: coefficient valency - 2 at every point; degree 2g - 2.
Divisor canonical_divisor(const Model& m);

// Pushforward: coefficient of sigma(x) equals the old coefficient of x.
Divisor apply_automorphism(const Divisor& d, const Automorphism& sigma);
bool is_invariant(const Divisor& d, const FiniteGroup& g);
bool is_invariant(const Divisor& d, const Automorphism& sigma);

} // namespace tropcurve
