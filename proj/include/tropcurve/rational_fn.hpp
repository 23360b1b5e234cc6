/*
 * rational_fn.hpp
 * ---------------
 * Piecewise Z-affine functions on a metric graph (or the constant -inf).
 * Values are stored at breakpoints only; slopes are derived. Construction
 * validates continuity at shared vertices and integrality of every slope.
 * Canonical form prunes breakpoints with collinear neighbors, and function
 * equality is canonical-form equality.
 */
#pragma once

#include "tropcurve/automorphism.hpp"
#include "tropcurve/divisor.hpp"
#include "tropcurve/model.hpp"
#include "tropcurve/trop.hpp"

#include <string>
#include <vector>

namespace tropcurve {

class RationalFunction {
public:
    // (offset, value) with offsets ascending, first = 0, last = edge length.
    using EdgeTrack = std::vector<std::pair<Rat, Rat>>;

    static RationalFunction bottom(const Model& m);
    static RationalFunction constant(const Model& m, const Rat& value);
    // Validates shape, continuity and integer slopes; throws std::invalid_argument.
    static RationalFunction from_tracks(const Model& m, std::vector<EdgeTrack> tracks);
    // f(vertex v) = values[v], linear on every edge (slopes must be integers).
    static RationalFunction from_vertex_values(const Model& m, const std::vector<Rat>& values);

    const Model& model() const { return *model_; }
    bool is_bottom() const { return bottom_; }
    const std::vector<EdgeTrack>& tracks() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.model_ == b.model_ && a.bottom_ == b.bottom_ && a.tracks_ == b.tracks_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }
    friend bool operator<(const RationalFunction& a, const RationalFunction& b) {
        if (a.bottom_ != b.bottom_) return b.bottom_;
        return a.tracks_ < b.tracks_;
    }

    std::string str() const;

private:
    RationalFunction() = default;
    void prune();
    const Model* model_ = nullptr;
    bool bottom_ = false;
    std::vector<EdgeTrack> tracks_;
};

TropScalar evaluate(const RationalFunction& f, const Point& p);

// Sum of the outgoing slopes of f at p (f must not be the bottom function).
Int ord_at(const RationalFunction& f, const Point& p);

// div(f) = sum of ord_x(f) * x; always of degree 0.
Divisor div(const RationalFunction& f);

// Pointwise max; breakpoints are inserted at exact crossing offsets.
RationalFunction trop_sum(const RationalFunction& f, const RationalFunction& g);

// (a ⊙ f)(x) = a + f(x); -inf ⊙ f is the bottom function.
RationalFunction scalar_shift(const TropScalar& a, const RationalFunction& f);

// f ∘ sigma, i.e. x -> f(sigma(x)).
RationalFunction compose(const RationalFunction& f, const Automorphism& sigma);

// Maximum over the (compact) graph; attained at a breakpoint.
TropScalar max_value(const RationalFunction& f);

// Shift so the maximum value is zero.
RationalFunction normalize_max_zero(const RationalFunction& f);

// All breakpoint locations (vertices and interior break offsets).
std::vector<Point> breakpoints(const RationalFunction& f);

} // namespace tropcurve
