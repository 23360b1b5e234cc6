/*
 * lattice.hpp
 * -----------
 * Uniform subdivision of a metric graph ("lattice" model) and exact
 * chip-firing on it: Laplacian arithmetic, Dhar-style burning and
 * q-reduced divisors with integer firing scripts.
 *
 * On the h-lattice a rational function that is linear on every segment is
 * h times an integer potential, and div(f) = -L g for the combinatorial
 * Laplacian L of the lattice graph; linear equivalence of lattice-supported
 * divisors is therefore decided exactly by comparing q-reduced forms.
 */
#pragma once

#include "tropcurve/divisor.hpp"
#include "tropcurve/model.hpp"
#include "tropcurve/rational_fn.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace tropcurve {

// Result of subdividing every edge into segments of length exactly h.
class Subdivision {
public:
    Subdivision(std::shared_ptr<const Model> base, const Rat& h);

    const Model& base() const { return *base_; }
    const std::shared_ptr<const Model>& base_ptr() const { return base_; }
    const Model& fine() const { return fine_; }
    const Rat& granularity() const { return h_; }

    int num_points() const { return fine_.num_vertices(); }
    // lattice vertex -> point of the base model
    const Point& point_of(int lattice_vertex) const { return points_[lattice_vertex]; }
    // point of the base model -> lattice vertex, or nullopt if off-lattice
    std::optional<int> index_of(const Point& base_point) const;
    // lattice vertices along a base edge, in offset order (both endpoints included)
    const std::vector<int>& along_edge(int base_edge) const { return along_[base_edge]; }

    // multiplicity-aware neighbors of a lattice vertex: (neighbor, count)
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return deg_[v]; }

    Divisor to_divisor(const std::vector<Int>& chips) const;
    std::vector<Int> to_vector(const Divisor& d) const; // throws if off-lattice support
    // rational function linear on every segment with values h * potential
    RationalFunction potential_function(const std::vector<Int>& potential) const;
    std::vector<Rat> values_at_lattice(const RationalFunction& f) const;

private:
    std::shared_ptr<const Model> base_;
    Rat h_;
    Model fine_;
    std::vector<Point> points_;
    std::vector<std::vector<int>> along_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<int> deg_;
};

// Default lattice granularity: gcd of all edge lengths and all support
// offsets of the given divisors, with loop lengths halved so no lattice
// segment is a loop; optionally refined by extra divisors and constraints.
Rat default_granularity(const Model& m, const std::vector<Divisor>& divisors,
                        const std::vector<Rat>& extra_constraints = {});

// (Model, point-correspondence) subdivision per the public operation.
Subdivision subdivide(std::shared_ptr<const Model> m, const Rat& h);

// E - L*g for an integer firing script g (firing a vertex sends one chip
// along each incident segment end).
std::vector<Int> fire_script(const Subdivision& s, const std::vector<Int>& chips,
                             const std::vector<Int>& script);

struct Reduction {
    std::vector<Int> reduced; // the q-reduced divisor
    std::vector<Int> script;  // reduced = chips - L*script, script[q] = 0
};

// Unique q-reduced representative of the class of `chips`:
// effective off q and Dhar-superstable off q.
Reduction reduce_divisor(const Subdivision& s, std::vector<Int> chips, int q);

} // namespace tropcurve
