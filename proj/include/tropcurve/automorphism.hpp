/*
 * automorphism.hpp
 * ----------------
 * Isometric automorphisms of a metric graph and their finite groups.
 *
 * Every automorphism is stored simplicially on a "frame" model sharing the
 * same underlying metric space as the user's model: the canonical model
 * (valence-2 vertices suppressed) for general graphs, a refined cycle for
 * circles, or the user's model itself for explicitly given maps. A segment
 * atlas translates points between the two coordinate systems exactly, so
 * the action on arbitrary rational points is exact.
 */
#pragma once

#include "tropcurve/model.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tropcurve {

// One linear chart: base edge offsets [b0, b1] correspond to frame edge
// offsets starting at f0, increasing (dir=+1) or decreasing (dir=-1).
struct SegChart {
    int base_edge;
    Rat b0, b1;
    int frame_edge;
    Rat f0;
    int dir;
};

class AutFrame {
public:
    AutFrame(std::shared_ptr<const Model> base, Model frame, std::vector<SegChart> charts);
    static std::shared_ptr<const AutFrame> identity_frame(std::shared_ptr<const Model> base);

    const Model& base() const { return *base_; }
    const std::shared_ptr<const Model>& base_ptr() const { return base_; }
    const Model& frame() const { return frame_; }

    Point to_frame(const Point& base_point) const;
    Point to_base(const Point& frame_point) const;

    // Every h-lattice on the base model with h dividing this value is
    // mapped to itself by any simplicial map of the frame.
    const Rat& stability_granularity() const { return stability_; }

private:
    std::shared_ptr<const Model> base_;
    Model frame_;
    std::vector<SegChart> charts_;
    std::vector<std::vector<int>> by_base_edge_;
    std::vector<std::vector<int>> by_frame_edge_;
    std::vector<Point> base_vertex_in_frame_;
    std::vector<Point> frame_vertex_in_base_;
    Rat stability_;
};

class Automorphism {
public:
    Automorphism(std::shared_ptr<const AutFrame> frame, std::vector<int> vertex_image,
                 std::vector<std::pair<int, bool>> edge_image);

    const AutFrame& frame() const { return *frame_; }
    const std::shared_ptr<const AutFrame>& frame_ptr() const { return frame_; }
    const Model& base_model() const { return frame_->base(); }

    const std::vector<int>& vertex_image() const { return vimg_; }
    const std::vector<std::pair<int, bool>>& edge_image() const { return eimg_; }

    bool is_identity() const;
    Automorphism inverse() const;

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.frame_ == b.frame_ && a.vimg_ == b.vimg_ && a.eimg_ == b.eimg_;
    }
    friend bool operator!=(const Automorphism& a, const Automorphism& b) { return !(a == b); }
    friend bool operator<(const Automorphism& a, const Automorphism& b) {
        if (a.vimg_ != b.vimg_) return a.vimg_ < b.vimg_;
        return a.eimg_ < b.eimg_;
    }

    std::string str() const;

private:
    std::shared_ptr<const AutFrame> frame_;
    std::vector<int> vimg_;
    std::vector<std::pair<int, bool>> eimg_;
};

// sigma(p) for a point p of the base model.
Point act_on_point(const Automorphism& sigma, const Point& p);

// (sigma ∘ tau)(x) = sigma(tau(x)); both must share a frame.
Automorphism compose(const Automorphism& sigma, const Automorphism& tau);

class FiniteGroup {
public:
    // Verifies the group axioms (identity present, closure, inverses).
    explicit FiniteGroup(std::vector<Automorphism> elements);

    int order() const { return static_cast<int>(elems_.size()); }
    const Automorphism& element(int i) const { return elems_.at(i); }
    const std::vector<Automorphism>& elements() const { return elems_; }
    int identity_index() const { return id_idx_; }
    int compose_index(int i, int j) const { return table_.at(i).at(j); }
    int inverse_index(int i) const { return inv_.at(i); }

    const Model& base_model() const { return elems_.front().base_model(); }
    const Rat& stability_granularity() const {
        return elems_.front().frame().stability_granularity();
    }

private:
    std::vector<Automorphism> elems_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    int id_idx_ = -1;
};

struct CanonicalModelResult {
    Model model;                  // vertices are exactly the valence != 2 points
    bool circle_flagged = false;  // true: returned model is a 1-vertex loop stand-in
};

// Suppresses valence-2 vertices. For a circle, returns a flagged
// 1-vertex/1-loop model of the same total length.
CanonicalModelResult canonical_model(const Model& m);

// Full automorphism group of a metric graph that is not a circle
// (backtracking over length- and incidence-preserving assignments of the
// canonical model, including edge reversals, parallel-edge permutations and
// loop end-swaps). Throws on circle input.
FiniteGroup compute_aut(std::shared_ptr<const Model> m);

// Generators of finite circle symmetry groups.
struct CircleGenerator {
    enum class Kind { Rotation, Reflection } kind;
    Rat rotation_arc;     // Rotation: arc length along the traversal direction
    Point axis_a, axis_b; // Reflection: the two (antipodal) fixed points
};

FiniteGroup finite_subgroup_of_circle(std::shared_ptr<const Model> m,
                                      const std::vector<CircleGenerator>& gens);

// Closure of a generator list under composition (with a budget cap).
FiniteGroup subgroup_generated(std::vector<Automorphism> gens, int budget = 20000);

// Trivial group on a model (identity only).
FiniteGroup trivial_group(std::shared_ptr<const Model> m);

// Builds an automorphism of m given explicit vertex images and edge images
// with reversal flags; validates incidence and lengths. Each call gets its
// own frame, so compose several by constructing Automorphisms on one shared
// AutFrame::identity_frame instead (as the group-file parser does).
Automorphism explicit_automorphism(std::shared_ptr<const Model> m, std::vector<int> vertex_image,
                                   std::vector<std::pair<int, bool>> edge_image);

} // namespace tropcurve
