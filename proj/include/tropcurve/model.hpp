/*
 * model.hpp
 * ---------
 * The metric graph model: a finite connected multigraph (loops allowed)
 * with exact positive rational edge lengths, together with points on it
 * and compact subgraphs.
 *
 * Conventions:
 *  - each edge stores an ordered endpoint pair; offset 0 is the first
 *    endpoint, offset = length the second;
 *  - Point is canonical: endpoint offsets normalize to vertex form,
 *    interior offsets satisfy 0 < t < length.
 */
#pragma once

#include "tropcurve/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tropcurve {

class Model;

struct Edge {
    int u = -1;
    int v = -1;
    Rat length;
};

class Point {
public:
    Point() = default;
    static Point vertex(int v);
    // Normalizes endpoint offsets to vertex form.
    static Point on_edge(const Model& m, int edge, const Rat& offset);

    bool is_vertex() const { return vertex_ >= 0; }
    int vertex_id() const { return vertex_; }
    int edge_id() const { return edge_; }
    const Rat& offset() const { return offset_; }

    friend bool operator==(const Point& a, const Point& b) {
        return a.vertex_ == b.vertex_ && a.edge_ == b.edge_ && a.offset_ == b.offset_;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // Vertices first (by id), then interior points by (edge, offset).
    friend bool operator<(const Point& a, const Point& b) {
        if (a.is_vertex() != b.is_vertex()) return a.is_vertex();
        if (a.is_vertex()) return a.vertex_ < b.vertex_;
        if (a.edge_ != b.edge_) return a.edge_ < b.edge_;
        return a.offset_ < b.offset_;
    }

    std::string str() const;

private:
    int vertex_ = -1;
    int edge_ = -1;
    Rat offset_;
};

class Model {
public:
    // Vertices are 0..num_vertices-1. Validates connectivity, at least one
    // edge and strictly positive lengths; throws std::invalid_argument.
    Model(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Edge-ends incident to v as (edge, end) with end 0 = offset-0 side.
    // A loop at v contributes both ends.
    const std::vector<std::pair<int, int>>& incident_ends(int v) const {
        return incident_.at(v);
    }

    bool is_loop(int e) const { return edges_[e].u == edges_[e].v; }
    int valence(int v) const { return static_cast<int>(incident_.at(v).size()); }

    // True iff every point has valence 2 (the metric graph is a circle).
    bool is_circle() const;
    Rat total_length() const;

    friend bool operator==(const Model& a, const Model& b);

private:
    int num_vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> incident_;
};

// genus = #E - #V + 1 (first Betti number of a connected graph).
Int genus(const Model& m);

// Local valence at a point: interior edge points have valence 2.
int valency(const Model& m, const Point& p);

// A subgraph: a compact subset with finitely many components, stored as
// pairwise-disjoint closed intervals per edge plus explicit vertices.
class Subgraph {
public:
    struct Interval {
        Rat a, b; // closed [a, b], 0 <= a <= b <= length; a == b is an isolated point
        friend bool operator==(const Interval& x, const Interval& y) {
            return x.a == y.a && x.b == y.b;
        }
        friend bool operator<(const Interval& x, const Interval& y) {
            if (x.a != y.a) return x.a < y.a;
            return x.b < y.b;
        }
    };

    explicit Subgraph(const Model& m);
    static Subgraph whole(const Model& m);
    static Subgraph single_point(const Model& m, const Point& p);

    const Model& model() const { return *model_; }

    void add_interval(int edge, const Rat& a, const Rat& b);
    void add_vertex(int v);
    void add_point(const Point& p);

    bool is_empty() const;
    bool is_whole() const;
    bool contains(const Point& p) const;
    bool contains_vertex(int v) const { return vertex_in_[v]; }
    const std::vector<Interval>& intervals(int edge) const { return per_edge_[edge]; }

    // Number of directions at p leaving the subgraph; p must belong to it.
    int outdegree(const Point& p) const;
    // Points of the subgraph with outdegree >= 1.
    std::vector<Point> boundary_points() const;

    Subgraph united(const Subgraph& other) const;
    std::vector<Subgraph> components() const;

    friend bool operator==(const Subgraph& a, const Subgraph& b);

    std::string str() const;

private:
    void normalize();
    const Model* model_;
    std::vector<std::vector<Interval>> per_edge_;
    std::vector<char> vertex_in_;
};

std::vector<Subgraph> components(const Subgraph& s);

// Number of directions leaving s at a boundary point p; throws if p is not
// a boundary point of s.
int boundary_outdegree(const Model& m, const Subgraph& s, const Point& p);

// Closures of the connected components of the complement of a finite point
// set. Subgraphs whose boundary lies inside boundary_set are exactly unions
// of these closures together with optional isolated points of the set.
std::vector<Subgraph> complement_closure_subgraphs(const Model& m,
                                                   const std::vector<Point>& boundary_set);

} // namespace tropcurve
