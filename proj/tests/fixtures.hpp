// Shared test models: the unit interval, the circle of length four,
// the unit theta graph and unit K4.
#pragma once

#include "tropcurve/model.hpp"
#include "tropcurve/rational_fn.hpp"

#include <memory>

namespace tropcurve::testfix {

// [0,1]; x = vertex 0, y = vertex 1, z = midpoint of edge 0.
inline std::shared_ptr<const Model> interval() {
    return std::make_shared<Model>(2, std::vector<Edge>{Edge{0, 1, Rat(1)}});
}

// circle of length four: x = vertex 0, x' = vertex 1, two edges of length 2
inline std::shared_ptr<const Model> circle4() {
    return std::make_shared<Model>(
        2, std::vector<Edge>{Edge{0, 1, Rat(2)}, Edge{1, 0, Rat(2)}});
}

// two vertices joined by three unit edges
inline std::shared_ptr<const Model> theta() {
    return std::make_shared<Model>(
        2, std::vector<Edge>{Edge{0, 1, Rat(1)}, Edge{0, 1, Rat(1)}, Edge{0, 1, Rat(1)}});
}

inline std::shared_ptr<const Model> theta_lengths(const Rat& a, const Rat& b, const Rat& c) {
    return std::make_shared<Model>(2,
                                   std::vector<Edge>{Edge{0, 1, a}, Edge{0, 1, b}, Edge{0, 1, c}});
}

// complete graph on four vertices, unit lengths
inline std::shared_ptr<const Model> k4() {
    std::vector<Edge> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) edges.push_back(Edge{u, v, Rat(1)});
    return std::make_shared<Model>(4, edges);
}

// slope-one function on the interval with f(x) = 1, f(y) = 0
inline RationalFunction interval_f1(const Model& m) {
    return RationalFunction::from_tracks(m, {{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}});
}

// g1 of the 2z system: 0 on [x,z], slope two on [z,y], g1(y) = -1
inline RationalFunction interval_g1(const Model& m) {
    return RationalFunction::from_tracks(
        m, {{{Rat(0), Rat(0)}, {Rat(1, 2), Rat(0)}, {Rat(1), Rat(-1)}}});
}

// g3 of the 2z system: g3(x) = g3(y) = -1/2, g3(z) = 0, slope one
inline RationalFunction interval_g3(const Model& m) {
    return RationalFunction::from_tracks(
        m, {{{Rat(0), Rat(-1, 2)}, {Rat(1, 2), Rat(0)}, {Rat(1), Rat(-1, 2)}}});
}

} // namespace tropcurve::testfix
