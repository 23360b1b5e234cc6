#include "doctest.h"

#include "fixtures.hpp"
#include "tropcurve/automorphism.hpp"
#include "tropcurve/lattice.hpp"

#include <algorithm>
#include <set>

using namespace tropcurve;
using namespace tropcurve::testfix;

namespace {

// Independent combinatorial count for unit-length graphs: all vertex maps
// preserving adjacency multiplicities (no reuse of the library search).
int brute_force_graph_aut_count(const Model& m) {
    int n = m.num_vertices();
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    std::vector<int> loops(n, 0);
    for (const Edge& e : m.edges()) {
        if (e.u == e.v) ++loops[e.u];
        else {
            ++mult[e.u][e.v];
            ++mult[e.v][e.u];
        }
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    int count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (loops[u] != loops[perm[u]]) ok = false;
            for (int v = 0; v < n && ok; ++v)
                if (mult[u][v] != mult[perm[u]][perm[v]]) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

const Automorphism& nontrivial(const FiniteGroup& g) {
    for (const Automorphism& a : g.elements())
        if (!a.is_identity()) return a;
    throw std::logic_error("no nontrivial element");
}

} // namespace

TEST_CASE("canonical model") {
    // interval subdivided into 4 edges collapses to a 2-vertex interval
    Model path(5, {Edge{0, 1, Rat(1, 4)}, Edge{1, 2, Rat(1, 4)}, Edge{2, 3, Rat(1, 4)},
                   Edge{3, 4, Rat(1, 4)}});
    CanonicalModelResult r = canonical_model(path);
    CHECK(!r.circle_flagged);
    CHECK(r.model.num_vertices() == 2);
    CHECK(r.model.num_edges() == 1);
    CHECK(r.model.edge(0).length == 1);

    CanonicalModelResult t = canonical_model(*theta());
    CHECK(!t.circle_flagged);
    CHECK(t.model.num_vertices() == 2);
    CHECK(t.model.num_edges() == 3);

    // circle as a 4-cycle: flagged stand-in
    Model cyc(4, {Edge{0, 1, Rat(1)}, Edge{1, 2, Rat(1)}, Edge{2, 3, Rat(1)}, Edge{3, 0, Rat(1)}});
    CanonicalModelResult c = canonical_model(cyc);
    CHECK(c.circle_flagged);
    CHECK(c.model.num_vertices() == 1);
    CHECK(c.model.total_length() == 4);
}

TEST_CASE("interval automorphism group") {
    auto m = interval();
    FiniteGroup g = compute_aut(m);
    CHECK(g.order() == 2);
    const Automorphism& iota = nontrivial(g);
    CHECK(act_on_point(iota, Point::vertex(0)) == Point::vertex(1));
    CHECK(act_on_point(iota, Point::vertex(1)) == Point::vertex(0));
    Point z = Point::on_edge(*m, 0, Rat(1, 2));
    CHECK(act_on_point(iota, z) == z);
    CHECK(act_on_point(iota, Point::on_edge(*m, 0, Rat(1, 4))) ==
          Point::on_edge(*m, 0, Rat(3, 4)));
    // iota is an involution
    int ii = g.identity_index() == 0 ? 1 : 0;
    CHECK(g.compose_index(ii, ii) == g.identity_index());
}

TEST_CASE("subdivided interval has the same automorphism group") {
    // vertices off the symmetric position force the frame machinery
    Model path(3, {Edge{0, 1, Rat(1, 3)}, Edge{1, 2, Rat(2, 3)}});
    auto m = std::make_shared<const Model>(path);
    FiniteGroup g = compute_aut(m);
    CHECK(g.order() == 2);
    const Automorphism& iota = nontrivial(g);
    // vertex 1 sits at 1/3; its image is the point at 2/3, inside edge 1
    Point img = act_on_point(iota, Point::vertex(1));
    CHECK(img == Point::on_edge(*m, 1, Rat(1, 3)));
    CHECK(act_on_point(iota, Point::vertex(0)) == Point::vertex(2));
}

TEST_CASE("theta graph automorphisms") {
    FiniteGroup g = compute_aut(theta());
    CHECK(g.order() == 12);
    FiniteGroup g2 = compute_aut(theta_lengths(Rat(1), Rat(2), Rat(3)));
    CHECK(g2.order() == 2);
    FiniteGroup g3 = compute_aut(theta_lengths(Rat(1), Rat(1), Rat(3)));
    CHECK(g3.order() == 4); // swap the two equal edges x swap vertices
}

TEST_CASE("K4 automorphisms and combinatorial inclusion") {
    auto m = k4();
    FiniteGroup g = compute_aut(m);
    CHECK(g.order() == 24);
    CHECK(g.order() >= brute_force_graph_aut_count(*m));
    CHECK(brute_force_graph_aut_count(*m) == 24);
    // group law spot checks
    for (int i = 0; i < g.order(); ++i) {
        CHECK(g.compose_index(i, g.inverse_index(i)) == g.identity_index());
        CHECK(g.compose_index(g.identity_index(), i) == i);
    }
}

TEST_CASE("unit-length combinatorial automorphisms embed (several graphs)") {
    // path P3 and the lollipop
    Model p3(3, {Edge{0, 1, Rat(1)}, Edge{1, 2, Rat(1)}});
    // canonical model of p3 is the length-2 interval
    CHECK(compute_aut(std::make_shared<const Model>(p3)).order() == 2);
    Model lollipop(2, {Edge{0, 1, Rat(1)}, Edge{1, 1, Rat(1)}});
    FiniteGroup gl = compute_aut(std::make_shared<const Model>(lollipop));
    CHECK(gl.order() == 2); // identity and the loop flip
    Model two_loops(1, {Edge{0, 0, Rat(1)}, Edge{0, 0, Rat(1)}});
    FiniteGroup g8 = compute_aut(std::make_shared<const Model>(two_loops));
    CHECK(g8.order() == 8); // swap loops x flip each
}

TEST_CASE("circle groups") {
    auto c = circle4();
    CHECK_THROWS_AS(compute_aut(c), std::invalid_argument);

    CircleGenerator rot{CircleGenerator::Kind::Rotation, Rat(2), Point(), Point()};
    FiniteGroup gs = finite_subgroup_of_circle(c, {rot});
    CHECK(gs.order() == 2);
    const Automorphism& sigma = nontrivial(gs);
    CHECK(act_on_point(sigma, Point::vertex(0)) == Point::vertex(1));
    Point p1 = Point::on_edge(*c, 0, Rat(1));
    Point p2 = Point::on_edge(*c, 1, Rat(1));
    CHECK(act_on_point(sigma, p1) == p2);
    CHECK(act_on_point(sigma, p2) == p1);

    CircleGenerator refl{CircleGenerator::Kind::Reflection, Rat(0), Point::vertex(0),
                         Point::vertex(1)};
    FiniteGroup gi = finite_subgroup_of_circle(c, {refl});
    CHECK(gi.order() == 2);
    const Automorphism& iota = nontrivial(gi);
    CHECK(act_on_point(iota, Point::vertex(0)) == Point::vertex(0));
    CHECK(act_on_point(iota, Point::vertex(1)) == Point::vertex(1));
    CHECK(act_on_point(iota, p1) == p2);

    FiniteGroup gd = finite_subgroup_of_circle(c, {rot, refl});
    CHECK(gd.order() == 4);

    // rotation by a quarter turn has order 4
    CircleGenerator rot1{CircleGenerator::Kind::Rotation, Rat(1), Point(), Point()};
    CHECK(finite_subgroup_of_circle(c, {rot1}).order() == 4);

    // non-antipodal reflection axis is rejected
    CircleGenerator bad{CircleGenerator::Kind::Reflection, Rat(0), Point::vertex(0),
                        Point::on_edge(*c, 0, Rat(1))};
    CHECK_THROWS_AS(finite_subgroup_of_circle(c, {bad}), std::invalid_argument);
}

TEST_CASE("composition of actions") {
    auto c = circle4();
    CircleGenerator rot{CircleGenerator::Kind::Rotation, Rat(1), Point(), Point()};
    FiniteGroup g = finite_subgroup_of_circle(c, {rot});
    REQUIRE(g.order() == 4);
    for (int i = 0; i < g.order(); ++i) {
        for (int j = 0; j < g.order(); ++j) {
            int k = g.compose_index(i, j);
            for (const Point& p :
                 {Point::vertex(0), Point::on_edge(*c, 0, Rat(1, 2)), Point::on_edge(*c, 1, Rat(3, 2))}) {
                CHECK(act_on_point(g.element(k), p) ==
                      act_on_point(g.element(i), act_on_point(g.element(j), p)));
            }
        }
    }
}

TEST_CASE("automorphisms preserve lattice distances") {
    auto t = theta();
    FiniteGroup g = compute_aut(t);
    Subdivision s(t, Rat(1, 2));
    // all pairwise distances via brute-force shortest path on the fine graph
    int n = s.num_points();
    auto dist_matrix = [&]() {
        std::vector<std::vector<int>> d(n, std::vector<int>(n, 1 << 20));
        for (int v = 0; v < n; ++v) d[v][v] = 0;
        for (const Edge& e : s.fine().edges()) {
            d[e.u][e.v] = 1;
            d[e.v][e.u] = 1;
        }
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        return d;
    }();
    for (const Automorphism& a : g.elements()) {
        std::vector<int> img(n);
        for (int v = 0; v < n; ++v) {
            auto iv = s.index_of(act_on_point(a, s.point_of(v)));
            REQUIRE(iv.has_value());
            img[v] = *iv;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(dist_matrix[i][j] == dist_matrix[img[i]][img[j]]);
    }
}

TEST_CASE("subgroup generated and trivial group") {
    auto m = interval();
    FiniteGroup triv = trivial_group(m);
    CHECK(triv.order() == 1);
    FiniteGroup g = compute_aut(m);
    const Automorphism& iota = nontrivial(g);
    FiniteGroup gen = subgroup_generated({iota});
    CHECK(gen.order() == 2);
    CHECK_THROWS_AS(subgroup_generated({}), std::invalid_argument);
}

TEST_CASE("explicit automorphism validation") {
    auto t = theta_lengths(Rat(1), Rat(1), Rat(2));
    // swapping the two unit edges while fixing vertices is valid
    CHECK_NOTHROW(explicit_automorphism(t, {0, 1}, {{1, false}, {0, false}, {2, false}}));
    // mapping a unit edge to the length-2 edge is not
    CHECK_THROWS_AS(explicit_automorphism(t, {0, 1}, {{2, false}, {1, false}, {0, false}}),
                    std::invalid_argument);
    // incidence violation: swap vertices but keep edge orientations
    CHECK_THROWS_AS(explicit_automorphism(t, {1, 0}, {{0, false}, {1, false}, {2, false}}),
                    std::invalid_argument);
    CHECK_NOTHROW(explicit_automorphism(t, {1, 0}, {{0, true}, {1, true}, {2, true}}));
}

TEST_CASE("circle with both edges oriented the same way") {
    // the traversal must walk the second edge against its stored orientation
    auto c = std::make_shared<Model>(2,
                                     std::vector<Edge>{Edge{0, 1, Rat(2)}, Edge{0, 1, Rat(2)}});
    REQUIRE(c->is_circle());
    CircleGenerator rot{CircleGenerator::Kind::Rotation, Rat(2), Point(), Point()};
    FiniteGroup g = finite_subgroup_of_circle(c, {rot});
    CHECK(g.order() == 2);
    const Automorphism* sigma = nullptr;
    for (const Automorphism& a : g.elements())
        if (!a.is_identity()) sigma = &a;
    REQUIRE(sigma);
    CHECK(act_on_point(*sigma, Point::vertex(0)) == Point::vertex(1));
    // the two midpoints swap; on the reversed edge the offset mirrors
    Point q1 = Point::on_edge(*c, 0, Rat(1, 2));
    Point img = act_on_point(*sigma, q1);
    Point back = act_on_point(*sigma, img);
    CHECK(img.edge_id() == 1);
    CHECK(back == q1);
    // distances to the nearest vertex are preserved
    CHECK((img.offset() == Rat(1, 2) || img.offset() == Rat(3, 2)));

    CircleGenerator refl{CircleGenerator::Kind::Reflection, Rat(0), Point::vertex(0),
                         Point::vertex(1)};
    FiniteGroup gi = finite_subgroup_of_circle(c, {refl});
    CHECK(gi.order() == 2);
}
