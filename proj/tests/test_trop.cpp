#include "doctest.h"

#include "tropcurve/trop.hpp"

#include <random>

using namespace tropcurve;

namespace {

const TropScalar NI = TropScalar::neg_inf();

TropMatrix make2(std::initializer_list<TropScalar> entries) {
    TropMatrix m(2, 2);
    auto it = entries.begin();
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m.set(r, c, *it++);
    return m;
}

// Inverse search over candidate generalized permutation matrices: for every
// permutation rho, the only viable inverse has -a(rho(l), l) at (l, rho(l));
// accept when the two-sided product is the identity.
bool brute_force_invertible(const TropMatrix& a) {
    int n = a.rows();
    std::vector<int> rho(n);
    for (int i = 0; i < n; ++i) rho[i] = i;
    TropMatrix id = TropMatrix::identity(n);
    do {
        TropMatrix b(n, n);
        bool viable = true;
        for (int l = 0; l < n && viable; ++l) {
            if (!a.at(rho[l], l).is_finite()) viable = false;
            else b.set(l, rho[l], TropScalar(-a.at(rho[l], l).value()));
        }
        if (viable && mat_mul(a, b) == id && mat_mul(b, a) == id) return true;
    } while (std::next_permutation(rho.begin(), rho.end()));
    return false;
}

} // namespace

TEST_CASE("tropical scalar operations") {
    CHECK(trop_add(TropScalar(Rat(3)), TropScalar(Rat(5))) == TropScalar(Rat(5)));
    CHECK(trop_add(NI, TropScalar(Rat(-2))) == TropScalar(Rat(-2)));
    CHECK(trop_add(TropScalar(Rat(1, 2)), TropScalar(Rat(1, 3))) == TropScalar(Rat(1, 2)));
    CHECK(trop_mul(TropScalar(Rat(2)), TropScalar(Rat(3))) == TropScalar(Rat(5)));
    CHECK(trop_mul(NI, TropScalar(Rat(7))).is_neg_inf());
    CHECK(NI.str() == "-inf");
    CHECK(TropScalar(Rat(1, 2)).str() == "1/2");
}

TEST_CASE("matrix multiplication and identity") {
    TropMatrix id = TropMatrix::identity(2);
    TropMatrix m = make2({TropScalar(Rat(1)), TropScalar(Rat(2)), TropScalar(Rat(3)),
                          TropScalar(Rat(4))});
    CHECK(mat_mul(id, m) == m);
    CHECK(mat_mul(m, id) == m);
    TropMatrix anti = make2({NI, TropScalar(Rat(0)), TropScalar(Rat(0)), NI});
    CHECK(mat_mul(anti, anti) == id);
    TropMatrix a(2, 3), b(2, 3);
    CHECK_THROWS_AS(mat_mul(a, b), std::invalid_argument);
}

TEST_CASE("regularity and inversion") {
    TropMatrix id = TropMatrix::identity(2);
    CHECK(is_regular(id));
    TropMatrix zeros(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) zeros.set(r, c, TropScalar(Rat(0)));
    CHECK(!is_regular(zeros));
    TropMatrix diag = make2({TropScalar(Rat(3)), NI, NI, TropScalar(Rat(-1))});
    CHECK(is_regular(diag));
    TropMatrix inv = invert(diag);
    CHECK(inv == make2({TropScalar(Rat(-3)), NI, NI, TropScalar(Rat(1))}));
    CHECK(mat_mul(diag, inv) == id);
    CHECK(mat_mul(inv, diag) == id);
    TropMatrix swp = TropMatrix::permutation({1, 0});
    CHECK(invert(swp) == swp);
    CHECK_THROWS_AS(invert(zeros), std::invalid_argument);
    TropMatrix rect(2, 3);
    CHECK_THROWS_AS(is_regular(rect), std::invalid_argument);
}

TEST_CASE("regularity matches brute-force inverse search on all 2x2") {
    std::vector<TropScalar> pool{NI, TropScalar(Rat(-1)), TropScalar(Rat(0)),
                                 TropScalar(Rat(1))};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    TropMatrix m = make2({pool[a], pool[b], pool[c], pool[d]});
                    CHECK(is_regular(m) == brute_force_invertible(m));
                    CHECK(is_regular(m) == is_generalized_permutation(m));
                }
}

TEST_CASE("regularity matches brute force on random 3x3") {
    std::mt19937 rng(20240811);
    std::vector<TropScalar> pool{NI, TropScalar(Rat(-1)), TropScalar(Rat(0)),
                                 TropScalar(Rat(1))};
    for (int trial = 0; trial < 400; ++trial) {
        TropMatrix m(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.set(r, c, pool[rng() % 4]);
        CHECK(is_regular(m) == brute_force_invertible(m));
    }
}

TEST_CASE("matrix multiplication is associative") {
    std::mt19937 rng(7);
    std::vector<TropScalar> pool{NI, TropScalar(Rat(-2)), TropScalar(Rat(0)),
                                 TropScalar(Rat(3)), TropScalar(Rat(1, 2))};
    for (int trial = 0; trial < 50; ++trial) {
        TropMatrix a(3, 2), b(2, 4), c(4, 3);
        auto fill = [&](TropMatrix& m) {
            for (int r = 0; r < m.rows(); ++r)
                for (int j = 0; j < m.cols(); ++j) m.set(r, j, pool[rng() % pool.size()]);
        };
        fill(a);
        fill(b);
        fill(c);
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    }
}

TEST_CASE("inverse law for random generalized permutation matrices") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        TropMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.set(i, perm[i], TropScalar(Rat(static_cast<int>(rng() % 11) - 5, 1 + rng() % 3)));
        CHECK(is_regular(m));
        CHECK(mat_mul(m, invert(m)) == TropMatrix::identity(n));
        CHECK(mat_mul(invert(m), m) == TropMatrix::identity(n));
    }
}

TEST_CASE("projective points") {
    ProjPoint p({TropScalar(Rat(0)), TropScalar(Rat(1))});
    ProjPoint q({TropScalar(Rat(-1)), TropScalar(Rat(0))});
    CHECK(proj_equal(p, q));
    ProjPoint a({TropScalar(Rat(0)), NI});
    ProjPoint b({NI, TropScalar(Rat(0))});
    CHECK(!proj_equal(a, b));
    ProjPoint u({TropScalar(Rat(1)), TropScalar(Rat(2)), TropScalar(Rat(0))});
    ProjPoint v({TropScalar(Rat(3)), TropScalar(Rat(4)), TropScalar(Rat(2))});
    CHECK(proj_equal(u, v));
    CHECK_THROWS_AS(ProjPoint({NI, NI}), std::invalid_argument);
    CHECK_THROWS_AS(proj_equal(p, u), std::invalid_argument);
}

TEST_CASE("proj_equal is an equivalence relation on random points") {
    std::mt19937 rng(4242);
    auto random_point = [&]() {
        std::vector<TropScalar> c;
        bool any = false;
        for (int i = 0; i < 3; ++i) {
            if (rng() % 4 == 0 && (any || i < 2)) {
                c.push_back(NI);
            } else {
                c.push_back(TropScalar(Rat(static_cast<int>(rng() % 7) - 3)));
                any = true;
            }
        }
        if (!any) c[0] = TropScalar(Rat(0));
        return ProjPoint(c);
    };
    for (int trial = 0; trial < 200; ++trial) {
        ProjPoint x = random_point(), y = random_point(), z = random_point();
        CHECK(proj_equal(x, x));
        CHECK(proj_equal(x, y) == proj_equal(y, x));
        if (proj_equal(x, y) && proj_equal(y, z)) CHECK(proj_equal(x, z));
    }
}

TEST_CASE("pgl equality") {
    TropMatrix id = TropMatrix::identity(2);
    TropMatrix shifted = make2({TropScalar(Rat(5)), NI, NI, TropScalar(Rat(5))});
    CHECK(pgl_equal(id, shifted));
    TropMatrix anti = make2({NI, TropScalar(Rat(0)), TropScalar(Rat(0)), NI});
    CHECK(!pgl_equal(id, anti));
    TropMatrix anti2 = make2({NI, TropScalar(Rat(2)), TropScalar(Rat(2)), NI});
    CHECK(pgl_equal(anti, anti2));
    TropMatrix zeros(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) zeros.set(r, c, TropScalar(Rat(0)));
    CHECK_THROWS_AS(pgl_equal(id, zeros), std::invalid_argument);
}
