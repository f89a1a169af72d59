#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lattice.hpp"

using namespace vbc;

namespace {

const IntMat kU{{0, 1}, {1, 0}};
const IntMat kK8{{3, 1}, {1, 3}};
// three-generator block of the index-two kernel inside h-perp
const IntMat kGammaBlock{{-2, 1, 0}, {1, 2, 2}, {0, 2, 0}};
// Bourbaki-numbered Cartan matrix of E8, negated to make it negative definite
const IntMat kE8Neg{
    {-2, 0, 1, 0, 0, 0, 0, 0},
    {0, -2, 0, 1, 0, 0, 0, 0},
    {1, 0, -2, 1, 0, 0, 0, 0},
    {0, 1, 1, -2, 1, 0, 0, 0},
    {0, 0, 0, 1, -2, 1, 0, 0},
    {0, 0, 0, 0, 1, -2, 1, 0},
    {0, 0, 0, 0, 0, 1, -2, 1},
    {0, 0, 0, 0, 0, 0, 1, -2}};

Lattice k3_lattice() {
    Lattice u{kU};
    Lattice e8n{kE8Neg};
    return direct_sum(direct_sum(direct_sum(u, u), u), direct_sum(e8n, e8n));
}

IntMat random_symmetric_nonsingular(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-5, 5);
    for (;;) {
        IntMat g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                g(i, j) = d(rng);
                g(j, i) = g(i, j);
            }
        if (det(g) != 0) return g;
    }
}

IntMat random_independent_rows(std::mt19937& rng, std::size_t k, std::size_t n) {
    std::uniform_int_distribution<int> d(-6, 6);
    for (;;) {
        IntMat b(k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = d(rng);
        if (rank(b) == k) return b;
    }
}

}  // namespace

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(Lattice(IntMat{{0, 1}, {2, 0}}), std::domain_error);
    CHECK_THROWS_AS(Lattice(IntMat{{1, 2}, {2, 4}}), std::domain_error);
    CHECK_THROWS_AS(Lattice(IntMat(2, 3)), ShapeError);
    Lattice zero{IntMat(0, 0)};
    CHECK(zero.rank() == 0);
    CHECK(zero.det() == 1);
}

TEST_CASE("inner products") {
    Lattice k8{kK8};
    RatVec g8star{make_rat(3, 8), make_rat(-1, 8)};
    CHECK(k8.inner(g8star, g8star) == make_rat(3, 8));

    Lattice gblock{kGammaBlock};
    RatVec gstar{make_rat(1, 4), make_rat(1, 2), make_rat(-5, 8)};
    CHECK(gblock.inner(gstar, gstar) == make_rat(-5, 8));
    CHECK(gblock.inner(gstar, RatVec{Rat(0), Rat(0), Rat(0)}) == 0);
    CHECK(gblock.inner(std::vector<Int>{1, 0, 0}, std::vector<Int>{0, 1, 0}) == 1);
}

TEST_CASE("twist") {
    Lattice u{kU};
    CHECK(twist(u, -1).gram() == IntMat{{0, -1}, {-1, 0}});
    CHECK(twist(twist(u, -1), -1) == u);
    CHECK(twist(Lattice{kK8}, -1).det() == 8);
    CHECK_THROWS_AS(twist(u, 0), std::domain_error);
}

TEST_CASE("direct sums and the rank-22 ambient") {
    Lattice u{kU};
    CHECK(direct_sum(u, u).gram() ==
          IntMat{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});

    Lattice e8n{kE8Neg};
    CHECK(e8n.det() == 1);
    CHECK(is_even(e8n));
    CHECK(signature(e8n) == Signature{0, 8});

    Lattice lam = k3_lattice();
    CHECK(lam.rank() == 22);
    CHECK(lam.det() == -1);
    CHECK(signature(lam) == Signature{3, 19});
    CHECK(is_even(lam));

    // full rank-21 kernel lattice: gamma block plus the untouched U + E8(-1)^2
    Lattice talpha = direct_sum(direct_sum(Lattice{kGammaBlock}, Lattice{kU}),
                                direct_sum(Lattice{kE8Neg}, Lattice{kE8Neg}));
    CHECK(direct_sum(Lattice{kK8}, twist(talpha, -1)).det() == 64);
}

TEST_CASE("signature") {
    CHECK(signature(Lattice{kU}) == Signature{1, 1});
    CHECK(signature(Lattice{kK8}) == Signature{2, 0});
    CHECK(signature(Lattice{kGammaBlock}) == Signature{1, 2});
    CHECK(signature(Lattice{IntMat(0, 0)}) == Signature{0, 0});
}

TEST_CASE("signature properties on random forms") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        Lattice l{random_symmetric_nonsingular(rng, dim(rng))};
        Signature s = signature(l);
        CHECK(s.positives + s.negatives == l.rank());
        Signature t = signature(twist(l, -1));
        CHECK(t.positives == s.negatives);
        CHECK(t.negatives == s.positives);
        // sign of det = (-1)^negatives
        CHECK((l.det() > 0) == (s.negatives % 2 == 0));
    }
}

TEST_CASE("parity") {
    CHECK_FALSE(is_even(Lattice{kK8}));
    CHECK(is_even(Lattice{kU}));
    CHECK(is_even(Lattice{kE8Neg}));
}

TEST_CASE("discriminant groups") {
    CHECK(discriminant_group(Lattice{kK8}).invariant_factors == std::vector<Int>{8});
    CHECK(discriminant_group(Lattice{kGammaBlock}).invariant_factors == std::vector<Int>{8});
    CHECK(discriminant_group(Lattice{kU}).invariant_factors.empty());
    CHECK(discriminant_group(Lattice{IntMat{{2, 0}, {0, 6}}}).invariant_factors ==
          std::vector<Int>{2, 6});
    CHECK(discriminant_group(Lattice{kGammaBlock}).order() == 8);
}

TEST_CASE("discriminant group order equals |det|") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        Lattice l{random_symmetric_nonsingular(rng, dim(rng))};
        Int groups = discriminant_group(l).order();
        CHECK(groups == abs(l.det()));
    }
}

TEST_CASE("dual vectors") {
    auto [ord8, n8] = dual_order_and_norm(Lattice{kK8}, {make_rat(3, 8), make_rat(-1, 8)});
    CHECK(ord8 == 8);
    CHECK(n8 == make_rat(3, 8));

    auto [orda, na] =
        dual_order_and_norm(Lattice{kGammaBlock}, {make_rat(1, 4), make_rat(1, 2), make_rat(-5, 8)});
    CHECK(orda == 8);
    CHECK(na == make_rat(-5, 8));

    auto [ord1, n1] = dual_order_and_norm(Lattice{kK8}, {Rat(1), Rat(1)});
    CHECK(ord1 == 1);
    CHECK(n1 == 8);

    CHECK_THROWS_AS(dual_order_and_norm(Lattice{kK8}, RatVec{make_rat(1, 2), Rat(0)}),
                    std::domain_error);
}

TEST_CASE("sublattice basics") {
    Lattice z2{IntMat{{1, 0}, {0, 1}}};
    Sublattice s{z2, IntMat{{2, 0}}};
    CHECK(s.rank() == 1);
    CHECK(s.gram_matrix() == IntMat{{4}});
    CHECK_FALSE(is_primitive(s));
    CHECK(saturation(s).basis() == IntMat{{1, 0}});

    Sublattice prim{z2, IntMat{{1, 0}}};
    CHECK(is_primitive(prim));

    CHECK_THROWS_AS(Sublattice(z2, IntMat{{1, 1}, {2, 2}}), std::domain_error);
    CHECK_THROWS_AS(Sublattice(z2, IntMat{{1, 0, 0}}), ShapeError);

    Sublattice empty{z2, IntMat(0, 2)};
    CHECK(empty.gram_matrix() == IntMat(0, 0));
    CHECK(orthogonal_complement(empty).rank() == 2);
}

TEST_CASE("orthogonal complements") {
    Lattice lam = k3_lattice();
    std::vector<Int> h{1, 1, 0, 0, 0, 0};
    h.resize(22, Int(0));
    IntMat hrow(1, 22);
    hrow.set_row(0, h);
    Sublattice hperp = orthogonal_complement(Sublattice{lam, hrow});
    CHECK(hperp.rank() == 21);
    CHECK(is_primitive(hperp));
    // h-perp contains (1,-1) in the first summand, whose norm is -2
    auto sol = solve_integral(hperp.basis(), [] {
        std::vector<Int> v(22, Int(0));
        v[0] = 1;
        v[1] = -1;
        return v;
    }());
    CHECK(sol.has_value());

    Sublattice full{lam, IntMat::identity(22)};
    CHECK(orthogonal_complement(full).rank() == 0);
}

TEST_CASE("saturation and complement properties on random sublattices") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::size_t> amb(2, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = amb(rng);
        std::uniform_int_distribution<std::size_t> sub(1, std::min<std::size_t>(3, n));
        Lattice l{random_symmetric_nonsingular(rng, n)};
        Sublattice s{l, random_independent_rows(rng, sub(rng), n)};

        Sublattice sat = saturation(s);
        CHECK(saturation(sat).basis() == sat.basis());
        CHECK(is_primitive(sat));

        Sublattice comp = orthogonal_complement(s);
        CHECK(is_primitive(comp));
        CHECK(comp.rank() == n - s.rank());
    }
}

TEST_CASE("complement determinant matches in a unimodular ambient") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 4 + trial % 3;
        Lattice zn{IntMat::identity(n)};
        Sublattice raw{zn, random_independent_rows(rng, 2, n)};
        Sublattice s = saturation(raw);
        Sublattice c = orthogonal_complement(s);
        Int ds = det(s.gram_matrix());
        Int dc = det(c.gram_matrix());
        if (ds != 0 && dc != 0) CHECK(abs(ds) == abs(dc));
    }
}

TEST_CASE("gluing") {
    Lattice k8{kK8};
    RatVec g8star{make_rat(3, 8), make_rat(-1, 8)};

    GluedLattice even = glue(k8, twist(k8, -1), {{g8star, g8star}});
    CHECK(abs(even.lattice.det()) == 1);
    CHECK(even.lattice.rank() == 4);
    CHECK(signature(even.lattice) == Signature{2, 2});

    GluedLattice none = glue(k8, twist(k8, -1), {});
    CHECK(none.lattice == direct_sum(k8, twist(k8, -1)));
    CHECK(none.basis == RatMat::identity(4));

    // same glue vector against +K8 has norm 3/4, not integral
    CHECK_THROWS_AS(glue(k8, k8, {{g8star, g8star}}), std::domain_error);
    // vector outside the dual
    CHECK_THROWS_AS(glue(k8, k8, {{RatVec{make_rat(1, 2), Rat(0)}, RatVec{Rat(0), Rat(0)}}}),
                    std::domain_error);
}

TEST_CASE("glue determinant law on random even-denominator vectors") {
    // index-2 glue of diag(2,2k) with itself by halves of matching parity
    for (int k = 1; k <= 8; ++k) {
        Lattice l{IntMat{{2, 0}, {0, 2 * k}}};
        RatVec w{make_rat(1, 2), make_rat(1, 2)};
        // (w,w) in L + L(-1) = (1/2 + k/2) - (1/2 + k/2) = 0
        GluedLattice g = glue(l, twist(l, -1), {{w, w}});
        Int before = direct_sum(l, twist(l, -1)).det();
        CHECK(g.lattice.det() * 4 == before);  // index 2, law det/index^2
    }
}
