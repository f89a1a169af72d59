#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "cubic.hpp"

using namespace vbc;

namespace {

std::vector<Int> lvec23(std::initializer_list<long> xs) {
    std::vector<Int> v(23, Int(0));
    std::size_t i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

std::vector<Int> lvec22(std::initializer_list<long> xs) {
    std::vector<Int> v(22, Int(0));
    std::size_t i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

}  // namespace

TEST_CASE("case validity") {
    CHECK(valid_case(0, 2));
    CHECK(valid_case(4, 4));
    CHECK(valid_case(3, 3));
    CHECK_FALSE(valid_case(3, 2));
    CHECK_FALSE(valid_case(4, 2));
    CHECK_FALSE(valid_case(4, 3));
    CHECK_FALSE(valid_case(5, 4));
    CHECK_FALSE(valid_case(-1, 4));
    CHECK_FALSE(valid_case(2, 1));
    CHECK_THROWS_AS(require_valid_case(3, 2), std::domain_error);
    CHECK_THROWS_AS(require_valid_case(0, 1), std::domain_error);
    CHECK_THROWS_AS(require_valid_case(7, 5), std::domain_error);
    CHECK_THROWS_AS(m_vector(4, 3), std::domain_error);
    CHECK_THROWS_AS(case_report(4, 2), std::domain_error);
}

TEST_CASE("rank-3 grams and their determinants") {
    CHECK(a_gram(2, 4) == IntMat{{3, 1, 0}, {1, 3, 2}, {0, 2, 8}});
    for (int tau = 0; tau <= 4; ++tau)
        for (long n = 2; n <= 9; ++n) {
            if (!valid_case(tau, n)) continue;
            CHECK(det(a_gram(tau, n)) == a_det(tau, n));
        }
    CHECK(a_det(4, 5) == 32);
    CHECK(a_det(0, 2) == 32);
    CHECK(a_det(1, 2) == 29);
}

TEST_CASE("glued overlattice audit") {
    const GluedAmbient& ga = glued_ambient();
    const GlueAudit& a = ga.audit();
    CHECK(a.g8_norm == make_rat(3, 8));
    CHECK(a.kernel_dual_norm == make_rat(-5, 8));
    CHECK(a.sum_norm == 1);
    CHECK(a.det_l == 1);
    CHECK(a.sig == Signature{21, 2});
    CHECK(a.odd);
    CHECK(a.five_block_ok);
    CHECK(a.sylvester_ok);
    CHECK(a.h3_perp_even);
    CHECK(a.k8_disc.invariant_factors == std::vector<Int>{8});
    CHECK(a.kernel_disc.invariant_factors == std::vector<Int>{8});
    CHECK(a.l_disc.invariant_factors.empty());

    const Lattice& l = ga.l();
    CHECK(l.rank() == 23);
    CHECK(l.det() == 1);
    CHECK(l.gram()(0, 0) == 3);
    CHECK(l.gram()(0, 1) == 1);
    CHECK(l.gram()(2, 2) == 1);
    CHECK(l.gram()(2, 4) == 1);
    CHECK_FALSE(is_even(l));
    CHECK(signature(l) == Signature{21, 2});
    CHECK(discriminant_group(l).invariant_factors.empty());
}

TEST_CASE("rewriting block-orthogonal vectors") {
    const GluedAmbient& ga = glued_ambient();
    const Lattice& l = ga.l();
    const Lattice& lam = k3_ambient().lambda();

    std::vector<Int> e3(23, Int(0));
    e3[3] = 1;
    CHECK(ga.to_lambda(e3) == lvec22({1, -1, 0, 1}));

    std::vector<Int> e4(23, Int(0));
    e4[4] = 1;
    CHECK(ga.to_lambda(e4) == lvec22({0, 0, 1, -1}));

    std::vector<Int> g(23, Int(0));
    g[0] = -3;
    g[1] = 1;
    g[2] = 8;
    CHECK(ga.to_lambda(g) == lvec22({2, -2, 4, -4}));
    CHECK(l.inner(g, g) == -lam.inner(ga.to_lambda(g), ga.to_lambda(g)));

    std::vector<Int> tail(23, Int(0));
    tail[7] = 5;
    std::vector<Int> want(22, Int(0));
    want[6] = 5;
    CHECK(ga.to_lambda(tail) == want);
    CHECK(l.inner(tail, tail) == -lam.inner(want, want));

    std::vector<Int> e0(23, Int(0));
    e0[0] = 1;
    CHECK_THROWS_AS(ga.to_lambda(e0), std::domain_error);
    CHECK_THROWS_AS(ga.to_lambda(std::vector<Int>(5, Int(0))), ShapeError);
}

TEST_CASE("embedding vectors") {
    CHECK(choose_v(0, 4) == std::vector<Int>{1, -3});
    CHECK(choose_v(3, 5) == std::vector<Int>{1, -3});
    CHECK(choose_v(4, 7) == std::vector<Int>{1, -4});
    CHECK(m_vector(0, 2) == lvec23({0, 0, 0, 1, 0, 1, -1}));
    CHECK(m_vector(2, 3) == lvec23({2, 0, -6, 1, 3, 1, -2}));
    CHECK(m_vector(4, 5) == lvec23({1, 1, -4, 1, 2, 1, -2}));

    const Lattice& l = glued_ambient().l();
    std::vector<Int> e0(23, Int(0)), e1(23, Int(0));
    e0[0] = 1;
    e1[1] = 1;
    for (int tau = 0; tau <= 4; ++tau)
        for (long n : {2L, 6L, 11L}) {
            if (!valid_case(tau, n)) continue;
            std::vector<Int> m = m_vector(tau, n);
            CHECK(l.inner(e0, m) == 0);
            CHECK(l.inner(e1, m) == tau);
            CHECK(l.inner(m, m) == 2 * Int(n));
        }
}

TEST_CASE("t generator matches its closed form") {
    struct Row {
        int tau;
        long c, d, e;
    };
    const Row rows[] = {{0, 0, 0, 1}, {1, 1, -3, 8}, {2, 1, -3, 4}, {3, 3, -9, 8}, {4, 1, -3, 2}};
    for (const Row& r : rows)
        for (long n : {2L, 3L, 5L, 8L}) {
            if (!valid_case(r.tau, n)) continue;
            std::vector<Int> m = m_vector(r.tau, n);
            std::vector<Int> want(23);
            for (std::size_t j = 0; j < 23; ++j) want[j] = r.e * m[j];
            want[0] += r.c;
            want[1] += r.d;
            CHECK(t_vector_in_l(r.tau, n) == want);
        }
}

TEST_CASE("t in the K3 ambient") {
    for (long n : {2L, 4L}) {
        CHECK(t_vector(0, n) == lvec22({1, -1, 0, 1, 1, 1 - n}));
        CHECK(t_vector(2, n) == lvec22({-2, 2, 0, 4, 4, 4 * (1 - n)}));
        if (valid_case(4, n))
            CHECK(t_vector(4, n) == lvec22({0, 0, 0, 2, 2, 2 * (3 - n)}));
    }
    CHECK(t_vector(1, 2) == lvec22({2, -2, -4, 12, 8, -8}));
    CHECK(t_vector(3, 3) == lvec22({6, -6, 4, 4, 8, -8}));

    const Lattice& l = glued_ambient().l();
    const Lattice& lam = k3_ambient().lambda();
    for (int tau = 0; tau <= 4; ++tau) {
        std::vector<Int> tl = t_vector_in_l(tau, 5);
        std::vector<Int> t = t_vector(tau, 5);
        CHECK(l.inner(tl, tl) == -lam.inner(t, t));
        CHECK(content(tl) == 1);
    }
}

TEST_CASE("picard sublattices") {
    const K3Ambient& amb = k3_ambient();
    for (int tau = 0; tau <= 4; ++tau)
        for (long n = 2; n <= 12; ++n) {
            if (!valid_case(tau, n)) continue;
            Sublattice pic = picard_sublattice(tau, n);
            CHECK(pic.basis().row(0) == amb.h());
            CHECK(is_primitive(pic));
            IntMat g = pic.gram_matrix();
            CHECK(g(0, 0) == 2);
            CHECK((g(0, 1) == 0 || g(0, 1) == 1));
            CHECK(normalize_pic_gram(g) == g);
            CHECK(picard_lattice(tau, n) == closed_form_pic(tau, n));
        }
}

TEST_CASE("determinant relation") {
    CHECK(det_relation(0, 5) == 4);
    CHECK(det_relation(2, 7) == 4);
    CHECK(det_relation(4, 6) == 4);
    CHECK(det_relation(1, 4) == 1);
    CHECK(det_relation(3, 4) == 1);
}

TEST_CASE("vanishing class representatives") {
    for (long n : {2L, 5L}) {
        Sublattice pic = picard_sublattice(0, n);
        CHECK(vanishing_bfield(pic).coords() ==
              scale(make_rat(1, 2), to_rat(t_vector(0, n))));
    }
    for (long n : {4L, 7L}) {
        Sublattice pic = picard_sublattice(4, n);
        CHECK(vanishing_bfield(pic).coords() ==
              scale(make_rat(1, 4), to_rat(t_vector(4, n))));
    }
    for (long n : {3L, 6L}) {
        Sublattice pic = picard_sublattice(2, n);
        RatVec rep = scale(make_rat(1, 8),
                           add(scale(Rat(2), to_rat(k3_ambient().h())),
                               to_rat(t_vector(2, n))));
        CHECK(bfield_equiv(vanishing_bfield(pic), BField{rep}, pic));
    }
}

TEST_CASE("sums with the fixed class") {
    const K3Ambient& amb = k3_ambient();
    BField ba{amb.b_alpha()};
    for (long n : {2L, 3L}) {
        BField sum = add_bfields(ba, vanishing_bfield(picard_sublattice(0, n)));
        CHECK(sum.coords() == scale(make_rat(1, 2), to_rat(lvec22({1, 0, 1, 2, 1, 1 - n}))));
        auto [bh, b2] = bfield_invariants(sum, amb.h_sublattice());
        CHECK(bh == make_rat(1, 2));
        REQUIRE(b2.has_value());
        CHECK(*b2 == mod1(make_rat(3 - n, 2)));
    }
    for (long n : {4L, 5L}) {
        BField sum = add_bfields(ba, vanishing_bfield(picard_sublattice(4, n)));
        CHECK(sum.coords() == scale(make_rat(1, 2), to_rat(lvec22({0, 1, 1, 2, 1, 3 - n}))));
        auto [bh, b2] = bfield_invariants(sum, amb.h_sublattice());
        CHECK(bh == make_rat(1, 2));
        REQUIRE(b2.has_value());
        CHECK(*b2 == mod1(make_rat(1 - n, 2)));
    }
}

TEST_CASE("case reports") {
    CaseReport r02 = case_report(0, 2);
    CHECK(r02.pic_gram == IntMat{{2, 0}, {0, -4}});
    CHECK(r02.brauer.kind == BrauerKind::PointOrderTwo);
    CHECK(r02.clifford == CliffordRelation::DistinctSumOdd);
    CHECK(r02.det_relation_factor == 4);
    CHECK(r02.det_pic == -8);
    CHECK(r02.det_m == 32);
    CHECK_FALSE(r02.admissible);

    CaseReport r03 = case_report(0, 3);
    CHECK(r03.pic_gram == IntMat{{2, 0}, {0, -6}});
    CHECK(r03.clifford == CliffordRelation::DistinctSumEven);
    CHECK(r03.admissible);

    CaseReport r13 = case_report(1, 3);
    CHECK(r13.pic_gram == IntMat{{2, 1}, {1, -22}});
    CHECK(r13.brauer.kind == BrauerKind::OddTheta);
    CHECK(r13.clifford == CliffordRelation::Equal);
    CHECK(r13.det_relation_factor == 1);
    CHECK(r13.det_m == 45);
    CHECK(r13.admissible);

    CaseReport r23 = case_report(2, 3);
    CHECK(r23.pic_gram == IntMat{{2, 1}, {1, -4}});
    CHECK(r23.brauer.kind == BrauerKind::EvenTheta);
    CHECK(r23.clifford == CliffordRelation::DistinctSumEven);
    CHECK(r23.det_m == 36);
    CHECK(r23.admissible);

    CaseReport r24 = case_report(2, 4);
    CHECK(r24.brauer.kind == BrauerKind::OddTheta);
    CHECK(r24.clifford == CliffordRelation::DistinctSumOdd);
    CHECK_FALSE(r24.admissible);

    CaseReport r33 = case_report(3, 3);
    CHECK(r33.pic_gram == IntMat{{2, 1}, {1, -10}});
    CHECK(r33.brauer.kind == BrauerKind::OddTheta);
    CHECK(r33.clifford == CliffordRelation::Equal);
    CHECK(r33.det_m == 21);
    CHECK(r33.admissible);

    CaseReport r45 = case_report(4, 5);
    CHECK(r45.pic_gram == IntMat{{2, 0}, {0, -4}});
    CHECK(r45.brauer.kind == BrauerKind::PointOrderTwo);
    CHECK(r45.clifford == CliffordRelation::DistinctSumEven);
    CHECK(r45.det_m == 32);
    CHECK(r45.admissible);
}

TEST_CASE("fixed class does not vanish for tau 2") {
    const K3Ambient& amb = k3_ambient();
    for (long n : {3L, 4L}) {
        Sublattice pic = picard_sublattice(2, n);
        Sublattice tr = transcendental_lattice(amb, pic);
        std::vector<Int> witness = lvec22({-1, 1, 1, 1});
        CHECK(solve_integral(tr.basis(), witness).has_value());
        CHECK_FALSE(is_integral(amb.lambda().inner(to_rat(witness), amb.b_alpha())));
        CHECK_FALSE(restriction_is_trivial(tr, BField{amb.b_alpha()}));
        // the same vector with a zero third entry misses the transcendental
        // lattice entirely
        CHECK_FALSE(solve_integral(tr.basis(), lvec22({-1, 1, 0, 1})).has_value());
    }
}

TEST_CASE("rank bookkeeping") {
    CHECK(rank_relation_check(0, 3));
    CHECK(rank_relation_check(4, 5));
    IntMat degenerate(3, 23);
    degenerate(0, 0) = 1;
    degenerate(1, 1) = 1;
    degenerate(2, 0) = 1;
    degenerate(2, 1) = 1;
    CHECK_FALSE(rank_relation_check(degenerate, picard_sublattice(0, 3)));
}

TEST_CASE("kernel commutation") {
    for (int tau = 0; tau <= 4; ++tau)
        for (long n : {2L, 3L})
            if (valid_case(tau, n)) CHECK(kernel_commutation_check(tau, n));
    CHECK(kernel_commutation_check(1, 7));
}

TEST_CASE("picard gram ignores the choice of the embedding vector") {
    const GluedAmbient& ga = glued_ambient();
    const K3Ambient& amb = k3_ambient();
    const Lattice& l = ga.l();
    const Lattice& lam = amb.lambda();

    IntMat k8(2, 23);
    k8(0, 0) = 1;
    k8(1, 1) = 1;
    Sublattice k8perp = orthogonal_complement(Sublattice{l, k8});

    std::vector<Int> e0(23, Int(0)), e1(23, Int(0));
    e0[0] = 1;
    e1[1] = 1;

    for (int tau = 0; tau <= 4; ++tau)
        for (long n : {2L, 3L, 5L}) {
            if (!valid_case(tau, n)) continue;
            std::vector<Int> m0 = m_vector(tau, n);
            long s = (tau <= 2 ? 1 : tau == 3 ? 2 : 3) - n;

            // five tails with the square of the original one
            std::vector<std::vector<long>> tails;
            std::vector<long> t1(18, 0);
            t1[0] = s;
            t1[1] = 1;
            tails.push_back(t1);
            std::vector<long> t2(18, 0);
            t2[0] = -1;
            t2[1] = -s;
            tails.push_back(t2);
            std::vector<long> t3(18, 0);
            t3[0] = 1;
            t3[1] = s + 1;
            t3[2] = 1;
            tails.push_back(t3);
            std::vector<long> t4(18, 0);
            t4[0] = 1;
            t4[1] = s + 1;
            t4[10] = 1;
            tails.push_back(t4);
            std::vector<long> t5(18, 0);
            t5[0] = 1;
            t5[1] = s + 2;
            t5[2] = 1;
            t5[3] = 1;
            tails.push_back(t5);

            for (const std::vector<long>& tail : tails) {
                std::vector<Int> m = m0;
                for (std::size_t j = 0; j < 18; ++j) m[5 + j] = tail[j];
                REQUIRE(l.inner(e0, m) == 0);
                REQUIRE(l.inner(e1, m) == tau);
                REQUIRE(l.inner(m, m) == 2 * Int(n));

                IntMat nb(3, 23);
                nb(0, 0) = 1;
                nb(1, 1) = 1;
                nb.set_row(2, m);
                IntMat inter = intersect_rows(nb, k8perp.basis());
                REQUIRE(inter.rows() == 1);
                std::vector<Int> t = ga.to_lambda(inter.row(0));

                IntMat gen(2, 22);
                gen.set_row(0, amb.h());
                gen.set_row(1, t);
                Sublattice pic = saturation(Sublattice{lam, gen});
                REQUIRE(pic.rank() == 2);

                // determinant and the parity of (h, -) pin the normalized Gram
                Int d = det(pic.gram_matrix());
                Int p0 = lam.inner(pic.basis().row(0), amb.h());
                Int p1 = lam.inner(pic.basis().row(1), amb.h());
                Int b = (p0 % 2 != 0 || p1 % 2 != 0) ? 1 : 0;
                IntMat got(2, 2);
                got(0, 0) = 2;
                got(0, 1) = got(1, 0) = b;
                got(1, 1) = (d + b * b) / 2;
                CHECK(got == closed_form_pic(tau, n));
            }
        }
}

TEST_CASE("admissible cases") {
    CHECK(admissible(1, 2));
    CHECK(admissible(3, 8));
    CHECK(admissible(0, 3));
    CHECK(admissible(2, 5));
    CHECK(admissible(4, 7));
    CHECK_FALSE(admissible(0, 2));
    CHECK_FALSE(admissible(2, 6));
    CHECK_FALSE(admissible(4, 4));
    CHECK_THROWS_AS(admissible(4, 3), std::domain_error);
}

TEST_CASE("inverse lookup") {
    using Cases = std::vector<std::pair<int, long>>;
    CHECK(inverse_lookup(Int(-2)) == Cases{{0, 2}, {4, 5}});
    CHECK(inverse_lookup(Int(-1)) == Cases{{4, 4}});
    CHECK(inverse_lookup(Int(-3)) == Cases{{0, 3}, {4, 6}});
    CHECK(inverse_lookup(Int(-10)) == Cases{{0, 10}, {4, 13}});
    CHECK_THROWS_AS(inverse_lookup(Int(0)), std::domain_error);
    CHECK_THROWS_AS(inverse_lookup(Int(2)), std::domain_error);

    // round trip: every produced case realizes the requested diagonal Gram
    for (long c : {-2L, -4L, -7L}) {
        for (auto [tau, n] : inverse_lookup(Int(c))) {
            IntMat g = picard_lattice(tau, n);
            CHECK(g(0, 1) == 0);
            CHECK(g(1, 1) == 2 * Int(c));
        }
    }
}

TEST_CASE("worked rank-2 example") { CHECK(abbv_example_check()); }

TEST_CASE("theorem verification over a small range") {
    TheoremRun run = verify_theorem(8);
    CHECK(run.cases == 32);
    CHECK(run.checks > 400);
    CHECK(run.ok());
    for (const TheoremFailure& f : run.failures)
        MESSAGE(f.tau << " " << f.n << " " << f.what);

    TheoremRun bad = verify_theorem(8, true);
    CHECK_FALSE(bad.ok());
    CHECK(bad.failures.size() == static_cast<std::size_t>(bad.cases));
}
