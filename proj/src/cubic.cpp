#include "cubic.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace vbc {

namespace {

constexpr std::size_t kRankL = 23;
constexpr std::size_t kRankLambda = 22;
constexpr std::size_t kFixedBlock = 18;  // third U plus both E8(-1)

const std::set<std::pair<int, long>>& excluded_cases() {
    static const std::set<std::pair<int, long>> ex{{3, 2}, {4, 2}, {4, 3}};
    return ex;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("glue audit failed: ") + what);
}

std::vector<Int> unit(std::size_t n, std::size_t i) {
    std::vector<Int> v(n, Int(0));
    v[i] = 1;
    return v;
}

void sign_normalize(std::vector<Int>& v) {
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
}

IntMat five_block() {
    return IntMat{{3, 1, 1, 0, 0},
                  {1, 3, 0, 0, 0},
                  {1, 0, 1, 0, 1},
                  {0, 0, 0, 2, -1},
                  {0, 0, 1, -1, 2}};
}

IntMat fixed_block_gram() {
    IntMat e8n = -e8_gram();
    return block_diag(u_gram(), block_diag(e8n, e8n));
}

// c1, c2, c3 and the fixed block: the basis that pins the index-two kernel
// inside the rank-21 transcendental lattice of the generic degree-2 surface
IntMat kernel_rows() {
    IntMat rows(21, kRankLambda);
    rows(0, 0) = 1;
    rows(0, 1) = -1;
    rows(0, 3) = 1;
    rows(1, 2) = 1;
    rows(1, 3) = 1;
    rows(2, 3) = 2;
    for (std::size_t i = 3; i < 21; ++i) rows(i, i + 1) = 1;
    return rows;
}

// first two rows of L in the preferred basis span the rank-2 block
IntMat block_rows(const std::vector<Int>& m) {
    IntMat nb(3, kRankL);
    nb(0, 0) = 1;
    nb(1, 1) = 1;
    nb.set_row(2, m);
    return nb;
}

}  // namespace

bool valid_case(int tau, long n) {
    if (tau < 0 || tau > 4 || n < 2) return false;
    return excluded_cases().count({tau, n}) == 0;
}

bool excluded_case(int tau, long n) {
    return tau >= 0 && tau <= 4 && n >= 2 && excluded_cases().count({tau, n}) != 0;
}

void require_valid_case(int tau, long n) {
    if (tau < 0 || tau > 4) throw std::domain_error("tau must lie in 0..4");
    if (n < 2) throw std::domain_error("n must be at least 2");
    if (excluded_cases().count({tau, n}) != 0) {
        std::ostringstream os;
        os << "case (" << tau << ", " << n << ") is excluded";
        throw std::domain_error(os.str());
    }
}

IntMat a_gram(int tau, long n) {
    require_valid_case(tau, n);
    IntMat g(3, 3);
    g(0, 0) = 3;
    g(0, 1) = g(1, 0) = 1;
    g(1, 1) = 3;
    g(1, 2) = g(2, 1) = tau;
    g(2, 2) = 2 * Int(n);
    return g;
}

Int a_det(int tau, long n) {
    require_valid_case(tau, n);
    return 16 * Int(n) - 3 * tau * tau;
}

GluedAmbient::GluedAmbient(Lattice l, GlueAudit audit)
    : l_(std::move(l)), audit_(std::move(audit)) {}

GluedAmbient GluedAmbient::build() {
    const K3Ambient& amb = k3_ambient();
    GlueAudit audit;

    Lattice k8{IntMat{{3, 1}, {1, 3}}};
    RatVec g8{make_rat(3, 8), make_rat(-1, 8)};
    auto [g8_order, g8_norm] = dual_order_and_norm(k8, g8);
    audit.g8_norm = g8_norm;
    audit.k8_disc = discriminant_group(k8);
    require(g8_order == 8 && g8_norm == make_rat(3, 8),
            "dual generator of the rank-2 block");
    require(audit.k8_disc == DiscriminantGroup{{Int(8)}},
            "discriminant of the rank-2 block");

    Sublattice tgen = transcendental_lattice(amb, amb.h_sublattice());
    Sublattice ker = alpha_kernel(tgen, BField{amb.b_alpha()});
    Sublattice kerexp{amb.lambda(), kernel_rows()};
    require(kerexp.hnf_basis() == ker.hnf_basis(), "kernel of the fixed class");
    IntMat kg = kerexp.gram_matrix();
    require(kg == block_diag(IntMat{{-2, 1, 0}, {1, 2, 2}, {0, 2, 0}},
                             fixed_block_gram()),
            "Gram of the kernel basis");
    Lattice kerlat{kg};
    audit.kernel_disc = discriminant_group(kerlat);
    require(audit.kernel_disc == DiscriminantGroup{{Int(8)}},
            "discriminant of the kernel");

    RatVec gstar(21, Rat(0));
    gstar[0] = make_rat(1, 4);
    gstar[1] = make_rat(1, 2);
    gstar[2] = make_rat(-5, 8);
    auto [gstar_order, gstar_norm] = dual_order_and_norm(kerlat, gstar);
    audit.kernel_dual_norm = gstar_norm;
    require(gstar_order == 8 && gstar_norm == make_rat(-5, 8),
            "dual generator of the kernel");

    Lattice kerneg = twist(kerlat, Int(-1));
    Lattice sum = direct_sum(k8, kerneg);
    RatVec conc = g8;
    conc.insert(conc.end(), gstar.begin(), gstar.end());
    audit.sum_norm = sum.inner(conc, conc);
    require(audit.sum_norm == 1, "square of the glue vector");

    GluedLattice gl = glue(k8, kerneg, {{g8, gstar}});
    audit.det_l = gl.lattice.det();
    audit.sig = signature(gl.lattice);
    audit.odd = !is_even(gl.lattice);
    audit.l_disc = discriminant_group(gl.lattice);
    require(audit.det_l == 1, "unimodular overlattice");
    require(audit.sig == Signature{21, 2}, "signature (21,2)");
    require(audit.odd, "odd overlattice");
    require(audit.l_disc.invariant_factors.empty(), "trivial discriminant");

    // preferred basis (h3^2, P, g8*+g*, c1, c2-c3, fixed block), written in
    // direct-sum coordinates
    RatMat pref = RatMat::identity(kRankL);
    pref.set_row(2, conc);
    pref(3, 2) = 1;
    pref(3, 3) = 0;
    pref(4, 3) = 1;
    pref(4, 4) = -1;

    // every preferred vector lies in the overlattice
    Int den = common_denominator(gl.basis);
    IntMat bint(kRankL, kRankL);
    for (std::size_t i = 0; i < kRankL; ++i)
        for (std::size_t j = 0; j < kRankL; ++j) {
            Rat x = gl.basis(i, j) * Rat(den);
            require(is_integral(x), "scaled overlattice basis");
            bint(i, j) = x.get_num();
        }
    for (std::size_t i = 0; i < kRankL; ++i) {
        std::vector<Int> target(kRankL);
        bool ok = true;
        for (std::size_t j = 0; j < kRankL; ++j) {
            Rat x = pref(i, j) * Rat(den);
            if (!is_integral(x)) ok = false;
            else target[j] = x.get_num();
        }
        require(ok && solve_integral(bint, target).has_value(),
                "membership of the preferred basis");
    }

    RatMat gq = pref * RatMat(sum.gram()) * transpose(pref);
    require(is_integral(gq), "integrality of the preferred Gram");
    IntMat gm = to_int(gq);
    IntMat expected = block_diag(five_block(), -fixed_block_gram());
    audit.five_block_ok = (gm == expected);
    require(audit.five_block_ok, "shape of the preferred Gram");

    // |det| of the preferred Gram must again be 1: the rows are a basis
    Int dg = det(gm);
    require(dg == 1 || dg == -1, "unimodularity in the preferred basis");

    // explicit base change taking the five block to diag(1,1,1,1,-1)
    IntMat s{{-1, 0, 0, 0, 2},
             {1, 0, 0, 0, -1},
             {3, -1, -1, 1, -6},
             {-1, 1, 0, 0, 2},
             {-2, 1, 1, 0, 4}};
    IntMat diag(5, 5);
    diag(0, 0) = diag(1, 1) = diag(2, 2) = diag(3, 3) = 1;
    diag(4, 4) = -1;
    audit.sylvester_ok = (transpose(s) * five_block() * s == diag);
    require(audit.sylvester_ok, "diagonalization of the five block");

    Lattice l{gm};
    require(gm(0, 0) == 3, "norm of h3^2");
    IntMat h3row(1, kRankL);
    h3row(0, 0) = 1;
    Sublattice h3perp = orthogonal_complement(Sublattice{l, h3row});
    audit.h3_perp_even = is_even(gram_of_sublattice(h3perp));
    require(audit.h3_perp_even, "evenness of the complement of h3^2");

    return GluedAmbient{std::move(l), std::move(audit)};
}

std::vector<Int> GluedAmbient::to_lambda(const std::vector<Int>& x) const {
    if (x.size() != kRankL) throw ShapeError("to_lambda: expected 23 coordinates");
    if (3 * x[0] + x[1] + x[2] != 0 || x[0] + 3 * x[1] != 0)
        throw std::domain_error("to_lambda: vector is not orthogonal to the rank-2 block");
    const Int& ap = x[1];
    Int c1 = 2 * ap + x[3];
    Int c2 = 4 * ap + x[4];
    Int c3 = -5 * ap - x[4];
    std::vector<Int> out(kRankLambda, Int(0));
    out[0] = c1;
    out[1] = -c1;
    out[2] = c2;
    out[3] = c1 + c2 + 2 * c3;
    for (std::size_t i = 0; i < kFixedBlock; ++i) out[4 + i] = x[5 + i];
    return out;
}

const K3Ambient& k3_ambient() {
    static const K3Ambient amb;
    return amb;
}

const GluedAmbient& glued_ambient() {
    static const GluedAmbient g = GluedAmbient::build();
    return g;
}

std::vector<Int> choose_v(int tau, long n) {
    require_valid_case(tau, n);
    long shift = tau <= 2 ? 1 : tau == 3 ? 2 : 3;
    return {Int(1), Int(shift) - Int(n)};
}

std::vector<Int> m_vector(int tau, long n) {
    require_valid_case(tau, n);
    static const long heads[5][5] = {{0, 0, 0, 1, 0},
                                     {1, 0, -3, 1, 1},
                                     {2, 0, -6, 1, 3},
                                     {0, 1, -1, 1, 1},
                                     {1, 1, -4, 1, 2}};
    std::vector<Int> m(kRankL, Int(0));
    for (std::size_t j = 0; j < 5; ++j) m[j] = heads[tau][j];
    std::vector<Int> v = choose_v(tau, n);
    m[5] = v[0];
    m[6] = v[1];
    const Lattice& l = glued_ambient().l();
    if (l.inner(unit(kRankL, 0), m) != 0 || l.inner(unit(kRankL, 1), m) != tau ||
        l.inner(m, m) != 2 * Int(n))
        throw std::logic_error("m_vector: embedding constraints violated");
    return m;
}

std::vector<Int> t_vector_in_l(int tau, long n) {
    const GluedAmbient& ga = glued_ambient();
    IntMat nb = block_rows(m_vector(tau, n));
    IntMat k8(2, kRankL);
    k8(0, 0) = 1;
    k8(1, 1) = 1;
    Sublattice k8perp = orthogonal_complement(Sublattice{ga.l(), k8});
    IntMat inter = intersect_rows(nb, k8perp.basis());
    if (inter.rows() != 1) throw std::logic_error("t_vector: intersection rank is not 1");
    std::vector<Int> t = inter.row(0);
    sign_normalize(t);
    return t;
}

std::vector<Int> t_vector(int tau, long n) {
    return glued_ambient().to_lambda(t_vector_in_l(tau, n));
}

Sublattice picard_sublattice(int tau, long n) {
    const K3Ambient& amb = k3_ambient();
    const Lattice& lam = amb.lambda();
    std::vector<Int> t = t_vector(tau, n);
    IntMat gen(2, kRankLambda);
    gen.set_row(0, amb.h());
    gen.set_row(1, t);
    Sublattice sat = saturation(Sublattice{lam, gen});
    if (sat.rank() != 2) throw std::logic_error("picard_sublattice: expected rank 2");

    auto coords = solve_integral(sat.basis(), amb.h());
    if (!coords) throw std::logic_error("picard_sublattice: h escaped the saturation");
    Int g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
               (*coords)[0].get_mpz_t(), (*coords)[1].get_mpz_t());
    if (g != 1) throw std::logic_error("picard_sublattice: h is imprimitive here");

    // rows (h, k): the transition matrix [[x0, x1], [-q, p]] has determinant
    // x0 p + x1 q = 1, so (h, k) is again a basis of the saturation
    std::vector<Int> b0 = sat.basis().row(0);
    std::vector<Int> b1 = sat.basis().row(1);
    std::vector<Int> k(kRankLambda);
    for (std::size_t j = 0; j < kRankLambda; ++j) k[j] = -q * b0[j] + p * b1[j];

    Int hk = lam.inner(amb.h(), k);
    Int shift;
    mpz_fdiv_q_2exp(shift.get_mpz_t(), hk.get_mpz_t(), 1);
    for (std::size_t j = 0; j < kRankLambda; ++j) k[j] -= shift * amb.h()[j];
    if (lam.inner(amb.h(), k) == 0) sign_normalize(k);

    IntMat rows(2, kRankLambda);
    rows.set_row(0, amb.h());
    rows.set_row(1, k);
    return Sublattice{lam, rows};
}

IntMat picard_lattice(int tau, long n) {
    return normalize_pic_gram(picard_sublattice(tau, n).gram_matrix());
}

IntMat closed_form_pic(int tau, long n) {
    require_valid_case(tau, n);
    IntMat g(2, 2);
    g(0, 0) = 2;
    switch (tau) {
        case 0: g(1, 1) = -2 * Int(n); break;
        case 1: g(0, 1) = g(1, 0) = 1; g(1, 1) = 2 - 8 * Int(n); break;
        case 2: g(0, 1) = g(1, 0) = 1; g(1, 1) = 2 - 2 * Int(n); break;
        case 3: g(0, 1) = g(1, 0) = 1; g(1, 1) = 14 - 8 * Int(n); break;
        case 4: g(1, 1) = 6 - 2 * Int(n); break;
    }
    return g;
}

int det_relation(int tau, long n) {
    int factor = tau % 2 == 0 ? 4 : 1;
    Int dp = det(picard_lattice(tau, n));
    if (-factor * dp != a_det(tau, n))
        throw std::logic_error("det_relation: determinant identity violated");
    return factor;
}

std::string to_string(CliffordRelation r) {
    switch (r) {
        case CliffordRelation::Equal: return "Equal";
        case CliffordRelation::DistinctSumEven: return "DistinctSumEven";
        case CliffordRelation::DistinctSumOdd: return "DistinctSumOdd";
    }
    return "?";
}

CaseReport case_report(int tau, long n) {
    require_valid_case(tau, n);
    const K3Ambient& amb = k3_ambient();
    CaseReport rep;
    rep.tau = tau;
    rep.n = n;

    Sublattice pic = picard_sublattice(tau, n);
    rep.pic_gram = normalize_pic_gram(pic.gram_matrix());
    rep.det_pic = det(rep.pic_gram);
    rep.det_m = a_det(tau, n);
    rep.brauer = classify_from_pic(rep.pic_gram);

    BField bvan = vanishing_bfield(pic);
    BField ba{amb.b_alpha()};
    if (bfield_equiv(bvan, ba, pic)) {
        rep.clifford = CliffordRelation::Equal;
    } else if (tau == 2) {
        // the sum with the fixed class is a point of order two here; what
        // distinguishes the case is the parity of the vanishing theta
        // characteristic itself
        if (rep.brauer.kind != BrauerKind::EvenTheta &&
            rep.brauer.kind != BrauerKind::OddTheta)
            throw std::logic_error("case_report: expected a theta characteristic");
        rep.clifford = rep.brauer.kind == BrauerKind::EvenTheta
                           ? CliffordRelation::DistinctSumEven
                           : CliffordRelation::DistinctSumOdd;
    } else {
        BrauerClassReport sum = classify_bfield(amb, add_bfields(ba, bvan));
        if (sum.kind == BrauerKind::EvenTheta)
            rep.clifford = CliffordRelation::DistinctSumEven;
        else if (sum.kind == BrauerKind::OddTheta)
            rep.clifford = CliffordRelation::DistinctSumOdd;
        else
            throw std::logic_error("case_report: sum with the fixed class is not a theta");
    }

    rep.det_relation_factor = det_relation(tau, n);
    rep.admissible = admissible(tau, n);
    return rep;
}

bool rank_relation_check(const IntMat& n_basis, const Sublattice& pic) {
    return rank(n_basis) == pic.rank() + 1;
}

bool rank_relation_check(int tau, long n) {
    return rank_relation_check(block_rows(m_vector(tau, n)), picard_sublattice(tau, n));
}

bool kernel_commutation_check(int tau, long n) {
    require_valid_case(tau, n);
    const GluedAmbient& ga = glued_ambient();
    const K3Ambient& amb = k3_ambient();

    Sublattice msub{ga.l(), block_rows(m_vector(tau, n))};
    Sublattice comp = orthogonal_complement(msub);
    if (comp.rank() != 20) return false;
    IntMat mapped(comp.rank(), kRankLambda);
    for (std::size_t i = 0; i < comp.rank(); ++i)
        mapped.set_row(i, ga.to_lambda(comp.basis().row(i)));

    Sublattice pic = picard_sublattice(tau, n);
    Sublattice t = transcendental_lattice(amb, pic);
    Sublattice ker = alpha_kernel(t, BField{amb.b_alpha()});
    if (ker.rank() != 20) return false;
    if (hnf(mapped).h != ker.hnf_basis()) return false;

    Sublattice image{amb.lambda(), mapped};
    return comp.gram_matrix() == -image.gram_matrix();
}

bool admissible(int tau, long n) {
    require_valid_case(tau, n);
    return tau == 1 || tau == 3 || n % 2 != 0;
}

std::vector<std::pair<int, long>> inverse_lookup(const Int& c) {
    if (c >= 0) throw std::domain_error("inverse_lookup: c must be negative");
    std::vector<std::pair<int, long>> out;
    auto push = [&out](int tau, const Int& n) {
        if (!n.fits_slong_p()) throw std::domain_error("inverse_lookup: n out of range");
        long ln = n.get_si();
        if (valid_case(tau, ln)) out.emplace_back(tau, ln);
    };
    push(0, -c);
    push(4, 3 - c);
    return out;
}

bool abbv_example_check() {
    IntMat start{{2, 2}, {2, -2}};
    if (normalize_pic_gram(start) != IntMat{{2, 0}, {0, -4}}) return false;

    std::vector<std::pair<int, long>> cases = inverse_lookup(Int(-2));
    if (cases != std::vector<std::pair<int, long>>{{0, 2}, {4, 5}}) return false;

    CaseReport rep = case_report(4, 5);
    return rep.pic_gram == IntMat{{2, 0}, {0, -4}} &&
           rep.brauer.kind == BrauerKind::PointOrderTwo &&
           rep.clifford == CliffordRelation::DistinctSumEven && rep.admissible &&
           rep.det_m == 32;
}

TheoremRun verify_theorem(long n_max, bool inject_fault) {
    TheoremRun run;
    const K3Ambient& amb = k3_ambient();
    const GluedAmbient& ga = glued_ambient();
    const Lattice& lam = amb.lambda();
    const Lattice& l = ga.l();

    for (int tau = 0; tau <= 4; ++tau) {
        for (long n = 2; n <= n_max; ++n) {
            if (!valid_case(tau, n)) continue;
            ++run.cases;
            auto check = [&run, tau, n](bool ok, const char* what) {
                ++run.checks;
                if (!ok) run.failures.push_back({tau, n, what});
            };

            CaseReport rep = case_report(tau, n);
            IntMat expect = closed_form_pic(tau, n);
            if (inject_fault) expect(1, 1) += 1;
            check(rep.pic_gram == expect, "picard-closed-form");

            BrauerKind want = BrauerKind::PointOrderTwo;
            if (tau == 1 || tau == 3)
                want = BrauerKind::OddTheta;
            else if (tau == 2)
                want = n % 2 != 0 ? BrauerKind::EvenTheta : BrauerKind::OddTheta;
            check(rep.brauer.kind == want, "vanishing-class-kind");
            check((rep.clifford == CliffordRelation::Equal) == (tau == 1 || tau == 3),
                  "fixed-class-equality");

            Sublattice pic = picard_sublattice(tau, n);
            BField bvan = vanishing_bfield(pic);
            BField ba{amb.b_alpha()};
            if (tau == 0 || tau == 4) {
                BField s = add_bfields(ba, bvan);
                auto [bh, b2] = bfield_invariants(s, amb.h_sublattice());
                long cnum = tau == 0 ? 3 - n : 1 - n;
                check(bh == make_rat(1, 2) && b2.has_value() &&
                          *b2 == mod1(make_rat(cnum, 2)),
                      "sum-parity-closed-form");
                if (b2.has_value()) {
                    CliffordRelation wantrel = *b2 == 0
                                                   ? CliffordRelation::DistinctSumEven
                                                   : CliffordRelation::DistinctSumOdd;
                    check(rep.clifford == wantrel, "sum-parity-label");
                }
            } else if (tau == 2) {
                check(rep.clifford == (n % 2 != 0 ? CliffordRelation::DistinctSumEven
                                                  : CliffordRelation::DistinctSumOdd),
                      "theta-parity-label");
            }

            check(rep.det_relation_factor == (tau % 2 == 0 ? 4 : 1), "det-factor");
            check(-Int(rep.det_relation_factor) * rep.det_pic == rep.det_m,
                  "det-relation");
            check(rep.det_m == det(a_gram(tau, n)), "det-closed-form");

            std::vector<Int> m = m_vector(tau, n);
            IntMat nb = block_rows(m);
            check(is_primitive(Sublattice{l, nb}), "embedded-block-primitive");
            check(rank_relation_check(nb, pic), "rank-relation");

            std::vector<Int> tl = t_vector_in_l(tau, n);
            check(content(tl) == 1, "t-primitive");
            check(l.inner(tl, unit(kRankL, 0)) == 0 && l.inner(tl, unit(kRankL, 1)) == 0,
                  "t-orthogonal-to-block");
            check(solve_integral(nb, tl).has_value(), "t-inside-block");

            std::vector<Int> t = t_vector(tau, n);
            check(l.inner(tl, tl) == -lam.inner(t, t), "t-norm-flip");
            if (tau == 0) {
                IntMat gen(2, kRankLambda);
                gen.set_row(0, amb.h());
                gen.set_row(1, t);
                check(is_primitive(Sublattice{lam, gen}), "span-already-saturated");
            } else {
                std::vector<Int> w(kRankLambda);
                bool integral = true;
                for (std::size_t j = 0; j < kRankLambda; ++j) {
                    Int x = tau == 4 ? t[j] : 2 * amb.h()[j] + t[j];
                    Int d = tau == 4 ? 2 : 4;
                    if (x % d != 0) {
                        integral = false;
                        break;
                    }
                    w[j] = x / d;
                }
                check(integral && solve_integral(pic.basis(), w).has_value(),
                      "saturation-divisibility");
            }

            Int twice_b = lam.inner(pic.basis().row(1), amb.h());
            Int parity_gap = twice_b - rep.det_pic;
            check(parity_gap % 2 == 0, "twice-b-against-discriminant");

            check(classify_bfield(amb, bvan) == rep.brauer,
                  "classification-consistency");

            Sublattice tr = transcendental_lattice(amb, pic);
            check(restriction_is_trivial(tr, bvan), "vanishing-restriction-trivial");
            check(restriction_is_trivial(tr, ba) == (tau == 1 || tau == 3),
                  "fixed-restriction");

            if (n <= 10) check(kernel_commutation_check(tau, n), "kernel-commutation");
        }
    }
    return run;
}

}  // namespace vbc
