#include "k3brauer.hpp"

namespace vbc {

IntMat u_gram() { return IntMat{{0, 1}, {1, 0}}; }

IntMat e8_gram() {
    // Cartan matrix of E8: nodes 1-3-4-5-6-7-8 in a chain, node 2 joined to 4
    IntMat g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
    auto edge = [&g](std::size_t a, std::size_t b) {
        g(a - 1, b - 1) = -1;
        g(b - 1, a - 1) = -1;
    };
    edge(1, 3);
    edge(3, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 7);
    edge(7, 8);
    edge(2, 4);
    return g;
}

Lattice k3_lattice() {
    Lattice u{u_gram()};
    Lattice e8n = twist(Lattice{e8_gram()}, -1);
    return direct_sum(direct_sum(direct_sum(u, u), u), direct_sum(e8n, e8n));
}

K3Ambient::K3Ambient() : lambda_(k3_lattice()) {
    h_.assign(22, Int(0));
    h_[0] = 1;
    h_[1] = 1;
    b_alpha_.assign(22, Rat(0));
    b_alpha_[1] = make_rat(1, 2);
    b_alpha_[2] = make_rat(1, 2);
    b_alpha_[3] = make_rat(1, 2);
    if (lambda_.inner(h_, h_) != 2) throw std::logic_error("ambient: h^2 != 2");
    RatVec hq = to_rat(h_);
    if (lambda_.inner(b_alpha_, hq) != make_rat(1, 2) ||
        lambda_.inner(b_alpha_, b_alpha_) != make_rat(1, 2))
        throw std::logic_error("ambient: Clifford B-field invariants off");
}

Sublattice K3Ambient::h_sublattice() const {
    IntMat b(1, 22);
    b.set_row(0, h_);
    return Sublattice(lambda_, b);
}

BField::BField(RatVec coords) : coords_(std::move(coords)) {
    for (const Rat& r : coords_)
        if (r.get_den() != 1 && r.get_den() != 2)
            throw std::domain_error("BField: denominators must divide 2");
}

std::string to_string(BrauerKind k) {
    switch (k) {
        case BrauerKind::TrivialClass: return "TrivialClass";
        case BrauerKind::PointOrderTwo: return "PointOrderTwo";
        case BrauerKind::EvenTheta: return "EvenTheta";
        case BrauerKind::OddTheta: return "OddTheta";
    }
    return "?";
}

std::pair<Rat, std::optional<Rat>> bfield_invariants(const BField& b, const Sublattice& pic) {
    const Lattice& amb = pic.ambient();
    RatVec h = to_rat(pic.basis().row(0));
    Rat bh = amb.inner(b.coords(), h);
    Rat cond = 4 * bh + amb.inner(h, h);
    std::optional<Rat> b2;
    if (is_integral(cond) && cond.get_num() % 4 == 0)
        b2 = mod1(amb.inner(b.coords(), b.coords()));
    return {mod1(bh), b2};
}

bool bfield_equiv(const BField& b1, const BField& b2, const Sublattice& pic) {
    if (b1.size() != b2.size() || b1.size() != pic.ambient().rank())
        throw ShapeError("bfield_equiv: length mismatch");
    const std::size_t n = pic.ambient().rank();
    IntMat two_id(n, n);
    for (std::size_t i = 0; i < n; ++i) two_id(i, i) = 2;
    IntMat stack = vstack(pic.basis(), two_id);
    std::vector<Int> target = to_int(scale(Rat(2), sub(b1.coords(), b2.coords())));
    return solve_integral(stack, target).has_value();
}

BField add_bfields(const BField& b1, const BField& b2) {
    return BField(add(b1.coords(), b2.coords()));
}

Sublattice transcendental_lattice(const K3Ambient& amb, const Sublattice& pic) {
    if (!(pic.ambient() == amb.lambda()))
        throw std::domain_error("transcendental_lattice: wrong ambient");
    return orthogonal_complement(pic);
}

Sublattice alpha_kernel(const Sublattice& t, const BField& b) {
    std::vector<Int> twob = to_int(scale(Rat(2), b.coords()));
    const IntMat& basis = t.basis();
    std::size_t first_odd = basis.rows();
    std::vector<bool> odd(basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        odd[i] = t.ambient().inner(basis.row(i), twob) % 2 != 0;
        if (odd[i] && first_odd == basis.rows()) first_odd = i;
    }
    if (first_odd == basis.rows()) return t;
    IntMat ker(basis.rows(), basis.cols());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::vector<Int> r = basis.row(i);
        if (i == first_odd) {
            for (Int& x : r) x *= 2;
        } else if (odd[i]) {
            std::vector<Int> f = basis.row(first_odd);
            for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f[j];
        }
        ker.set_row(i, r);
    }
    return Sublattice(t.ambient(), ker);
}

bool restriction_is_trivial(const Sublattice& t, const BField& b) {
    for (std::size_t i = 0; i < t.basis().rows(); ++i)
        if (!is_integral(t.ambient().inner(b.coords(), to_rat(t.basis().row(i)))))
            return false;
    return true;
}

namespace {

void check_pic_shape(const IntMat& g) {
    if (g.rows() != 2 || g.cols() != 2) throw ShapeError("pic Gram must be 2x2");
    if (g(0, 0) != 2 || g(0, 1) != g(1, 0))
        throw std::domain_error("pic Gram must be symmetric with h^2 = 2");
    if (g(1, 1) % 2 != 0)
        throw std::domain_error("pic Gram must have even diagonal entries");
}

}  // namespace

IntMat normalize_pic_gram(const IntMat& pic_gram) {
    check_pic_shape(pic_gram);
    Int b = pic_gram(0, 1);
    Int m;
    mpz_fdiv_q_2exp(m.get_mpz_t(), b.get_mpz_t(), 1);  // floor(b/2)
    Int nb = b - 2 * m;
    Int nd = pic_gram(1, 1) - 2 * m * b + 2 * m * m;
    IntMat out{{2, 0}, {0, 0}};
    out(0, 1) = nb;
    out(1, 0) = nb;
    out(1, 1) = nd;
    return out;
}

BrauerClassReport classify_from_pic(const IntMat& pic_gram) {
    IntMat g = normalize_pic_gram(pic_gram);
    Int b = g(0, 1);
    Int c = g(1, 1) / 2;
    BrauerClassReport rep;
    rep.bh = mod1(make_rat(b, 2));
    if (b % 2 == 0) {
        rep.kind = BrauerKind::PointOrderTwo;
    } else {
        rep.b2 = mod1(make_rat(c, 2));
        rep.kind = (*rep.b2 == 0) ? BrauerKind::EvenTheta : BrauerKind::OddTheta;
    }
    return rep;
}

BField vanishing_bfield(const Sublattice& pic) {
    if (pic.rank() != 2) throw std::domain_error("vanishing_bfield: need a rank-2 Picard group");
    std::vector<Int> k = pic.basis().row(1);
    if (content(k) != 1)
        throw std::domain_error("vanishing_bfield: second generator is not primitive");
    return BField(scale(make_rat(1, 2), to_rat(k)));
}

BrauerClassReport classify_bfield(const K3Ambient& amb, const BField& b) {
    Sublattice zh = amb.h_sublattice();
    auto [bh, b2] = bfield_invariants(b, zh);
    BrauerClassReport rep{BrauerKind::TrivialClass, bh, b2};
    BField zero{RatVec(amb.lambda().rank(), Rat(0))};
    if (bfield_equiv(b, zero, zh)) return rep;
    if (bh == 0) {
        rep.kind = BrauerKind::PointOrderTwo;
    } else if (b2) {
        rep.kind = (*b2 == 0) ? BrauerKind::EvenTheta : BrauerKind::OddTheta;
    } else {
        throw std::logic_error("classify_bfield: half-integral B with Bh = 1/2 must carry B^2");
    }
    return rep;
}

}  // namespace vbc
