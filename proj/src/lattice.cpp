#include "lattice.hpp"

namespace vbc {

Int DiscriminantGroup::order() const {
    Int p = 1;
    for (const Int& f : invariant_factors) p *= f;
    return p;
}

Lattice::Lattice(IntMat gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw ShapeError("Lattice: Gram matrix not square");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = i + 1; j < gram_.cols(); ++j)
            if (gram_(i, j) != gram_(j, i))
                throw std::domain_error("Lattice: Gram matrix not symmetric");
    det_ = vbc::det(gram_);
    if (det_ == 0) throw std::domain_error("Lattice: degenerate form");
}

Int Lattice::inner(const std::vector<Int>& x, const std::vector<Int>& y) const {
    if (x.size() != rank() || y.size() != rank()) throw ShapeError("inner: length mismatch");
    return dot(mul_row(x, gram_), y);
}

Rat Lattice::inner(const RatVec& x, const RatVec& y) const {
    if (x.size() != rank() || y.size() != rank()) throw ShapeError("inner: length mismatch");
    return dot(mul_row(x, RatMat(gram_)), y);
}

Lattice twist(const Lattice& l, const Int& s) {
    if (s == 0) throw std::domain_error("twist: scale must be nonzero");
    IntMat g = l.gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= s;
    return Lattice(g);
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    return Lattice(block_diag(a.gram(), b.gram()));
}

Signature signature(const Lattice& l) {
    RatMat a(l.gram());
    const std::size_t n = a.rows();
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, i) != 0) { p = i; break; }
            if (p == n) {
                // trailing diagonal all zero; an off-diagonal entry must exist
                // since the trailing block is again nondegenerate
                std::size_t oi = n, oj = n;
                for (std::size_t i = k; i < n && oi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (a(i, j) != 0) { oi = i; oj = j; break; }
                if (oi == n) throw std::domain_error("signature: degenerate form");
                for (std::size_t c = 0; c < n; ++c) a(oi, c) += a(oj, c);
                for (std::size_t r = 0; r < n; ++r) a(r, oi) += a(r, oj);
                p = oi;
            }
            if (p != k) {
                for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
                for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, p));
            }
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat c = a(i, k) / a(k, k);
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= c * a(k, j);
            for (std::size_t r = 0; r < n; ++r) a(r, i) -= c * a(r, k);
        }
        if (a(k, k) > 0)
            ++sig.positives;
        else
            ++sig.negatives;
    }
    return sig;
}

bool is_even(const Lattice& l) {
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (l.gram()(i, i) % 2 != 0) return false;
    return true;
}

DiscriminantGroup discriminant_group(const Lattice& l) {
    IntMat d = snf(l.gram()).d;
    DiscriminantGroup g;
    for (std::size_t i = 0; i < d.rows(); ++i)
        if (d(i, i) > 1) g.invariant_factors.push_back(d(i, i));
    return g;
}

std::pair<Int, Rat> dual_order_and_norm(const Lattice& l, const RatVec& w) {
    if (w.size() != l.rank()) throw ShapeError("dual_order_and_norm: length mismatch");
    RatVec gw = mul_row(w, RatMat(l.gram()));
    if (!is_integral(gw))
        throw std::domain_error("dual_order_and_norm: vector not in the dual lattice");
    return {common_denominator(w), l.inner(w, w)};
}

Sublattice::Sublattice(Lattice ambient, IntMat basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
    if (basis_.cols() != ambient_.rank())
        throw ShapeError("Sublattice: basis width differs from ambient rank");
    if (vbc::rank(basis_) != basis_.rows())
        throw std::domain_error("Sublattice: basis rows are dependent");
}

IntMat Sublattice::hnf_basis() const { return hnf(basis_).h; }

IntMat Sublattice::gram_matrix() const {
    return basis_ * ambient_.gram() * transpose(basis_);
}

Sublattice saturation(const Sublattice& s) {
    IntMat ann = kernel_basis(transpose(s.basis()));
    IntMat sat = kernel_basis(transpose(ann));
    return Sublattice(s.ambient(), sat);
}

bool is_primitive(const Sublattice& s) {
    return saturation(s).basis() == s.hnf_basis();
}

Sublattice orthogonal_complement(const Sublattice& s) {
    IntMat comp = kernel_basis(s.ambient().gram() * transpose(s.basis()));
    return Sublattice(s.ambient(), comp);
}

Lattice gram_of_sublattice(const Sublattice& s) { return Lattice(s.gram_matrix()); }

GluedLattice glue(const Lattice& l1, const Lattice& l2,
                  const std::vector<std::pair<RatVec, RatVec>>& glue_vectors) {
    const std::size_t n1 = l1.rank(), n = n1 + l2.rank();
    Lattice sum = direct_sum(l1, l2);

    RatMat gens(n + glue_vectors.size(), n);
    for (std::size_t i = 0; i < n; ++i) gens(i, i) = 1;
    for (std::size_t k = 0; k < glue_vectors.size(); ++k) {
        const auto& [w1, w2] = glue_vectors[k];
        if (w1.size() != n1 || w2.size() != l2.rank())
            throw ShapeError("glue: glue vector length mismatch");
        if (!is_integral(mul_row(w1, RatMat(l1.gram()))) ||
            !is_integral(mul_row(w2, RatMat(l2.gram()))))
            throw std::domain_error("glue: glue vector not in the dual lattice");
        for (std::size_t j = 0; j < n1; ++j) gens(n + k, j) = w1[j];
        for (std::size_t j = 0; j < w2.size(); ++j) gens(n + k, n1 + j) = w2[j];
    }

    Int d = common_denominator(gens);
    IntMat scaled(gens.rows(), n);
    for (std::size_t i = 0; i < gens.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat e = gens(i, j) * Rat(d);
            scaled(i, j) = e.get_num();
        }
    IntMat h = hnf(scaled).h;

    RatMat basis(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis(i, j) = make_rat(h(i, j), d);

    RatMat gram = basis * RatMat(sum.gram()) * transpose(basis);
    if (!is_integral(gram))
        throw std::domain_error("glue: resulting form is not integral");
    return GluedLattice{Lattice(to_int(gram)), basis};
}

}  // namespace vbc
