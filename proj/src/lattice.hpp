#pragma once
#include <utility>

#include "intlin.hpp"

namespace vbc {

struct Signature {
    std::size_t positives = 0;
    std::size_t negatives = 0;
    bool operator==(const Signature&) const = default;
};

/// Finite abelian group given by its invariant factor chain d1 | d2 | ...,
/// every factor > 1. An empty chain is the trivial group.
struct DiscriminantGroup {
    std::vector<Int> invariant_factors;
    Int order() const;
    bool operator==(const DiscriminantGroup&) const = default;
};

/// Free Z-module of finite rank with a nondegenerate integral symmetric
/// bilinear form, stored as the Gram matrix of the standard basis.
/// Degenerate forms are rejected at construction.
class Lattice {
public:
    explicit Lattice(IntMat gram);
    std::size_t rank() const { return gram_.rows(); }
    const IntMat& gram() const { return gram_; }
    const Int& det() const { return det_; }
    Int inner(const std::vector<Int>& x, const std::vector<Int>& y) const;
    Rat inner(const RatVec& x, const RatVec& y) const;
    bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

private:
    IntMat gram_;
    Int det_;
};

/// Same module, form scaled by s (s nonzero).
Lattice twist(const Lattice& l, const Int& s);

Lattice direct_sum(const Lattice& a, const Lattice& b);

/// Exact inertia (p, q) via rational symmetric diagonalization.
Signature signature(const Lattice& l);

/// False as soon as some basis vector has odd norm.
bool is_even(const Lattice& l);

DiscriminantGroup discriminant_group(const Lattice& l);

/// Order of w in (dual of L)/L together with (w,w). w is given in L-basis
/// coordinates and must pair integrally with every basis vector.
std::pair<Int, Rat> dual_order_and_norm(const Lattice& l, const RatVec& w);

/// Submodule spanned by independent rows, in ambient coordinates.
class Sublattice {
public:
    Sublattice(Lattice ambient, IntMat basis);
    const Lattice& ambient() const { return ambient_; }
    const IntMat& basis() const { return basis_; }
    std::size_t rank() const { return basis_.rows(); }
    /// canonical representative of the row span; sublattices are equal iff
    /// these matrices are
    IntMat hnf_basis() const;
    /// restriction of the ambient form to the given basis
    IntMat gram_matrix() const;

private:
    Lattice ambient_;
    IntMat basis_;
};

/// (Q-span of S) intersected with the ambient module: the smallest primitive
/// sublattice containing S.
Sublattice saturation(const Sublattice& s);

bool is_primitive(const Sublattice& s);

/// {x in ambient : (x, s) = 0 for all s in S}; always primitive.
Sublattice orthogonal_complement(const Sublattice& s);

/// Restriction of the ambient form as a Lattice (throws if degenerate).
Lattice gram_of_sublattice(const Sublattice& s);

struct GluedLattice {
    Lattice lattice;
    RatMat basis;  // rows: new basis in (L1 + L2) tensor Q coordinates
};

/// Overlattice of L1 + L2 obtained by adjoining the given glue vectors, each
/// a pair (w1, w2) with wi in the dual of Li. The resulting Gram must be
/// integral; anything else throws.
GluedLattice glue(const Lattice& l1, const Lattice& l2,
                  const std::vector<std::pair<RatVec, RatVec>>& glue_vectors);

}  // namespace vbc
