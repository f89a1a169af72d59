#pragma once
#include <optional>
#include <string>

#include "lattice.hpp"

namespace vbc {

/// hyperbolic plane [[0,1],[1,0]]
IntMat u_gram();

/// positive definite even unimodular rank-8 form, Bourbaki numbering
IntMat e8_gram();

/// U + U + U + E8(-1) + E8(-1), rank 22, det -1, signature (3,19).
/// Coordinate layout: 0,1 | 2,3 | 4,5 | 6..13 | 14..21. The last twenty
/// coordinates (third U and both E8(-1)) form the block that stays untouched
/// by every construction here.
Lattice k3_lattice();

/// The degree-2 setup: ambient lattice, polarization h of square 2, and the
/// B-field of the Clifford class, an odd theta representative.
class K3Ambient {
public:
    K3Ambient();
    const Lattice& lambda() const { return lambda_; }
    const std::vector<Int>& h() const { return h_; }
    const RatVec& b_alpha() const { return b_alpha_; }
    Sublattice h_sublattice() const;

private:
    Lattice lambda_;
    std::vector<Int> h_;
    RatVec b_alpha_;
};

/// Half-integral class: every denominator divides 2.
class BField {
public:
    explicit BField(RatVec coords);
    const RatVec& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }

private:
    RatVec coords_;
};

enum class BrauerKind { TrivialClass, PointOrderTwo, EvenTheta, OddTheta };

std::string to_string(BrauerKind k);

struct BrauerClassReport {
    BrauerKind kind;
    Rat bh;                  // in [0,1)
    std::optional<Rat> b2;   // in [0,1); absent unless 4Bh+h^2 = 0 mod 4
    bool operator==(const BrauerClassReport&) const = default;
};

/// (Bh mod 1, B^2 mod 1). The square is reported only when 4Bh+h^2 is
/// divisible by 4; outside that regime it is not an invariant of the class.
/// h is the first basis row of pic.
std::pair<Rat, std::optional<Rat>> bfield_invariants(const BField& b, const Sublattice& pic);

/// B1 - B2 in (1/2)pic + ambient
bool bfield_equiv(const BField& b1, const BField& b2, const Sublattice& pic);

BField add_bfields(const BField& b1, const BField& b2);

/// orthogonal complement of pic in the ambient
Sublattice transcendental_lattice(const K3Ambient& amb, const Sublattice& pic);

/// {x in T : (x, 2B) even}: the kernel of the induced map T -> Z/2.
/// Index <= 2 in T; deliberately not saturated in the ambient.
Sublattice alpha_kernel(const Sublattice& t, const BField& b);

/// every basis vector of T pairs integrally with B
bool restriction_is_trivial(const Sublattice& t, const BField& b);

/// Basis change k -> ±k - m h bringing the off-diagonal entry into {0,1};
/// input and output have the shape [[2,b],[b,even]].
IntMat normalize_pic_gram(const IntMat& pic_gram);

/// Case split on the normalized rank-2 Picard Gram [[2,b],[b,2c]]:
/// b even -> point of order two; b odd -> theta characteristic, even or odd
/// by the parity of c. Also reports the invariants b/2 and (b odd) c/2 mod 1.
BrauerClassReport classify_from_pic(const IntMat& pic_gram);

/// B-field of the vanishing class of a rank-2 Picard sublattice <h, k>,
/// namely k/2; k must be primitive.
BField vanishing_bfield(const Sublattice& pic);

/// Classification of the class of B on the generic polarized surface
/// (Picard group Zh): trivial iff B in (1/2)Zh + ambient, a point of order
/// two iff Bh = 0 mod 1, otherwise a theta characteristic of parity B^2.
BrauerClassReport classify_bfield(const K3Ambient& amb, const BField& b);

}  // namespace vbc
