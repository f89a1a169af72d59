#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vbc {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an operation receives a matrix of the wrong shape.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// n/d in lowest terms with positive denominator.
Rat make_rat(const Int& num, const Int& den);

/// Representative of r mod 1 in [0,1).
Rat mod1(const Rat& r);

/// Dense matrix of arbitrary-precision integers, row-major.
/// All arithmetic on entries is exact; there is no overflow.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols);
    IntMat(std::initializer_list<std::initializer_list<long>> rows);

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const;
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    std::vector<Int> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Int>& r);

    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    /// row i += c * row j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c);

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntMat operator-(const IntMat& a);
IntMat transpose(const IntMat& m);

/// Stack b below a (matching column counts).
IntMat vstack(const IntMat& a, const IntMat& b);

/// Block-diagonal sum.
IntMat block_diag(const IntMat& a, const IntMat& b);

/// x * m for a row vector x of length m.rows().
std::vector<Int> mul_row(const std::vector<Int>& x, const IntMat& m);

Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

/// gcd of the entries (0 for a zero vector, otherwise > 0).
Int content(const std::vector<Int>& v);

/// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int det(const IntMat& m);

/// Row Hermite normal form: h = u * m, u unimodular, h row-echelon with
/// positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows of h sit at the bottom.
struct HnfResult {
    IntMat h;
    IntMat u;
};
HnfResult hnf(const IntMat& m);

std::size_t rank(const IntMat& m);

/// Smith normal form: d = u * m * v, d diagonal with d1 | d2 | ..., di >= 0,
/// u and v unimodular.
struct SnfResult {
    IntMat d;
    IntMat u;
    IntMat v;
};
SnfResult snf(const IntMat& m);

/// Basis of the left kernel {x : x * m = 0}, one row per basis vector,
/// in Hermite normal form (canonical). The kernel lattice is saturated.
IntMat kernel_basis(const IntMat& m);

/// Basis of the intersection of the two row spans, as submodules of Z^cols.
IntMat intersect_rows(const IntMat& a, const IntMat& b);

/// Some integral x with x * m = b, if one exists.
std::optional<std::vector<Int>> solve_integral(const IntMat& m, const std::vector<Int>& b);

/// Dense matrix of exact rationals, row-major. Entries stay in lowest terms.
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols);
    explicit RatMat(const IntMat& m);

    static RatMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const RatMat& o) const;

    std::vector<Rat> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Rat>& r);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

using RatVec = std::vector<Rat>;

RatMat operator*(const RatMat& a, const RatMat& b);
RatMat transpose(const RatMat& m);

RatVec to_rat(const std::vector<Int>& v);
RatVec mul_row(const RatVec& x, const RatMat& m);
Rat dot(const RatVec& a, const RatVec& b);

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& v);

/// lcm of the denominators (1 for an integral vector).
Int common_denominator(const RatVec& v);
Int common_denominator(const RatMat& m);

bool is_integral(const Rat& r);
bool is_integral(const RatVec& v);
bool is_integral(const RatMat& m);

/// Entrywise numerators of an integral rational matrix.
IntMat to_int(const RatMat& m);
std::vector<Int> to_int(const RatVec& v);

}  // namespace vbc
