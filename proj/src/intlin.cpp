#include "intlin.hpp"

#include <algorithm>
#include <sstream>

namespace vbc {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat mod1(const Rat& r) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return r - Rat(fl);
}

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("IntMat: ragged initializer");
        for (long x : r) e_.emplace_back(x);
    }
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMat::operator==(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

std::vector<Int> IntMat::row(std::size_t i) const {
    return std::vector<Int>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

void IntMat::set_row(std::size_t i, const std::vector<Int>& r) {
    if (r.size() != cols_) throw ShapeError("set_row: length mismatch");
    std::copy(r.begin(), r.end(), e_.begin() + i * cols_);
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMat::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMat::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimension mismatch");
    IntMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

IntMat operator-(const IntMat& a) {
    IntMat c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
    return c;
}

IntMat transpose(const IntMat& m) {
    IntMat t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

IntMat vstack(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.cols()) throw ShapeError("vstack: column mismatch");
    IntMat c(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
    return c;
}

IntMat block_diag(const IntMat& a, const IntMat& b) {
    IntMat c(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
    return c;
}

std::vector<Int> mul_row(const std::vector<Int>& x, const IntMat& m) {
    if (x.size() != m.rows()) throw ShapeError("mul_row: length mismatch");
    std::vector<Int> out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
    }
    return out;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int content(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Int det(const IntMat& m) {
    if (m.rows() != m.cols()) throw ShapeError("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign < 0 ? Int(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

namespace {

// floor quotient, so remainders after reduction land in [0, b) for b > 0
Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

int cmp_abs(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

HnfResult hnf(const IntMat& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    HnfResult res{m, IntMat::identity(nr)};
    IntMat& h = res.h;
    IntMat& u = res.u;

    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        // Euclid on column c below row r until a single nonzero entry remains
        for (;;) {
            std::size_t piv = nr;
            for (std::size_t i = r; i < nr; ++i) {
                if (h(i, c) == 0) continue;
                if (piv == nr || cmp_abs(h(i, c), h(piv, c)) < 0) piv = i;
            }
            if (piv == nr) break;  // column is zero below r
            h.swap_rows(r, piv);
            u.swap_rows(r, piv);
            bool clean = true;
            for (std::size_t i = r + 1; i < nr; ++i) {
                if (h(i, c) == 0) continue;
                Int q = fdiv(h(i, c), h(r, c));
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = fdiv(h(i, c), h(r, c));
            if (q != 0) {
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
            }
        }
        ++r;
    }
    return res;
}

std::size_t rank(const IntMat& m) {
    IntMat h = hnf(m).h;
    std::size_t rk = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool nz = false;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) { nz = true; break; }
        if (nz) ++rk;
    }
    return rk;
}

SnfResult snf(const IntMat& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    SnfResult res{m, IntMat::identity(nr), IntMat::identity(nc)};
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;

    auto swap_cols = [&](IntMat& a, std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t rI = 0; rI < a.rows(); ++rI) std::swap(a(rI, i), a(rI, j));
    };
    auto add_col_multiple = [&](IntMat& a, std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t rI = 0; rI < a.rows(); ++rI) a(rI, i) += c * a(rI, j);
    };

    const std::size_t steps = std::min(nr, nc);
    bool done = false;
    for (std::size_t t = 0; t < steps && !done; ++t) {
        for (;;) {
            // pivot on the entry of smallest absolute value in the trailing
            // block; keeping the pivot globally minimal keeps quotients, and
            // with them entry growth, under control
            std::size_t pi = nr, pj = nc;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j) {
                    if (d(i, j) == 0) continue;
                    if (pi == nr || cmp_abs(d(i, j), d(pi, pj)) < 0) { pi = i; pj = j; }
                }
            if (pi == nr) { done = true; break; }  // trailing block is zero
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            swap_cols(d, t, pj);
            swap_cols(v, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (d(i, t) == 0) continue;
                Int q = fdiv(d(i, t), d(t, t));
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            if (!clean) continue;  // a remainder beats the old minimum, repivot
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (d(t, j) == 0) continue;
                Int q = fdiv(d(t, j), d(t, t));
                add_col_multiple(d, j, t, -q);
                add_col_multiple(v, j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the whole trailing block
            bool fixed = false;
            for (std::size_t i = t + 1; i < nr && !fixed; ++i)
                for (std::size_t j = t + 1; j < nc && !fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (done) break;
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return res;
}

IntMat kernel_basis(const IntMat& m) {
    HnfResult hr = hnf(m);
    std::size_t rk = 0;
    for (std::size_t i = 0; i < hr.h.rows(); ++i) {
        bool nz = false;
        for (std::size_t j = 0; j < hr.h.cols(); ++j)
            if (hr.h(i, j) != 0) { nz = true; break; }
        if (nz) ++rk;
    }
    // zero rows of h sit at the bottom; the matching rows of u span the kernel
    IntMat ker(m.rows() - rk, m.rows());
    for (std::size_t i = rk; i < m.rows(); ++i)
        ker.set_row(i - rk, hr.u.row(i));
    return hnf(ker).h;
}

IntMat intersect_rows(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.cols()) throw ShapeError("intersect_rows: column mismatch");
    if (a.rows() == 0 || b.rows() == 0) return IntMat(0, a.cols());
    // rows (x | y) of the kernel of [a; b] satisfy x a = -y b, so x a runs
    // over the intersection of the spans
    IntMat ker = kernel_basis(vstack(a, b));
    IntMat cand(ker.rows(), a.cols());
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Int s = 0;
            for (std::size_t r = 0; r < a.rows(); ++r) s += ker(i, r) * a(r, j);
            cand(i, j) = s;
        }
    }
    IntMat h = hnf(cand).h;
    std::size_t rk = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool nz = false;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) { nz = true; break; }
        if (nz) ++rk;
    }
    IntMat out(rk, a.cols());
    for (std::size_t i = 0; i < rk; ++i) out.set_row(i, h.row(i));
    return out;
}

std::optional<std::vector<Int>> solve_integral(const IntMat& m, const std::vector<Int>& b) {
    if (b.size() != m.cols()) throw ShapeError("solve_integral: length mismatch");
    HnfResult hr = hnf(m);
    const IntMat& h = hr.h;
    std::vector<Int> y(m.rows(), Int(0));
    std::vector<Int> resid = b;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t c = 0;
        while (c < h.cols() && h(i, c) == 0) ++c;
        if (c == h.cols()) break;  // zero rows follow
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), resid[c].get_mpz_t(), h(i, c).get_mpz_t());
        if (r != 0) return std::nullopt;
        y[i] = q;
        if (q != 0)
            for (std::size_t j = c; j < h.cols(); ++j) resid[j] -= q * h(i, j);
    }
    for (const Int& x : resid)
        if (x != 0) return std::nullopt;
    return mul_row(y, hr.u);
}

RatMat::RatMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

RatMat::RatMat(const IntMat& m) : rows_(m.rows()), cols_(m.cols()), e_(m.rows() * m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rat(m(i, j));
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RatMat::operator==(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

std::vector<Rat> RatMat::row(std::size_t i) const {
    return std::vector<Rat>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

void RatMat::set_row(std::size_t i, const std::vector<Rat>& r) {
    if (r.size() != cols_) throw ShapeError("set_row: length mismatch");
    std::copy(r.begin(), r.end(), e_.begin() + i * cols_);
}

RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimension mismatch");
    RatMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

RatMat transpose(const RatMat& m) {
    RatMat t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

RatVec to_rat(const std::vector<Int>& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

RatVec mul_row(const RatVec& x, const RatMat& m) {
    if (x.size() != m.rows()) throw ShapeError("mul_row: length mismatch");
    RatVec out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
    }
    return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ShapeError("add: length mismatch");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ShapeError("sub: length mismatch");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec scale(const Rat& c, const RatVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

Int common_denominator(const RatVec& v) {
    Int l = 1;
    for (const Rat& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
    return l;
}

Int common_denominator(const RatMat& m) {
    Int l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    return l;
}

bool is_integral(const Rat& r) { return r.get_den() == 1; }

bool is_integral(const RatVec& v) {
    for (const Rat& r : v)
        if (!is_integral(r)) return false;
    return true;
}

bool is_integral(const RatMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_integral(m(i, j))) return false;
    return true;
}

IntMat to_int(const RatMat& m) {
    if (!is_integral(m)) throw std::domain_error("to_int: matrix is not integral");
    IntMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num();
    return out;
}

std::vector<Int> to_int(const RatVec& v) {
    if (!is_integral(v)) throw std::domain_error("to_int: vector is not integral");
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num();
    return out;
}

}  // namespace vbc
