#pragma once

// Exact dense linear algebra over Q (GMP rationals) and F_p. Row reduction,
// rank, kernels. No magnitude pivoting: the pivot is the first nonzero entry
// in column order, which keeps every result deterministic.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetamult {

// F_p with canonical representatives 0..p-1. p must be a (small) prime.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || !is_prime(p))
            throw std::invalid_argument("PrimeField modulus must be prime: " + std::to_string(p));
        if (p >= (1ULL << 31))
            throw std::invalid_argument("PrimeField modulus too large");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return p_ == 1 ? 0 : 1; }
    Elem from_int(long long x) const {
        long long r = x % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("inverse of 0 in F_p");
        // extended Euclid
        long long t = 0, newt = 1;
        long long r = static_cast<long long>(p_), newr = static_cast<long long>(a);
        while (newr != 0) {
            long long q = r / newr;
            long long tmp = t - q * newt;
            t = newt; newt = tmp;
            tmp = r - q * newr;
            r = newr; newr = tmp;
        }
        if (t < 0) t += static_cast<long long>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string to_string(Elem a) const { return std::to_string(a); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    static bool is_prime(std::uint64_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }
    std::uint64_t p_;
};

// The rationals, arbitrary precision. mpq_class keeps values canonical
// (lowest terms) through arithmetic.
class RationalField {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long x) const { return Elem(static_cast<long>(x)); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("inverse of 0 in Q");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string to_string(const Elem& a) const { return a.get_str(); }

    bool operator==(const RationalField&) const { return true; }

private:
    static const Elem& inv_guard(const Elem& b) {
        if (b == 0) throw std::domain_error("division by 0 in Q");
        return b;
    }
};

template <class F>
class ExactMatrix {
public:
    using Elem = typename F::Elem;

    ExactMatrix(F field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, field.zero()) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }

    static ExactMatrix identity(F field, int n) {
        ExactMatrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Elem& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const ExactMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (!field_.eq(a_[k], o.a_[k])) return false;
        return true;
    }

    ExactMatrix mul(const ExactMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        ExactMatrix r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elem& v = at(i, k);
                if (field_.is_zero(v)) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (field_.is_zero(o.at(k, j))) continue;
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(v, o.at(k, j)));
                }
            }
        return r;
    }

    ExactMatrix transpose() const {
        ExactMatrix r(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<Elem> apply(const std::vector<Elem>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<Elem> r(rows_, field_.zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!field_.is_zero(at(i, j)) && !field_.is_zero(v[j]))
                    r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
        return r;
    }

private:
    F field_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

template <class F>
struct RrefResult {
    ExactMatrix<F> matrix;
    int rank;
    std::vector<int> pivot_cols;
};

// Reduced row echelon form. Pivot choice is the first nonzero entry in
// column order, so the result is unique and rref is idempotent.
template <class F>
RrefResult<F> rref(ExactMatrix<F> m) {
    const F& fld = m.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!fld.is_zero(m.at(i, c))) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        auto piv_inv = fld.inv(m.at(r, c));
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = fld.mul(m.at(r, j), piv_inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || fld.is_zero(m.at(i, c))) continue;
            auto factor = m.at(i, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) = fld.sub(m.at(i, j), fld.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult<F>{std::move(m), r, std::move(pivots)};
}

template <class F>
int rank(const ExactMatrix<F>& m) {
    return rref(m).rank;
}

// Basis of the right null space, one vector per free column, in free-column
// order; the free coordinate of each vector is 1.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const ExactMatrix<F>& m) {
    const F& fld = m.field();
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<typename F::Elem>> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<typename F::Elem> v(m.cols(), fld.zero());
        v[c] = fld.one();
        for (int r = 0; r < rr.rank; ++r) {
            int pc = rr.pivot_cols[r];
            v[pc] = fld.neg(rr.matrix.at(r, c));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve A x = b for all columns of B at once; A must have full column rank.
template <class F>
ExactMatrix<F> solve_full_column_rank(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    const F& fld = a.field();
    ExactMatrix<F> aug(fld, a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    auto rr = rref(std::move(aug));
    if (rr.rank != a.cols() ||
        (rr.rank > 0 && rr.pivot_cols.back() >= a.cols()))
        throw std::domain_error("solve: system has no unique solution");
    ExactMatrix<F> x(fld, a.cols(), b.cols());
    for (int r = 0; r < rr.rank; ++r)
        for (int j = 0; j < b.cols(); ++j)
            x.at(rr.pivot_cols[r], j) = rr.matrix.at(r, a.cols() + j);
    // consistency: rows beyond rank must be zero
    for (int i = rr.rank; i < rr.matrix.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!fld.is_zero(rr.matrix.at(i, a.cols() + j)))
                throw std::domain_error("solve: inconsistent system");
    return x;
}

}  // namespace thetamult
