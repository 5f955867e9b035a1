#pragma once

#include "hqm/errors.hpp"
#include "hqm/hypercomplex.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hqm {

/// Dense square matrix over an exact scalar ring (Rational, GaussComplex or
/// SplitComplex). Row-major.
template <class S>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), a_(n * n, S(0)) {}
    Matrix(std::size_t n, std::vector<S> entries) : n_(n), a_(std::move(entries)) {
        if (a_.size() != n * n) throw DimensionMismatch("matrix entry count does not match dimension");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t dim() const { return n_; }
    S& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!(x == S(0))) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        check(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const S& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.a_) x = -x;
        return a;
    }
    friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
    friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check(b);
        const std::size_t n = a.n_;
        Matrix c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const S& aik = a(i, k);
                if (aik == S(0)) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

    Matrix transpose() const {
        Matrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Conjugate transpose.
    Matrix hermitian_conj() const {
        Matrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = conj((*this)(i, j));
        return t;
    }

    S trace() const {
        S t(0);
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    const std::vector<S>& entries() const { return a_; }

private:
    void check(const Matrix& o) const {
        if (o.n_ != n_)
            throw DimensionMismatch("matrix dimensions differ: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }

    std::size_t n_ = 0;
    std::vector<S> a_;
};

template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
    const std::size_t n = a.dim(), m = b.dim();
    Matrix<S> k(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j) == S(0)) continue;
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) k(i * m + r, j * m + c) = a(i, j) * b(r, c);
        }
    return k;
}

template <class S>
std::string to_string(const Matrix<S>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out += ", ";
            out += to_string(m(i, j));
        }
        out += "]";
    }
    return out + "]";
}

using RMatrix = Matrix<Rational>;

/// Exact determinant by fraction-field Gaussian elimination.
Rational determinant(RMatrix m);

} // namespace hqm
