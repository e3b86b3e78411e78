#pragma once

#include <vector>

#include "rlrs/poly.hpp"

namespace rlrs {

// Dense row-major matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static QMatrix identity(size_t n);
    // Companion matrix of a monic-normalized polynomial: ones on the superdiagonal,
    // last row holds -p_0, ..., -p_{d-1}.
    static QMatrix companion(const Poly& p);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rational& s, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    Rational trace() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

QMatrix kron(const QMatrix& a, const QMatrix& b);
QMatrix pow(const QMatrix& a, unsigned long e);
// p(A) by Horner.
QMatrix eval(const Poly& p, const QMatrix& a);
// det(xI - A), via reduction to Hessenberg form.
Poly charpoly(const QMatrix& a);
// Throws std::domain_error when singular.
QMatrix inverse(const QMatrix& a);

}  // namespace rlrs
