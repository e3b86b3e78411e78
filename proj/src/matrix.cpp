#include "rlrs/matrix.hpp"

#include <stdexcept>

namespace rlrs {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::companion(const Poly& p) {
    Poly q = p.monic();
    size_t d = static_cast<size_t>(q.degree());
    QMatrix m(d, d);
    for (size_t i = 0; i + 1 < d; ++i) m(i, i + 1) = 1;
    for (size_t j = 0; j < d; ++j) m(d - 1, j) = -q.coeff(j);
    return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    QMatrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) r(i, j) += x * b(k, j);
        }
    return r;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
    QMatrix r(a);
    for (auto& v : r.a_) v *= s;
    return r;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    std::vector<Rational> r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

Rational QMatrix::trace() const {
    Rational t;
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    if (b(k, l) != 0) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

QMatrix pow(const QMatrix& a, unsigned long e) {
    QMatrix r = QMatrix::identity(a.rows()), b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

QMatrix eval(const Poly& p, const QMatrix& a) {
    size_t n = a.rows();
    QMatrix r(n, n);
    const auto& c = p.coeffs();
    for (size_t i = c.size(); i-- > 0;) {
        r = r * a;
        for (size_t k = 0; k < n; ++k) r(k, k) += c[i];
    }
    return r;
}

Poly charpoly(const QMatrix& a) {
    size_t n = a.rows();
    QMatrix h(a);
    // Similarity reduction to upper Hessenberg form.
    for (size_t m = 1; m + 1 < n; ++m) {
        size_t piv = n;
        for (size_t i = m; i < n; ++i)
            if (h(i, m - 1) != 0) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        if (piv != m) {
            for (size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
            for (size_t j = 0; j < n; ++j) std::swap(h(j, piv), h(j, m));
        }
        for (size_t i = m + 1; i < n; ++i) {
            if (h(i, m - 1) == 0) continue;
            Rational u = h(i, m - 1) / h(m, m - 1);
            for (size_t j = 0; j < n; ++j)
                if (h(m, j) != 0) h(i, j) -= u * h(m, j);
            for (size_t j = 0; j < n; ++j)
                if (h(j, i) != 0) h(j, m) += u * h(j, i);
        }
    }
    std::vector<Poly> p(n + 1);
    p[0] = Poly::constant(Rational(1));
    for (size_t m = 0; m < n; ++m) {
        p[m + 1] = Poly({-h(m, m), Rational(1)}) * p[m];
        Rational t(1);
        for (size_t i = m; i-- > 0;) {
            t *= h(i + 1, i);
            if (t == 0) break;
            Rational f = t * h(i, m);
            if (f != 0) p[m + 1] = p[m + 1] - f * p[i];
        }
    }
    return p[n];
}

QMatrix inverse(const QMatrix& a) {
    size_t n = a.rows();
    QMatrix m(a), r = QMatrix::identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t i = c; i < n; ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != c)
            for (size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(c, j));
                std::swap(r(piv, j), r(c, j));
            }
        Rational inv = 1 / m(c, c);
        for (size_t j = 0; j < n; ++j) {
            m(c, j) *= inv;
            r(c, j) *= inv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (size_t j = 0; j < n; ++j) {
                if (m(c, j) != 0) m(i, j) -= f * m(c, j);
                if (r(c, j) != 0) r(i, j) -= f * r(c, j);
            }
        }
    }
    return r;
}

}  // namespace rlrs
