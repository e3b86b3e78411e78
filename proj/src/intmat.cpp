#include "rlrs/intmat.hpp"

#include <stdexcept>

namespace rlrs {

namespace {

// Floor division for the reduction step.
Integer fdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void axpy_row(IntVec& dst, const IntVec& src, const Integer& f) {
    for (size_t j = 0; j < dst.size(); ++j) dst[j] -= f * src[j];
}

IntMatrix identity(size_t n) {
    IntMatrix m(n, IntVec(n, Integer(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace

IntMatrix hnf_rows(IntMatrix rows, size_t cols) {
    for (auto& r : rows)
        if (r.size() != cols) throw std::invalid_argument("hnf_rows: ragged matrix");
    size_t top = 0;
    std::vector<size_t> pivots;
    for (size_t c = 0; c < cols && top < rows.size(); ++c) {
        // Euclid on column c among rows top..end.
        for (;;) {
            size_t best = rows.size();
            for (size_t i = top; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool done = true;
            for (size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Integer q = fdiv(rows[i][c], rows[top][c]);
                axpy_row(rows[i], rows[top], q);
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[top][c] == 0) continue;
        if (rows[top][c] < 0)
            for (auto& x : rows[top]) x = -x;
        for (size_t i = 0; i < top; ++i) axpy_row(rows[i], rows[top], fdiv(rows[i][c], rows[top][c]));
        pivots.push_back(c);
        ++top;
    }
    rows.resize(top);
    return rows;
}

SmithForm smith(const IntMatrix& a0, size_t cols) {
    IntMatrix a = a0;
    size_t rows = a.size();
    IntMatrix U = identity(rows), V = identity(cols);
    auto swap_cols = [&](IntMatrix& m, size_t i, size_t j) {
        for (auto& r : m) std::swap(r[i], r[j]);
    };
    auto col_axpy = [&](IntMatrix& m, size_t dst, size_t src, const Integer& f) {
        for (auto& r : m) r[dst] -= f * r[src];
    };
    size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry in the trailing block becomes the pivot.
        bool any = false;
        for (;;) {
            size_t bi = rows, bj = cols;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
            if (bi == rows) break;
            any = true;
            std::swap(a[t], a[bi]);
            std::swap(U[t], U[bi]);
            swap_cols(a, t, bj);
            swap_cols(V, t, bj);
            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = fdiv(a[i][t], a[t][t]);
                axpy_row(a[i], a[t], q);
                axpy_row(U[i], U[t], q);
                if (a[i][t] != 0) clean = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = fdiv(a[t][j], a[t][t]);
                col_axpy(a, j, t, q);
                col_axpy(V, j, t, q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: pivot must divide the whole trailing block.
            size_t bad_i = rows, bad_j = cols;
            for (size_t i = t + 1; i < rows && bad_i == rows; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad_i = i;
                        bad_j = j;
                        break;
                    }
            if (bad_i == rows) break;
            (void)bad_j;
            for (size_t j = 0; j < cols; ++j) a[t][j] += a[bad_i][j];
            for (size_t j = 0; j < rows; ++j) U[t][j] += U[bad_i][j];
        }
        if (!any) break;
        if (a[t][t] < 0) {
            for (auto& x : a[t]) x = -x;
            for (auto& x : U[t]) x = -x;
        }
    }
    SmithForm s;
    for (size_t i = 0; i < t; ++i) s.diagonal.push_back(a[i][i]);
    s.U = std::move(U);
    s.V = std::move(V);
    return s;
}

IntMatrix integer_kernel(const IntMatrix& a, size_t cols) {
    SmithForm s = smith(a, cols);
    IntMatrix out;
    for (size_t j = s.diagonal.size(); j < cols; ++j) {
        IntVec v(cols);
        for (size_t i = 0; i < cols; ++i) v[i] = s.V[i][j];
        out.push_back(std::move(v));
    }
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, size_t b_cols) {
    IntMatrix out(a.size(), IntVec(b_cols, Integer(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < b_cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

}  // namespace rlrs
