#include "drckit/matrix.hpp"

#include <stdexcept>

#include "drckit/error.hpp"

namespace drckit {

RationalMatrix::RationalMatrix(int r, int c) : rows(r), cols(c) {
    if (r < 0 || c < 0) throw Error("negative matrix dimension");
    ent.assign(static_cast<std::size_t>(r) * c, mpq_class(0));
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (std::size_t i = 0; i < ent.size(); ++i)
        if (ent[i] != o.ent[i]) return false;
    return true;
}

RationalMatrix identity_matrix(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix zero_matrix(int r, int c) { return RationalMatrix(r, c); }

RationalMatrix from_rows(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows[0].empty()) throw Error("matrix literal must be nonempty");
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols) throw Error("ragged matrix literal");
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rational_of(rows[i][j]);
    }
    return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols != b.rows) throw Error("dimension mismatch in matrix product");
    RationalMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const mpq_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error("dimension mismatch in matrix sum");
    RationalMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < c.ent.size(); ++i) c.ent[i] = a.ent[i] + b.ent[i];
    return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw Error("dimension mismatch in matrix difference");
    RationalMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < c.ent.size(); ++i) c.ent[i] = a.ent[i] - b.ent[i];
    return c;
}

RationalMatrix transpose(const RationalMatrix& a) {
    RationalMatrix t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

bool is_zero(const RationalMatrix& a) {
    for (const mpq_class& q : a.ent)
        if (q != 0) return false;
    return true;
}

bool is_idempotent(const RationalMatrix& a) { return a.rows == a.cols && a * a == a; }

bool is_projection_matrix(const RationalMatrix& a) {
    return is_idempotent(a) && transpose(a) == a;
}

mpq_class rational_of(const std::string& s) {
    mpq_class q;
    try {
        q = mpq_class(s, 10);
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal: " + s);
    }
    if (q.get_den() == 0) throw Error("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string string_of(const mpq_class& q) { return q.get_str(); }

RationalMatrix rref(const RationalMatrix& a, std::vector<int>* pivots) {
    RationalMatrix m = a;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        mpq_class inv = 1 / m.at(r, c);
        for (int j = 0; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            mpq_class factor = m.at(i, c);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= factor * m.at(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

RationalMatrix inverse(const RationalMatrix& a) {
    if (a.rows != a.cols) throw Error("inverse of a non-square matrix");
    const int n = a.rows;
    RationalMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RationalMatrix red = rref(aug);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (red.at(i, j) != (i == j ? 1 : 0)) throw Error("matrix is singular");
    RationalMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
    return inv;
}

RationalMatrix pseudoinverse(const RationalMatrix& a) {
    if (a.rows == 0 || a.cols == 0) throw Error("pseudoinverse of an empty matrix");
    if (is_zero(a)) return zero_matrix(a.cols, a.rows);

    std::vector<int> piv;
    RationalMatrix red = rref(a, &piv);
    const int rank = static_cast<int>(piv.size());

    RationalMatrix f(a.rows, rank);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < rank; ++k) f.at(i, k) = a.at(i, piv[k]);
    RationalMatrix g(rank, a.cols);
    for (int k = 0; k < rank; ++k)
        for (int j = 0; j < a.cols; ++j) g.at(k, j) = red.at(k, j);
    if (f * g != a) throw Error("full-rank factorization failed");

    RationalMatrix gt = transpose(g);
    RationalMatrix ft = transpose(f);
    RationalMatrix x = gt * inverse(g * gt) * inverse(ft * f) * ft;

    if (a * x * a != a || x * a * x != x || transpose(a * x) != a * x || transpose(x * a) != x * a)
        throw Error("computed pseudoinverse fails a defining identity");
    return x;
}

}  // namespace drckit
