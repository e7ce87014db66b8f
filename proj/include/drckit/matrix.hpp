#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace drckit {

// Dense exact-rational matrix, row major. mpq_class keeps entries in lowest
// terms, so equality is exact bitwise comparison of canonical fractions.
struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<mpq_class> ent;

    RationalMatrix() = default;
    RationalMatrix(int r, int c);

    mpq_class& at(int i, int j) { return ent[static_cast<std::size_t>(i) * cols + j]; }
    const mpq_class& at(int i, int j) const { return ent[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const RationalMatrix& o) const;
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }
};

RationalMatrix identity_matrix(int n);
RationalMatrix zero_matrix(int r, int c);

// Entries given as decimal integer or "num/den" literals.
RationalMatrix from_rows(const std::vector<std::vector<std::string>>& rows);

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& a);

bool is_zero(const RationalMatrix& a);
bool is_idempotent(const RationalMatrix& a);
// Symmetric idempotent.
bool is_projection_matrix(const RationalMatrix& a);

// Parses "num", "-num" or "num/den"; throws Error on malformed input or a
// zero denominator.
mpq_class rational_of(const std::string& s);
std::string string_of(const mpq_class& q);

// Reduced row echelon form; pivot column indices are appended to *pivots
// when the pointer is given.
RationalMatrix rref(const RationalMatrix& a, std::vector<int>* pivots = nullptr);

// Inverse of a nonsingular square matrix; throws Error when singular.
RationalMatrix inverse(const RationalMatrix& a);

// Moore-Penrose inverse via full-rank factorization a = FG with
// x = G^T (G G^T)^-1 (F^T F)^-1 F^T; the zero matrix maps to its transposed
// zero. All four defining identities are re-verified before returning.
RationalMatrix pseudoinverse(const RationalMatrix& a);

}  // namespace drckit
