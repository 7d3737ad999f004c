#pragma once

#include <optional>

#include "parred/numeric.hpp"

namespace parred {

// Exact integer/rational linear algebra on small dense matrices.
// Everything here is deterministic: pivot choices are by index, never by
// magnitude heuristics that depend on representation.

// Row Hermite normal form of the lattice spanned by the rows of m.
// Returns a canonical basis: row-echelon, positive pivots, entries above a
// pivot reduced into [0, pivot). Zero rows are dropped.
IMat hnf_row_basis(IMat m);

// Basis of the (saturated) integer kernel {x in Z^cols : a*x = 0}, rows
// HNF-reduced. `a` may have zero rows, in which case the kernel is all of
// Z^cols.
IMat integer_kernel_basis(const IMat& a, std::size_t cols);

// Smith normal form data for the column lattice of an n x r integer matrix
// (columns = lattice generators inside Z^n).
struct SmithForm {
    IMat u;        // unimodular n x n, u*m*v = diag
    IMat u_inv;    // its inverse
    IVec factors;  // invariant factors d_1 | d_2 | ... (length = rank)
    std::size_t ambient = 0;
    std::size_t rank = 0;
};

SmithForm smith_form(const IMat& m_columns);

// Unique rational solution of a*x = b (a has full column rank; throws
// internal_error when the system is inconsistent or underdetermined).
QVec solve_rational(const QMat& a, const QVec& b);

// Same, returning std::nullopt on inconsistency instead of throwing.
std::optional<QVec> try_solve_rational(const QMat& a, const QVec& b);

inline QMat to_rational(const IMat& m) {
    QMat r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i].reserve(m[i].size());
        for (const auto& x : m[i]) r[i].emplace_back(x);
    }
    return r;
}

inline QVec to_rational(const IVec& v) {
    QVec r;
    r.reserve(v.size());
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

// Integer solution of a*x = b, if one exists (solves rationally and checks
// integrality).
std::optional<IVec> solve_integer(const IMat& a, const IVec& b);

// n x n identity.
IMat identity_matrix(std::size_t n);

// Transpose.
IMat transpose(const IMat& m);

// Matrix-vector product (rows of m dotted with v).
IVec mat_vec(const IMat& m, const IVec& v);

} // namespace parred
