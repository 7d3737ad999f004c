#include "parred/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace parred {

IMat identity_matrix(std::size_t n) {
    IMat m(n, IVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat transpose(const IMat& m) {
    if (m.empty()) return {};
    IMat t(m[0].size(), IVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

IVec mat_vec(const IMat& m, const IVec& v) {
    IVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

IMat hnf_row_basis(IMat m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // euclidean elimination below pivot_row in this column
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = pivot_row; i < rows; ++i) {
                if (m[i][col] == 0) continue;
                if (best == rows ||
                    cmp(abs(m[i][col]), abs(m[best][col])) < 0)
                    best = i;
            }
            if (best == rows) break;
            std::swap(m[pivot_row], m[best]);
            bool reduced_all = true;
            for (std::size_t i = pivot_row + 1; i < rows; ++i) {
                if (m[i][col] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(),
                           m[pivot_row][col].get_mpz_t());
                for (std::size_t j = 0; j < cols; ++j)
                    m[i][j] -= q * m[pivot_row][j];
                if (m[i][col] != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (pivot_row < rows && m[pivot_row][col] != 0) {
            if (m[pivot_row][col] < 0)
                for (std::size_t j = 0; j < cols; ++j)
                    m[pivot_row][j] = -m[pivot_row][j];
            pivot_cols.push_back(col);
            ++pivot_row;
        }
    }
    m.resize(pivot_row);
    // reduce entries above each pivot into [0, pivot)
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
        const std::size_t col = pivot_cols[k];
        for (std::size_t i = 0; i < k; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(),
                       m[k][col].get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < m[i].size(); ++j)
                    m[i][j] -= q * m[k][j];
        }
    }
    return m;
}

IMat integer_kernel_basis(const IMat& a, std::size_t cols) {
    const std::size_t rows = a.size();
    if (rows && a[0].size() != cols)
        throw dimension_mismatch("integer_kernel_basis: column count");
    if (rows == 0) return identity_matrix(cols);
    // column elimination with unimodular ops tracked in v
    IMat w = a;
    IMat v = identity_matrix(cols);
    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < rows; ++i) w[i][dst] -= q * w[i][src];
        for (std::size_t i = 0; i < cols; ++i) v[i][dst] -= q * v[i][src];
    };
    auto col_swap = [&](std::size_t c1, std::size_t c2) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(w[i][c1], w[i][c2]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][c1], v[i][c2]);
    };
    std::size_t pivot_col = 0;
    for (std::size_t row = 0; row < rows && pivot_col < cols; ++row) {
        while (true) {
            std::size_t best = cols;
            for (std::size_t j = pivot_col; j < cols; ++j) {
                if (w[row][j] == 0) continue;
                if (best == cols || cmp(abs(w[row][j]), abs(w[row][best])) < 0)
                    best = j;
            }
            if (best == cols) break;
            col_swap(pivot_col, best);
            bool done = true;
            for (std::size_t j = pivot_col + 1; j < cols; ++j) {
                if (w[row][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w[row][j].get_mpz_t(),
                           w[row][pivot_col].get_mpz_t());
                col_sub(j, pivot_col, q);
                if (w[row][j] != 0) done = false;
            }
            if (done) break;
        }
        if (w[row][pivot_col] != 0) ++pivot_col;
    }
    // columns pivot_col..cols-1 of v span the kernel; rows of the result
    IMat kernel;
    for (std::size_t j = pivot_col; j < cols; ++j) {
        IVec k(cols);
        for (std::size_t i = 0; i < cols; ++i) k[i] = v[i][j];
        kernel.push_back(std::move(k));
    }
    return hnf_row_basis(std::move(kernel));
}

SmithForm smith_form(const IMat& m_columns) {
    const std::size_t n = m_columns.size();
    const std::size_t r = n ? m_columns[0].size() : 0;
    IMat w = m_columns;
    SmithForm out;
    out.ambient = n;
    out.u = identity_matrix(n);
    out.u_inv = identity_matrix(n);
    IMat vcols = identity_matrix(r);  // column ops, not needed by callers

    auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < r; ++j) w[dst][j] -= q * w[src][j];
        for (std::size_t j = 0; j < n; ++j) out.u[dst][j] -= q * out.u[src][j];
        // inverse picks up the opposite column op
        for (std::size_t i = 0; i < n; ++i)
            out.u_inv[i][src] += q * out.u_inv[i][dst];
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        std::swap(w[a], w[b]);
        std::swap(out.u[a], out.u[b]);
        for (std::size_t i = 0; i < n; ++i)
            std::swap(out.u_inv[i][a], out.u_inv[i][b]);
    };
    auto row_neg = [&](std::size_t a) {
        for (std::size_t j = 0; j < r; ++j) w[a][j] = -w[a][j];
        for (std::size_t j = 0; j < n; ++j) out.u[a][j] = -out.u[a][j];
        for (std::size_t i = 0; i < n; ++i) out.u_inv[i][a] = -out.u_inv[i][a];
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < n; ++i) w[i][dst] -= q * w[i][src];
        for (std::size_t i = 0; i < r; ++i) vcols[i][dst] -= q * vcols[i][src];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i) std::swap(w[i][a], w[i][b]);
        for (std::size_t i = 0; i < r; ++i) std::swap(vcols[i][a], vcols[i][b]);
    };

    std::size_t t = 0;
    while (t < n && t < r) {
        // find smallest nonzero entry in the remaining block
        std::size_t pi = n, pj = r;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < r; ++j) {
                if (w[i][j] == 0) continue;
                if (pi == n || cmp(abs(w[i][j]), abs(w[pi][pj])) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == n) break;  // remaining block is zero
        if (pi != t) row_swap(t, pi);
        if (pj != t) col_swap(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (w[i][t] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w[i][t].get_mpz_t(),
                           w[t][t].get_mpz_t());
                row_sub(i, t, q);
                if (w[i][t] != 0) {
                    row_swap(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < r; ++j) {
                if (w[t][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w[t][j].get_mpz_t(),
                           w[t][t].get_mpz_t());
                col_sub(j, t, q);
                if (w[t][j] != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
        }
        if (w[t][t] < 0) row_neg(t);
        // divisibility fix-up: the pivot must divide the rest of the block
        bool restart = false;
        for (std::size_t i = t + 1; i < n && !restart; ++i)
            for (std::size_t j = t + 1; j < r && !restart; ++j)
                if (w[i][j] % w[t][t] != 0) {
                    row_sub(t, i, Int(-1));  // add row i to row t
                    restart = true;
                }
        if (restart) continue;
        ++t;
    }
    out.rank = t;
    out.factors.resize(t);
    for (std::size_t i = 0; i < t; ++i) out.factors[i] = w[i][i];
    return out;
}

namespace {

// reduced row echelon on an augmented rational matrix; returns pivot columns
std::vector<std::size_t> rref(QMat& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = rows;
        for (std::size_t i = row; i < rows; ++i)
            if (m[i][col] != 0) {
                p = i;
                break;
            }
        if (p == rows) continue;
        std::swap(m[row], m[p]);
        const Rat inv = Rat(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::optional<QVec> try_solve_rational(const QMat& a, const QVec& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw dimension_mismatch("solve: rhs length");
    QMat aug(rows, QVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    // inconsistent if a pivot landed in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    if (pivots.size() < cols)
        throw internal_error("solve_rational: underdetermined system");
    QVec x(cols, Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
    return x;
}

QVec solve_rational(const QMat& a, const QVec& b) {
    auto x = try_solve_rational(a, b);
    if (!x) throw internal_error("solve_rational: inconsistent system");
    return *x;
}

std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
    auto x = try_solve_rational(to_rational(a), to_rational(b));
    if (!x) return std::nullopt;
    IVec r(x->size());
    for (std::size_t i = 0; i < x->size(); ++i) {
        if (!is_integer((*x)[i])) return std::nullopt;
        r[i] = (*x)[i].get_num();
    }
    return r;
}

} // namespace parred
