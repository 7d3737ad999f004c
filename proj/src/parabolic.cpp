#include "parred/parabolic.hpp"

#include <algorithm>

namespace parred {

namespace {

// expand a vector over a row basis, requiring exact integer coordinates
IVec coords_in_basis(const IMat& basis, const IVec& v,
                     const char* what) {
    if (basis.empty()) {
        if (!is_zero(v))
            throw internal_error(std::string(what) +
                                 ": nonzero vector in zero-rank lattice");
        return {};
    }
    auto x = solve_integer(transpose(basis), v);
    if (!x)
        throw internal_error(std::string(what) +
                             ": vector is not in the lattice");
    return *x;
}

} // namespace

ParabolicData build_parabolic(const RootDatum& rd, std::vector<std::size_t> I) {
    const std::size_t r = rd.rank_ss();
    const std::size_t n = rd.ambient_dim();
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    for (const auto i : I)
        if (i >= r)
            throw index_out_of_range("simple-root index " + std::to_string(i) +
                                     " out of range (rank " +
                                     std::to_string(r) + ")");
    ParabolicData pd;
    pd.rd = rd;
    pd.I = I;

    std::vector<bool> in_I(r, false);
    for (const auto i : I) in_I[i] = true;

    pd.chi_P = zero_vec(n);
    for (const auto& gamma : rd.positive_roots()) {
        bool levi = true;
        for (std::size_t j = 0; j < r; ++j)
            if (gamma.coeffs[j] != 0 && !in_I[j]) {
                levi = false;
                break;
            }
        if (levi) {
            pd.levi_positive_roots.push_back(gamma);
        } else {
            ++pd.dim_G_mod_P;
            pd.chi_P = pd.chi_P - rd.root_ambient(gamma);
        }
    }

    IMat levi_coroots;
    for (const auto i : I) levi_coroots.push_back(rd.simple_coroot(i));
    pd.char_lattice_basis = integer_kernel_basis(levi_coroots, n);
    pd.cochar_rank = (r - I.size()) + rd.rank_torus();
    if (pd.char_lattice_basis.size() != pd.cochar_rank)
        throw internal_error("X*(P) basis has unexpected rank");

    for (const auto i : I)
        if (dot(rd.simple_coroot(i), pd.chi_P) != 0)
            throw internal_error("chi_P is not a character of P");

    pd.weight_coeffs.resize(r);
    for (std::size_t b = 0; b < r; ++b)
        pd.weight_coeffs[b] = -dot(rd.simple_coroot(b), pd.chi_P);
    for (std::size_t b = 0; b < r; ++b) {
        if (in_I[b]) continue;
        if (pd.weight_coeffs[b] <= 0 && pd.dim_G_mod_P > 0)
            throw internal_error(
                "-chi_P must have positive coefficient on w_" +
                std::to_string(b));
    }

    for (std::size_t b = 0; b < r; ++b) {
        if (in_I[b]) continue;
        const QVec& w = rd.fundamental_weights()[b].vector;
        Int lcm = 1;
        for (const auto& c : w)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    c.get_den().get_mpz_t());
        IVec ambient(n);
        for (std::size_t k = 0; k < n; ++k) {
            const Rat scaled = Rat(lcm) * w[k];
            ambient[k] = scaled.get_num();
        }
        ParabolicData::DominantGenerator g;
        g.beta = b;
        g.n_beta = lcm;
        g.basis_coords =
            coords_in_basis(pd.char_lattice_basis, ambient, "dominant generator");
        g.ambient = std::move(ambient);
        pd.dominant_generators.push_back(std::move(g));
    }

    pd.chi_coords = coords_in_basis(pd.char_lattice_basis, pd.chi_P, "chi_P");
    for (const auto& chi : rd.group_char_basis())
        pd.group_char_coords.push_back(
            coords_in_basis(pd.char_lattice_basis, chi, "X*(G) basis"));
    return pd;
}

Int degree_functional(const ParabolicData& pd, const NumericalType& sigma) {
    if (!pd.accepts(sigma))
        throw dimension_mismatch(
            "numerical type does not belong to this parabolic");
    return dot(sigma.values, pd.chi_coords);
}

NumericalType restrict_cocharacter(const ParabolicData& pd, const IVec& mu) {
    if (mu.size() != pd.rd.ambient_dim())
        throw dimension_mismatch("cocharacter dimension");
    NumericalType t;
    t.I = pd.I;
    t.values.reserve(pd.char_lattice_basis.size());
    for (const auto& b : pd.char_lattice_basis) t.values.push_back(dot(mu, b));
    return t;
}

std::pair<QVec, QVec> decompose_parabolic_character(const RootDatum& rd,
                                                    const ParabolicData& pd_p,
                                                    const ParabolicData& pd_p1,
                                                    const IVec& chi) {
    const std::size_t n = rd.ambient_dim();
    if (!std::includes(pd_p.I.begin(), pd_p.I.end(), pd_p1.I.begin(),
                       pd_p1.I.end()))
        throw not_nested("P1 is not contained in P (need I1 inside I)");
    if (chi.size() != n) throw dimension_mismatch("character dimension");
    for (const auto i : pd_p1.I)
        if (dot(rd.simple_coroot(i), chi) != 0)
            throw dimension_mismatch("chi is not a character of P1");

    // cocharacters of the connected center of the Levi of P
    IMat levi_roots;
    for (const auto i : pd_p.I) levi_roots.push_back(rd.simple_root(i));
    const IMat central = integer_kernel_basis(levi_roots, n);

    // X*(P1bar) (x) Q: characters killed by the center of L and by the
    // coroots in I1
    IMat conds = central;
    for (const auto i : pd_p1.I) conds.push_back(rd.simple_coroot(i));
    const IMat vbasis = integer_kernel_basis(conds, n);

    const IMat& ubasis = pd_p.char_lattice_basis;
    const std::size_t cols = ubasis.size() + vbasis.size();
    QMat sys(n, QVec(cols));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < ubasis.size(); ++j)
            sys[i][j] = Rat(ubasis[j][i]);
        for (std::size_t j = 0; j < vbasis.size(); ++j)
            sys[i][ubasis.size() + j] = Rat(vbasis[j][i]);
    }
    const QVec coeffs = solve_rational(sys, to_rational(chi));
    QVec part_p(n, Rat(0)), part_levi(n, Rat(0));
    for (std::size_t j = 0; j < ubasis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            part_p[i] += coeffs[j] * Rat(ubasis[j][i]);
    for (std::size_t j = 0; j < vbasis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            part_levi[i] += coeffs[ubasis.size() + j] * Rat(vbasis[j][i]);
    return {part_p, part_levi};
}

RootDatum levi_induced_root_datum(const RootDatum& rd,
                                  const ParabolicData& pd) {
    const std::size_t n = rd.ambient_dim();
    IMat levi_roots;
    for (const auto i : pd.I) levi_roots.push_back(rd.simple_root(i));
    const IMat central = integer_kernel_basis(levi_roots, n);
    // character lattice of the quotient torus T / Z0(L)
    const IMat char_basis = integer_kernel_basis(central, n);
    if (char_basis.size() != pd.I.size())
        throw internal_error("Levi character lattice has unexpected rank");

    const std::size_t k = pd.I.size();
    IMat cartan(k, IVec(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            cartan[a][b] = rd.cartan()[pd.I[a]][pd.I[b]];
    IMat roots, coroots;
    for (const auto i : pd.I) {
        auto coords = solve_integer(transpose(char_basis), rd.simple_root(i));
        if (!coords)
            throw internal_error("simple root does not lie in the Levi lattice");
        roots.push_back(*coords);
        coroots.push_back(mat_vec(char_basis, rd.simple_coroot(i)));
    }
    return RootDatum(cartan, roots, coroots, 0, rd.name() + "-levi");
}

} // namespace parred
