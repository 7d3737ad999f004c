#include "parred/numtype.hpp"

#include <algorithm>
#include <functional>

namespace parred {

TopologicalType topological_type(const RootDatum& rd, const IVec& mu) {
    const std::size_t n = rd.ambient_dim();
    if (mu.size() != n) throw dimension_mismatch("cocharacter dimension");
    const SmithForm& sf = rd.coroot_smith();
    IVec y = mat_vec(sf.u, mu);
    TopologicalType c;
    c.invariant_factors = sf.factors;
    c.torsion_rank = sf.rank;
    c.residues.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < sf.rank) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(),
                       sf.factors[i].get_mpz_t());
            c.residues[i] = r;
        } else {
            c.residues[i] = y[i];
        }
    }
    c.lift = mat_vec(sf.u_inv, c.residues);
    return c;
}

std::vector<StarGenerator> star_generators(const ParabolicData& pd) {
    const RootDatum& rd = pd.rd;
    const std::size_t k = pd.I.size();
    std::vector<bool> in_I(rd.rank_ss(), false);
    for (const auto i : pd.I) in_I[i] = true;

    std::vector<StarGenerator> out;
    for (std::size_t beta = 0; beta < rd.rank_ss(); ++beta) {
        if (in_I[beta]) continue;
        // solve <coroot_i, n*beta + sum k_a alpha_a> = 0 for all i in I;
        // with n = 1 the unique rational solution is scaled to the minimal
        // integral one
        QMat sys(k, QVec(k));
        QVec rhs(k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j)
                sys[i][j] = Rat(rd.cartan()[pd.I[i]][pd.I[j]]);
            rhs[i] = -Rat(rd.cartan()[pd.I[i]][beta]);
        }
        QVec k0;
        if (k > 0) k0 = solve_rational(sys, rhs);
        Int lcm = 1;
        for (const auto& c : k0)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        StarGenerator g;
        g.beta = beta;
        g.n_beta = lcm;
        g.n_beta_alpha.resize(k);
        IVec chi = lcm * rd.simple_root(beta);
        for (std::size_t a = 0; a < k; ++a) {
            const Rat scaled = Rat(lcm) * k0[a];
            g.n_beta_alpha[a] = scaled.get_num();
            chi = chi + g.n_beta_alpha[a] * rd.simple_root(pd.I[a]);
        }
        for (const auto i : pd.I)
            if (dot(rd.simple_coroot(i), chi) != 0)
                throw internal_error("chi_beta is not a character of P");
        auto coords = solve_integer(transpose(pd.char_lattice_basis), chi);
        if (!coords)
            throw internal_error("chi_beta not in the X*(P) lattice");
        g.chi_ambient = std::move(chi);
        g.chi_coords = std::move(*coords);
        out.push_back(std::move(g));
    }
    return out;
}

bool leq(const ParabolicData& pd, const NumericalType& sigma,
         const NumericalType& tau) {
    if (sigma.I != tau.I || !pd.accepts(sigma) || !pd.accepts(tau))
        throw mixed_parabolics("types do not belong to the same parabolic");
    const IVec diff = tau.values - sigma.values;
    for (const auto& g : pd.dominant_generators)
        if (dot(diff, g.basis_coords) < 0) return false;
    for (const auto& row : pd.group_char_coords)
        if (dot(diff, row) != 0) return false;
    return true;
}

bool cocharacter_leq(const RootDatum& rd, const IVec& nu, const IVec& mu,
                     OrderIntegrality mode) {
    if (nu.size() != rd.ambient_dim() || mu.size() != rd.ambient_dim())
        throw dimension_mismatch("cocharacter dimension");
    const IVec diff = mu - nu;
    for (const auto& w : rd.fundamental_weights()) {
        const Rat p = dotq(diff, w.vector);
        if (p < 0) return false;
        if (mode == OrderIntegrality::strict && !is_integer(p)) return false;
    }
    for (const auto& chi : rd.group_char_basis())
        if (dot(diff, chi) != 0) return false;
    return true;
}

bool satisfies_star(const ParabolicData& pd, const NumericalType& sigma,
                    const Int& n) {
    if (!pd.accepts(sigma))
        throw dimension_mismatch("type does not belong to this parabolic");
    for (const auto& g : star_generators(pd))
        if (-dot(sigma.values, g.chi_coords) < n) return false;
    return true;
}

namespace {

void enumerate_box(const std::vector<std::pair<Int, Int>>& box,
                   const std::function<void(const IVec&)>& visit) {
    IVec cur(box.size());
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == box.size()) {
            visit(cur);
            return;
        }
        for (Int v = box[pos].first; v <= box[pos].second; ++v) {
            cur[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
}

void sort_types(std::vector<NumericalType>& out, const ParabolicData& pd) {
    std::sort(out.begin(), out.end(),
              [&](const NumericalType& a, const NumericalType& b) {
                  const Int da = degree_functional(pd, a);
                  const Int db = degree_functional(pd, b);
                  if (da != db) return da < db;
                  return a.values < b.values;
              });
}

} // namespace

std::vector<NumericalType> enumerate_types(const ParabolicData& pd,
                                           const TopologicalType& c,
                                           const Int& d_min,
                                           const Int& d_max) {
    const RootDatum& rd = pd.rd;
    std::vector<NumericalType> out;
    if (d_max < d_min) return out;
    if (c.lift.size() != rd.ambient_dim())
        throw dimension_mismatch("topological class has wrong ambient rank");

    // the slice is bounded only because -chi_P has strictly positive
    // coefficients on every w_beta outside I
    for (const auto& g : pd.dominant_generators)
        if (pd.weight_coeffs[g.beta] <= 0)
            throw unbounded_polytope("coefficient of w_" +
                                     std::to_string(g.beta) +
                                     " in -chi_P is not positive");

    if (pd.I.empty()) {
        // Borel: enumerate cocharacters mu = lift + sum k_beta coroot_beta
        const std::size_t r = rd.rank_ss();
        const IVec& base = c.lift;
        const Int d_base = dot(base, pd.chi_P);
        std::vector<std::pair<Int, Int>> box(r);
        // k_beta <= floor(-<base, w_beta>) keeps sigma(w_beta) <= 0
        IVec hi(r);
        for (std::size_t b = 0; b < r; ++b)
            hi[b] = floor_rat(-dotq(base, rd.fundamental_weights()[b].vector));
        // sum of c'_beta k_beta must land in [d_base - d_max, d_base - d_min]
        const Int s_lo = d_base - d_max;
        for (std::size_t b = 0; b < r; ++b) {
            Int rest = 0;
            for (std::size_t b2 = 0; b2 < r; ++b2)
                if (b2 != b) rest += pd.weight_coeffs[b2] * hi[b2];
            box[b] = {ceil_rat(Rat(s_lo - rest) / Rat(pd.weight_coeffs[b])),
                      hi[b]};
            if (box[b].first > box[b].second) return out;
        }
        enumerate_box(box, [&](const IVec& k) {
            Int s = 0;
            for (std::size_t b = 0; b < r; ++b)
                s += pd.weight_coeffs[b] * k[b];
            const Int d = d_base - s;
            if (d < d_min || d > d_max) return;
            IVec mu = base;
            for (std::size_t b = 0; b < r; ++b)
                mu = mu + k[b] * rd.simple_coroot(b);
            out.push_back(restrict_cocharacter(pd, mu));
        });
        sort_types(out, pd);
        return out;
    }

    // general parabolic: fix the X*(G) component from c, enumerate the
    // generator values v_beta <= 0, and keep tuples with an integral type
    IVec gvals;
    for (const auto& chi : rd.group_char_basis())
        gvals.push_back(dot(c.lift, chi));

    const std::size_t m = pd.char_lattice_basis.size();
    const std::size_t ngen = pd.dominant_generators.size();
    if (ngen == 0) {
        // P = G: the type is determined by the X*(G) values; d = 0
        if (d_min <= 0 && 0 <= d_max) {
            QMat sys;
            for (const auto& row : pd.group_char_coords)
                sys.push_back(to_rational(row));
            if (m == 0) {
                out.push_back(NumericalType{{}, pd.I});
            } else {
                auto x = solve_rational(sys, to_rational(gvals));
                NumericalType t;
                t.I = pd.I;
                bool ok = true;
                for (const auto& xi : x) {
                    if (!is_integer(xi)) ok = false;
                    t.values.push_back(xi.get_num());
                }
                if (ok) out.push_back(std::move(t));
            }
        }
        return out;
    }

    std::vector<std::pair<Int, Int>> box(ngen);
    for (std::size_t gi = 0; gi < ngen; ++gi) {
        const auto& g = pd.dominant_generators[gi];
        if (d_max < 0) return out;  // degrees are >= 0 on the antidominant cone
        // (c'_beta / n_beta) * (-v_beta) <= d_max
        const Int bound =
            floor_rat(Rat(d_max) * Rat(g.n_beta) /
                      Rat(pd.weight_coeffs[g.beta]));
        box[gi] = {-bound, Int(0)};
    }
    QMat sys;
    for (const auto& g : pd.dominant_generators)
        sys.push_back(to_rational(g.basis_coords));
    for (const auto& row : pd.group_char_coords)
        sys.push_back(to_rational(row));
    enumerate_box(box, [&](const IVec& v) {
        QVec rhs;
        for (const auto& vb : v) rhs.emplace_back(vb);
        for (const auto& gv : gvals) rhs.emplace_back(gv);
        auto x = try_solve_rational(sys, rhs);
        if (!x) return;
        NumericalType t;
        t.I = pd.I;
        for (const auto& xi : *x) {
            if (!is_integer(xi)) return;
            t.values.push_back(xi.get_num());
        }
        const Int d = degree_functional(pd, t);
        if (d < d_min || d > d_max) return;
        out.push_back(std::move(t));
    });
    sort_types(out, pd);
    return out;
}

std::vector<IVec> coroot_chain(const RootDatum& rd, const IVec& nu,
                               const IVec& mu, long genus) {
    if (!cocharacter_leq(rd, nu, mu))
        throw not_comparable("nu is not <= mu in the dominance order");
    for (std::size_t a = 0; a < rd.rank_ss(); ++a)
        if (dot(nu, rd.simple_root(a)) < 2 * genus)
            throw hypothesis_failed("<nu, alpha_" + std::to_string(a) +
                                    "> < 2g");
    auto k = solve_integer(transpose(rd.simple_coroots()), mu - nu);
    if (!k)
        throw not_comparable(
            "mu - nu is not an integral combination of simple coroots");
    for (const auto& x : *k)
        if (x < 0) throw not_comparable("mu - nu has a negative coefficient");

    // downward induction: repeatedly strip a simple coroot that pairs
    // positively with the remaining difference; smallest index first
    IVec cur = *k;
    std::vector<std::size_t> steps;
    while (!is_zero(cur)) {
        IVec s = zero_vec(rd.ambient_dim());
        for (std::size_t b = 0; b < rd.rank_ss(); ++b)
            s = s + cur[b] * rd.simple_coroot(b);
        std::size_t pick = rd.rank_ss();
        for (std::size_t b = 0; b < rd.rank_ss(); ++b) {
            if (cur[b] > 0 && dot(s, rd.simple_root(b)) > 0) {
                pick = b;
                break;
            }
        }
        if (pick == rd.rank_ss())
            throw internal_error("no strippable coroot; difference " +
                                 to_string(cur));
        steps.push_back(pick);
        cur[pick] -= 1;
    }
    std::reverse(steps.begin(), steps.end());
    std::vector<IVec> chain{nu};
    for (const auto j : steps) {
        const IVec& prev = chain.back();
        if (dot(prev, rd.simple_root(j)) < 2 * genus - 1)
            throw internal_error("step pairing fell below 2g-1");
        chain.push_back(prev + rd.simple_coroot(j));
    }
    if (chain.back() != mu) throw internal_error("chain did not reach mu");
    return chain;
}

IVec common_upper_bound(const RootDatum& rd, const IVec& mu1, const IVec& mu2,
                        long genus) {
    if (topological_type(rd, mu1) != topological_type(rd, mu2))
        throw class_mismatch("mu1 and mu2 are not in the same class");
    auto delta = solve_integer(transpose(rd.simple_coroots()), mu1 - mu2);
    if (!delta)
        throw class_mismatch("difference is not in the coroot lattice");
    const std::size_t r = rd.rank_ss();
    IVec tmin(r, Int(0));
    for (std::size_t b = 0; b < r; ++b)
        if ((*delta)[b] < 0) tmin[b] = -(*delta)[b];

    auto admissible = [&](const IVec& t) -> std::optional<IVec> {
        IVec mu = mu1;
        for (std::size_t b = 0; b < r; ++b)
            mu = mu + t[b] * rd.simple_coroot(b);
        for (const auto& gamma : rd.positive_roots())
            if (dot(mu, rd.root_ambient(gamma)) <= 2 * genus - 1)
                return std::nullopt;
        return mu;
    };

    for (long total = 0; total <= 100000; ++total) {
        // lexicographically smallest excess first
        IVec excess(r, Int(0));
        std::optional<IVec> found;
        std::function<bool(std::size_t, long)> rec = [&](std::size_t pos,
                                                         long rest) -> bool {
            if (pos + 1 == r || r == 0) {
                if (r > 0) excess[pos] = rest;
                IVec t = tmin;
                for (std::size_t b = 0; b < r; ++b) t[b] += excess[b];
                found = admissible(t);
                return found.has_value();
            }
            for (long v = 0; v <= rest; ++v) {
                excess[pos] = v;
                if (rec(pos + 1, rest - v)) return true;
            }
            return false;
        };
        if (r == 0) {
            if (auto mu = admissible({})) return *mu;
            throw internal_error("no upper bound for rank-0 datum");
        }
        if (rec(0, total)) return *found;
    }
    throw internal_error("common upper bound search exceeded its cap");
}

} // namespace parred
