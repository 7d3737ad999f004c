#include "parred/eisenstein.hpp"

namespace parred {

std::vector<std::string> tau_variables(const RootDatum& rd) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < rd.rank_ss(); ++i)
        v.push_back("tau" + std::to_string(i + 1));
    return v;
}

ExpVec tau_gamma(const RootDatum& rd, const Root& gamma) {
    if (!gamma.positive) throw not_a_root("tau_gamma expects a positive root");
    const IVec ambient = rd.root_ambient(gamma);  // throws on bad coeffs
    rd.coroot(gamma);                             // membership check
    ExpVec nu(rd.rank_ss());
    for (std::size_t a = 0; a < rd.rank_ss(); ++a)
        nu[a] = to_long(dot(rd.simple_coroot(a), ambient));
    // verify gamma = sum nu_alpha w_alpha exactly
    QVec recon(rd.ambient_dim(), Rat(0));
    for (std::size_t a = 0; a < rd.rank_ss(); ++a)
        for (std::size_t k = 0; k < rd.ambient_dim(); ++k)
            recon[k] += Rat(nu[a]) * rd.fundamental_weights()[a].vector[k];
    for (std::size_t k = 0; k < rd.ambient_dim(); ++k)
        if (recon[k] != Rat(ambient[k]))
            throw non_integral_expansion(
                "root does not expand integrally in the fundamental weights");
    return nu;
}

namespace {

// sparse exact polynomial product, no truncation
std::map<ExpVec, Rat> poly_mul(const std::map<ExpVec, Rat>& a,
                               const std::map<ExpVec, Rat>& b) {
    std::map<ExpVec, Rat> r;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) {
            ExpVec e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            auto it = r.find(e);
            if (it == r.end()) {
                r.emplace(e, c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.erase(it);
            }
        }
    return r;
}

} // namespace

LaurentSeries denominator_Q(const RootDatum& rd, const CurveData& curve,
                            const WindowBounds& window) {
    curve.validate();
    const std::size_t r = rd.rank_ss();
    std::map<ExpVec, Rat> q_poly{{ExpVec(r, 0), Rat(1)}};
    for (const auto& gamma : rd.positive_roots()) {
        const ExpVec nu = tau_gamma(rd, gamma);
        {
            std::map<ExpVec, Rat> factor{{ExpVec(r, 0), Rat(1)}};
            factor[nu] = -Rat(curve.q);
            q_poly = poly_mul(q_poly, factor);
        }
        for (const auto& w : curve.frobenius) {
            std::map<ExpVec, Rat> factor{{ExpVec(r, 0), Rat(1)}};
            Rat c = -w / Rat(curve.q);
            auto it = factor.find(nu);
            if (it == factor.end())
                factor.emplace(nu, c);
            else {
                it->second += c;
                if (it->second == 0) factor.erase(it);
            }
            q_poly = poly_mul(q_poly, factor);
        }
    }
    LaurentSeries out(tau_variables(rd), window);
    for (const auto& [e, c] : q_poly) {
        if (!out.in_window(e))
            throw window_overflow(
                "denominator support exceeds the configured window");
        out.add_term(e, c);
    }
    return out;
}

AssembledSeries assemble_series(const RootDatum& rd,
                                const std::map<IVec, Int>& counts,
                                const IVec& sigma0, const CurveData& curve,
                                const WindowBounds& window) {
    curve.validate();
    const std::size_t r = rd.rank_ss();
    AssembledSeries out{LaurentSeries(tau_variables(rd), window), {}};
    for (const auto& [sigma, count] : counts) {
        if (sigma.size() != rd.ambient_dim())
            throw dimension_mismatch("type cocharacter dimension");
        auto d = solve_integer(transpose(rd.simple_coroots()), sigma0 - sigma);
        if (!d)
            throw non_integral_exponent(
                "type " + to_string(sigma) +
                " is not in the topological class of sigma0");
        IVec e_int = zero_vec(r);
        Int dsum = 0;
        for (std::size_t b = 0; b < r; ++b) {
            dsum += (*d)[b];
            for (std::size_t a = 0; a < r; ++a)
                e_int[a] += (*d)[b] * rd.cartan()[a][b];
        }
        ExpVec e(r, 0);
        for (std::size_t a = 0; a < r; ++a) e[a] = to_long(e_int[a]);
        if (!out.series.in_window(e)) {
            out.skipped.push_back(sigma);
            continue;
        }
        out.series.add_term(e, Rat(count) * rat_pow(Rat(curve.q),
                                                    -to_long(dsum)));
    }
    return out;
}

RationalityReport rationality_check(const LaurentSeries& e,
                                    const LaurentSeries& q_poly, long n0,
                                    long n1) {
    if (e.vars() != q_poly.vars())
        throw dimension_mismatch("series variable mismatch");
    const auto qbox = q_poly.support_box();
    if (!qbox) throw window_too_small("denominator is identically zero");
    RationalityReport rep;
    rep.safe_region.resize(e.nvars());
    for (std::size_t i = 0; i < e.nvars(); ++i) {
        rep.safe_region[i] = {e.window()[i].first + (*qbox)[i].second,
                              e.window()[i].second + (*qbox)[i].first};
        if (rep.safe_region[i].first > rep.safe_region[i].second)
            throw window_too_small("safe region is empty; widen the window");
    }
    // walk the safe box and compute each product coefficient exactly
    ExpVec cur(e.nvars());
    for (std::size_t i = 0; i < e.nvars(); ++i)
        cur[i] = rep.safe_region[i].first;
    while (true) {
        Rat coeff = 0;
        for (const auto& [f, cf] : q_poly.terms()) {
            ExpVec g(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i) g[i] = cur[i] - f[i];
            coeff += cf * e.coeff(g);
        }
        if (coeff != 0) {
            rep.support.emplace_back(cur, coeff);
            bool inside = true;
            for (const auto x : cur)
                if (x < -n0 || x > n1) inside = false;
            if (!inside) rep.violations.emplace_back(cur, coeff);
        }
        // advance
        std::size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (cur[i] < rep.safe_region[i].second) {
                ++cur[i];
                for (std::size_t j = 0; j < i; ++j)
                    cur[j] = rep.safe_region[j].first;
                break;
            }
        }
        if (i == cur.size()) break;
    }
    rep.pass = rep.violations.empty();
    return rep;
}

AsymptoticReport asymptotic_check(const std::map<IVec, Int>& counts,
                                  const ParabolicData& pd_b, long genus,
                                  const Int& q, const Rat& c_const,
                                  const Int& n_star) {
    if (!pd_b.I.empty())
        throw mixed_parabolics("asymptotic check expects the Borel parabolic");
    AsymptoticReport rep;
    rep.pass = true;
    const long dim = static_cast<long>(pd_b.dim_G_mod_P);
    for (const auto& [sigma, count] : counts) {
        AsymptoticItem item;
        item.cochar = sigma;
        item.count = count;
        const NumericalType t = restrict_cocharacter(pd_b, sigma);
        item.d = degree_functional(pd_b, t);
        item.exponent = to_long(item.d) + (1 - genus) * dim;
        item.main_term = rat_pow(Rat(q), item.exponent);
        item.covered = satisfies_star(pd_b, t, n_star);
        const Rat rem = Rat(count) - item.main_term;
        item.pass = rem * rem * Rat(q) <=
                    c_const * c_const * item.main_term * item.main_term;
        if (item.covered && !item.pass) rep.pass = false;
        rep.items.push_back(std::move(item));
    }
    return rep;
}

} // namespace parred
