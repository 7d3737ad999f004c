#include "parred/bounds.hpp"

namespace parred {

BoundReport hilbert_bound(const ParabolicData& pd, const NumericalType& sigma,
                          const std::vector<NumericalType>& minimal_types,
                          long genus) {
    if (minimal_types.empty())
        throw no_dominating_minimal_type("minimal type list is empty");
    const Int dim(pd.dim_G_mod_P);
    const Int cap = Int(genus) * dim;
    for (const auto& g : minimal_types)
        if (degree_functional(pd, g) > cap)
            throw cap_violated("minimal type " + to_string(g.values) +
                               " has d > g*dim(G/P) = " + to_string(cap));
    const NumericalType* best = nullptr;
    Int best_d;
    for (const auto& g : minimal_types) {
        if (!leq(pd, sigma, g)) continue;
        const Int d = degree_functional(pd, g);
        if (!best || d > best_d || (d == best_d && g.values < best->values)) {
            best = &g;
            best_d = d;
        }
    }
    if (!best)
        throw no_dominating_minimal_type(
            "no minimal type dominates sigma = " + to_string(sigma.values));
    BoundReport rep;
    rep.sigma = sigma;
    rep.gamma = *best;
    rep.genus = genus;
    rep.d_sigma = degree_functional(pd, sigma);
    rep.d_gamma = best_d;
    rep.dim_g_mod_p = dim;
    rep.minimal_cap = cap;
    rep.upper_bound = dim + rep.d_sigma - rep.d_gamma;
    rep.expected_dim = rep.d_sigma + Int(1 - genus) * dim;
    return rep;
}

Int lower_bound_chain(const ParabolicData& pd, const NumericalType& sigma,
                      const NumericalType& tau) {
    if (!leq(pd, sigma, tau))
        throw not_comparable("sigma is not <= tau");
    return degree_functional(pd, sigma) - degree_functional(pd, tau) - 1;
}

StabilityVerdict generic_stability_check(const ParabolicData& pd,
                                         const NumericalType& sigma,
                                         long genus, const Int& observed_dim) {
    StabilityVerdict v;
    v.genus = genus;
    v.genus_warning = genus < 2;
    const Int dim(pd.dim_G_mod_P);
    v.d_value = degree_functional(pd, sigma);
    v.expected_dim = v.d_value + Int(1 - genus) * dim;
    v.observed_dim = observed_dim;
    v.dims_match = observed_dim == v.expected_dim;
    v.lower_threshold = Int(genus - 1) * dim;
    v.lower_bound_ok = v.d_value >= v.lower_threshold;
    return v;
}

StarConstants star_constants(const RootDatum& rd, const ParabolicData& pd,
                             const Int& n_b, const Int& m_d) {
    (void)rd;
    if (n_b <= 0 || m_d <= 0)
        throw error("N_B and M_D must be positive");
    StarConstants sc;
    sc.I = pd.I;
    sc.N_B = n_b;
    sc.M_D = m_d;
    sc.generators = star_generators(pd);
    sc.m_I = 0;
    sc.n_I = 1;
    for (const auto& g : sc.generators) {
        Int sum = 0;
        for (const auto& c : g.n_beta_alpha) sum += abs(c);
        if (sum > sc.m_I) sc.m_I = sum;
        if (g.n_beta > sc.n_I) sc.n_I = g.n_beta;
    }
    sc.N_P = sc.n_I * sc.N_B + sc.m_I * sc.M_D;
    return sc;
}

Int borel_expected_dim(const RootDatum& rd, const IVec& sigma_b, long genus) {
    const Int d = -dot(sigma_b, rd.two_rho());
    return d + Int(1 - genus) * Int(rd.positive_roots().size());
}

} // namespace parred
