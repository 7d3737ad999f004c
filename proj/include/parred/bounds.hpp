#pragma once

#include "parred/numtype.hpp"

namespace parred {

// Every verdict is a report carrying the exact numbers that went into it.
struct BoundReport {
    NumericalType sigma;
    NumericalType gamma;      // the chosen minimal type
    Int upper_bound;          // dim(G/P) + d(sigma) - d(gamma)
    Int expected_dim;         // d(sigma) + (1-g) dim(G/P)
    Int minimal_cap;          // g * dim(G/P)
    long genus = 0;
    Int d_sigma;
    Int d_gamma;
    Int dim_g_mod_p;
};

// Dimension bound for a component containing a section of type sigma, given
// the numerically minimal types. Picks the dominating minimal type with the
// largest degree (tightest bound), lexicographic tie-break.
BoundReport hilbert_bound(const ParabolicData& pd, const NumericalType& sigma,
                          const std::vector<NumericalType>& minimal_types,
                          long genus);

// Increment d(sigma) - d(tau) - 1 by which the space of type sigma dominates
// the space of type tau, for sigma <= tau.
Int lower_bound_chain(const ParabolicData& pd, const NumericalType& sigma,
                      const NumericalType& tau);

struct StabilityVerdict {
    Int expected_dim;
    Int observed_dim;
    bool dims_match = false;
    Int d_value;
    Int lower_threshold;      // (g-1) dim(G/P)
    bool lower_bound_ok = false;
    bool genus_warning = false;  // the criterion assumes genus >= 2
    long genus = 0;
};

StabilityVerdict generic_stability_check(const ParabolicData& pd,
                                         const NumericalType& sigma,
                                         long genus, const Int& observed_dim);

struct StarConstants {
    std::vector<std::size_t> I;
    std::vector<StarGenerator> generators;  // n_beta, n_{beta,alpha} tables
    Int m_I;  // max over beta of sum |n_{beta,alpha}|
    Int n_I;  // max over beta of n_beta (1 when there is no beta)
    Int N_B;
    Int M_D;
    Int N_P;  // n_I * N_B + m_I * M_D
};

// Effective threshold for parabolic reductions from the Borel threshold N_B
// and the reduction-height input M_D, both supplied by the caller.
StarConstants star_constants(const RootDatum& rd, const ParabolicData& pd,
                             const Int& n_b, const Int& m_d);

// <sigma_B, -2rho> + (1-g) |Phi+|.
Int borel_expected_dim(const RootDatum& rd, const IVec& sigma_b, long genus);

} // namespace parred
