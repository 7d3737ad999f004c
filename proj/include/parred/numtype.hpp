#pragma once

#include <vector>

#include "parred/parabolic.hpp"

namespace parred {

// Class of a cocharacter in X_*(T) / Q^ (coroot lattice), canonically
// represented through the Smith form of the coroot inclusion: torsion
// residues followed by the free coordinates, plus an integral lift.
struct TopologicalType {
    IVec invariant_factors;
    IVec residues;  // length = ambient dim; first torsion_rank entries reduced
    IVec lift;      // canonical representative cocharacter
    std::size_t torsion_rank = 0;

    bool operator==(const TopologicalType& o) const {
        return invariant_factors == o.invariant_factors &&
               residues == o.residues;
    }
    bool operator!=(const TopologicalType& o) const { return !(*this == o); }

    Int torsion_order() const {
        Int p = 1;
        for (const auto& d : invariant_factors) p *= d;
        return p;
    }
    std::size_t free_rank() const { return residues.size() - torsion_rank; }
};

TopologicalType topological_type(const RootDatum& rd, const IVec& mu);

// Generators chi_beta of the monoid of characters of P restricting to
// non-negative combinations of simple roots:
// chi_beta = n_beta * beta + sum over alpha in I of n_{beta,alpha} * alpha,
// with n_beta minimal positive.
struct StarGenerator {
    std::size_t beta = 0;
    Int n_beta;
    IVec n_beta_alpha;  // indexed like pd.I
    IVec chi_ambient;
    IVec chi_coords;    // in pd.char_lattice_basis coordinates
};

std::vector<StarGenerator> star_generators(const ParabolicData& pd);

// Dominance order on numerical types of one parabolic: tau - sigma must be
// >= 0 on every dominant-cone generator of X*(P) and 0 on X*(G).
bool leq(const ParabolicData& pd, const NumericalType& sigma,
         const NumericalType& tau);

// Pairings with rational fundamental weights may be non-integral; the order
// as written demands non-negative integers, with a relaxation to
// non-negative rationals.
enum class OrderIntegrality { strict, rational };

bool cocharacter_leq(const RootDatum& rd, const IVec& nu, const IVec& mu,
                     OrderIntegrality mode = OrderIntegrality::strict);

// Property (*) for N: -[sigma](chi) >= N on every generator chi_beta.
bool satisfies_star(const ParabolicData& pd, const NumericalType& sigma,
                    const Int& n);

// All numerical types with antidominant generator values (sigma(g_beta) <= 0
// for every beta outside I), degree in [d_min, d_max], and the topological /
// X*(G) constraint fixed by c. Sorted by degree, then lexicographically.
std::vector<NumericalType> enumerate_types(const ParabolicData& pd,
                                           const TopologicalType& c,
                                           const Int& d_min, const Int& d_max);

// A sequence nu = mu_1, ..., mu_n = mu with mu_{i+1} = mu_i + coroot of a
// simple root and <mu_i, alpha_{j_i}> >= 2g-1 at every step.
std::vector<IVec> coroot_chain(const RootDatum& rd, const IVec& nu,
                               const IVec& mu, long genus);

// A cocharacter mu with mu1 <= mu, mu2 <= mu and <mu, gamma> > 2g-1 for
// every positive root gamma; smallest total coroot-coefficient sum, then
// lexicographically smallest.
IVec common_upper_bound(const RootDatum& rd, const IVec& mu1, const IVec& mu2,
                        long genus);

} // namespace parred
