#pragma once

#include <utility>
#include <vector>

#include "parred/root_datum.hpp"

namespace parred {

// Integer functional on X*(P), stored as its values on the Hermite basis of
// the character lattice. For P = B this is canonically a cocharacter of T.
// The subset I is carried along so that operations can reject mixes of
// different parabolics.
struct NumericalType {
    IVec values;
    std::vector<std::size_t> I;

    bool operator==(const NumericalType& o) const {
        return I == o.I && values == o.values;
    }
    bool operator<(const NumericalType& o) const {
        if (I != o.I) return I < o.I;
        return values < o.values;
    }
};

// All lattice data attached to the standard parabolic P_I.
struct ParabolicData {
    RootDatum rd;
    std::vector<std::size_t> I;  // sorted simple-root indices (0-based)
    std::vector<Root> levi_positive_roots;
    std::size_t dim_G_mod_P = 0;
    IVec chi_P;                // determinant character of P on g/p, ambient
    IMat char_lattice_basis;   // HNF basis of X*(P) inside X*(T)
    std::size_t cochar_rank = 0;

    // generators of the dominant cone of X*(P): minimal integral multiples
    // n_beta * w_beta for beta outside I
    struct DominantGenerator {
        std::size_t beta = 0;
        Int n_beta;
        IVec ambient;
        IVec basis_coords;
    };
    std::vector<DominantGenerator> dominant_generators;

    IVec chi_coords;          // chi_P in char_lattice_basis coordinates
    IMat group_char_coords;   // X*(G) basis rows in basis coordinates
    IVec weight_coeffs;       // <beta^, -chi_P> for every simple beta

    bool accepts(const NumericalType& t) const {
        return t.I == I && t.values.size() == char_lattice_basis.size();
    }
};

ParabolicData build_parabolic(const RootDatum& rd,
                              std::vector<std::size_t> I);

// [sigma](chi_P), the degree of the normal bundle of a section of type sigma.
Int degree_functional(const ParabolicData& pd, const NumericalType& sigma);

// The image of a cocharacter of T under X_*(T) = X_*(B) -> X_*(P).
NumericalType restrict_cocharacter(const ParabolicData& pd, const IVec& mu);

// Unique rational decomposition of a character of P1 (P1 inside P) into a
// character of P plus a character of the parabolic image of P1 in the
// adjoint Levi quotient of P. Returns the two ambient rational summands.
std::pair<QVec, QVec> decompose_parabolic_character(const RootDatum& rd,
                                                    const ParabolicData& pd_p,
                                                    const ParabolicData& pd_p1,
                                                    const IVec& chi);

// Root datum of the Levi quotient L/Z0(L).
RootDatum levi_induced_root_datum(const RootDatum& rd,
                                  const ParabolicData& pd);

} // namespace parred
