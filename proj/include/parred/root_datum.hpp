#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parred/lattice.hpp"
#include "parred/numeric.hpp"

namespace parred {

// A root expressed in the simple-root basis. Positive roots have all
// coefficients >= 0; the negative root -gamma is stored with the same
// coefficients and positive = false.
struct Root {
    IVec coeffs;
    bool positive = true;

    Int height() const {
        Int h = 0;
        for (const auto& c : coeffs) h += c;
        return h;
    }
    bool operator==(const Root& o) const {
        return positive == o.positive && coeffs == o.coeffs;
    }
};

struct FundamentalWeight {
    std::size_t alpha_index = 0;
    QVec vector;  // ambient rational coordinates in X*(T) (x) Q
};

// Root datum of a connected reductive group: character and cocharacter
// lattices realized as Z^N with N = rank_ss + rank_torus, the pairing being
// the standard dot product, and simple (co)roots embedded as integer
// vectors with pairing(coroot_i, root_j) = cartan[i][j].
class RootDatum {
public:
    RootDatum() : RootDatum(IMat{}, IMat{}, IMat{}, 0, "trivial") {}
    RootDatum(IMat cartan, IMat simple_roots, IMat simple_coroots,
              std::size_t rank_torus, std::string name = "");

    std::size_t rank_ss() const { return rank_ss_; }
    std::size_t rank_torus() const { return rank_torus_; }
    std::size_t ambient_dim() const { return rank_ss_ + rank_torus_; }
    const std::string& name() const { return name_; }

    const IMat& cartan() const { return cartan_; }
    const IVec& simple_root(std::size_t i) const { return simple_roots_[i]; }
    const IVec& simple_coroot(std::size_t i) const {
        return simple_coroots_[i];
    }
    const IMat& simple_roots() const { return simple_roots_; }
    const IMat& simple_coroots() const { return simple_coroots_; }

    // <mu, chi> for a cocharacter mu and character chi
    Int pairing(const IVec& mu, const IVec& chi) const { return dot(mu, chi); }

    // positive roots, sorted by height then lexicographic coefficients
    const std::vector<Root>& positive_roots() const { return pos_roots_; }

    IVec root_ambient(const Root& gamma) const;

    // the coroot of a root, as an ambient cocharacter vector
    IVec coroot(const Root& gamma) const;

    const std::vector<FundamentalWeight>& fundamental_weights() const {
        return weights_;
    }

    // w0 as a cocharacter-lattice operator
    IVec longest_weyl_action(const IVec& mu) const;
    const std::vector<std::size_t>& w0_word() const { return w0_word_; }

    // HNF basis of X*(G) = characters vanishing on every coroot
    const IMat& group_char_basis() const { return group_chars_; }

    // Smith form of the coroot-lattice inclusion, for X_*(T)/Q^ classes
    const SmithForm& coroot_smith() const { return coroot_smith_; }

    // sum over positive roots (= -chi_B), ambient character vector
    const IVec& two_rho() const { return two_rho_; }
    // sum over positive coroots, a regular dominant cocharacter
    const IVec& two_rho_check() const { return two_rho_check_; }

    // simple reflection s_i acting on cocharacters / characters
    IVec reflect_cochar(std::size_t i, IVec mu) const;
    IVec reflect_char(std::size_t i, IVec chi) const;

private:
    std::size_t rank_ss_ = 0;
    std::size_t rank_torus_ = 0;
    std::string name_;
    IMat cartan_;
    IMat simple_roots_;   // rows = ambient vectors
    IMat simple_coroots_;
    std::vector<Root> pos_roots_;
    IMat pos_coroots_;  // ambient coroot per positive root, same order
    std::vector<FundamentalWeight> weights_;
    std::vector<std::size_t> w0_word_;
    IMat group_chars_;
    SmithForm coroot_smith_;
    IVec two_rho_;
    IVec two_rho_check_;

    void generate_roots();
    void compute_weights();
    void compute_w0();
};

// Rejects matrices that are not generalized Cartan matrices of finite type.
void validate_finite_type(const IMat& cartan);

// Presets: A_n B_n C_n D_n G_2 F_4 E_6 E_7 E_8 (simply connected),
// SL_n, PGL_n, GL_n. Written without underscores: "A2", "SL3", "PGL2", ...
RootDatum build_root_datum_preset(const std::string& preset);

// Custom Cartan matrix; isogeny "sc" (default) or "ad". A preset name, when
// supplied, overrides the Cartan matrix and fixes the lattice embeddings.
RootDatum build_root_datum(const IMat& cartan, std::size_t rank_torus,
                           const std::string& isogeny = "sc",
                           const std::optional<std::string>& preset =
                               std::nullopt);

// Operation-style wrappers.
inline const std::vector<Root>& positive_roots(const RootDatum& rd) {
    return rd.positive_roots();
}
inline IVec coroot_of(const RootDatum& rd, const Root& gamma) {
    return rd.coroot(gamma);
}
inline const std::vector<FundamentalWeight>& fundamental_weights(
    const RootDatum& rd) {
    return rd.fundamental_weights();
}
inline IVec longest_weyl_action(const RootDatum& rd, const IVec& mu) {
    return rd.longest_weyl_action(mu);
}

} // namespace parred
