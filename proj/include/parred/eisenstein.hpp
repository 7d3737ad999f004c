#pragma once

#include <map>

#include "parred/laurent.hpp"
#include "parred/numtype.hpp"

namespace parred {

// Base-curve data for the series machinery. Only genus 0 has a full desk
// pipeline; for genus >= 1 the Frobenius eigenvalues are exact user-supplied
// stand-ins for synthetic tests.
struct CurveData {
    Int q;
    long genus = 0;
    QVec frobenius;  // 2*genus entries

    void validate() const {
        if (q < 2) throw config_error("q must be at least 2");
        if (genus < 0) throw config_error("genus must be non-negative");
        if (frobenius.size() != static_cast<std::size_t>(2 * genus))
            throw config_error("need exactly 2g Frobenius eigenvalues");
    }
};

// Variable labels tau1..taur attached to the simple roots.
std::vector<std::string> tau_variables(const RootDatum& rd);

// Exponent vector nu with gamma = sum nu_alpha w_alpha, computed as
// nu_alpha = <coroot_alpha, gamma> and verified exact.
ExpVec tau_gamma(const RootDatum& rd, const Root& gamma);

// Product over positive roots of
//   (1 - q tau^nu(gamma)) * prod_i (1 - w_i q^-1 tau^nu(gamma)),
// expanded exactly; throws window_overflow when the support leaves the
// window.
LaurentSeries denominator_Q(const RootDatum& rd, const CurveData& curve,
                            const WindowBounds& window);

struct AssembledSeries {
    LaurentSeries series;
    std::vector<IVec> skipped;  // types whose exponent fell outside the window
};

// Normalized section-count series. Counts are keyed by Borel types given as
// cocharacters of T; for each type the coroot coordinates d of
// sigma0 - sigma give the term count * q^(-sum d) * tau^(C d) with C the
// Cartan matrix (so a step by the coroot of a simple root beta shifts the
// exponent by the tau_gamma vector of beta).
AssembledSeries assemble_series(const RootDatum& rd,
                                const std::map<IVec, Int>& counts,
                                const IVec& sigma0, const CurveData& curve,
                                const WindowBounds& window);

struct RationalityReport {
    WindowBounds safe_region;  // where E*Q is free of truncation artifacts
    std::vector<std::pair<ExpVec, Rat>> support;     // nonzero P coefficients
    std::vector<std::pair<ExpVec, Rat>> violations;  // support outside [-N0,N1]
    bool pass = false;
};

// Multiplies E by the candidate denominator and reports every nonzero
// coefficient in the safe region whose exponent leaves [-N0, N1]^vars.
RationalityReport rationality_check(const LaurentSeries& e,
                                    const LaurentSeries& q_poly, long n0,
                                    long n1);

struct AsymptoticItem {
    IVec cochar;
    Int count;
    Int d;
    long exponent = 0;  // d + (1-g) dim(G/B)
    Rat main_term;      // q^exponent
    bool covered = false;  // satisfies (*) for the requested N
    bool pass = false;
};

struct AsymptoticReport {
    std::vector<AsymptoticItem> items;
    bool pass = false;  // every covered item passes
};

// Exact check of |count - q^e| <= C q^(e - 1/2), squared to avoid q^(1/2):
// (count - q^e)^2 * q <= C^2 q^(2e).
AsymptoticReport asymptotic_check(const std::map<IVec, Int>& counts,
                                  const ParabolicData& pd_b, long genus,
                                  const Int& q, const Rat& c_const,
                                  const Int& n_star);

} // namespace parred
