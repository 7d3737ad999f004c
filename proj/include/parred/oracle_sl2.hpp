#pragma once

#include <iosfwd>
#include <vector>

#include "parred/numeric.hpp"

namespace parred {

// Arithmetic in F_q for the small fixed field set q in {2,3,4,5,7,8,9}.
// Elements are indices 0..q-1; prime-power fields use precomputed tables
// built from hardcoded Conway polynomials.
class GF {
public:
    explicit GF(long q);

    long q() const { return q_; }
    long add(long a, long b) const { return add_[a * q_ + b]; }
    long sub(long a, long b) const { return add(a, neg(b)); }
    long mul(long a, long b) const { return mul_[a * q_ + b]; }
    long neg(long a) const { return neg_[a]; }
    long inv(long a) const;

    static bool supported(long q);

private:
    long q_ = 0;
    std::vector<long> add_, mul_, neg_, inv_;
};

// Count of degree-n morphisms P^1 -> P^1 over F_q: coprime pairs of degree-n
// binary forms modulo simultaneous scalars. This is the number of
// B-reductions of the trivial SL2-bundle over P^1 with numerical type
// -n * coroot.
struct SectionCount {
    long q = 0;
    long n = 0;
    Int count;
    Int raw_pairs;       // (q-1) * count
    Int d;               // 2n
    IVec numerical_type; // (-n) in the coroot coordinate of SL2
};

SectionCount count_sections(long q, long n, unsigned jobs = 1);

std::vector<SectionCount> count_table(const std::vector<long>& q_list,
                                      long n_max, unsigned jobs = 1);

void write_counts_tsv(std::ostream& os, const std::vector<SectionCount>& t);
std::vector<SectionCount> read_counts_tsv(std::istream& is);

// For the split bundle O + O(-m) on P^1 over F_q, exhibits a sub-line-bundle
// of degree -(m+2): a section of O(m+1) not vanishing at the chosen point,
// coprime to the canonical degree-1 form vanishing there. Returns true when
// one is found by exhaustive search.
bool gap_shift_check(long q, long m);

} // namespace parred
