#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "parred/errors.hpp"

namespace parred {

// All lattice arithmetic is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using IMat = std::vector<IVec>;
using QMat = std::vector<QVec>;

inline Int dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size())
        throw dimension_mismatch("dot: length " + std::to_string(a.size()) +
                                 " vs " + std::to_string(b.size()));
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dotq(const IVec& a, const QVec& b) {
    if (a.size() != b.size())
        throw dimension_mismatch("dotq: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline IVec operator+(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector add");
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec operator-(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw dimension_mismatch("vector sub");
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec operator*(const Int& c, const IVec& a) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline IVec negate(const IVec& a) { return Int(-1) * a; }

inline bool is_zero(const IVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline IVec zero_vec(std::size_t n) { return IVec(n, Int(0)); }

// q^e for integer e of either sign.
inline Rat rat_pow(const Rat& q, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()),
                   (unsigned long)e);
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()),
                   (unsigned long)e);
        r.canonicalize();
        return r;
    }
    if (q == 0) throw error("rat_pow: zero to negative power");
    Rat inv = Rat(q.get_den(), q.get_num());
    inv.canonicalize();
    return rat_pow(inv, -e);
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// exact floor/ceil of a rational
inline Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw overflow_guard("integer does not fit in long");
    return x.get_si();
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

inline std::string to_string(const IVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

} // namespace parred
