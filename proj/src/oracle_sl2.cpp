#include "parred/oracle_sl2.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace parred {

namespace {

struct FieldDef {
    long q, p, k;
    std::vector<long> reduction;  // x^k = reduction(x), coeffs low to high
};

// Conway polynomials: x^2+x+1, x^3+x+1, x^2+2x+2
const FieldDef kFields[] = {
    {2, 2, 1, {}},        {3, 3, 1, {}},        {4, 2, 2, {1, 1}},
    {5, 5, 1, {}},        {7, 7, 1, {}},        {8, 2, 3, {1, 1, 0}},
    {9, 3, 2, {1, 1}},
};

const FieldDef* find_field(long q) {
    for (const auto& f : kFields)
        if (f.q == q) return &f;
    return nullptr;
}

} // namespace

bool GF::supported(long q) { return find_field(q) != nullptr; }

GF::GF(long q) : q_(q) {
    const FieldDef* def = find_field(q);
    if (!def)
        throw field_unsupported("q = " + std::to_string(q) +
                                " is not in the supported field table");
    const long p = def->p, k = def->k;
    auto decode = [&](long e) {
        std::vector<long> c(k);
        for (long i = 0; i < k; ++i) {
            c[i] = e % p;
            e /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<long>& c) {
        long e = 0;
        for (long i = k - 1; i >= 0; --i) e = e * p + c[i];
        return e;
    };
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, -1);
    for (long a = 0; a < q; ++a) {
        const auto ca = decode(a);
        {
            std::vector<long> cn(k);
            for (long i = 0; i < k; ++i) cn[i] = (p - ca[i]) % p;
            neg_[a] = encode(cn);
        }
        for (long b = 0; b < q; ++b) {
            const auto cb = decode(b);
            std::vector<long> cs(k);
            for (long i = 0; i < k; ++i) cs[i] = (ca[i] + cb[i]) % p;
            add_[a * q + b] = encode(cs);
            // polynomial product reduced by x^k = reduction
            std::vector<long> prod(2 * k - 1, 0);
            for (long i = 0; i < k; ++i)
                for (long j = 0; j < k; ++j)
                    prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            for (long d = 2 * k - 2; d >= k; --d) {
                const long c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (long j = 0; j < k; ++j)
                    prod[d - k + j] =
                        (prod[d - k + j] + c * def->reduction[j]) % p;
            }
            prod.resize(k);
            mul_[a * q + b] = encode(prod);
        }
    }
    for (long a = 1; a < q; ++a)
        for (long b = 1; b < q; ++b)
            if (mul(a, b) == 1) {
                inv_[a] = b;
                break;
            }
}

long GF::inv(long a) const {
    if (a == 0 || inv_[a] < 0) throw error("inverse of zero");
    return inv_[a];
}

namespace {

using Poly = std::vector<long>;  // low to high, trailing zeros trimmed

void trim(Poly& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
}

// u mod v over F_q, v nonzero
Poly poly_mod(const GF& f, Poly u, const Poly& v) {
    trim(u);
    const long dv = static_cast<long>(v.size()) - 1;
    const long lead_inv = f.inv(v.back());
    while (static_cast<long>(u.size()) - 1 >= dv) {
        const long c = f.mul(u.back(), lead_inv);
        const long shift = static_cast<long>(u.size()) - 1 - dv;
        if (c != 0)
            for (long j = 0; j <= dv; ++j)
                u[shift + j] = f.sub(u[shift + j], f.mul(c, v[j]));
        u.pop_back();
        trim(u);
        if (u.empty()) break;
    }
    return u;
}

long gcd_degree(const GF& f, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return static_cast<long>(a.size()) - 1;  // -1 for the zero polynomial
}

// coefficients of a degree-n binary form from a base-q index; entry i is the
// coefficient of x^(n-i) y^i
std::vector<long> decode_form(long idx, long n, long q) {
    std::vector<long> a(n + 1);
    for (long i = n; i >= 0; --i) {
        a[i] = idx % q;
        idx /= q;
    }
    return a;
}

bool coprime_forms(const GF& f, const std::vector<long>& a,
                   const std::vector<long>& b, long n) {
    // shared root at infinity: both x^n coefficients vanish
    if (a[0] == 0 && b[0] == 0) return false;
    Poly fa(a.rbegin(), a.rend());
    Poly fb(b.rbegin(), b.rend());
    trim(fa);
    trim(fb);
    if (fa.empty() || fb.empty()) {
        // a vanishing form shares every projective root of the other, and a
        // nonzero form of degree >= 1 always has one over the closure
        return n == 0;
    }
    return gcd_degree(f, fa, fb) < 1;
}

Int count_range(const GF& f, long n, long lo, long hi) {
    const long q = f.q();
    long forms = 1;
    for (long i = 0; i <= n; ++i) forms *= q;
    Int total = 0;
    for (long ia = lo; ia < hi; ++ia) {
        const auto a = decode_form(ia, n, q);
        for (long ib = 0; ib < forms; ++ib) {
            const auto b = decode_form(ib, n, q);
            if (coprime_forms(f, a, b, n)) ++total;
        }
    }
    return total;
}

} // namespace

SectionCount count_sections(long q, long n, unsigned jobs) {
    if (!GF::supported(q))
        throw field_unsupported("q = " + std::to_string(q));
    if (n < 0) throw error("n must be non-negative");
    if (n > 5)
        throw overflow_guard("n = " + std::to_string(n) +
                             " exceeds the enumeration cap (5)");
    const GF f(q);
    long forms = 1;
    for (long i = 0; i <= n; ++i) forms *= q;

    Int raw = 0;
    if (jobs <= 1 || forms < 64) {
        raw = count_range(f, n, 0, forms);
    } else {
        const long nj = std::min<long>(jobs, forms);
        std::vector<Int> partial(nj);
        std::vector<std::thread> workers;
        for (long t = 0; t < nj; ++t) {
            const long lo = forms * t / nj;
            const long hi = forms * (t + 1) / nj;
            workers.emplace_back(
                [&f, n, lo, hi, &partial, t] { partial[t] = count_range(f, n, lo, hi); });
        }
        for (auto& w : workers) w.join();
        for (const auto& p : partial) raw += p;
    }
    if (raw % (q - 1) != 0)
        throw internal_error("pair count not divisible by q-1");
    SectionCount sc;
    sc.q = q;
    sc.n = n;
    sc.raw_pairs = raw;
    sc.count = raw / (q - 1);
    sc.d = 2 * n;
    sc.numerical_type = IVec{Int(-n)};
    return sc;
}

std::vector<SectionCount> count_table(const std::vector<long>& q_list,
                                      long n_max, unsigned jobs) {
    std::vector<SectionCount> out;
    for (const auto q : q_list)
        for (long n = 0; n <= n_max; ++n)
            out.push_back(count_sections(q, n, jobs));
    return out;
}

void write_counts_tsv(std::ostream& os, const std::vector<SectionCount>& t) {
    os << "q\tn\td\tcount\n";
    for (const auto& sc : t)
        os << sc.q << '\t' << sc.n << '\t' << sc.d.get_str() << '\t'
           << sc.count.get_str() << '\n';
}

std::vector<SectionCount> read_counts_tsv(std::istream& is) {
    std::vector<SectionCount> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string qs, ns, ds, cs;
        if (!std::getline(ls, qs, '\t') || !std::getline(ls, ns, '\t') ||
            !std::getline(ls, ds, '\t') || !std::getline(ls, cs, '\t'))
            throw config_error("malformed counts row: " + line);
        if (qs == "q") continue;  // header
        SectionCount sc;
        try {
            sc.q = std::stol(qs);
            sc.n = std::stol(ns);
            sc.d = Int(ds);
            sc.count = Int(cs);
        } catch (const std::exception&) {
            throw config_error("malformed counts row: " + line);
        }
        sc.raw_pairs = sc.count * (sc.q - 1);
        sc.numerical_type = IVec{Int(-sc.n)};
        out.push_back(std::move(sc));
    }
    return out;
}

bool gap_shift_check(long q, long m) {
    if (m < 0) throw error("m must be non-negative");
    if (!GF::supported(q))
        throw field_unsupported("q = " + std::to_string(q));
    const GF f(q);
    // the canonical degree-1 form x vanishing exactly at the point (0:1)
    const std::vector<long> s1{1, 0};
    long forms = 1;
    for (long i = 0; i <= m + 1; ++i) forms *= q;
    (void)s1;
    for (long idx = 0; idx < forms; ++idx) {
        const auto s = decode_form(idx, m + 1, q);
        if (s[m + 1] == 0) continue;  // must not vanish at (0:1)
        // sub-bundle condition: no common projective zero with s1; s1 has
        // x-coefficient 1, so infinity is never shared, and its only finite
        // zero is t = 0
        Poly sd(s.rbegin(), s.rend());
        trim(sd);
        Poly s1d{0, 1};  // dehomogenized t
        if (gcd_degree(f, sd, s1d) < 1) return true;
    }
    return false;
}

} // namespace parred
