#include "parred/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>

namespace parred {

namespace {

bool is_square(const IMat& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) return false;
    return true;
}

} // namespace

void validate_finite_type(const IMat& cartan) {
    const std::size_t r = cartan.size();
    if (!is_square(cartan))
        throw not_finite_type("Cartan matrix must be square");
    for (std::size_t i = 0; i < r; ++i) {
        if (cartan[i][i] != 2)
            throw not_finite_type("diagonal entries must equal 2");
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0)
                throw not_finite_type("off-diagonal entries must be <= 0");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw not_finite_type("zero pattern must be symmetric");
        }
    }
    // symmetrize: d_i * a_ij = d_j * a_ji with d_i > 0, propagated along the
    // Coxeter graph component by component
    QVec d(r, Rat(0));
    for (std::size_t start = 0; start < r; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::queue<std::size_t> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            const std::size_t i = bfs.front();
            bfs.pop();
            for (std::size_t j = 0; j < r; ++j) {
                if (i == j || cartan[i][j] == 0) continue;
                const Rat want = d[i] * Rat(cartan[i][j]) / Rat(cartan[j][i]);
                if (d[j] == 0) {
                    d[j] = want;
                    bfs.push(j);
                } else if (d[j] != want) {
                    throw not_finite_type("matrix is not symmetrizable");
                }
            }
        }
    }
    // Sylvester criterion on the symmetrized matrix
    QMat s(r, QVec(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) s[i][j] = d[i] * Rat(cartan[i][j]);
    for (std::size_t k = 1; k <= r; ++k) {
        QMat minor(k, QVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = s[i][j];
        // exact determinant by fraction-free-ish Gaussian elimination
        Rat det = 1;
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t p = k;
            for (std::size_t i = c; i < k; ++i)
                if (minor[i][c] != 0) {
                    p = i;
                    break;
                }
            if (p == k) {
                det = 0;
                break;
            }
            if (p != c) {
                std::swap(minor[p], minor[c]);
                det = -det;
            }
            det *= minor[c][c];
            for (std::size_t i = c + 1; i < k; ++i) {
                const Rat f = minor[i][c] / minor[c][c];
                for (std::size_t j = c; j < k; ++j)
                    minor[i][j] -= f * minor[c][j];
            }
        }
        if (det <= 0)
            throw not_finite_type(
                "symmetrized matrix is not positive definite (leading minor " +
                std::to_string(k) + ")");
    }
}

RootDatum::RootDatum(IMat cartan, IMat simple_roots, IMat simple_coroots,
                     std::size_t rank_torus, std::string name)
    : rank_ss_(cartan.size()),
      rank_torus_(rank_torus),
      name_(std::move(name)),
      cartan_(std::move(cartan)),
      simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)) {
    validate_finite_type(cartan_);
    const std::size_t n = ambient_dim();
    if (simple_roots_.size() != rank_ss_ || simple_coroots_.size() != rank_ss_)
        throw dimension_mismatch("simple root/coroot count");
    for (std::size_t i = 0; i < rank_ss_; ++i)
        if (simple_roots_[i].size() != n || simple_coroots_[i].size() != n)
            throw dimension_mismatch("ambient dimension of simple (co)roots");
    for (std::size_t i = 0; i < rank_ss_; ++i)
        for (std::size_t j = 0; j < rank_ss_; ++j)
            if (dot(simple_coroots_[i], simple_roots_[j]) != cartan_[i][j])
                throw internal_error("pairing table disagrees with Cartan matrix");
    // linear independence of the (co)root families
    if (integer_kernel_basis(transpose(simple_roots_), rank_ss_).size() != 0 &&
        rank_ss_ > 0)
        throw internal_error("simple roots are linearly dependent");
    if (integer_kernel_basis(transpose(simple_coroots_), rank_ss_).size() !=
            0 &&
        rank_ss_ > 0)
        throw internal_error("simple coroots are linearly dependent");

    generate_roots();
    compute_weights();
    compute_w0();
    group_chars_ = integer_kernel_basis(simple_coroots_, n);
    coroot_smith_ = smith_form(transpose(simple_coroots_));

    two_rho_ = zero_vec(n);
    two_rho_check_ = zero_vec(n);
    for (std::size_t k = 0; k < pos_roots_.size(); ++k) {
        two_rho_ = two_rho_ + root_ambient(pos_roots_[k]);
        two_rho_check_ = two_rho_check_ + pos_coroots_[k];
    }
}

IVec RootDatum::root_ambient(const Root& gamma) const {
    if (gamma.coeffs.size() != rank_ss_)
        throw dimension_mismatch("root coefficient length");
    IVec v = zero_vec(ambient_dim());
    for (std::size_t i = 0; i < rank_ss_; ++i)
        v = v + gamma.coeffs[i] * simple_roots_[i];
    return gamma.positive ? v : negate(v);
}

IVec RootDatum::reflect_cochar(std::size_t i, IVec mu) const {
    const Int p = dot(mu, simple_roots_[i]);
    for (std::size_t k = 0; k < mu.size(); ++k)
        mu[k] -= p * simple_coroots_[i][k];
    return mu;
}

IVec RootDatum::reflect_char(std::size_t i, IVec chi) const {
    const Int p = dot(simple_coroots_[i], chi);
    for (std::size_t k = 0; k < chi.size(); ++k)
        chi[k] -= p * simple_roots_[i][k];
    return chi;
}

void RootDatum::generate_roots() {
    const std::size_t r = rank_ss_;
    // closure of the simple roots under simple reflections, keeping the
    // positive ones; coroots are propagated along: (s_i g)^ = s_i(g^)
    std::map<IVec, std::size_t> seen;
    std::vector<IVec> coeff_list;
    IMat coroot_list;
    for (std::size_t i = 0; i < r; ++i) {
        IVec c = zero_vec(r);
        c[i] = 1;
        seen[c] = i;
        coeff_list.push_back(std::move(c));
        coroot_list.push_back(simple_coroots_[i]);
    }
    for (std::size_t head = 0; head < coeff_list.size(); ++head) {
        const IVec cur = coeff_list[head];
        const IVec cur_coroot = coroot_list[head];
        for (std::size_t i = 0; i < r; ++i) {
            // pairing <coroot_i, gamma> in coefficient space
            Int p = 0;
            for (std::size_t j = 0; j < r; ++j) p += cur[j] * cartan_[i][j];
            IVec next = cur;
            next[i] -= p;
            bool nonneg = true, zero = true;
            for (const auto& x : next) {
                if (x < 0) nonneg = false;
                if (x != 0) zero = false;
            }
            if (!nonneg || zero) continue;
            if (seen.count(next)) continue;
            seen[next] = coeff_list.size();
            coeff_list.push_back(next);
            IVec nc = cur_coroot;
            const Int q = dot(cur_coroot, simple_roots_[i]);
            for (std::size_t k = 0; k < nc.size(); ++k)
                nc[k] -= q * simple_coroots_[i][k];
            coroot_list.push_back(std::move(nc));
        }
    }
    std::vector<std::size_t> order(coeff_list.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto height = [](const IVec& c) {
        Int h = 0;
        for (const auto& x : c) h += x;
        return h;
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Int ha = height(coeff_list[a]), hb = height(coeff_list[b]);
        if (ha != hb) return ha < hb;
        return coeff_list[a] < coeff_list[b];
    });
    for (const auto idx : order) {
        pos_roots_.push_back(Root{coeff_list[idx], true});
        pos_coroots_.push_back(coroot_list[idx]);
    }
}

void RootDatum::compute_weights() {
    const std::size_t r = rank_ss_;
    const std::size_t n = ambient_dim();
    if (r == 0) return;
    // cocharacters of the connected center: kernel of all simple roots
    const IMat central = integer_kernel_basis(simple_roots_, n);
    QMat sys;
    for (std::size_t i = 0; i < r; ++i) sys.push_back(to_rational(simple_coroots_[i]));
    for (const auto& row : central) sys.push_back(to_rational(row));
    for (std::size_t alpha = 0; alpha < r; ++alpha) {
        QVec rhs(sys.size(), Rat(0));
        rhs[alpha] = 1;
        weights_.push_back(FundamentalWeight{alpha, solve_rational(sys, rhs)});
    }
}

void RootDatum::compute_w0() {
    // path to antidominance from a regular dominant cocharacter (the sum of
    // all positive coroots pairs to 2 with every simple root); the recorded
    // reflection word realizes w0
    IVec v = zero_vec(ambient_dim());
    for (const auto& c : pos_coroots_) v = v + c;
    while (true) {
        std::size_t i = rank_ss_;
        for (std::size_t j = 0; j < rank_ss_; ++j) {
            if (dot(v, simple_roots_[j]) > 0) {
                i = j;
                break;
            }
        }
        if (i == rank_ss_) break;
        v = reflect_cochar(i, std::move(v));
        w0_word_.push_back(i);
    }
    if (w0_word_.size() != pos_roots_.size())
        throw internal_error("w0 word length != number of positive roots");
}

IVec RootDatum::longest_weyl_action(const IVec& mu) const {
    if (mu.size() != ambient_dim())
        throw dimension_mismatch("cocharacter dimension");
    IVec v = mu;
    for (const auto i : w0_word_) v = reflect_cochar(i, std::move(v));
    return v;
}

IVec RootDatum::coroot(const Root& gamma) const {
    for (std::size_t k = 0; k < pos_roots_.size(); ++k)
        if (pos_roots_[k].coeffs == gamma.coeffs)
            return gamma.positive ? pos_coroots_[k] : negate(pos_coroots_[k]);
    throw not_a_root("not a root of this datum: " + to_string(gamma.coeffs));
}

namespace {

IMat chain_cartan(std::size_t r) {
    IMat a(r, IVec(r, Int(0)));
    for (std::size_t i = 0; i < r; ++i) {
        a[i][i] = 2;
        if (i + 1 < r) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    return a;
}

IMat preset_cartan(char family, std::size_t n) {
    switch (family) {
        case 'A':
            if (n < 1) throw invalid_preset("A_n needs n >= 1");
            return chain_cartan(n);
        case 'B': {
            if (n < 2) throw invalid_preset("B_n needs n >= 2");
            IMat a = chain_cartan(n);
            a[n - 1][n - 2] = -2;  // short last root
            return a;
        }
        case 'C': {
            if (n < 2) throw invalid_preset("C_n needs n >= 2");
            IMat a = chain_cartan(n);
            a[n - 2][n - 1] = -2;  // long last root
            return a;
        }
        case 'D': {
            if (n < 3) throw invalid_preset("D_n needs n >= 3");
            IMat a = chain_cartan(n);
            a[n - 1][n - 2] = 0;
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 3] = -1;
            a[n - 3][n - 1] = -1;
            return a;
        }
        case 'E': {
            if (n < 6 || n > 8) throw invalid_preset("E_n needs n in {6,7,8}");
            // Bourbaki numbering: chain 1-3-4-5-...-n, node 2 attached to 4
            IMat a(n, IVec(n, Int(0)));
            for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
            auto link = [&](std::size_t i, std::size_t j) {
                a[i - 1][j - 1] = -1;
                a[j - 1][i - 1] = -1;
            };
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (std::size_t k = 4; k < n; ++k) link(k, k + 1);
            return a;
        }
        case 'F': {
            if (n != 4) throw invalid_preset("F_n needs n = 4");
            IMat a = chain_cartan(4);
            a[2][1] = -2;  // alpha_3 short
            return a;
        }
        case 'G': {
            if (n != 2) throw invalid_preset("G_n needs n = 2");
            IMat a = chain_cartan(2);
            a[1][0] = -3;
            return a;
        }
        default:
            throw invalid_preset(std::string("unknown family ") + family);
    }
}

RootDatum build_gl(std::size_t n) {
    if (n < 1) throw invalid_preset("GL_n needs n >= 1");
    const std::size_t r = n - 1;
    IMat roots, coroots;
    for (std::size_t i = 0; i < r; ++i) {
        IVec v = zero_vec(n);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
        coroots.push_back(v);
    }
    return RootDatum(chain_cartan(r), roots, coroots, 1,
                     "GL" + std::to_string(n));
}

RootDatum build_sc(const IMat& cartan, std::size_t rank_torus,
                   const std::string& name) {
    const std::size_t r = cartan.size();
    const std::size_t n = r + rank_torus;
    IMat roots(r, zero_vec(n)), coroots(r, zero_vec(n));
    for (std::size_t i = 0; i < r; ++i) {
        coroots[i][i] = 1;
        for (std::size_t k = 0; k < r; ++k) roots[i][k] = cartan[k][i];
    }
    return RootDatum(cartan, roots, coroots, rank_torus, name);
}

RootDatum build_ad(const IMat& cartan, std::size_t rank_torus,
                   const std::string& name) {
    const std::size_t r = cartan.size();
    const std::size_t n = r + rank_torus;
    IMat roots(r, zero_vec(n)), coroots(r, zero_vec(n));
    for (std::size_t i = 0; i < r; ++i) {
        roots[i][i] = 1;
        for (std::size_t k = 0; k < r; ++k) coroots[i][k] = cartan[i][k];
    }
    return RootDatum(cartan, roots, coroots, rank_torus, name);
}

} // namespace

RootDatum build_root_datum_preset(const std::string& preset) {
    std::string p;
    for (const char c : preset)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_')
            p.push_back(static_cast<char>(std::toupper(c)));
    auto rank_of = [&](std::size_t prefix_len) -> std::size_t {
        if (p.size() <= prefix_len) throw invalid_preset(preset);
        std::size_t n = 0;
        for (std::size_t i = prefix_len; i < p.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(p[i])))
                throw invalid_preset(preset);
            n = 10 * n + (p[i] - '0');
        }
        return n;
    };
    if (p.rfind("SL", 0) == 0) {
        const std::size_t n = rank_of(2);
        if (n < 2) throw invalid_preset("SL_n needs n >= 2");
        return build_sc(chain_cartan(n - 1), 0, "SL" + std::to_string(n));
    }
    if (p.rfind("PGL", 0) == 0) {
        const std::size_t n = rank_of(3);
        if (n < 2) throw invalid_preset("PGL_n needs n >= 2");
        return build_ad(chain_cartan(n - 1), 0, "PGL" + std::to_string(n));
    }
    if (p.rfind("GL", 0) == 0) return build_gl(rank_of(2));
    if (!p.empty() && std::string("ABCDEFG").find(p[0]) != std::string::npos) {
        const std::size_t n = rank_of(1);
        return build_sc(preset_cartan(p[0], n), 0, p);
    }
    throw invalid_preset(preset);
}

RootDatum build_root_datum(const IMat& cartan, std::size_t rank_torus,
                           const std::string& isogeny,
                           const std::optional<std::string>& preset) {
    if (preset) return build_root_datum_preset(*preset);
    if (isogeny == "sc" || isogeny.empty())
        return build_sc(cartan, rank_torus, "custom-sc");
    if (isogeny == "ad") return build_ad(cartan, rank_torus, "custom-ad");
    throw config_error("isogeny must be \"sc\" or \"ad\", got \"" + isogeny +
                       "\"");
}

} // namespace parred
