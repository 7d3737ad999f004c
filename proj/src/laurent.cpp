#include "parred/laurent.hpp"

#include <algorithm>

namespace parred {

LaurentSeries::LaurentSeries(std::vector<std::string> vars,
                             WindowBounds window)
    : vars_(std::move(vars)), window_(std::move(window)) {
    if (vars_.size() != window_.size())
        throw dimension_mismatch("one window interval per variable required");
    for (const auto& [lo, hi] : window_)
        if (lo > hi) throw window_too_small("empty window interval");
}

bool LaurentSeries::in_window(const ExpVec& e) const {
    if (e.size() != window_.size())
        throw dimension_mismatch("exponent vector length");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < window_[i].first || e[i] > window_[i].second) return false;
    return true;
}

void LaurentSeries::add_term(const ExpVec& e, const Rat& c) {
    if (!in_window(e))
        throw window_overflow("term exponent outside the window");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat LaurentSeries::coeff(const ExpVec& e) const {
    if (!in_window(e))
        throw window_overflow("coefficient query outside the window");
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentSeries::check_compatible(const LaurentSeries& o) const {
    if (vars_ != o.vars_)
        throw dimension_mismatch("series have different variables");
}

WindowBounds LaurentSeries::intersect(const WindowBounds& a,
                                      const WindowBounds& b) {
    if (a.size() != b.size())
        throw dimension_mismatch("window rank mismatch");
    WindowBounds w(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        w[i] = {std::max(a[i].first, b[i].first),
                std::min(a[i].second, b[i].second)};
        if (w[i].first > w[i].second)
            throw window_too_small("window intersection is empty");
    }
    return w;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    check_compatible(o);
    LaurentSeries r(vars_, intersect(window_, o.window_));
    for (const auto& [e, c] : terms_)
        if (r.in_window(e)) r.add_term(e, c);
    for (const auto& [e, c] : o.terms_)
        if (r.in_window(e)) r.add_term(e, c);
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    return *this + o.scaled(Rat(-1));
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    check_compatible(o);
    LaurentSeries r(vars_, intersect(window_, o.window_));
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            if (r.in_window(e)) r.add_term(e, c1 * c2);
        }
    }
    return r;
}

LaurentSeries LaurentSeries::scaled(const Rat& c) const {
    LaurentSeries r(vars_, window_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, c * v);
    return r;
}

LaurentSeries LaurentSeries::restricted(const WindowBounds& window) const {
    LaurentSeries r(vars_, intersect(window_, window));
    for (const auto& [e, c] : terms_)
        if (r.in_window(e)) r.add_term(e, c);
    return r;
}

std::optional<WindowBounds> LaurentSeries::support_box() const {
    if (terms_.empty()) return std::nullopt;
    WindowBounds box(vars_.size());
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (first) {
                box[i] = {e[i], e[i]};
            } else {
                box[i].first = std::min(box[i].first, e[i]);
                box[i].second = std::max(box[i].second, e[i]);
            }
        }
        first = false;
    }
    return box;
}

} // namespace parred
