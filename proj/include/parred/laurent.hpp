#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parred/numeric.hpp"

namespace parred {

using ExpVec = std::vector<long>;
using WindowBounds = std::vector<std::pair<long, long>>;

// Finitely-truncated multivariate formal Laurent series with exact rational
// coefficients. Every stored exponent vector lies inside the per-variable
// window; arithmetic closes within the intersected window (terms falling
// outside are truncated away, which is why consumers that need
// contamination-free coefficients work in an explicitly shrunk safe region).
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(std::vector<std::string> vars, WindowBounds window);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const WindowBounds& window() const { return window_; }
    const std::map<ExpVec, Rat>& terms() const { return terms_; }

    bool in_window(const ExpVec& e) const;

    // inserts (accumulating) a term; throws window_overflow outside the window
    void add_term(const ExpVec& e, const Rat& c);

    // coefficient inside the window (zero when absent); throws
    // window_overflow when queried outside the window, where the value is
    // unknown rather than zero
    Rat coeff(const ExpVec& e) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries scaled(const Rat& c) const;

    bool operator==(const LaurentSeries& o) const {
        return vars_ == o.vars_ && window_ == o.window_ && terms_ == o.terms_;
    }

    // restriction to a narrower window
    LaurentSeries restricted(const WindowBounds& window) const;

    // bounding box of the nonzero support, when nonempty
    std::optional<WindowBounds> support_box() const;

    static WindowBounds intersect(const WindowBounds& a, const WindowBounds& b);

private:
    std::vector<std::string> vars_;
    WindowBounds window_;
    std::map<ExpVec, Rat> terms_;

    void check_compatible(const LaurentSeries& o) const;
};

} // namespace parred
