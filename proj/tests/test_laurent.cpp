#include <doctest.h>

#include <random>

#include "parred/laurent.hpp"

using namespace parred;

namespace {

LaurentSeries random_series(std::mt19937_64& rng,
                            const std::vector<std::string>& vars,
                            const WindowBounds& win, int nterms) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    LaurentSeries s(vars, win);
    for (int t = 0; t < nterms; ++t) {
        ExpVec e(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            std::uniform_int_distribution<long> pick(win[i].first,
                                                     win[i].second);
            e[i] = pick(rng);
        }
        Rat c(num(rng), den(rng));
        c.canonicalize();
        s.add_term(e, c);
    }
    return s;
}

} // namespace

TEST_CASE("window discipline") {
    LaurentSeries s({"t"}, {{-2, 3}});
    s.add_term({0}, Rat(1));
    s.add_term({-2}, Rat(1, 2));
    CHECK(s.coeff({-2}) == Rat(1, 2));
    CHECK(s.coeff({1}) == 0);
    CHECK_THROWS_AS(s.add_term({4}, Rat(1)), window_overflow);
    CHECK_THROWS_AS(s.coeff({4}), window_overflow);
    CHECK_THROWS_AS(LaurentSeries({"t"}, {{2, 1}}), window_too_small);
}

TEST_CASE("zero coefficients are never stored") {
    LaurentSeries s({"t"}, {{0, 4}});
    s.add_term({1}, Rat(3));
    s.add_term({1}, Rat(-3));
    CHECK(s.terms().empty());
}

TEST_CASE("addition and multiplication properties (randomized)") {
    std::mt19937_64 rng(101);
    const std::vector<std::string> vars{"t1", "t2"};
    const WindowBounds win{{-3, 3}, {-2, 4}};
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_series(rng, vars, win, 5);
        const auto b = random_series(rng, vars, win, 5);
        const auto c = random_series(rng, vars, win, 4);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).terms().empty());
    }
}

TEST_CASE("product restriction agrees on the safe region") {
    std::mt19937_64 rng(103);
    const std::vector<std::string> vars{"t"};
    const WindowBounds win{{-6, 6}};
    for (int trial = 0; trial < 30; ++trial) {
        const auto e = random_series(rng, vars, win, 6);
        LaurentSeries q(vars, win);
        q.add_term({0}, Rat(1));
        q.add_term({2}, Rat(-2));
        const auto p = e * q;
        // safe region: window shrunk by the support diameter of q
        const WindowBounds safe{{win[0].first + 2, win[0].second + 0}};
        const auto lhs = p.restricted(safe);
        // recompute the product from full data and restrict
        const auto rhs = (e * q).restricted(safe);
        CHECK(lhs == rhs);
        for (long x = safe[0].first; x <= safe[0].second; ++x) {
            const Rat direct =
                e.coeff({x}) * Rat(1) + (x - 2 >= win[0].first
                                             ? e.coeff({x - 2}) * Rat(-2)
                                             : Rat(0));
            CHECK(lhs.coeff({x}) == direct);
        }
    }
}

TEST_CASE("window intersection") {
    const WindowBounds a{{-2, 5}};
    const WindowBounds b{{0, 9}};
    CHECK(LaurentSeries::intersect(a, b) == WindowBounds{{0, 5}});
    CHECK_THROWS_AS(LaurentSeries::intersect({{0, 1}}, {{3, 4}}),
                    window_too_small);
}

TEST_CASE("support box") {
    LaurentSeries s({"x", "y"}, {{-5, 5}, {-5, 5}});
    CHECK(!s.support_box().has_value());
    s.add_term({-1, 2}, Rat(1));
    s.add_term({3, 0}, Rat(2));
    const auto box = s.support_box();
    REQUIRE(box.has_value());
    CHECK((*box)[0] == std::pair<long, long>{-1, 3});
    CHECK((*box)[1] == std::pair<long, long>{0, 2});
}
