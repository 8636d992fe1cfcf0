#include "wpalg/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace wpalg;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long> num(-6, 6);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(num(rng));
    return m;
}

}  // namespace

TEST_CASE("rank and null space on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + trial % 5, c = 1 + (trial * 3) % 6;
        Matrix m = random_matrix(rng, r, c);
        auto ns = null_space(m);
        CHECK(rank(m) + ns.size() == c);
        for (const auto& v : ns) {
            RatVec img = m.apply(v);
            for (const auto& x : img) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("solve finds exact solutions when consistent") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = random_matrix(rng, 3, 4);
        RatVec x0(4);
        for (auto& v : x0) v = Rational(std::uniform_int_distribution<long>(-4, 4)(rng));
        RatVec b = m.apply(x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
    Matrix m(2, 1);
    m.at(0, 0) = Rational(1);
    CHECK_FALSE(solve(m, {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("span membership and row span equality") {
    std::vector<RatVec> a = {{Rational(1), Rational(2), Rational(0)},
                             {Rational(0), Rational(0), Rational(1)}};
    std::vector<RatVec> b = {{Rational(2), Rational(4), Rational(3)},
                             {Rational(0), Rational(0), Rational(2)}};
    CHECK(same_row_span(a, b, 3));
    Echelon e = reduce_rows(a, 3);
    CHECK(in_span(e, {Rational(3), Rational(6), Rational(7)}));
    CHECK_FALSE(in_span(e, {Rational(0), Rational(1), Rational(0)}));
}
