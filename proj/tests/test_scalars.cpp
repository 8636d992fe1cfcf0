#include "wpalg/rational.hpp"

#include <doctest.h>

#include <random>

using namespace wpalg;

namespace {

// Independent route for the structure constant: build the product
// (4p)/1 · (4p)/1 · ... one factor (4p)/k^2 at a time.
Rational cp_oracle(int p) {
    Rational acc(1);
    for (int k = 1; k <= 2 * p - 1; ++k) acc *= Rational(4 * p, static_cast<long>(k) * k);
    return acc;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational basics and canonical form") {
    CHECK(Rational(512, 36) == Rational(128, 9));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(1, 3).to_string() == "1/3");
    CHECK(Rational::from_string("248832/14400") == Rational(432, 25));
    CHECK(Rational(1, 3).den() == 3);
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1).inverse() / Rational(0));
}

TEST_CASE("structure constant values") {
    CHECK(cp_constant(2) == Rational(128, 9));
    CHECK(cp_constant(2) == cp_oracle(2));
    CHECK(cp_constant(3) == Rational(432, 25));
    CHECK(cp_constant(3) == cp_oracle(3));
    CHECK_THROWS(cp_constant(1));
    CHECK_THROWS(cp_constant(0));
}

TEST_CASE("structure constant positivity and denominator divisibility") {
    for (int p = 2; p <= 7; ++p) {
        Rational c = cp_constant(p);
        CHECK(c.sign() > 0);
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * p - 1));
        CHECK(mpz_divisible_p((fact * fact).get_mpz_t(), c.den().get_mpz_t()));
    }
}

TEST_CASE("field axioms on random values") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}
