#include "wpalg/rational.hpp"

namespace wpalg {

Rational cp_constant(int p) {
    if (p < 2) throw std::invalid_argument("cp_constant: requires p >= 2");
    mpz_class base = 4 * p;
    mpz_class num;
    mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(2 * p - 1));
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * p - 1));
    return Rational(num, fact * fact);
}

}  // namespace wpalg
