#include "wpalg/rings.hpp"

#include <stdexcept>

namespace wpalg {

namespace {

void require_p(int p, const char* who) {
    if (p < 2) throw std::invalid_argument(std::string(who) + ": requires p >= 2");
}

enum { E = 0, F = 1, H = 2, W = 3, X5 = 4, X6 = 5, X7 = 6, X8 = 7 };

Polynomial mono(RingPtr r, std::initializer_list<std::pair<int, int>> factors,
                Rational c = Rational(1)) {
    Monomial m(r->nvars());
    for (auto [v, e] : factors) m[v] += e;
    return Polynomial::term(std::move(r), m, std::move(c));
}

}  // namespace

RingPtr ring_EFHw(int p) {
    require_p(p, "ring_EFHw");
    long g = 2 * p - 1;
    return PolyRing::make({"E", "F", "H", "omega"}, {g, g, g, 2});
}

RingPtr ring_EFHwx(int p) {
    require_p(p, "ring_EFHwx");
    long g = 4 * p - 2;  // doubled weights so the deformed relations are homogeneous
    long x = 4 * p - 1;
    return PolyRing::make({"E", "F", "H", "omega", "x5", "x6", "x7", "x8"},
                          {g, g, g, 4, x, x, x, g});
}

MonomialOrder grA_order(int p) {
    long g = 2 * p - 1;
    return MonomialOrder::weighted_degrevlex({g, g, g, 2});
}

std::vector<Polynomial> grA_relations(int p) {
    require_p(p, "grA_relations");
    RingPtr r = ring_EFHw(p);
    Rational cp = cp_constant(p);
    return {
        mono(r, {{W, 3 * p - 1}}),
        mono(r, {{E, 2}}),
        mono(r, {{F, 2}}),
        mono(r, {{E, 1}, {H, 1}}),
        mono(r, {{F, 1}, {H, 1}}),
        mono(r, {{W, p}, {E, 1}}),
        mono(r, {{W, p}, {F, 1}}),
        mono(r, {{W, p}, {H, 1}}),
        mono(r, {{H, 2}}) - mono(r, {{W, 2 * p - 1}}, cp),
        mono(r, {{E, 1}, {F, 1}}) + mono(r, {{W, 2 * p - 1}}, cp),
    };
}

std::vector<Polynomial> grA_relations11(int p) {
    require_p(p, "grA_relations11");
    RingPtr r = ring_EFHw(p);
    Rational cp = cp_constant(p);
    return {
        mono(r, {{E, 2}}),                                        // r1
        mono(r, {{F, 2}}),                                        // r2
        mono(r, {{H, 3}}),                                        // r3
        mono(r, {{W, 3 * p - 1}}),                                // r4
        mono(r, {{W, p}, {E, 1}}),                                // r5
        mono(r, {{W, p}, {F, 1}}),                                // r6
        mono(r, {{W, p}, {H, 1}}),                                // r7
        mono(r, {{H, 2}}) - mono(r, {{W, 2 * p - 1}}, cp),        // r8
        mono(r, {{E, 1}, {F, 1}}) + mono(r, {{W, 2 * p - 1}}, cp),// r9
        mono(r, {{E, 1}, {H, 1}}),                                // r10
        mono(r, {{F, 1}, {H, 1}}),                                // r11
    };
}

std::vector<Polynomial> rtilde_relations(int p) {
    require_p(p, "rtilde_relations");
    RingPtr r = ring_EFHwx(p);
    Rational cp = cp_constant(p);
    return {
        mono(r, {{E, 2}}),                                                     // r1
        mono(r, {{F, 2}}),                                                     // r2
        mono(r, {{H, 3}}),                                                     // r3
        mono(r, {{W, 3 * p - 1}}),                                             // r4
        mono(r, {{W, p}, {E, 1}}) - mono(r, {{X5, 2}}),                        // rt5
        mono(r, {{W, p}, {F, 1}}) - mono(r, {{X6, 2}}),                        // rt6
        mono(r, {{W, p}, {H, 1}}) - mono(r, {{X7, 2}}),                        // rt7
        mono(r, {{H, 2}}) - mono(r, {{W, 2 * p - 1}}, cp) - mono(r, {{X8, 2}}),// rt8
    };
}

QuotientRing build_grA(int p) {
    return QuotientRing(buchberger(ring_EFHw(p), grA_relations(p), grA_order(p)));
}

QuotientRing build_Rtilde(int p) {
    return QuotientRing(buchberger(ring_EFHwx(p), rtilde_relations(p), MonomialOrder::degrevlex()));
}

std::vector<std::vector<Polynomial>> c_table(int p) {
    require_p(p, "c_table");
    RingPtr r = ring_EFHw(p);
    Rational cp = cp_constant(p);
    auto zero = [&] { return Polynomial(r); };
    std::vector<std::vector<Polynomial>> c(11, std::vector<Polynomial>(4, zero()));
    c[0][E] = mono(r, {{E, 1}});                     // r1 = E·E
    c[1][F] = mono(r, {{F, 1}});                     // r2 = F·F
    c[2][H] = mono(r, {{H, 2}});                     // r3 = H^2·H
    c[3][W] = mono(r, {{W, 3 * p - 2}});             // r4 = omega^{3p-2}·omega
    c[4][E] = mono(r, {{W, p}});                     // r5 = omega^p·E
    c[5][F] = mono(r, {{W, p}});                     // r6
    c[6][H] = mono(r, {{W, p}});                     // r7
    c[7][H] = mono(r, {{H, 1}});                     // r8 = H·H - C_p omega^{2p-2}·omega
    c[7][W] = mono(r, {{W, 2 * p - 2}}, -cp);
    c[8][E] = mono(r, {{F, 1}});                     // r9 = F·E + C_p omega^{2p-2}·omega
    c[8][W] = mono(r, {{W, 2 * p - 2}}, cp);
    c[9][E] = mono(r, {{H, 1}});                     // r10 = H·E
    c[10][F] = mono(r, {{H, 1}});                    // r11 = H·F
    return c;
}

}  // namespace wpalg
