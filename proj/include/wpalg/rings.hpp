#pragma once

#include "wpalg/groebner.hpp"

namespace wpalg {

/// The commutative rings attached to each p, with the fixed conventions:
/// variable order E > F > H > omega (> x5 > x6 > x7 > x8), grading weights
/// deg omega = 2 and deg E = deg F = deg H = 2p-1 on the 4-variable ring.
/// The 4-variable quotient uses the weighted degrevlex order (which makes
/// the listed standard-monomial bases come out); the 8-variable ring uses
/// standard degrevlex, since its relations mix the natural weights.

RingPtr ring_EFHw(int p);    // weights (2p-1, 2p-1, 2p-1, 2)
RingPtr ring_EFHwx(int p);   // 8 vars; doubled weights making r~ homogeneous

MonomialOrder grA_order(int p);

/// The ten quotient relations of the 4-variable presentation.
std::vector<Polynomial> grA_relations(int p);
/// The eleven generators r_1..r_11 (adds H^3 and keeps omega^{3p-1}).
std::vector<Polynomial> grA_relations11(int p);
/// r_1..r_4 followed by the deformed rt_5..rt_8 in the 8-variable ring.
std::vector<Polynomial> rtilde_relations(int p);

QuotientRing build_grA(int p);
QuotientRing build_Rtilde(int p);

/// Coefficients c_{j,i} with r_j = sum_i c_{j,i} x_i over x = (E, F, H, omega),
/// leftmost-variable convention (e.g. r_8 = H·H - C_p omega^{2p-2}·omega).
/// Rows j = 1..11, columns i = 1..4.
std::vector<std::vector<Polynomial>> c_table(int p);

}  // namespace wpalg
