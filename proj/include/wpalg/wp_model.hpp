#pragma once

#include "wpalg/findim.hpp"
#include "wpalg/quadratic.hpp"

#include <optional>

namespace wpalg {

/// Everything attached to one value of p: the block quiver with two arrows
/// each way per non-projective block, the basic algebra of the module
/// category, the quadratic presentations on both sides of the duality, and
/// the basic form of the Zhu algebra.
struct WpInstance {
    int p;

    std::shared_ptr<const Quiver> quiver;  // vertices X{s}+/X{s}-, arrows alpha/beta
    BasicAlgebra basic;                    // kQ / I_E (endomorphism algebra, opposite form)
    QuadraticPresentation yoneda;          // (Q, relations a1b2+a2b1, b1a2+b2a1)
    QuadraticPresentation endo;            // (Q^op, relations of the endomorphism algebra)

    std::shared_ptr<const Quiver> zhu_quiver;  // 2p vertices, p-1 loops gamma_s
    BasicAlgebra zhu;                          // loops square to zero

    int vertex_plus(int s) const;   // X_s^+
    int vertex_minus(int s) const;  // X_s^-
};

WpInstance build_wp_instance(int p);

/// dim Ext^n for the Zhu algebra's simple sum: 2p at n = 0, p-1 for n >= 1.
int zhu_yoneda_dim(int p, int n);

/// Arrow multiplicity between graded simples at the given degree shift:
/// 3 for shift 2p-1, 1 for shift 2, 0 otherwise.
int graded_grA_ext1(int p, long shift);

/// Window of the graded one-generator-per-degree quiver: vertices k in
/// [k_min, k_max], three arrows k -> k+2p-1 (E, F, H) and one k -> k+2
/// (omega) whenever the target stays inside the window.
Quiver graded_grA_quiver_window(int p, long k_min, long k_max);

/// One-vertex basic-algebra model of the 4-variable quotient ring: the
/// regular module on its standard-monomial basis, with four loops acting by
/// multiplication. Used for Ext-quiver computations on the commutative side.
BasicAlgebra build_grA_basic(int p);

enum class GrowthModel { PolynomialGrowth, RationalSeries };

struct GkEstimate {
    bool exact;
    int value;      // when exact
    int lower;      // bracketing interval otherwise
    int upper;      // -1 for unbounded
};

/// Growth analysis of a dimension sequence (degrees 0..N, N >= 8).
/// PolynomialGrowth: finite differences of the cumulative sums on the tail;
/// the answer is the degree of the eventual polynomial. RationalSeries:
/// parity-split finite differences of the dims themselves; the answer is
/// the pole order at t = 1, i.e. max parity-degree + 1.
GkEstimate gk_dimension_from_dims(const std::vector<long>& dims, GrowthModel model);

}  // namespace wpalg
