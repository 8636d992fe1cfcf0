#pragma once

#include "wpalg/groebner.hpp"

#include <array>
#include <memory>

namespace wpalg {

/// Monomial t^a s^b in a free graded-commutative algebra: exterior
/// generators as a bitmask, divided-power/polynomial generators as an
/// exponent vector. Homological degree = |a| + 2|b|.
struct GCMonomial {
    unsigned odd = 0;
    std::vector<int> even;

    int degree() const;
    auto operator<=>(const GCMonomial& o) const = default;
};

/// Free graded-commutative DG algebra over a quotient ring, with odd
/// generators in degree 1 and even generators in degree 2. The differential
/// is the ring-linear odd derivation determined by the generator tables;
/// composites are reduced to ring normal form.
class FreeDGAlgebra {
public:
    using Element = std::map<GCMonomial, Polynomial>;

    FreeDGAlgebra(std::shared_ptr<const QuotientRing> ring,
                  std::vector<Polynomial> d_odd,
                  std::vector<std::vector<std::pair<Polynomial, int>>> d_even);

    int nodd() const { return static_cast<int>(d_odd_.size()); }
    int neven() const { return static_cast<int>(d_even_.size()); }
    const QuotientRing& ring() const { return *ring_; }

    /// All monomials of the given homological degree, deterministic order.
    std::vector<GCMonomial> monomials(int degree) const;
    long rank(int degree) const;

    Element differential(const GCMonomial& m) const;
    Element differential(const Element& e) const;

    bool dsquare_zero_through(int max_degree) const;
    /// Every generator differential coefficient is in the maximal ideal.
    bool generator_entries_in_radical() const;

    const std::vector<Polynomial>& d_odd() const { return d_odd_; }
    const std::vector<std::vector<std::pair<Polynomial, int>>>& d_even() const { return d_even_; }

private:
    std::shared_ptr<const QuotientRing> ring_;
    std::vector<Polynomial> d_odd_;
    std::vector<std::vector<std::pair<Polynomial, int>>> d_even_;
};

/// The resolution of the trivial module over the 8-variable complete
/// intersection: odd generators t1..t8 over E,F,H,omega,x5..x8, even
/// generators s1..s8 matched to the deformed relations.
class TateComplex {
public:
    explicit TateComplex(int p);

    int p() const { return p_; }
    const QuotientRing& ring() const { return *ring_; }
    const FreeDGAlgebra& dg() const { return *dg_; }

    static long rank(int m);  // sum_j C(8, m-2j)·C(j+7,7)

    bool dsquare_zero_through(int max_degree) const { return dg_->dsquare_zero_through(max_degree); }
    bool minimal() const { return dg_->generator_entries_in_radical(); }
    /// Exactness of Q2 -> Q1 -> Q0 -> k in internal (weighted) degrees up to
    /// the bound, by exact rank counts on graded pieces.
    bool graded_exactness_low(long max_internal_degree) const;

private:
    int p_;
    std::shared_ptr<const QuotientRing> ring_;
    std::unique_ptr<FreeDGAlgebra> dg_;
};

/// The cohomology algebra of the complete intersection as a rewriting
/// system: degree-1 generators a1..a8 anticommuting pairwise with a4^2 = 0
/// and a8^2 = -a3^2, and central degree-2 generators b3, b4. Normal
/// monomials are a1^n1 a2^n2 a3^n3 a4^e4 a5^n5 a6^n6 a7^n7 a8^e8 b3^m b4^m'.
class SkewAlgebra {
public:
    struct Mono {
        std::array<int, 8> a{};
        int b3 = 0, b4 = 0;
        int degree() const;
        auto operator<=>(const Mono& o) const = default;
    };
    using Element = std::map<Mono, Rational>;

    static std::vector<Mono> basis(int degree);
    static long dim(int degree) { return static_cast<long>(basis(degree).size()); }

    /// Normal form of a coefficient times a word in the generators
    /// (letters 0..7 = a1..a8, 8 = b3, 9 = b4).
    static Element word(const std::vector<int>& letters, Rational coeff = Rational(1));
    static Element multiply(const Element& x, const Element& y);
    static Element scale(const Element& x, const Rational& c);
    static Element add(Element x, const Element& y);
    static std::string to_string(const Element& e);
};

/// The dual of a Tate monomial in the presented cohomology algebra
/// (the documented correspondence with its signs; scalars up to the
/// paper's unspecified nonzero multiples).
SkewAlgebra::Element hstar_dual(const GCMonomial& m);

/// The start of the minimal resolution over the 4-variable quotient ring:
/// T1..T4 mapping to the variables, S_j (j = 1,2,5..11) mapping to the
/// relation coefficient rows, plus the Koszul products T_iT_j in step 2.
class RResolutionStart {
public:
    explicit RResolutionStart(int p);

    const QuotientRing& ring() const { return *ring_; }
    const FreeDGAlgebra& dg() const { return *dg_; }
    static constexpr int p1_rank = 4;
    static constexpr int p2_rank = 15;
    /// Index of S_j (j in {1,2,5..11}) among the even generators.
    static int s_slot(int j);

    bool d1d2_zero() const;
    bool minimal() const { return dg_->generator_entries_in_radical(); }
    long rank_d1() const;            // as a map of Q-vector spaces
    bool exact_at_ring() const;      // rank d1 = dim of the maximal ideal
    bool exact_at_p1() const;        // rank d2 = dim ker d1

private:
    int p_;
    std::shared_ptr<const QuotientRing> ring_;
    std::unique_ptr<FreeDGAlgebra> dg_;
};

/// psi on a Tate monomial: kills t5..t8, sends s3 to H·S8 and s4 to
/// -(1/C_p)·omega^p·S8, fixes the rest. Returns a single R-side term
/// (monomial of the RResolutionStart algebra with coefficient) or zero.
FreeDGAlgebra::Element psi_lift(const TateComplex& tate, const RResolutionStart& rres,
                                const GCMonomial& m);

/// Chain-map identity d_R ∘ psi = psi ∘ d_Q on all Tate monomials of
/// homological degree <= max_degree (the lift is a map of complexes).
bool psi_chain_map_through(const TateComplex& tate, const RResolutionStart& rres, int max_degree);

/// Images of the cohomology generators of the 4-variable side under the
/// induced map: gamma_i (duals of T_i) and delta_j (duals of S_j). Computed
/// by composing dual functionals with psi; throws if the result disagrees
/// with the fixed reference table.
struct PiSharpTable {
    std::vector<SkewAlgebra::Element> gamma;          // gamma_1..gamma_4
    std::map<int, SkewAlgebra::Element> delta;        // j in {1,2,5..11}
};
PiSharpTable pi_sharp_generators(const TateComplex& tate, const RResolutionStart& rres);

/// Image of a degree-2 dual functional (coordinates over the S_j and
/// T_iT_j basis of the second step) under the induced map.
SkewAlgebra::Element pi_sharp_degree2(const TateComplex& tate, const RResolutionStart& rres,
                                      const GCMonomial& r_side_monomial);

/// Dimension of the image algebra in one degree: normal monomials
/// a1^n1 a2^n2 a3^n3 a4^e4 (a5^2)^m5 (a6^2)^m6 (a7^2)^m7.
long image_pi_sharp_dim(int degree);

}  // namespace wpalg
