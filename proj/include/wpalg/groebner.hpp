#pragma once

#include "wpalg/matrix.hpp"
#include "wpalg/poly.hpp"

#include <optional>

namespace wpalg {

/// Reduced Groebner basis: monic generators, no leading term divides
/// another, tails fully reduced; sorted ascending by leading monomial.
/// Unique for a given ideal and order, so equality of generator lists is
/// equality of ideals.
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> gens;

    const Monomial& leading(std::size_t i) const { return gens[i].leading_monomial(order); }
    bool same_ideal(const GroebnerBasis& o) const;
};

GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& gens, MonomialOrder order);

/// Full reduction to the unique normal form.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool is_zero_dimensional(const GroebnerBasis& gb);

/// All standard monomials, sorted by weighted degree (ring weights) then
/// descending raw-lex. Throws on positive-dimensional input.
std::vector<Monomial> quotient_basis(const GroebnerBasis& gb);

/// (I : f) by the t-elimination intersection construction, returned as a
/// reduced basis in I's own order.
GroebnerBasis ideal_quotient(const GroebnerBasis& I, const Polynomial& f);

struct RegularSequenceResult {
    bool regular;
    int first_failure;  // 1-based; 0 when regular
};

/// True iff ((f_1..f_{i-1}) : f_i) = (f_1..f_{i-1}) for every i.
RegularSequenceResult is_regular_sequence(RingPtr ring, const std::vector<Polynomial>& seq,
                                          MonomialOrder order = MonomialOrder::degrevlex());

/// Graded Nakayama scan: keeps g_i iff g_i is not in (kept) + m·(all).
/// Input must be homogeneous for the ring weights. Returns kept indices.
std::vector<std::size_t> minimal_generators(RingPtr ring, const std::vector<Polynomial>& gens,
                                            MonomialOrder order = MonomialOrder::degrevlex());

/// Zero-dimensional quotient ring with its standard-monomial basis.
class QuotientRing {
public:
    QuotientRing(GroebnerBasis gb);

    const GroebnerBasis& gb() const { return gb_; }
    const RingPtr& ring() const { return gb_.ring; }
    const std::vector<Monomial>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    Polynomial normal_form(const Polynomial& f) const { return wpalg::normal_form(f, gb_); }
    /// Count of standard monomials of the given weighted degree. Requires
    /// every basis relation homogeneous for the ring weights.
    long hilbert_function(long degree) const;

    std::size_t basis_index(const Monomial& m) const;
    /// Multiplication-by-variable matrix on the standard-monomial basis.
    Matrix multiplication_matrix(std::size_t var) const;

private:
    GroebnerBasis gb_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t> index_;
};

}  // namespace wpalg
