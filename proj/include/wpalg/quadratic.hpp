#pragma once

#include "wpalg/quiver.hpp"

#include <memory>

namespace wpalg {

/// Quadratic presentation kQ/<I2>: a quiver together with a spanning set of
/// the degree-2 relation space. Relations are split into bihomogeneous parts
/// and stored as a reduced-row-echelon basis of their span inside kQ_2, so
/// two presentations agree iff their stored relation lists agree.
class QuadraticPresentation {
public:
    QuadraticPresentation(std::shared_ptr<const Quiver> q, const std::vector<PathElement>& relations);

    const Quiver& quiver() const { return *q_; }
    std::shared_ptr<const Quiver> quiver_ptr() const { return q_; }
    /// Canonical (RREF-normalized) relation basis.
    const std::vector<PathElement>& relations() const { return relations_; }

    int relation_dim() const { return static_cast<int>(relations_.size()); }
    bool same_relation_span(const QuadraticPresentation& o) const;

    std::string to_json() const;

private:
    std::shared_ptr<const Quiver> q_;
    std::vector<PathElement> relations_;
};

/// Reverses arrows and relation words; the span is preserved. Involutive.
QuadraticPresentation opposite(const QuadraticPresentation& pres);

/// The presentation of kQ^op with relation space I2^perp under the pairing
/// <a (x) b, c~ (x) d~> = delta(a,d) delta(b,c), computed blockwise by exact
/// null spaces.
QuadraticPresentation perp(const QuadraticPresentation& pres);

/// Quadratic dual A^! = kQ^op / <I2^perp> (perp plus normalization).
QuadraticPresentation quadratic_dual(const QuadraticPresentation& pres);

}  // namespace wpalg
