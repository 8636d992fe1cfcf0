#pragma once

#include "wpalg/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace wpalg {

/// Variable context. Index 0 is the highest variable in every order built
/// on this ring. `weights` is the grading used for Hilbert/homogeneity
/// queries only; monomial orders carry their own degree weights.
struct PolyRing {
    std::vector<std::string> vars;
    std::vector<long> weights;  // one per variable; defaults to 1

    std::size_t nvars() const { return vars.size(); }
    static std::shared_ptr<const PolyRing> make(std::vector<std::string> vars,
                                                std::vector<long> weights = {});
};
using RingPtr = std::shared_ptr<const PolyRing>;

/// Exponent vector. The spaceship order is raw lexicographic and is used
/// only as a container key; monomial orders live in MonomialOrder.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    static Monomial var(std::size_t nvars, std::size_t i, int e = 1) {
        Monomial m(nvars);
        m.e_[i] = e;
        return m;
    }

    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    std::size_t nvars() const { return e_.size(); }

    long total_degree() const;
    long weighted_degree(const std::vector<long>& w) const;
    bool is_one() const;
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& o) const;
    Monomial divide(const Monomial& o) const;  // requires o | this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    auto operator<=>(const Monomial& o) const = default;

private:
    std::vector<int> e_;
};

/// Degrevlex with the ring's variable order (index 0 highest). Degrees are
/// standard unless `degree_weights` is set. With elim_block = k > 0 the
/// first k variables form a leading elimination block (compared first by
/// their own degrevlex), which makes the order an elimination order for
/// those variables.
struct MonomialOrder {
    std::vector<long> degree_weights;  // empty = standard degree
    int elim_block = 0;

    static MonomialOrder degrevlex() { return {}; }
    static MonomialOrder weighted_degrevlex(std::vector<long> w) { return {std::move(w), 0}; }
    static MonomialOrder eliminate_first(int k) { return {{}, k}; }

    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
};

/// Sparse polynomial as a canonical term map (no zero coefficients).
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
        if (!c.is_zero()) terms_[Monomial(ring_->nvars())] = c;
    }
    static Polynomial variable(RingPtr ring, std::size_t i, int e = 1) {
        Polynomial p(ring);
        p.terms_[Monomial::var(p.ring_->nvars(), i, e)] = Rational(1);
        return p;
    }
    static Polynomial term(RingPtr ring, Monomial m, Rational c) {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial mul_term(const Monomial& m, const Rational& c) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    /// Largest monomial in the given order.
    const Monomial& leading_monomial(const MonomialOrder& ord) const;
    const Rational& coeff(const Monomial& m) const;

    /// Homogeneous for the given weights (single weighted degree).
    bool is_homogeneous(const std::vector<long>& w) const;
    /// The weighted degree when homogeneous.
    long homogeneous_degree(const std::vector<long>& w) const;

    /// Plain ASCII form: terms "coef*VAR^e*..." joined by " + " / " - ".
    std::string to_string() const;
    /// Parses the same grammar.
    static Polynomial parse(RingPtr ring, const std::string& text);

private:
    RingPtr ring_;
    std::map<Monomial, Rational> terms_;
};

}  // namespace wpalg
