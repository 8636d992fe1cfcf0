#include "wpalg/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wpalg {

namespace {

// Full multivariate division by a list of monic divisors.
Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& ord) {
    Polynomial remainder(f.ring());
    while (!f.is_zero()) {
        Monomial lm = f.leading_monomial(ord);
        Rational lc = f.coeff(lm);
        bool divided = false;
        for (const Polynomial& g : divisors) {
            const Monomial& glm = g.leading_monomial(ord);
            if (glm.divides(lm)) {
                f -= g.mul_term(lm.divide(glm), lc);
                divided = true;
                break;
            }
        }
        if (!divided) {
            remainder.add_term(lm, lc);
            Polynomial t(f.ring());
            t.add_term(lm, lc);
            f -= t;
        }
    }
    return remainder;
}

Polynomial make_monic(Polynomial f, const MonomialOrder& ord) {
    if (f.is_zero()) return f;
    Rational lc = f.coeff(f.leading_monomial(ord));
    return f * lc.inverse();
}

long sugar_of(const Polynomial& f) {
    long d = 0;
    for (const auto& [m, c] : f.terms()) d = std::max(d, m.total_degree());
    return d;
}

}  // namespace

bool GroebnerBasis::same_ideal(const GroebnerBasis& o) const {
    if (gens.size() != o.gens.size()) return false;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!(gens[i] == o.gens[i])) return false;
    return true;
}

GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& input, MonomialOrder order) {
    std::vector<Polynomial> basis;
    std::vector<long> sugar;
    for (const Polynomial& g : input) {
        if (g.is_zero()) continue;
        basis.push_back(make_monic(g, order));
        sugar.push_back(sugar_of(g));
    }

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        long sugar;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        // normal selection: smallest lcm in the order, then smallest sugar
        if (!(a.lcm == b.lcm)) return order.less(a.lcm, b.lcm);
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };

    std::vector<Pair> queue;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].leading_monomial(order),
                                       basis[j].leading_monomial(order));
            long s = std::max(sugar[i] + l.divide(basis[i].leading_monomial(order)).total_degree(),
                              sugar[j] + l.divide(basis[j].leading_monomial(order)).total_degree());
            queue.push_back(Pair{i, j, std::move(l), s});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    std::set<std::pair<std::size_t, std::size_t>> done;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *it;
        queue.erase(it);
        done.insert({p.i, p.j});

        const Monomial& li = basis[p.i].leading_monomial(order);
        const Monomial& lj = basis[p.j].leading_monomial(order);
        // Buchberger's first criterion
        if (Monomial::coprime(li, lj)) continue;
        // chain criterion: some k with LT_k | lcm and both pairs handled
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].leading_monomial(order).divides(p.lcm)) continue;
            auto key_ik = std::minmax(p.i, k);
            auto key_jk = std::minmax(p.j, k);
            if (done.count({key_ik.first, key_ik.second}) &&
                done.count({key_jk.first, key_jk.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial s = basis[p.i].mul_term(p.lcm.divide(li), Rational(1)) -
                       basis[p.j].mul_term(p.lcm.divide(lj), Rational(1));
        Polynomial r = reduce_full(std::move(s), basis, order);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(std::move(r), order));
        sugar.push_back(p.sugar);
        push_pairs_for(basis.size() - 1);
    }

    // inter-reduce to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Polynomial g = basis[i];
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            Polynomial r = reduce_full(g, others, order);
            if (!(r == g)) {
                changed = true;
                if (r.is_zero()) {
                    basis.erase(basis.begin() + i);
                    --i;
                } else {
                    basis[i] = make_monic(std::move(r), order);
                }
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });
    return GroebnerBasis{std::move(ring), order, std::move(basis)};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    return reduce_full(f, gb.gens, gb.order);
}

namespace {

// Smallest pure-power exponent of x_v among the leading terms; 0 if none.
int pure_power_bound(const GroebnerBasis& gb, std::size_t v) {
    std::size_t n = gb.ring->nvars();
    int best = 0;
    for (const Polynomial& g : gb.gens) {
        const Monomial& lm = g.leading_monomial(gb.order);
        bool pure = lm[v] > 0 || lm.is_one();
        for (std::size_t w = 0; w < n && pure; ++w)
            if (w != v && lm[w] > 0) pure = false;
        if (pure && (best == 0 || lm[v] < best)) best = std::max(lm[v], 1);
    }
    return best;
}

}  // namespace

bool is_zero_dimensional(const GroebnerBasis& gb) {
    std::size_t n = gb.ring->nvars();
    for (std::size_t v = 0; v < n; ++v)
        if (pure_power_bound(gb, v) == 0) return false;
    return true;
}

std::vector<Monomial> quotient_basis(const GroebnerBasis& gb) {
    if (!is_zero_dimensional(gb))
        throw std::invalid_argument("quotient_basis: positive-dimensional quotient");
    std::size_t n = gb.ring->nvars();
    std::vector<Monomial> leads;
    for (const Polynomial& g : gb.gens) leads.push_back(g.leading_monomial(gb.order));

    std::vector<int> bound(n);
    for (std::size_t v = 0; v < n; ++v) bound[v] = pure_power_bound(gb, v);

    std::vector<Monomial> out;
    Monomial cur(n);
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == n) {
            for (const Monomial& lm : leads)
                if (lm.divides(cur)) return;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e < bound[v]; ++e) {
            cur[v] = e;
            self(self, v + 1);
        }
        cur[v] = 0;
    };
    rec(rec, 0);

    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        long da = a.weighted_degree(gb.ring->weights);
        long db = b.weighted_degree(gb.ring->weights);
        if (da != db) return da < db;
        return b < a;  // raw-lex descending within a degree
    });
    return out;
}

GroebnerBasis ideal_quotient(const GroebnerBasis& I, const Polynomial& f) {
    if (f.is_zero()) {
        // (I : 0) is the whole ring
        return buchberger(I.ring, {Polynomial(I.ring, Rational(1))}, I.order);
    }
    const RingPtr& R = I.ring;
    std::size_t n = R->nvars();
    std::vector<std::string> ext_vars;
    ext_vars.push_back("_t");
    for (const auto& v : R->vars) ext_vars.push_back(v);
    RingPtr Rt = PolyRing::make(ext_vars);

    auto lift = [&](const Polynomial& p) {
        Polynomial out(Rt);
        for (const auto& [m, c] : p.terms()) {
            Monomial em(n + 1);
            for (std::size_t i = 0; i < n; ++i) em[i + 1] = m[i];
            out.add_term(em, c);
        }
        return out;
    };
    Polynomial t = Polynomial::variable(Rt, 0);
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.gens) gens.push_back(t * lift(g));
    gens.push_back((Polynomial(Rt, Rational(1)) - t) * lift(f));

    GroebnerBasis egb = buchberger(Rt, gens, MonomialOrder::eliminate_first(1));

    // elements without t generate I ∩ (f); divide each by f
    std::vector<Polynomial> quot;
    for (const Polynomial& g : egb.gens) {
        bool has_t = false;
        for (const auto& [m, c] : g.terms())
            if (m[0] > 0) has_t = true;
        if (has_t) continue;
        Polynomial back(R);
        for (const auto& [m, c] : g.terms()) {
            Monomial bm(n);
            for (std::size_t i = 0; i < n; ++i) bm[i] = m[i + 1];
            back.add_term(bm, c);
        }
        // exact division by the single polynomial f
        Polynomial q(R);
        Polynomial rem = back;
        const Monomial& flm = f.leading_monomial(I.order);
        Rational flc = f.coeff(flm);
        while (!rem.is_zero()) {
            const Monomial& rm = rem.leading_monomial(I.order);
            if (!flm.divides(rm))
                throw std::logic_error("ideal_quotient: intersection element not divisible");
            Rational c = rem.coeff(rm) / flc;
            Monomial qm = rm.divide(flm);
            q.add_term(qm, c);
            rem -= f.mul_term(qm, c);
        }
        quot.push_back(std::move(q));
    }
    return buchberger(R, quot, I.order);
}

RegularSequenceResult is_regular_sequence(RingPtr ring, const std::vector<Polynomial>& seq,
                                          MonomialOrder order) {
    std::vector<Polynomial> prefix;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].is_zero()) return {false, static_cast<int>(i) + 1};
        GroebnerBasis I = buchberger(ring, prefix, order);
        if (prefix.empty()) {
            // (0 : f) = 0 for nonzero f in a domain
        } else {
            GroebnerBasis Q = ideal_quotient(I, seq[i]);
            if (!Q.same_ideal(I)) return {false, static_cast<int>(i) + 1};
        }
        prefix.push_back(seq[i]);
    }
    return {true, 0};
}

std::vector<std::size_t> minimal_generators(RingPtr ring, const std::vector<Polynomial>& gens,
                                            MonomialOrder order) {
    for (const Polynomial& g : gens)
        if (!g.is_homogeneous(ring->weights))
            throw std::invalid_argument("minimal_generators: inhomogeneous generator");
    // m·(all gens): every variable times every generator
    std::vector<Polynomial> m_times_all;
    for (const Polynomial& g : gens)
        for (std::size_t v = 0; v < ring->nvars(); ++v)
            m_times_all.push_back(Polynomial::variable(ring, v) * g);

    std::vector<std::size_t> kept;
    std::vector<Polynomial> kept_polys;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Polynomial> test = kept_polys;
        test.insert(test.end(), m_times_all.begin(), m_times_all.end());
        GroebnerBasis gb = buchberger(ring, test, order);
        if (!normal_form(gens[i], gb).is_zero()) {
            kept.push_back(i);
            kept_polys.push_back(gens[i]);
        }
    }
    return kept;
}

QuotientRing::QuotientRing(GroebnerBasis gb) : gb_(std::move(gb)) {
    basis_ = quotient_basis(gb_);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
}

long QuotientRing::hilbert_function(long degree) const {
    for (const Polynomial& g : gb_.gens)
        if (!g.is_homogeneous(ring()->weights))
            throw std::invalid_argument("hilbert_function: ideal inhomogeneous for the weights");
    long count = 0;
    for (const Monomial& m : basis_)
        if (m.weighted_degree(ring()->weights) == degree) ++count;
    return count;
}

std::size_t QuotientRing::basis_index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("QuotientRing: not a basis monomial");
    return it->second;
}

Matrix QuotientRing::multiplication_matrix(std::size_t var) const {
    Matrix m(basis_.size(), basis_.size());
    for (std::size_t c = 0; c < basis_.size(); ++c) {
        Polynomial p = Polynomial::term(ring(), basis_[c] * Monomial::var(ring()->nvars(), var), Rational(1));
        Polynomial nf = normal_form(p);
        for (const auto& [mono, coef] : nf.terms()) m.at(basis_index(mono), c) = coef;
    }
    return m;
}

}  // namespace wpalg
