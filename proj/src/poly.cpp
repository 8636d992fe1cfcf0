#include "wpalg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wpalg {

std::shared_ptr<const PolyRing> PolyRing::make(std::vector<std::string> vars,
                                               std::vector<long> weights) {
    auto r = std::make_shared<PolyRing>();
    r->vars = std::move(vars);
    if (weights.empty()) weights.assign(r->vars.size(), 1);
    if (weights.size() != r->vars.size())
        throw std::invalid_argument("PolyRing: weight count mismatch");
    r->weights = std::move(weights);
    return r;
}

long Monomial::total_degree() const {
    long d = 0;
    for (int e : e_) d += e;
    return d;
}

long Monomial::weighted_degree(const std::vector<long>& w) const {
    long d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += w[i] * e_[i];
    return d;
}

bool Monomial::is_one() const {
    for (int e : e_)
        if (e) return false;
    return true;
}

bool Monomial::divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] -= o.e_[i];
        if (r.e_[i] < 0) throw std::invalid_argument("Monomial::divide: not divisible");
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] && b.e_[i]) return false;
    return true;
}

namespace {

// degrevlex on the index range [lo, hi): higher degree wins; on ties the
// LAST variable with differing exponent decides, smaller exponent wins.
int cmp_degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                        const std::vector<long>* w) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        long wi = w ? (*w)[i] : 1;
        da += wi * a[i];
        db += wi * b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    std::size_t n = a.nvars();
    const std::vector<long>* w = degree_weights.empty() ? nullptr : &degree_weights;
    if (elim_block > 0) {
        int c = cmp_degrevlex_range(a, b, 0, static_cast<std::size_t>(elim_block), nullptr);
        if (c != 0) return c < 0;
        return cmp_degrevlex_range(a, b, static_cast<std::size_t>(elim_block), n, nullptr) < 0;
    }
    return cmp_degrevlex_range(a, b, 0, n, w) < 0;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : terms_) r.terms_[m] = pc * c;
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [pm, pc] : terms_) r.terms_[pm * m] = pc * c;
    return r;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("leading_monomial: zero polynomial");
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (ord.less(*best, m)) best = &m;
    return *best;
}

const Rational& Polynomial::coeff(const Monomial& m) const {
    static const Rational zero;
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
}

bool Polynomial::is_homogeneous(const std::vector<long>& w) const {
    if (terms_.empty()) return true;
    long d = terms_.begin()->first.weighted_degree(w);
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree(w) != d) return false;
    return true;
}

long Polynomial::homogeneous_degree(const std::vector<long>& w) const {
    if (terms_.empty()) return 0;
    return terms_.begin()->first.weighted_degree(w);
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // print in descending raw-lex order for determinism
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (!a.is_one() || m.is_one()) {
            os << a.to_string();
            printed = true;
        }
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (!m[i]) continue;
            if (printed) os << "*";
            os << ring_->vars[i];
            if (m[i] > 1) os << "^" << m[i];
            printed = true;
        }
    }
    return os.str();
}

Polynomial Polynomial::parse(RingPtr ring, const std::string& text) {
    Polynomial out(ring);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("Polynomial::parse: empty input");
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    while (i <= text.size()) {
        skip_ws();
        // parse one term: factors joined by '*'
        Rational coef(1);
        Monomial mono(ring->nvars());
        bool any_factor = false;
        while (true) {
            skip_ws();
            if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])))) {
                std::size_t j = i;
                while (j < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                    ++j;
                coef *= Rational::from_string(text.substr(i, j - i));
                i = j;
                any_factor = true;
            } else if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) ||
                                           text[i] == '_')) {
                std::size_t j = i;
                while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                           text[j] == '_'))
                    ++j;
                std::string name = text.substr(i, j - i);
                i = j;
                std::size_t var = ring->nvars();
                for (std::size_t k = 0; k < ring->nvars(); ++k)
                    if (ring->vars[k] == name) var = k;
                if (var == ring->nvars())
                    throw std::invalid_argument("Polynomial::parse: unknown variable '" + name + "'");
                int e = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    std::size_t j2 = i;
                    while (j2 < text.size() && std::isdigit(static_cast<unsigned char>(text[j2]))) ++j2;
                    if (j2 == i) throw std::invalid_argument("Polynomial::parse: bad exponent");
                    e = std::stoi(text.substr(i, j2 - i));
                    i = j2;
                }
                mono[var] += e;
                any_factor = true;
            } else {
                throw std::invalid_argument("Polynomial::parse: expected factor");
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any_factor) throw std::invalid_argument("Polynomial::parse: empty term");
        out.add_term(mono, neg ? -coef : coef);
        skip_ws();
        if (i == text.size()) break;
        if (text[i] == '+' || text[i] == '-') {
            neg = text[i] == '-';
            ++i;
            continue;
        }
        throw std::invalid_argument("Polynomial::parse: unexpected character");
    }
    return out;
}

}  // namespace wpalg
