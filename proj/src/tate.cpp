#include "wpalg/tate.hpp"

#include "wpalg/rings.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace wpalg {

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

int popcount(unsigned x) { return std::popcount(x); }

}  // namespace

int GCMonomial::degree() const {
    int d = popcount(odd);
    for (int e : even) d += 2 * e;
    return d;
}

FreeDGAlgebra::FreeDGAlgebra(std::shared_ptr<const QuotientRing> ring,
                             std::vector<Polynomial> d_odd,
                             std::vector<std::vector<std::pair<Polynomial, int>>> d_even)
    : ring_(std::move(ring)), d_odd_(std::move(d_odd)), d_even_(std::move(d_even)) {
    if (d_odd_.size() > 31) throw std::invalid_argument("FreeDGAlgebra: too many odd generators");
    // construction bug trap: d² must vanish on every generator
    for (int j = 0; j < neven(); ++j) {
        GCMonomial m;
        m.even.assign(neven(), 0);
        m.even[j] = 1;
        for (const auto& [mono, coef] : differential(differential(m)))
            if (!coef.is_zero())
                throw std::logic_error("FreeDGAlgebra: d^2 != 0 on an even generator");
    }
}

std::vector<GCMonomial> FreeDGAlgebra::monomials(int degree) const {
    std::vector<GCMonomial> out;
    std::vector<int> exps(neven(), 0);
    auto enum_even = [&](auto&& self, int slot, int remaining, unsigned mask) -> void {
        if (slot == neven()) {
            if (remaining == 0) {
                GCMonomial m;
                m.odd = mask;
                m.even = exps;
                out.push_back(std::move(m));
            }
            return;
        }
        for (int e = 0; 2 * e <= remaining; ++e) {
            exps[slot] = e;
            self(self, slot + 1, remaining - 2 * e, mask);
        }
        exps[slot] = 0;
    };
    for (unsigned mask = 0; mask < (1u << nodd()); ++mask) {
        int q = popcount(mask);
        if (q > degree || (degree - q) % 2 != 0) continue;
        enum_even(enum_even, 0, degree - q, mask);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long FreeDGAlgebra::rank(int degree) const {
    long total = 0;
    for (int j = 0; 2 * j <= degree; ++j)
        total += binom(nodd(), degree - 2 * j) * binom(j + neven() - 1, neven() - 1);
    return total;
}

FreeDGAlgebra::Element FreeDGAlgebra::differential(const GCMonomial& m) const {
    Element out;
    auto add_term = [&](GCMonomial mono, Polynomial coef) {
        if (coef.is_zero()) return;
        auto it = out.find(mono);
        if (it == out.end()) {
            out.emplace(std::move(mono), std::move(coef));
        } else {
            it->second += coef;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    // exterior part: d(t_i) replaces t_i by its ring coefficient
    for (int i = 0; i < nodd(); ++i) {
        if (!(m.odd & (1u << i))) continue;
        int below = popcount(m.odd & ((1u << i) - 1));
        GCMonomial n = m;
        n.odd &= ~(1u << i);
        Polynomial c = below % 2 ? -d_odd_[i] : d_odd_[i];
        add_term(std::move(n), std::move(c));
    }
    // even part: d(s_j) = sum coeff·t_k, entering the exterior factor from
    // the left of t^a picks up the Koszul sign of the crossing
    int parity = popcount(m.odd) % 2;
    for (int j = 0; j < neven(); ++j) {
        if (m.even[j] == 0) continue;
        for (const auto& [coef, k] : d_even_[j]) {
            if (m.odd & (1u << k)) continue;
            int above = popcount(m.odd & ~((1u << (k + 1)) - 1));
            int sign = (parity + above) % 2;
            GCMonomial n = m;
            n.odd |= (1u << k);
            n.even[j] -= 1;
            Polynomial c = coef * Rational(m.even[j]);
            add_term(std::move(n), sign ? -c : c);
        }
    }
    for (auto& [mono, coef] : out) coef = ring_->normal_form(coef);
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

FreeDGAlgebra::Element FreeDGAlgebra::differential(const Element& e) const {
    Element out;
    for (const auto& [mono, coef] : e)
        for (const auto& [dm, dc] : differential(mono)) {
            Polynomial c = ring_->normal_form(dc * coef);
            if (c.is_zero()) continue;
            auto it = out.find(dm);
            if (it == out.end())
                out.emplace(dm, std::move(c));
            else {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

bool FreeDGAlgebra::dsquare_zero_through(int max_degree) const {
    for (int d = 0; d <= max_degree; ++d)
        for (const GCMonomial& m : monomials(d))
            if (!differential(differential(m)).empty()) return false;
    return true;
}

bool FreeDGAlgebra::generator_entries_in_radical() const {
    auto constant_free = [&](const Polynomial& c) {
        Polynomial nf = ring_->normal_form(c);
        return nf.coeff(Monomial(ring_->ring()->nvars())).is_zero();
    };
    for (const Polynomial& c : d_odd_)
        if (!constant_free(c)) return false;
    for (const auto& row : d_even_)
        for (const auto& [c, k] : row)
            if (!constant_free(c)) return false;
    return true;
}

TateComplex::TateComplex(int p) : p_(p) {
    ring_ = std::make_shared<QuotientRing>(build_Rtilde(p));
    RingPtr R = ring_->ring();
    auto var = [&](int i) { return Polynomial::variable(R, i); };
    auto pw = [&](int i, int e) {
        return Polynomial::term(R, Monomial::var(R->nvars(), i, e), Rational(1));
    };
    Rational cp = cp_constant(p);

    std::vector<Polynomial> d_odd;
    for (int i = 0; i < 8; ++i) d_odd.push_back(var(i));

    // d s1 = E t1, d s2 = F t2, d s3 = H^2 t3, d s4 = omega^{3p-2} t4,
    // d s5 = omega^p t1 - x5 t5, ..., d s8 = H t3 - C_p omega^{2p-2} t4 - x8 t8
    std::vector<std::vector<std::pair<Polynomial, int>>> d_even(8);
    d_even[0] = {{var(0), 0}};
    d_even[1] = {{var(1), 1}};
    d_even[2] = {{pw(2, 2), 2}};
    d_even[3] = {{pw(3, 3 * p - 2), 3}};
    d_even[4] = {{pw(3, p), 0}, {-var(4), 4}};
    d_even[5] = {{pw(3, p), 1}, {-var(5), 5}};
    d_even[6] = {{pw(3, p), 2}, {-var(6), 6}};
    d_even[7] = {{var(2), 2}, {pw(3, 2 * p - 2) * (-cp), 3}, {-var(7), 7}};

    dg_ = std::make_unique<FreeDGAlgebra>(ring_, std::move(d_odd), std::move(d_even));
}

long TateComplex::rank(int m) {
    long total = 0;
    for (int j = 0; 2 * j <= m; ++j) total += binom(8, m - 2 * j) * binom(j + 7, 7);
    return total;
}

bool TateComplex::graded_exactness_low(long max_internal_degree) const {
    const QuotientRing& R = *ring_;
    const std::vector<long>& w = R.ring()->weights;
    // weighted degree of each basis monomial; groups per degree
    std::map<long, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < R.basis().size(); ++i)
        by_degree[R.basis()[i].weighted_degree(w)].push_back(i);
    auto dim_at = [&](long d) -> std::size_t {
        auto it = by_degree.find(d);
        return it == by_degree.end() ? 0 : it->second.size();
    };
    auto coords_at = [&](const Polynomial& f, long d, RatVec& out) {
        auto it = by_degree.find(d);
        out.assign(it == by_degree.end() ? 0 : it->second.size(), Rational(0));
        if (it == by_degree.end()) return;
        for (const auto& [m, c] : f.terms()) {
            if (m.weighted_degree(w) != d) throw std::logic_error("graded piece mismatch");
            for (std::size_t k = 0; k < it->second.size(); ++k)
                if (R.basis()[it->second[k]] == m) out[k] = c;
        }
    };

    // internal degrees of the generators
    std::vector<long> wt(8), ws(8);
    for (int i = 0; i < 8; ++i) wt[i] = w[i];
    std::vector<Polynomial> rt = rtilde_relations(p_);
    for (int j = 0; j < 8; ++j) ws[j] = rt[j].homogeneous_degree(w);

    for (long d = 1; d <= max_internal_degree; ++d) {
        // Q1 columns of internal degree d: (t_i, mu) with wdeg(mu) = d - wt[i]
        struct Col1 {
            int i;
            std::size_t mu;
        };
        std::vector<Col1> q1;
        std::map<std::pair<int, std::size_t>, std::size_t> q1_index;
        for (int i = 0; i < 8; ++i) {
            auto it = by_degree.find(d - wt[i]);
            if (it == by_degree.end()) continue;
            for (std::size_t mu : it->second) {
                q1_index[{i, mu}] = q1.size();
                q1.push_back({i, mu});
            }
        }
        if (q1.empty()) continue;

        // d1 matrix: column (i, mu) -> NF(x_i * mu) in degree-d coords
        Matrix d1(dim_at(d), q1.size());
        for (std::size_t c = 0; c < q1.size(); ++c) {
            Polynomial f = R.normal_form(Polynomial::term(
                R.ring(), R.basis()[q1[c].mu] * Monomial::var(8, q1[c].i), Rational(1)));
            RatVec col;
            coords_at(f, d, col);
            for (std::size_t r = 0; r < col.size(); ++r) d1.at(r, c) = col[r];
        }
        std::size_t rank1 = wpalg::rank(d1);
        if (rank1 != dim_at(d)) return false;  // im d1 = maximal ideal, degree d

        // Q2 columns: s_j·mu with ws[j] + wdeg(mu) = d, and t_i t_k·mu
        std::vector<RatVec> d2cols;
        auto add_d2_column = [&](const FreeDGAlgebra::Element& img, const Monomial& mu) {
            RatVec col(q1.size());
            bool nz = false;
            for (const auto& [mono, coef] : img) {
                int i = std::countr_zero(mono.odd);
                Polynomial f = R.normal_form(coef.mul_term(mu, Rational(1)));
                for (const auto& [m2, c2] : f.terms()) {
                    auto it = q1_index.find({i, R.basis_index(m2)});
                    if (it == q1_index.end()) throw std::logic_error("graded column mismatch");
                    col[it->second] += c2;
                    nz = true;
                }
            }
            if (nz) d2cols.push_back(std::move(col));
        };
        for (int j = 0; j < 8; ++j) {
            auto it = by_degree.find(d - ws[j]);
            if (it == by_degree.end()) continue;
            GCMonomial sj;
            sj.even.assign(8, 0);
            sj.even[j] = 1;
            FreeDGAlgebra::Element img = dg_->differential(sj);
            for (std::size_t mu : it->second) add_d2_column(img, R.basis()[mu]);
        }
        for (int i = 0; i < 8; ++i)
            for (int k = i + 1; k < 8; ++k) {
                auto it = by_degree.find(d - wt[i] - wt[k]);
                if (it == by_degree.end()) continue;
                GCMonomial tt;
                tt.even.assign(8, 0);
                tt.odd = (1u << i) | (1u << k);
                FreeDGAlgebra::Element img = dg_->differential(tt);
                for (std::size_t mu : it->second) add_d2_column(img, R.basis()[mu]);
            }
        Matrix d2(0, q1.size());
        for (auto& c : d2cols) d2.append_row(c);  // rows = columns transposed, rank equal
        std::size_t rank2 = wpalg::rank(d2);
        if (rank2 != q1.size() - rank1) return false;  // exactness at Q1, degree d
    }
    return true;
}

int SkewAlgebra::Mono::degree() const {
    int d = 2 * (b3 + b4);
    for (int e : a) d += e;
    return d;
}

std::vector<SkewAlgebra::Mono> SkewAlgebra::basis(int degree) {
    std::vector<Mono> out;
    Mono m;
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == 8) {
            for (int b3 = 0; 2 * b3 <= remaining; ++b3) {
                if ((remaining - 2 * b3) % 2) continue;
                m.b3 = b3;
                m.b4 = (remaining - 2 * b3) / 2;
                out.push_back(m);
            }
            m.b3 = m.b4 = 0;
            return;
        }
        int cap = (slot == 3 || slot == 7) ? std::min(remaining, 1) : remaining;
        for (int e = 0; e <= cap; ++e) {
            m.a[slot] = e;
            self(self, slot + 1, remaining - e);
        }
        m.a[slot] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

SkewAlgebra::Element SkewAlgebra::word(const std::vector<int>& letters, Rational coeff) {
    if (coeff.is_zero()) return {};
    // sort the odd letters with Koszul signs, then reduce a4^2 -> 0 and
    // a8^2 -> -a3^2
    Mono m;
    int sign = 0;
    std::vector<int> odd;
    for (int l : letters) {
        if (l >= 8) {
            (l == 8 ? m.b3 : m.b4) += 1;
            continue;
        }
        // moving l leftwards past previously placed odd letters > l
        for (int prev : odd)
            if (prev > l) sign ^= 1;
        odd.push_back(l);
    }
    std::array<int, 8> counts{};
    for (int l : odd) counts[l] += 1;
    // recount the sign properly: the parity of inversions of `odd`
    sign = 0;
    for (std::size_t i = 0; i < odd.size(); ++i)
        for (std::size_t j = i + 1; j < odd.size(); ++j)
            if (odd[i] > odd[j]) sign ^= 1;
    if (counts[3] >= 2) return {};  // a4^2 = 0
    int a8_pairs = counts[7] / 2;
    counts[7] %= 2;
    counts[2] += 2 * a8_pairs;  // a8^2 = -a3^2
    if (a8_pairs % 2) sign ^= 1;
    m.a = counts;
    Element out;
    out[m] = sign ? -coeff : coeff;
    return out;
}

SkewAlgebra::Element SkewAlgebra::multiply(const Element& x, const Element& y) {
    Element out;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) {
            std::vector<int> letters;
            auto push = [&](const Mono& m) {
                for (int g = 0; g < 8; ++g)
                    for (int e = 0; e < m.a[g]; ++e) letters.push_back(g);
                for (int e = 0; e < m.b3; ++e) letters.push_back(8);
                for (int e = 0; e < m.b4; ++e) letters.push_back(9);
            };
            push(mx);
            push(my);
            for (const auto& [m, c] : word(letters, cx * cy)) {
                auto it = out.find(m);
                if (it == out.end())
                    out.emplace(m, c);
                else {
                    it->second += c;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
    return out;
}

SkewAlgebra::Element SkewAlgebra::scale(const Element& x, const Rational& c) {
    Element out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : x) out[m] = v * c;
    return out;
}

SkewAlgebra::Element SkewAlgebra::add(Element x, const Element& y) {
    for (const auto& [m, c] : y) {
        auto it = x.find(m);
        if (it == x.end())
            x.emplace(m, c);
        else {
            it->second += c;
            if (it->second.is_zero()) x.erase(it);
        }
    }
    return x;
}

std::string SkewAlgebra::to_string(const Element& e) {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        for (int g = 0; g < 8; ++g)
            if (m.a[g]) {
                os << "*a" << (g + 1);
                if (m.a[g] > 1) os << "^" << m.a[g];
            }
        if (m.b3) os << "*b3" << (m.b3 > 1 ? "^" + std::to_string(m.b3) : "");
        if (m.b4) os << "*b4" << (m.b4 > 1 ? "^" + std::to_string(m.b4) : "");
    }
    return os.str();
}

SkewAlgebra::Element hstar_dual(const GCMonomial& m) {
    // t_i ↦ a_i; s1 ↦ a1², s2 ↦ a2², s3 ↦ b3, s4 ↦ b4, s_j ↦ -a_j² (j ≥ 5);
    // products in the written order t's then s's.
    std::vector<int> letters;
    Rational c(1);
    for (int i = 0; i < 8; ++i)
        if (m.odd & (1u << i)) letters.push_back(i);
    for (int j = 0; j < 8; ++j)
        for (int e = 0; e < m.even[j]; ++e) {
            if (j == 0 || j == 1) {
                letters.push_back(j);
                letters.push_back(j);
            } else if (j == 2) {
                letters.push_back(8);
            } else if (j == 3) {
                letters.push_back(9);
            } else {
                letters.push_back(j);
                letters.push_back(j);
                c = -c;
            }
        }
    return SkewAlgebra::word(letters, c);
}

int RResolutionStart::s_slot(int j) {
    switch (j) {
        case 1: return 0;
        case 2: return 1;
        case 5: return 2;
        case 6: return 3;
        case 7: return 4;
        case 8: return 5;
        case 9: return 6;
        case 10: return 7;
        case 11: return 8;
        default: throw std::invalid_argument("RResolutionStart: no S_j for j = 3, 4");
    }
}

RResolutionStart::RResolutionStart(int p) : p_(p) {
    ring_ = std::make_shared<QuotientRing>(build_grA(p));
    std::vector<Polynomial> d_odd;
    for (int i = 0; i < 4; ++i) d_odd.push_back(Polynomial::variable(ring_->ring(), i));
    auto table = c_table(p);
    std::vector<std::vector<std::pair<Polynomial, int>>> d_even;
    for (int j : {1, 2, 5, 6, 7, 8, 9, 10, 11}) {
        std::vector<std::pair<Polynomial, int>> row;
        for (int i = 0; i < 4; ++i)
            if (!table[j - 1][i].is_zero()) row.emplace_back(table[j - 1][i], i);
        d_even.push_back(std::move(row));
    }
    dg_ = std::make_unique<FreeDGAlgebra>(ring_, std::move(d_odd), std::move(d_even));
}

bool RResolutionStart::d1d2_zero() const {
    // d1∘d2 on every degree-2 monomial (the S_j and the T_iT_j)
    for (const GCMonomial& m : dg_->monomials(2))
        if (!dg_->differential(dg_->differential(m)).empty()) return false;
    return true;
}

namespace {

// The Q-linear matrix of the differential from homological degree k to k-1,
// columns indexed by (monomial, ring basis element).
Matrix differential_matrix(const FreeDGAlgebra& dg, int k) {
    const QuotientRing& R = dg.ring();
    std::size_t D = R.basis().size();
    auto rows_mono = dg.monomials(k - 1);
    auto cols_mono = dg.monomials(k);
    std::map<GCMonomial, std::size_t> row_index;
    for (std::size_t i = 0; i < rows_mono.size(); ++i) row_index[rows_mono[i]] = i;

    Matrix out(rows_mono.size() * D, cols_mono.size() * D);
    for (std::size_t c = 0; c < cols_mono.size(); ++c) {
        FreeDGAlgebra::Element img = dg.differential(cols_mono[c]);
        for (std::size_t b = 0; b < D; ++b) {
            // column for cols_mono[c]·basis[b]
            for (const auto& [mono, coef] : img) {
                Polynomial f = R.normal_form(coef.mul_term(R.basis()[b], Rational(1)));
                std::size_t r0 = row_index.at(mono) * D;
                for (const auto& [m2, c2] : f.terms()) out.at(r0 + R.basis_index(m2), c * D + b) = c2;
            }
        }
    }
    return out;
}

}  // namespace

long RResolutionStart::rank_d1() const { return static_cast<long>(rank(differential_matrix(*dg_, 1))); }

bool RResolutionStart::exact_at_ring() const {
    return rank_d1() == static_cast<long>(ring_->basis().size()) - 1;
}

bool RResolutionStart::exact_at_p1() const {
    Matrix d1 = differential_matrix(*dg_, 1);
    Matrix d2 = differential_matrix(*dg_, 2);
    std::size_t ker = d1.cols() - rank(d1);
    return rank(d2) == ker;
}

FreeDGAlgebra::Element psi_lift(const TateComplex& tate, const RResolutionStart& rres,
                                const GCMonomial& m) {
    FreeDGAlgebra::Element out;
    if (m.odd & 0xF0u) return out;  // any of t5..t8 maps to zero
    int p = tate.p();
    RingPtr R4 = rres.ring().ring();
    Rational cp = cp_constant(p);

    GCMonomial n;
    n.odd = m.odd & 0x0Fu;
    n.even.assign(9, 0);
    n.even[RResolutionStart::s_slot(1)] = m.even[0];
    n.even[RResolutionStart::s_slot(2)] = m.even[1];
    n.even[RResolutionStart::s_slot(5)] = m.even[4];
    n.even[RResolutionStart::s_slot(6)] = m.even[5];
    n.even[RResolutionStart::s_slot(7)] = m.even[6];
    n.even[RResolutionStart::s_slot(8)] = m.even[7] + m.even[2] + m.even[3];

    // s3 ↦ H·S8 and s4 ↦ -(1/C_p)·omega^p·S8 contribute ring coefficients
    Monomial coef_mono(R4->nvars());
    coef_mono[2] = m.even[2];          // H^{b3}
    coef_mono[3] = p * m.even[3];      // omega^{p·b4}
    Rational coef(1);
    for (int e = 0; e < m.even[3]; ++e) coef = coef * (-cp.inverse());
    Polynomial c = rres.ring().normal_form(Polynomial::term(R4, coef_mono, coef));
    if (!c.is_zero()) out.emplace(std::move(n), std::move(c));
    return out;
}

namespace {

// pi: substitute x5..x8 = 0 and reduce into the 4-variable quotient.
Polynomial project_to_R(const Polynomial& f, const QuotientRing& R4) {
    Polynomial out(R4.ring());
    for (const auto& [m, c] : f.terms()) {
        bool kills = false;
        for (std::size_t i = 4; i < 8; ++i)
            if (m[i] > 0) kills = true;
        if (kills) continue;
        Monomial back(4);
        for (std::size_t i = 0; i < 4; ++i) back[i] = m[i];
        out.add_term(back, c);
    }
    return R4.normal_form(out);
}

FreeDGAlgebra::Element psi_of_element(const TateComplex& tate, const RResolutionStart& rres,
                                      const FreeDGAlgebra::Element& e) {
    FreeDGAlgebra::Element out;
    for (const auto& [mono, coef] : e) {
        Polynomial pc = project_to_R(coef, rres.ring());
        if (pc.is_zero()) continue;
        for (const auto& [pm, c2] : psi_lift(tate, rres, mono)) {
            Polynomial prod = rres.ring().normal_form(c2 * pc);
            if (prod.is_zero()) continue;
            auto it = out.find(pm);
            if (it == out.end())
                out.emplace(pm, std::move(prod));
            else {
                it->second += prod;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

bool elements_equal(const FreeDGAlgebra::Element& a, const FreeDGAlgebra::Element& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [m, c] : a) {
        auto it = b.find(m);
        if (it == b.end() || !(it->second == c)) return false;
    }
    return true;
}

}  // namespace

bool psi_chain_map_through(const TateComplex& tate, const RResolutionStart& rres, int max_degree) {
    for (int d = 1; d <= max_degree; ++d)
        for (const GCMonomial& m : tate.dg().monomials(d)) {
            FreeDGAlgebra::Element lhs = rres.dg().differential(psi_lift(tate, rres, m));
            FreeDGAlgebra::Element rhs = psi_of_element(tate, rres, tate.dg().differential(m));
            if (!elements_equal(lhs, rhs)) return false;
        }
    return true;
}

SkewAlgebra::Element pi_sharp_degree2(const TateComplex& tate, const RResolutionStart& rres,
                                      const GCMonomial& r_mono) {
    // the functional dual to an R-side degree-2 monomial, composed with psi
    SkewAlgebra::Element out;
    const Monomial one4(4);
    for (const GCMonomial& q2 : tate.dg().monomials(2)) {
        FreeDGAlgebra::Element img = psi_lift(tate, rres, q2);
        auto it = img.find(r_mono);
        if (it == img.end()) continue;
        // evaluate through the augmentation (constant term of the coefficient)
        Rational val = it->second.coeff(one4);
        if (val.is_zero()) continue;
        out = SkewAlgebra::add(std::move(out), SkewAlgebra::scale(hstar_dual(q2), val));
    }
    return out;
}

PiSharpTable pi_sharp_generators(const TateComplex& tate, const RResolutionStart& rres) {
    PiSharpTable table;
    const Monomial one4(4);

    // gamma_i = T_i^*, composed with psi on homological degree 1
    for (int i = 0; i < 4; ++i) {
        SkewAlgebra::Element img;
        for (const GCMonomial& q1 : tate.dg().monomials(1)) {
            FreeDGAlgebra::Element e = psi_lift(tate, rres, q1);
            GCMonomial ti;
            ti.odd = 1u << i;
            ti.even.assign(9, 0);
            auto it = e.find(ti);
            if (it == e.end()) continue;
            Rational val = it->second.coeff(one4);
            if (!val.is_zero()) img = SkewAlgebra::add(std::move(img), SkewAlgebra::scale(hstar_dual(q1), val));
        }
        table.gamma.push_back(std::move(img));
    }

    for (int j : {1, 2, 5, 6, 7, 8, 9, 10, 11}) {
        GCMonomial sj;
        sj.even.assign(9, 0);
        sj.even[RResolutionStart::s_slot(j)] = 1;
        table.delta[j] = pi_sharp_degree2(tate, rres, sj);
    }

    // reference table: gamma_i ↦ a_i; delta_1, delta_2 ↦ a_i^2;
    // delta_5..delta_8 ↦ -a_i^2; delta_9..delta_11 ↦ 0
    for (int i = 0; i < 4; ++i)
        if (!(table.gamma[i] == SkewAlgebra::word({i})))
            throw std::logic_error("pi_sharp_generators: gamma image disagrees with the reference");
    auto expect = [&](int j, const SkewAlgebra::Element& e) {
        if (!(table.delta.at(j) == e))
            throw std::logic_error("pi_sharp_generators: delta image disagrees with the reference");
    };
    expect(1, SkewAlgebra::word({0, 0}));
    expect(2, SkewAlgebra::word({1, 1}));
    for (int j = 5; j <= 8; ++j) expect(j, SkewAlgebra::word({j - 1, j - 1}, Rational(-1)));
    expect(9, {});
    expect(10, {});
    expect(11, {});
    return table;
}

long image_pi_sharp_dim(int degree) {
    if (degree < 0) throw std::invalid_argument("image_pi_sharp_dim: negative degree");
    long count = 0;
    for (int e4 = 0; e4 <= 1 && e4 <= degree; ++e4)
        for (int m5 = 0; e4 + 2 * m5 <= degree; ++m5)
            for (int m6 = 0; e4 + 2 * (m5 + m6) <= degree; ++m6)
                for (int m7 = 0; e4 + 2 * (m5 + m6 + m7) <= degree; ++m7) {
                    int rest = degree - e4 - 2 * (m5 + m6 + m7);
                    // n1 + n2 + n3 = rest, all >= 0
                    count += static_cast<long>(rest + 2) * (rest + 1) / 2;
                }
    return count;
}

}  // namespace wpalg
