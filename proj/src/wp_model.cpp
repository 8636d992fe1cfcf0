#include "wpalg/wp_model.hpp"

#include "wpalg/rings.hpp"

#include <stdexcept>

namespace wpalg {

int WpInstance::vertex_plus(int s) const { return 2 * (s - 1); }
int WpInstance::vertex_minus(int s) const { return 2 * (s - 1) + 1; }

namespace {

PathElement word2(const Quiver& q, int second, int first) {
    // the written word "second*first" (first acts first)
    return PathElement(*Path::of_arrow(q.arrow(second)).compose(Path::of_arrow(q.arrow(first))));
}

}  // namespace

WpInstance build_wp_instance(int p) {
    if (p < 2) throw std::invalid_argument("build_wp_instance: requires p >= 2");

    auto q = std::make_shared<Quiver>();
    for (int s = 1; s <= p; ++s) {
        q->add_vertex("X" + std::to_string(s) + "+");
        q->add_vertex("X" + std::to_string(s) + "-");
    }
    // arrows alpha_{s,i}: X_s^- -> X_s^+ and beta_{s,i}: X_s^+ -> X_s^-
    std::vector<std::array<int, 4>> ar;  // per s: a1, a2, b1, b2
    for (int s = 1; s <= p - 1; ++s) {
        int vp = 2 * (s - 1), vm = 2 * (s - 1) + 1;
        std::array<int, 4> ids{};
        ids[0] = q->add_arrow(vm, vp, "alpha" + std::to_string(s) + "1");
        ids[1] = q->add_arrow(vm, vp, "alpha" + std::to_string(s) + "2");
        ids[2] = q->add_arrow(vp, vm, "beta" + std::to_string(s) + "1");
        ids[3] = q->add_arrow(vp, vm, "beta" + std::to_string(s) + "2");
        ar.push_back(ids);
    }

    // Endomorphism-algebra relations in the opposite form (ideal of kQ):
    // a1*b2 - a2*b1, ai*bi, b1*a2 - b2*a1, bi*ai for each block.
    std::vector<PathElement> endo_rels;
    // Yoneda relations: a1*b2 + a2*b1 and b1*a2 + b2*a1.
    std::vector<PathElement> yoneda_rels;
    for (const auto& ids : ar) {
        int a1 = ids[0], a2 = ids[1], b1 = ids[2], b2 = ids[3];
        endo_rels.push_back(word2(*q, a1, b2) - word2(*q, a2, b1));
        endo_rels.push_back(word2(*q, a1, b1));
        endo_rels.push_back(word2(*q, a2, b2));
        endo_rels.push_back(word2(*q, b1, a2) - word2(*q, b2, a1));
        endo_rels.push_back(word2(*q, b1, a1));
        endo_rels.push_back(word2(*q, b2, a2));
        yoneda_rels.push_back(word2(*q, a1, b2) + word2(*q, a2, b1));
        yoneda_rels.push_back(word2(*q, b1, a2) + word2(*q, b2, a1));
    }

    auto zq = std::make_shared<Quiver>();
    std::vector<int> loops;
    for (int s = 1; s <= p; ++s) {
        int vp = zq->add_vertex("X" + std::to_string(s) + "+(0)");
        zq->add_vertex("X" + std::to_string(s) + "-(0)");
        if (s <= p - 1) loops.push_back(zq->add_arrow(vp, vp, "gamma" + std::to_string(s)));
    }
    std::vector<PathElement> zhu_rels;
    for (int id : loops) zhu_rels.push_back(word2(*zq, id, id));

    QuadraticPresentation basic_pres(q, endo_rels);
    return WpInstance{
        p,
        q,
        BasicAlgebra::from_path_quotient(q, PathIdeal(endo_rels)),
        QuadraticPresentation(q, yoneda_rels),
        opposite(basic_pres),
        zq,
        BasicAlgebra::from_path_quotient(zq, PathIdeal(zhu_rels)),
    };
}

int zhu_yoneda_dim(int p, int n) {
    if (p < 2) throw std::invalid_argument("zhu_yoneda_dim: requires p >= 2");
    if (n < 0) throw std::invalid_argument("zhu_yoneda_dim: requires n >= 0");
    return n == 0 ? 2 * p : p - 1;
}

int graded_grA_ext1(int p, long shift) {
    if (p < 2) throw std::invalid_argument("graded_grA_ext1: requires p >= 2");
    if (shift == 2 * p - 1) return 3;
    if (shift == 2) return 1;
    return 0;
}

Quiver graded_grA_quiver_window(int p, long k_min, long k_max) {
    if (p < 2) throw std::invalid_argument("graded_grA_quiver_window: requires p >= 2");
    if (k_min > k_max) throw std::invalid_argument("graded_grA_quiver_window: empty window");
    Quiver out;
    std::map<long, int> id_of;
    for (long k = k_min; k <= k_max; ++k) id_of[k] = out.add_vertex(std::to_string(k));
    for (long k = k_min; k <= k_max; ++k) {
        if (k + 2 * p - 1 <= k_max)
            for (const char* lbl : {"E", "F", "H"})
                out.add_arrow(id_of[k], id_of[k + 2 * p - 1],
                              std::string(lbl) + "@" + std::to_string(k));
        if (k + 2 <= k_max)
            out.add_arrow(id_of[k], id_of[k + 2], "omega@" + std::to_string(k));
    }
    return out;
}

BasicAlgebra build_grA_basic(int p) {
    QuotientRing R = build_grA(p);
    auto q = std::make_shared<Quiver>();
    int v = q->add_vertex("C");
    for (const auto& name : R.ring()->vars) q->add_arrow(v, v, name);

    auto rep = std::make_shared<QuiverRep>();
    rep->quiver = q;
    rep->dims = {R.dim()};
    rep->labels.resize(1);
    for (const Monomial& m : R.basis())
        rep->labels[0].push_back(Polynomial::term(R.ring(), m, Rational(1)).to_string());
    for (std::size_t i = 0; i < 4; ++i) rep->arrow_mats.push_back(R.multiplication_matrix(i));

    // relations: pairwise commutators plus the quotient relations as words
    std::vector<PathElement> rels;
    auto word_of = [&](const Monomial& m, const Rational& c) {
        std::vector<int> ids;
        for (int var = 0; var < 4; ++var)
            for (int e = 0; e < m[var]; ++e) ids.push_back(var);
        PathElement out;
        if (ids.empty())
            out.add(Path::stationary(v), c);
        else
            out.add(Path::along(*q, ids), c);
        return out;
    };
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            PathElement comm;
            comm.add(Path::along(*q, {i, j}), Rational(1));
            comm.add(Path::along(*q, {j, i}), Rational(-1));
            rels.push_back(std::move(comm));
        }
    for (const Polynomial& rel : grA_relations(p)) {
        PathElement e;
        for (const auto& [m, c] : rel.terms()) e += word_of(m, c);
        rels.push_back(std::move(e));
    }

    std::size_t one_index = R.basis_index(Monomial(4));
    return BasicAlgebra::from_projectives(q, std::move(rels), {rep},
                                          {{0, static_cast<int>(one_index)}});
}

namespace {

// Largest d with a nonzero d-th finite difference on the tail; requires the
// (d+1)-st difference to vanish on at least `confirm` trailing entries.
std::optional<int> stable_poly_degree(std::vector<long> seq, int confirm) {
    for (int d = 0; static_cast<int>(seq.size()) >= confirm; ++d) {
        bool tail_zero = true;
        int seen = 0;
        for (std::size_t i = seq.size(); i-- > 0 && seen < confirm; ++seen)
            if (seq[i] != 0) tail_zero = false;
        if (tail_zero) return d - 1;
        std::vector<long> diff;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) diff.push_back(seq[i + 1] - seq[i]);
        seq = std::move(diff);
    }
    return std::nullopt;
}

}  // namespace

GkEstimate gk_dimension_from_dims(const std::vector<long>& dims, GrowthModel model) {
    if (dims.size() < 9) throw std::invalid_argument("gk_dimension_from_dims: need degrees 0..8");

    if (model == GrowthModel::PolynomialGrowth) {
        std::vector<long> cum(dims.size());
        long run = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) cum[i] = (run += dims[i]);
        auto deg = stable_poly_degree(cum, 3);
        if (deg) return GkEstimate{true, *deg, *deg, *deg};
        return GkEstimate{false, -1, static_cast<int>(dims.size()) - 3, -1};
    }

    // RationalSeries: dims split by parity are eventually polynomial when the
    // generating series has poles only at t = ±1; pole order at 1 is
    // max(parity polynomial degree) + 1.
    std::vector<long> even, odd;
    for (std::size_t i = 0; i < dims.size(); ++i) (i % 2 ? odd : even).push_back(dims[i]);
    auto de = stable_poly_degree(even, 3);
    auto dodd = stable_poly_degree(odd, 3);
    if (de && dodd) {
        int pole = std::max(*de, *dodd) + 1;
        return GkEstimate{true, pole, pole, pole};
    }
    return GkEstimate{false, -1, 1, -1};
}

}  // namespace wpalg
