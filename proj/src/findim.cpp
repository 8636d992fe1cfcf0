#include "wpalg/findim.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpalg {

namespace {

Echelon echelonize(std::vector<RatVec> rows, std::size_t cols) {
    return reduce_rows(std::move(rows), cols);
}

// Coefficients of v (known to lie in the span) over fully reduced rows.
RatVec span_coords(const Echelon& ech, const RatVec& v) {
    RatVec coeff(ech.rows.size());
    for (std::size_t k = 0; k < ech.rows.size(); ++k) coeff[k] = v[ech.pivot_cols[k]];
    return coeff;
}

std::vector<Echelon> full_spaces(const std::vector<int>& dims) {
    std::vector<Echelon> out(dims.size());
    for (std::size_t v = 0; v < dims.size(); ++v) {
        std::vector<RatVec> rows;
        for (int i = 0; i < dims[v]; ++i) {
            RatVec r(dims[v]);
            r[i] = Rational(1);
            rows.push_back(std::move(r));
        }
        out[v] = echelonize(std::move(rows), dims[v]);
    }
    return out;
}

bool spaces_zero(const std::vector<Echelon>& s) {
    for (const auto& e : s)
        if (!e.rows.empty()) return false;
    return true;
}

}  // namespace

int QuiverRep::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

Matrix QuiverRep::act(const Path& p) const {
    if (p.length() == 0) return Matrix::identity(dims[p.source()]);
    Matrix m = arrow_mats[p.arrows().front()];
    for (std::size_t i = 1; i < p.arrows().size(); ++i) m = arrow_mats[p.arrows()[i]] * m;
    return m;
}

bool QuiverRep::satisfies(const PathElement& relation) const {
    std::map<std::pair<int, int>, PathElement> parts;
    for (const auto& [p, c] : relation.terms()) parts[{p.source(), p.target()}].add(p, c);
    for (const auto& [st, part] : parts) {
        Matrix sum(dims[st.second], dims[st.first]);
        for (const auto& [p, c] : part.terms()) {
            Matrix m = act(p);
            for (std::size_t r = 0; r < sum.rows(); ++r)
                for (std::size_t cc = 0; cc < sum.cols(); ++cc) sum.at(r, cc) += c * m.at(r, cc);
        }
        if (!sum.is_zero()) return false;
    }
    return true;
}

bool RepMap::commutes() const {
    const Quiver& q = *source->quiver;
    for (const Arrow& a : q.arrows()) {
        Matrix lhs = mats[a.tgt] * source->arrow_mats[a.id];
        Matrix rhs = target->arrow_mats[a.id] * mats[a.src];
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool RepMap::is_zero() const {
    for (const Matrix& m : mats)
        if (!m.is_zero()) return false;
    return true;
}

RepMap compose(const RepMap& f, const RepMap& g) {
    if (f.source.get() != g.target.get())
        throw std::invalid_argument("compose(RepMap): endpoint mismatch");
    RepMap r;
    r.source = g.source;
    r.target = f.target;
    for (std::size_t v = 0; v < f.mats.size(); ++v) r.mats.push_back(f.mats[v] * g.mats[v]);
    return r;
}

BasicAlgebra BasicAlgebra::from_path_quotient(std::shared_ptr<const Quiver> q, PathIdeal ideal,
                                              int degree_cap) {
    for (const PathElement& g : ideal.generators())
        if (*g.degree() < 2)
            throw std::invalid_argument("BasicAlgebra: ideal not admissible (relation of length < 2)");

    BasicAlgebra A;
    A.q_ = q;
    A.relations_ = ideal.generators();
    A.graded_ = std::make_shared<GradedQuotient>(q, std::move(ideal));

    // Basis enumeration must terminate: some degree has dimension zero.
    std::vector<std::vector<Path>> per_degree;
    for (int d = 0;; ++d) {
        if (d > degree_cap)
            throw std::runtime_error("BasicAlgebra: dimension did not vanish by the degree cap");
        auto b = A.graded_->basis(d);
        A.degree_dims_.push_back(static_cast<int>(b.size()));
        if (b.empty()) break;
        per_degree.push_back(std::move(b));
    }

    int nv = q->num_vertices();
    for (int v = 0; v < nv; ++v) {
        // basis of Ae_v: surviving paths with source v, grouped by target
        std::vector<std::vector<Path>> basis(nv);
        for (const auto& deg_basis : per_degree)
            for (const Path& p : deg_basis)
                if (p.source() == v) basis[p.target()].push_back(p);
        for (auto& b : basis) std::sort(b.begin(), b.end());

        auto rep = std::make_shared<QuiverRep>();
        rep->quiver = q;
        rep->dims.resize(nv);
        rep->labels.resize(nv);
        std::vector<std::map<Path, int>> index(nv);
        for (int w = 0; w < nv; ++w) {
            rep->dims[w] = static_cast<int>(basis[w].size());
            for (std::size_t i = 0; i < basis[w].size(); ++i) {
                index[w][basis[w][i]] = static_cast<int>(i);
                rep->labels[w].push_back(basis[w][i].label(*q));
            }
        }
        for (const Arrow& a : q->arrows()) {
            Matrix m(rep->dims[a.tgt], rep->dims[a.src]);
            PathElement arrow_elt(Path::of_arrow(a));
            for (std::size_t col = 0; col < basis[a.src].size(); ++col) {
                PathElement prod = arrow_elt.compose(PathElement(basis[a.src][col]));
                PathElement red = A.graded_->reduce(prod);
                for (const auto& [p, c] : red.terms()) m.at(index[a.tgt].at(p), col) = c;
            }
            rep->arrow_mats.push_back(std::move(m));
        }
        A.projectives_.push_back(rep);
        A.generators_.emplace_back(v, index[v].at(Path::stationary(v)));
    }
    return A;
}

BasicAlgebra BasicAlgebra::from_projectives(std::shared_ptr<const Quiver> q,
                                            std::vector<PathElement> relations,
                                            std::vector<RepPtr> projectives,
                                            std::vector<std::pair<int, int>> generators) {
    if (static_cast<int>(projectives.size()) != q->num_vertices() ||
        generators.size() != projectives.size())
        throw std::invalid_argument("BasicAlgebra: need one projective and generator per vertex");
    for (const RepPtr& P : projectives)
        for (const PathElement& r : relations)
            if (!P->satisfies(r))
                throw std::invalid_argument("BasicAlgebra: projective violates a relation");
    BasicAlgebra A;
    A.q_ = std::move(q);
    A.relations_ = std::move(relations);
    A.projectives_ = std::move(projectives);
    A.generators_ = std::move(generators);
    return A;
}

int BasicAlgebra::total_dim() const {
    int t = 0;
    for (const RepPtr& p : projectives_) t += p->total_dim();
    return t;
}

RepPtr BasicAlgebra::simple(int v) const {
    if (v < 0 || v >= num_simples()) throw std::invalid_argument("BasicAlgebra::simple: unknown vertex");
    auto rep = std::make_shared<QuiverRep>();
    rep->quiver = q_;
    rep->dims.assign(num_simples(), 0);
    rep->dims[v] = 1;
    rep->labels.resize(num_simples());
    rep->labels[v].push_back(q_->vertex_label(v));
    for (const Arrow& a : q_->arrows())
        rep->arrow_mats.push_back(Matrix(rep->dims[a.tgt], rep->dims[a.src]));
    return rep;
}

std::vector<RepMap> hom_space(RepPtr M, RepPtr N) {
    if (M->quiver.get() != N->quiver.get())
        throw std::invalid_argument("hom_space: different parent quivers");
    const Quiver& q = *M->quiver;
    int nv = q.num_vertices();
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + N->dims[v] * M->dims[v];
    int unknowns = offset[nv];

    std::vector<RatVec> rows;
    for (const Arrow& a : q.arrows()) {
        const Matrix& Ma = M->arrow_mats[a.id];
        const Matrix& Na = N->arrow_mats[a.id];
        // F_tgt * Ma - Na * F_src = 0, entry (r, c) with r < N.dims[tgt], c < M.dims[src]
        for (int r = 0; r < N->dims[a.tgt]; ++r)
            for (int c = 0; c < M->dims[a.src]; ++c) {
                RatVec row(unknowns);
                bool nonzero = false;
                for (int k = 0; k < M->dims[a.tgt]; ++k) {
                    const Rational& x = Ma.at(k, c);
                    if (x.is_zero()) continue;
                    row[offset[a.tgt] + r * M->dims[a.tgt] + k] += x;
                    nonzero = true;
                }
                for (int k = 0; k < N->dims[a.src]; ++k) {
                    const Rational& x = Na.at(r, k);
                    if (x.is_zero()) continue;
                    row[offset[a.src] + k * M->dims[a.src] + c] -= x;
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    }
    std::vector<RatVec> basis =
        rows.empty() ? [&] {
            std::vector<RatVec> full;
            for (int i = 0; i < unknowns; ++i) {
                RatVec v(unknowns);
                v[i] = Rational(1);
                full.push_back(std::move(v));
            }
            return full;
        }()
                     : [&] {
                           Matrix m(0, unknowns);
                           for (auto& r : rows) m.append_row(r);
                           return null_space(m);
                       }();

    std::vector<RepMap> out;
    for (const RatVec& x : basis) {
        RepMap f;
        f.source = M;
        f.target = N;
        for (int v = 0; v < nv; ++v) {
            Matrix mv(N->dims[v], M->dims[v]);
            for (int r = 0; r < N->dims[v]; ++r)
                for (int c = 0; c < M->dims[v]; ++c) mv.at(r, c) = x[offset[v] + r * M->dims[v] + c];
            f.mats.push_back(std::move(mv));
        }
        out.push_back(std::move(f));
    }
    return out;
}

int hom_dim(RepPtr M, RepPtr N) { return static_cast<int>(hom_space(M, N).size()); }

std::vector<int> SubRep::dims() const {
    std::vector<int> d;
    for (const auto& e : spaces) d.push_back(static_cast<int>(e.rows.size()));
    return d;
}

int SubRep::total_dim() const {
    int t = 0;
    for (const auto& e : spaces) t += static_cast<int>(e.rows.size());
    return t;
}

bool same_subrep(const SubRep& a, const SubRep& b, const std::vector<int>& ambient_dims) {
    for (std::size_t v = 0; v < ambient_dims.size(); ++v) {
        std::vector<RatVec> ra, rb;
        for (const auto& r : a.spaces[v].rows) ra.push_back(r);
        for (const auto& r : b.spaces[v].rows) rb.push_back(r);
        if (!same_row_span(ra, rb, ambient_dims[v])) return false;
    }
    return true;
}

std::vector<SubRep> radical_series(RepPtr M) {
    const Quiver& q = *M->quiver;
    int nv = q.num_vertices();
    std::vector<SubRep> series;
    SubRep cur;
    cur.spaces = full_spaces(M->dims);
    series.push_back(cur);
    while (!spaces_zero(series.back().spaces)) {
        const SubRep& prev = series.back();
        std::vector<std::vector<RatVec>> next(nv);
        for (const Arrow& a : q.arrows()) {
            const Matrix& Ma = M->arrow_mats[a.id];
            for (const RatVec& r : prev.spaces[a.src].rows) {
                RatVec img = Ma.apply(r);
                bool nz = false;
                for (const auto& x : img)
                    if (!x.is_zero()) { nz = true; break; }
                if (nz) next[a.tgt].push_back(std::move(img));
            }
        }
        SubRep s;
        for (int v = 0; v < nv; ++v) s.spaces.push_back(echelonize(std::move(next[v]), M->dims[v]));
        series.push_back(std::move(s));
    }
    return series;
}

std::vector<SubRep> socle_series(RepPtr M) {
    const Quiver& q = *M->quiver;
    int nv = q.num_vertices();
    std::vector<SubRep> series;
    SubRep cur;
    cur.spaces.resize(nv);  // the zero subrep
    for (int v = 0; v < nv; ++v) cur.spaces[v] = echelonize({}, M->dims[v]);
    while (true) {
        // next = { x : every arrow sends x into cur }
        SubRep next;
        for (int v = 0; v < nv; ++v) {
            std::vector<RatVec> rows;
            for (const Arrow& a : q.arrows()) {
                if (a.src != v) continue;
                const Matrix& Ma = M->arrow_mats[a.id];
                const Echelon& soc_t = cur.spaces[a.tgt];
                // condition: eliminate(soc_t, Ma x) = 0, one row per target coord
                for (int r = 0; r < M->dims[a.tgt]; ++r) {
                    RatVec cond(M->dims[v]);
                    bool nz = false;
                    for (int c = 0; c < M->dims[v]; ++c) {
                        // r-th coordinate of eliminate(soc, Ma e_c)
                        RatVec col(M->dims[a.tgt]);
                        for (int k = 0; k < M->dims[a.tgt]; ++k) col[k] = Ma.at(k, c);
                        RatVec red = eliminate(soc_t, std::move(col));
                        cond[c] = red[r];
                        if (!cond[c].is_zero()) nz = true;
                    }
                    if (nz) rows.push_back(std::move(cond));
                }
            }
            if (rows.empty()) {
                next.spaces.push_back(full_spaces({M->dims[v]})[0]);
            } else {
                Matrix m(0, M->dims[v]);
                for (auto& r : rows) m.append_row(r);
                next.spaces.push_back(echelonize(null_space(m), M->dims[v]));
            }
        }
        bool grew = false;
        for (int v = 0; v < nv; ++v)
            if (next.spaces[v].rows.size() != cur.spaces[v].rows.size()) grew = true;
        if (!grew) break;  // stabilized (= M reached)
        series.push_back(next);
        cur = std::move(next);
        if (cur.total_dim() == M->total_dim()) break;
    }
    return series;
}

bool is_rigid(RepPtr M) {
    auto rad = radical_series(M);   // M = R^0 ⊇ ... ⊇ R^l = 0
    auto soc = socle_series(M);     // S^1 ⊂ ... ⊂ S^l = M
    std::size_t l = rad.size() - 1;
    if (soc.size() != l) return false;
    for (std::size_t k = 1; k < l; ++k)
        if (!same_subrep(rad[k], soc[l - k - 1 + 0], M->dims)) {
            // rad[k] should equal soc index l-k (1-based) = soc[l-k-1] (0-based)
            return false;
        }
    return true;
}

std::pair<RepPtr, RepMap> realize_subrep(RepPtr M, const SubRep& S) {
    const Quiver& q = *M->quiver;
    int nv = q.num_vertices();
    auto rep = std::make_shared<QuiverRep>();
    rep->quiver = M->quiver;
    rep->dims.resize(nv);
    rep->labels.resize(nv);
    for (int v = 0; v < nv; ++v) rep->dims[v] = static_cast<int>(S.spaces[v].rows.size());
    for (const Arrow& a : q.arrows()) {
        Matrix m(rep->dims[a.tgt], rep->dims[a.src]);
        for (int c = 0; c < rep->dims[a.src]; ++c) {
            RatVec img = M->arrow_mats[a.id].apply(S.spaces[a.src].rows[c]);
            RatVec coords = span_coords(S.spaces[a.tgt], img);
            // sanity: the residual must vanish (S is a subrepresentation)
            RatVec res = img;
            for (std::size_t k = 0; k < S.spaces[a.tgt].rows.size(); ++k)
                for (std::size_t j = 0; j < res.size(); ++j)
                    res[j] -= coords[k] * S.spaces[a.tgt].rows[k][j];
            for (const auto& x : res)
                if (!x.is_zero()) throw std::logic_error("realize_subrep: not arrow-stable");
            for (int r = 0; r < rep->dims[a.tgt]; ++r) m.at(r, c) = coords[r];
        }
        rep->arrow_mats.push_back(std::move(m));
    }
    RepMap incl;
    incl.source = rep;
    incl.target = M;
    for (int v = 0; v < nv; ++v) {
        Matrix m(M->dims[v], rep->dims[v]);
        for (int c = 0; c < rep->dims[v]; ++c)
            for (int r = 0; r < M->dims[v]; ++r) m.at(r, c) = S.spaces[v].rows[c][r];
        incl.mats.push_back(std::move(m));
    }
    return {rep, incl};
}

namespace {

// Direct sum of projectives P_{v_i} with block bookkeeping.
struct DirectSum {
    RepPtr module;
    std::vector<std::vector<int>> offsets;  // offsets[i][v]: block start of summand i at vertex v
};

DirectSum direct_sum_projectives(const BasicAlgebra& A, const std::vector<int>& verts) {
    const Quiver& q = A.quiver();
    int nv = q.num_vertices();
    auto rep = std::make_shared<QuiverRep>();
    rep->quiver = A.quiver_ptr();
    rep->dims.assign(nv, 0);
    rep->labels.resize(nv);
    DirectSum ds;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        RepPtr P = A.projective(verts[i]);
        std::vector<int> off(nv);
        for (int v = 0; v < nv; ++v) {
            off[v] = rep->dims[v];
            rep->dims[v] += P->dims[v];
            for (int c = 0; c < P->dims[v]; ++c) {
                std::string base =
                    P->labels[v].empty() ? std::to_string(c) : P->labels[v][c];
                rep->labels[v].push_back(std::to_string(i) + ":" + base);
            }
        }
        ds.offsets.push_back(std::move(off));
    }
    for (const Arrow& a : q.arrows()) {
        Matrix m(rep->dims[a.tgt], rep->dims[a.src]);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            RepPtr P = A.projective(verts[i]);
            const Matrix& blk = P->arrow_mats[a.id];
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    m.at(ds.offsets[i][a.tgt] + r, ds.offsets[i][a.src] + c) = blk.at(r, c);
        }
        rep->arrow_mats.push_back(std::move(m));
    }
    ds.module = rep;
    return ds;
}

}  // namespace

Cover projective_cover(const BasicAlgebra& A, RepPtr M) {
    const Quiver& q = A.quiver();
    int nv = q.num_vertices();

    // top(M): standard unit vectors at the non-pivot columns of Rad(M)
    auto rad = radical_series(M);
    const SubRep& R = rad.size() > 1 ? rad[1] : rad[0];
    std::vector<std::pair<int, int>> tops;  // (vertex, coordinate)
    for (int v = 0; v < nv; ++v) {
        std::vector<bool> is_pivot(M->dims[v], false);
        if (rad.size() > 1)
            for (std::size_t c : R.spaces[v].pivot_cols) is_pivot[c] = true;
        for (int c = 0; c < M->dims[v]; ++c)
            if (!is_pivot[c]) tops.emplace_back(v, c);
    }

    Cover cover;
    for (const auto& [v, c] : tops) cover.summand_vertices.push_back(v);
    DirectSum ds = direct_sum_projectives(A, cover.summand_vertices);
    cover.module = ds.module;
    for (std::size_t i = 0; i < tops.size(); ++i) {
        auto [gv, gidx] = A.generator(cover.summand_vertices[i]);
        cover.generators.emplace_back(gv, ds.offsets[i][gv] + gidx);
    }

    // cover map: on summand i, the unique hom P_v -> M with e_v ↦ top vector
    std::map<int, std::vector<RepMap>> hom_cache;
    RepMap onto;
    onto.source = cover.module;
    onto.target = M;
    for (int v = 0; v < nv; ++v) onto.mats.push_back(Matrix(M->dims[v], cover.module->dims[v]));
    for (std::size_t i = 0; i < tops.size(); ++i) {
        int pv = cover.summand_vertices[i];
        auto it = hom_cache.find(pv);
        if (it == hom_cache.end()) it = hom_cache.emplace(pv, hom_space(A.projective(pv), M)).first;
        const std::vector<RepMap>& homs = it->second;
        auto [gv, gidx] = A.generator(pv);
        // evaluation at the generator is an isomorphism Hom(P_v, M) -> M_v
        Matrix ev(M->dims[gv], homs.size());
        for (std::size_t j = 0; j < homs.size(); ++j)
            for (int r = 0; r < M->dims[gv]; ++r) ev.at(r, j) = homs[j].mats[gv].at(r, gidx);
        RatVec target_vec(M->dims[gv]);
        target_vec[tops[i].second] = Rational(1);
        auto coeff = solve(ev, target_vec);
        if (!coeff) throw std::logic_error("projective_cover: generator not reachable");
        RepPtr P = A.projective(pv);
        for (int v = 0; v < nv; ++v)
            for (int c = 0; c < P->dims[v]; ++c)
                for (int r = 0; r < M->dims[v]; ++r) {
                    Rational sum;
                    for (std::size_t j = 0; j < homs.size(); ++j)
                        if (!(*coeff)[j].is_zero()) sum += (*coeff)[j] * homs[j].mats[v].at(r, c);
                    onto.mats[v].at(r, ds.offsets[i][v] + c) = sum;
                }
    }
    // surjectivity (guaranteed by Nakayama; checked exactly)
    for (int v = 0; v < nv; ++v) {
        std::vector<RatVec> img;
        for (std::size_t c = 0; c < onto.mats[v].cols(); ++c) {
            RatVec col(M->dims[v]);
            for (int r = 0; r < M->dims[v]; ++r) col[r] = onto.mats[v].at(r, c);
            img.push_back(std::move(col));
        }
        if (static_cast<int>(reduce_rows(std::move(img), M->dims[v]).rows.size()) != M->dims[v])
            throw std::logic_error("projective_cover: not surjective");
    }
    cover.onto = std::move(onto);
    return cover;
}

std::pair<RepPtr, RepMap> kernel(const RepMap& f) {
    int nv = f.source->quiver->num_vertices();
    SubRep S;
    for (int v = 0; v < nv; ++v)
        S.spaces.push_back(echelonize(null_space(f.mats[v]), f.source->dims[v]));
    return realize_subrep(f.source, S);
}

ProjectiveResolution::ProjectiveResolution(const BasicAlgebra& A, RepPtr M, int steps) {
    target_ = std::move(M);
    Cover c0 = projective_cover(A, target_);
    modules_.push_back(c0.module);
    vertices_.push_back(c0.summand_vertices);
    gens_.push_back(c0.generators);
    aug_ = c0.onto;
    last_kernel_ = kernel(aug_);
    extend(A, steps);
}

void ProjectiveResolution::extend(const BasicAlgebra& A, int steps) {
    while (this->steps() < steps) {
        Cover c = projective_cover(A, last_kernel_.first);
        RepMap diff = compose(last_kernel_.second, c.onto);
        modules_.push_back(c.module);
        vertices_.push_back(c.summand_vertices);
        gens_.push_back(c.generators);
        diffs_.push_back(diff);
        last_kernel_ = kernel(c.onto);
        // fix: the kernel of ∂ equals the kernel of the cover map onto K
        // (the inclusion into P_{k-1} is injective), so this is ker ∂.
    }
}

bool ProjectiveResolution::verify_minimal_exact() const {
    int nv = target_->quiver->num_vertices();
    // ∂² = 0
    if (!diffs_.empty() && !compose(aug_, diffs_[0]).is_zero()) return false;
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
        if (!compose(diffs_[k], diffs_[k + 1]).is_zero()) return false;
    // minimality: image inside the radical of the target of each map
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        auto rad = radical_series(modules_[k]);
        if (rad.size() < 2) {
            if (!diffs_[k].is_zero()) return false;
            continue;
        }
        for (int v = 0; v < nv; ++v)
            for (std::size_t c = 0; c < diffs_[k].mats[v].cols(); ++c) {
                RatVec col(modules_[k]->dims[v]);
                for (int r = 0; r < modules_[k]->dims[v]; ++r) col[r] = diffs_[k].mats[v].at(r, c);
                if (!in_span(rad[1].spaces[v], col)) return false;
            }
    }
    // exactness at P_k for k < computed steps (per vertex rank counts)
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        const RepMap& out = k == 0 ? aug_ : diffs_[k - 1];
        for (int v = 0; v < nv; ++v) {
            std::size_t dim_v = modules_[k]->dims[v];
            std::size_t ker = dim_v - rank(out.mats[v]);
            if (rank(diffs_[k].mats[v]) != ker) return false;
        }
    }
    return true;
}

const ProjectiveResolution& ExtEngine::resolution(int simple, int min_steps) {
    auto it = cache_.find(simple);
    if (it == cache_.end())
        it = cache_.emplace(simple, ProjectiveResolution(*A_, A_->simple(simple), min_steps)).first;
    if (it->second.steps() < min_steps) it->second.extend(*A_, min_steps);
    return it->second;
}

int ExtEngine::ext_dim(int a, int b, int n) {
    if (n < 0) throw std::invalid_argument("ext_dim: negative degree");
    const ProjectiveResolution& res = resolution(a, n);
    int count = 0;
    for (int v : res.summand_vertices(n))
        if (v == b) ++count;
    return count;
}

std::vector<ExtClass> ExtEngine::ext_basis(int a, int b, int n) {
    int d = ext_dim(a, b, n);
    std::vector<ExtClass> out;
    for (int i = 0; i < d; ++i) {
        ExtClass c{n, a, b, RatVec(d)};
        c.coords[i] = Rational(1);
        out.push_back(std::move(c));
    }
    return out;
}

ExtClass ExtEngine::identity(int simple) const {
    return ExtClass{0, simple, simple, {Rational(1)}};
}

namespace {

/// The unique module map from a direct sum of projectives with the given
/// generator images (a hom from a projective is free on its generator).
RepMap hom_from_gen_images(const BasicAlgebra& A, RepPtr P, const std::vector<int>& verts,
                           RepPtr N, const std::vector<RatVec>& images) {
    const Quiver& q = A.quiver();
    int nv = q.num_vertices();
    RepMap f;
    f.source = P;
    f.target = N;
    for (int v = 0; v < nv; ++v) f.mats.push_back(Matrix(N->dims[v], P->dims[v]));

    std::map<int, std::vector<RepMap>> hom_cache;
    std::vector<int> run(nv, 0);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int pv = verts[i];
        RepPtr Pi = A.projective(pv);
        std::vector<int> off = run;
        for (int v = 0; v < nv; ++v) run[v] += Pi->dims[v];

        bool zero = true;
        for (const auto& x : images[i])
            if (!x.is_zero()) zero = false;
        if (zero) continue;

        auto it = hom_cache.find(pv);
        if (it == hom_cache.end()) it = hom_cache.emplace(pv, hom_space(Pi, N)).first;
        const std::vector<RepMap>& homs = it->second;
        auto [gv, gidx] = A.generator(pv);
        Matrix ev(N->dims[gv], homs.size());
        for (std::size_t j = 0; j < homs.size(); ++j)
            for (int r = 0; r < N->dims[gv]; ++r) ev.at(r, j) = homs[j].mats[gv].at(r, gidx);
        auto coeff = solve(ev, images[i]);
        if (!coeff) throw std::logic_error("hom_from_gen_images: unreachable image");
        for (int v = 0; v < nv; ++v)
            for (int c = 0; c < Pi->dims[v]; ++c)
                for (int r = 0; r < N->dims[v]; ++r) {
                    Rational sum;
                    for (std::size_t j = 0; j < homs.size(); ++j)
                        if (!(*coeff)[j].is_zero()) sum += (*coeff)[j] * homs[j].mats[v].at(r, c);
                    f.mats[v].at(r, off[v] + c) = sum;
                }
    }
    return f;
}

}  // namespace

RepMap ExtEngine::hom_from_generator_images(const ProjectiveResolution& res, int k, RepPtr N,
                                            const std::vector<RatVec>& images) {
    return hom_from_gen_images(*A_, res.module(k), res.summand_vertices(k), N, images);
}

ExtClass ExtEngine::compose(const ExtClass& f, const ExtClass& g) {
    if (f.source != g.target)
        throw std::invalid_argument("yoneda compose: endpoints do not match");
    int m = f.degree, n = g.degree;
    const ProjectiveResolution& RL = resolution(g.source, n + m);
    const ProjectiveResolution& RM = resolution(g.target, m);

    // chain map g_k : P^L_{n+k} -> P^M_k lifting the cocycle g
    // g_0: generator at vertex u maps to (scalar)·e if u = vertex(M), else 0.
    std::vector<RatVec> images;
    {
        const auto& verts = RL.summand_vertices(n);
        int at = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            RepPtr P0 = RM.module(0);
            RatVec img(P0->dims[verts[i]]);
            if (verts[i] == g.target) {
                const Rational& scalar = g.coords[at++];
                auto [gv, gidx] = RM.generators(0)[0];
                if (!scalar.is_zero()) img[gidx] = scalar;
            }
            images.push_back(std::move(img));
        }
    }
    RepMap gk = hom_from_generator_images(RL, n, RM.module(0), images);
    for (int k = 1; k <= m; ++k) {
        const RepMap& dM = RM.differential(k);
        const RepMap& dL = RL.differential(n + k);
        RepMap rhs = wpalg::compose(gk, dL);  // P^L_{n+k} -> P^M_{k-1}
        const auto& gens = RL.generators(n + k);
        std::vector<RatVec> imgs;
        for (const auto& [gv, gidx] : gens) {
            RatVec e(RL.module(n + k)->dims[gv]);
            e[gidx] = Rational(1);
            RatVec target_vec = rhs.apply(gv, e);
            auto y = solve(dM.mats[gv], target_vec);
            if (!y) throw std::logic_error("yoneda compose: lifting system inconsistent");
            imgs.push_back(std::move(*y));
        }
        gk = hom_from_generator_images(RL, n + k, RM.module(k), imgs);
    }

    // F: P^M_m -> S_target from f's coordinates, then read (F ∘ g_m)'s
    // generator scalars at the target vertex.
    RepPtr SN = A_->simple(f.target);
    std::vector<RatVec> f_imgs;
    {
        const auto& verts = RM.summand_vertices(m);
        int at = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            RatVec img(SN->dims[verts[i]]);
            if (verts[i] == f.target) img[0] = f.coords[at++];
            f_imgs.push_back(std::move(img));
        }
    }
    RepMap F = hom_from_generator_images(RM, m, SN, f_imgs);
    RepMap total = wpalg::compose(F, gk);

    ExtClass out{m + n, g.source, f.target, {}};
    for (std::size_t i = 0; i < RL.summand_vertices(n + m).size(); ++i) {
        const auto& [gv, gidx] = RL.generators(n + m)[i];
        if (RL.summand_vertices(n + m)[i] != f.target) continue;
        RatVec e(RL.module(n + m)->dims[gv]);
        e[gidx] = Rational(1);
        RatVec val = total.apply(gv, e);
        out.coords.push_back(val[0]);
    }
    return out;
}

int ext_dim(const BasicAlgebra& A, RepPtr M, RepPtr N, int n) {
    if (n < 0) throw std::invalid_argument("ext_dim: negative degree");
    ProjectiveResolution res(A, M, n + 1);

    // Hom(P_k, N) in generator-image coordinates (one block of size
    // dim N_{v_i} per summand); the matrix of each induced map is read off
    // by composing the coordinate basis homs with the differential.
    auto hom_dim_at = [&](int k) {
        int t = 0;
        for (int v : res.summand_vertices(k)) t += N->dims[v];
        return t;
    };
    auto read_gen_images = [&](const RepMap& f, int k) {
        RatVec out;
        const auto& verts = res.summand_vertices(k);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const auto& [gv, gidx] = res.generators(k)[i];
            RatVec e(res.module(k)->dims[gv]);
            e[gidx] = Rational(1);
            RatVec val = f.apply(gv, e);
            out.insert(out.end(), val.begin(), val.end());
        }
        return out;
    };
    auto dstar_rank = [&](int k) -> std::size_t {
        if (k == 0) return 0;
        const auto& gens_prev = res.summand_vertices(k - 1);
        int cols = hom_dim_at(k - 1);
        int nrows = hom_dim_at(k);
        if (cols == 0 || nrows == 0) return 0;
        Matrix mat(nrows, cols);
        int col = 0;
        for (std::size_t j = 0; j < gens_prev.size(); ++j)
            for (int mu = 0; mu < N->dims[gens_prev[j]]; ++mu, ++col) {
                std::vector<RatVec> imgs;
                for (std::size_t i = 0; i < gens_prev.size(); ++i) {
                    RatVec img(N->dims[gens_prev[i]]);
                    if (i == j) img[mu] = Rational(1);
                    imgs.push_back(std::move(img));
                }
                RepMap f = hom_from_gen_images(A, res.module(k - 1),
                                               res.summand_vertices(k - 1), N, imgs);
                RatVec column = read_gen_images(compose(f, res.differential(k)), k);
                for (int r = 0; r < nrows; ++r) mat.at(r, col) = column[r];
            }
        return rank(mat);
    };
    return hom_dim_at(n) - static_cast<int>(dstar_rank(n)) - static_cast<int>(dstar_rank(n + 1));
}

Quiver ext_quiver(const BasicAlgebra& A) {
    Quiver out;
    for (int v = 0; v < A.num_simples(); ++v) out.add_vertex(A.quiver().vertex_label(v));
    for (int a = 0; a < A.num_simples(); ++a) {
        auto rad = radical_series(A.projective(a));
        for (int b = 0; b < A.num_simples(); ++b) {
            int d1 = rad.size() > 1 ? static_cast<int>(rad[1].spaces[b].rows.size()) : 0;
            int d2 = rad.size() > 2 ? static_cast<int>(rad[2].spaces[b].rows.size()) : 0;
            int count = d1 - d2;
            for (int i = 0; i < count; ++i)
                out.add_arrow(a, b,
                              "(" + A.quiver().vertex_label(a) + "->" + A.quiver().vertex_label(b) +
                                  ")#" + std::to_string(i + 1));
        }
    }
    return out;
}

}  // namespace wpalg
