#include "wpalg/quadratic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wpalg {

namespace {

// Reverse a path's traversal and reinterpret the arrows in the given
// (opposite) quiver. Works both Q -> Q^op and back since ids are shared.
Path reverse_path(const Quiver& target_quiver, const Path& p) {
    if (p.length() == 0) return Path::stationary(p.source());
    std::vector<int> ids(p.arrows().rbegin(), p.arrows().rend());
    return Path::along(target_quiver, ids);
}

void check_compatible(const Quiver& a, const Quiver& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_arrows() != b.num_arrows())
        throw std::invalid_argument("QuadraticPresentation: quivers are not identically numbered");
    for (int i = 0; i < a.num_arrows(); ++i)
        if (a.arrow(i).src != b.arrow(i).src || a.arrow(i).tgt != b.arrow(i).tgt)
            throw std::invalid_argument("QuadraticPresentation: quivers are not identically numbered");
}

}  // namespace

QuadraticPresentation::QuadraticPresentation(std::shared_ptr<const Quiver> q,
                                             const std::vector<PathElement>& relations)
    : q_(std::move(q)) {
    // Split every relation into bihomogeneous parts, then normalize each
    // (source, target) block to reduced row echelon form.
    std::map<std::pair<int, int>, std::vector<PathElement>> blocks;
    for (const PathElement& r : relations) {
        if (r.is_zero()) continue;
        std::map<std::pair<int, int>, PathElement> parts;
        for (const auto& [p, c] : r.terms()) {
            if (p.length() != 2)
                throw std::invalid_argument("QuadraticPresentation: relation not of length 2");
            parts[{p.source(), p.target()}].add(p, c);
        }
        for (auto& [st, part] : parts) blocks[st].push_back(std::move(part));
    }
    for (auto& [st, gens] : blocks) {
        auto paths = enumerate_paths(*q_, st.first, st.second, 2);
        std::map<Path, std::size_t> index;
        for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;
        std::vector<RatVec> rows;
        for (const PathElement& g : gens) {
            RatVec row(paths.size());
            for (const auto& [p, c] : g.terms()) row[index.at(p)] = c;
            rows.push_back(std::move(row));
        }
        Echelon ech = reduce_rows(std::move(rows), paths.size());
        // sort rows by pivot column for a canonical listing
        std::vector<std::size_t> perm(ech.rows.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(),
                  [&](std::size_t a, std::size_t b) { return ech.pivot_cols[a] < ech.pivot_cols[b]; });
        for (std::size_t k : perm) {
            PathElement rel;
            for (std::size_t i = 0; i < paths.size(); ++i)
                if (!ech.rows[k][i].is_zero()) rel.add(paths[i], ech.rows[k][i]);
            relations_.push_back(std::move(rel));
        }
    }
}

bool QuadraticPresentation::same_relation_span(const QuadraticPresentation& o) const {
    check_compatible(*q_, *o.q_);
    return relations_ == o.relations_;  // both sides are canonical
}

std::string QuadraticPresentation::to_json() const {
    std::ostringstream os;
    os << "{\"quiver\":" << q_->to_json() << ",\"relations\":[";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        if (i) os << ",";
        os << "{";
        bool first = true;
        for (const auto& [p, c] : relations_[i].terms()) {
            if (!first) os << ",";
            first = false;
            os << "\"" << p.label(*q_) << "\":\"" << c.to_string() << "\"";
        }
        os << "}";
    }
    os << "]}";
    return os.str();
}

QuadraticPresentation opposite(const QuadraticPresentation& pres) {
    auto opq = std::make_shared<Quiver>(pres.quiver().opposite());
    std::vector<PathElement> rels;
    for (const PathElement& r : pres.relations()) {
        PathElement rr;
        for (const auto& [p, c] : r.terms()) rr.add(reverse_path(*opq, p), c);
        rels.push_back(std::move(rr));
    }
    return QuadraticPresentation(opq, rels);
}

QuadraticPresentation perp(const QuadraticPresentation& pres) {
    const Quiver& q = pres.quiver();
    auto opq = std::make_shared<Quiver>(q.opposite());

    // group relations by block
    std::map<std::pair<int, int>, std::vector<const PathElement*>> by_block;
    for (const PathElement& r : pres.relations()) by_block[*r.block()].push_back(&r);

    std::vector<PathElement> out;
    for (int s = 0; s < q.num_vertices(); ++s)
        for (int t = 0; t < q.num_vertices(); ++t) {
            auto paths = enumerate_paths(q, s, t, 2);
            if (paths.empty()) continue;
            std::map<Path, std::size_t> index;
            for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;
            Matrix m(0, paths.size());
            auto it = by_block.find({s, t});
            if (it != by_block.end())
                for (const PathElement* r : it->second) {
                    RatVec row(paths.size());
                    for (const auto& [p, c] : r->terms()) row[index.at(p)] = c;
                    m.append_row(row);
                }
            // w = sum c_p * op(p) is in the perp iff <r, w> = sum r_p c_p = 0
            // for every relation r of this block.
            std::vector<RatVec> kernel =
                it == by_block.end() ? [&] {
                    std::vector<RatVec> full;
                    for (std::size_t i = 0; i < paths.size(); ++i) {
                        RatVec v(paths.size());
                        v[i] = Rational(1);
                        full.push_back(std::move(v));
                    }
                    return full;
                }()
                                     : null_space(m);
            for (const RatVec& v : kernel) {
                PathElement rel;
                for (std::size_t i = 0; i < paths.size(); ++i)
                    if (!v[i].is_zero()) rel.add(reverse_path(*opq, paths[i]), v[i]);
                out.push_back(std::move(rel));
            }
        }
    return QuadraticPresentation(opq, out);
}

QuadraticPresentation quadratic_dual(const QuadraticPresentation& pres) {
    return perp(pres);  // the constructor performs the normalization
}

}  // namespace wpalg
