#include "wpalg/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wpalg {

int Quiver::add_vertex(std::string label) {
    vertices_.push_back(std::move(label));
    return static_cast<int>(vertices_.size()) - 1;
}

int Quiver::add_arrow(int src, int tgt, std::string label) {
    if (src < 0 || src >= num_vertices() || tgt < 0 || tgt >= num_vertices())
        throw std::invalid_argument("Quiver::add_arrow: unknown vertex");
    int id = static_cast<int>(arrows_.size());
    arrows_.push_back(Arrow{id, src, tgt, std::move(label)});
    return id;
}

std::optional<int> Quiver::vertex_by_label(const std::string& label) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (vertices_[v] == label) return v;
    return std::nullopt;
}

std::optional<int> Quiver::arrow_by_label(const std::string& label) const {
    for (const Arrow& a : arrows_)
        if (a.label == label) return a.id;
    return std::nullopt;
}

std::vector<int> Quiver::arrows_from(int v) const {
    std::vector<int> out;
    for (const Arrow& a : arrows_)
        if (a.src == v) out.push_back(a.id);
    return out;
}

std::vector<int> Quiver::arrows_into(int v) const {
    std::vector<int> out;
    for (const Arrow& a : arrows_)
        if (a.tgt == v) out.push_back(a.id);
    return out;
}

Quiver Quiver::opposite() const {
    Quiver op;
    op.vertices_ = vertices_;
    op.arrows_ = arrows_;
    for (Arrow& a : op.arrows_) std::swap(a.src, a.tgt);
    return op;
}

std::string Quiver::to_dot() const {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int v = 0; v < num_vertices(); ++v)
        os << "  v" << v << " [label=\"" << vertices_[v] << "\"];\n";
    for (const Arrow& a : arrows_)
        os << "  v" << a.src << " -> v" << a.tgt << " [label=\"" << a.label << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string Quiver::to_json() const {
    std::ostringstream os;
    os << "{\"vertices\":[";
    for (int v = 0; v < num_vertices(); ++v) {
        if (v) os << ",";
        os << "{\"id\":" << v << ",\"label\":\"" << vertices_[v] << "\"}";
    }
    os << "],\"arrows\":[";
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        if (i) os << ",";
        os << "{\"id\":" << a.id << ",\"src\":" << a.src << ",\"tgt\":" << a.tgt
           << ",\"label\":\"" << a.label << "\"}";
    }
    os << "]}";
    return os.str();
}

Path Path::along(const Quiver& q, const std::vector<int>& arrow_ids) {
    if (arrow_ids.empty()) throw std::invalid_argument("Path::along: empty; use stationary()");
    int src = q.arrow(arrow_ids.front()).src;
    int cur = src;
    for (int id : arrow_ids) {
        const Arrow& a = q.arrow(id);
        if (a.src != cur) throw std::invalid_argument("Path::along: arrows not composable");
        cur = a.tgt;
    }
    return Path(src, cur, arrow_ids);
}

std::optional<Path> Path::compose(const Path& y) const {
    if (y.target_ != source_) return std::nullopt;
    std::vector<int> ids = y.arrows_;
    ids.insert(ids.end(), arrows_.begin(), arrows_.end());
    return Path(y.source_, target_, std::move(ids));
}

std::string Path::label(const Quiver& q) const {
    if (arrows_.empty()) return "e(" + q.vertex_label(source_) + ")";
    // written word order: last traversed arrow first
    std::string s;
    for (auto it = arrows_.rbegin(); it != arrows_.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrow(*it).label;
    }
    return s;
}

void PathElement::add(const Path& p, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PathElement& PathElement::operator+=(const PathElement& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

PathElement& PathElement::operator-=(const PathElement& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

PathElement PathElement::operator*(const Rational& c) const {
    PathElement r;
    if (c.is_zero()) return r;
    for (const auto& [p, pc] : terms_) r.terms_[p] = pc * c;
    return r;
}

PathElement PathElement::compose(const PathElement& other) const {
    PathElement r;
    for (const auto& [p, pc] : terms_)
        for (const auto& [q, qc] : other.terms_)
            if (auto pq = p.compose(q)) r.add(*pq, pc * qc);
    return r;
}

std::optional<int> PathElement::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.length();
    for (const auto& [p, c] : terms_)
        if (p.length() != d) return std::nullopt;
    return d;
}

std::optional<std::pair<int, int>> PathElement::block() const {
    if (terms_.empty()) return std::nullopt;
    auto st = std::pair{terms_.begin()->first.source(), terms_.begin()->first.target()};
    for (const auto& [p, c] : terms_)
        if (std::pair{p.source(), p.target()} != st) return std::nullopt;
    return st;
}

std::string PathElement::to_string(const Quiver& q) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + "*" + p.label(q);
    }
    return s;
}

PathIdeal::PathIdeal(std::vector<PathElement> gens) : gens_(std::move(gens)) {
    for (const auto& g : gens_) {
        if (g.is_zero()) throw std::invalid_argument("PathIdeal: zero generator");
        if (!g.degree()) throw std::invalid_argument("PathIdeal: generator not length-homogeneous");
        if (!g.block()) throw std::invalid_argument("PathIdeal: generator not vertex-bihomogeneous");
    }
}

std::vector<Path> enumerate_paths(const Quiver& q, std::optional<int> from,
                                  std::optional<int> to, int length) {
    if (length < 0) throw std::invalid_argument("enumerate_paths: negative length");
    std::vector<Path> out;
    if (length == 0) {
        for (int v = 0; v < q.num_vertices(); ++v) {
            if (from && *from != v) continue;
            if (to && *to != v) continue;
            out.push_back(Path::stationary(v));
        }
        return out;
    }
    // depth-first in ascending arrow-id order yields lex order directly
    std::vector<int> word;
    auto rec = [&](auto&& self, int at, int remaining) -> void {
        if (remaining == 0) {
            if (!to || *to == at) out.push_back(Path::along(q, word));
            return;
        }
        for (const Arrow& a : q.arrows()) {
            if (a.src != at) continue;
            word.push_back(a.id);
            self(self, a.tgt, remaining - 1);
            word.pop_back();
        }
    };
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (from && *from != v) continue;
        rec(rec, v, length);
    }
    std::sort(out.begin(), out.end(),
              [](const Path& a, const Path& b) { return a.arrows() < b.arrows(); });
    return out;
}

GradedQuotient::GradedQuotient(std::shared_ptr<const Quiver> q, PathIdeal ideal)
    : q_(std::move(q)), ideal_(std::move(ideal)) {}

const GradedQuotient::BlockData& GradedQuotient::block_data(int degree, int src, int tgt) const {
    auto key = std::tuple{degree, src, tgt};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    BlockData data;
    data.paths = enumerate_paths(*q_, src, tgt, degree);
    for (std::size_t i = 0; i < data.paths.size(); ++i) data.index[data.paths[i]] = i;

    // span of { u * r * v : r relation, u, v paths } inside this block
    std::vector<RatVec> rows;
    for (const PathElement& r : ideal_.generators()) {
        int d = *r.degree();
        auto [rs, rt] = *r.block();
        for (int a = 0; a + d <= degree; ++a) {
            int b = degree - d - a;
            // v: src -> rs of length b, u: rt -> tgt of length a
            auto vs = enumerate_paths(*q_, src, rs, b);
            auto us = enumerate_paths(*q_, rt, tgt, a);
            for (const Path& u : us)
                for (const Path& v : vs) {
                    RatVec row(data.paths.size());
                    bool nonzero = false;
                    for (const auto& [p, c] : r.terms()) {
                        auto uprv = u.compose(*p.compose(v));
                        row[data.index.at(*uprv)] = c;
                        nonzero = true;
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
        }
    }
    // pivots at lex-largest paths so the surviving set is lex-smallest
    std::vector<std::size_t> order(data.paths.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
    data.span = reduce_rows(std::move(rows), order);
    std::vector<bool> is_pivot(data.paths.size(), false);
    for (std::size_t c : data.span.pivot_cols) is_pivot[c] = true;
    for (std::size_t i = 0; i < data.paths.size(); ++i)
        if (!is_pivot[i]) data.basis.push_back(data.paths[i]);

    return cache_.emplace(key, std::move(data)).first->second;
}

int GradedQuotient::dim(int degree) const {
    if (degree < 0) throw std::invalid_argument("GradedQuotient::dim: negative degree");
    // Free algebra: no relation span to build, just count paths.
    if (ideal_.empty())
        return static_cast<int>(enumerate_paths(*q_, std::nullopt, std::nullopt, degree).size());
    int total = 0;
    for (int s = 0; s < q_->num_vertices(); ++s)
        for (int t = 0; t < q_->num_vertices(); ++t)
            total += static_cast<int>(block_data(degree, s, t).basis.size());
    return total;
}

std::vector<Path> GradedQuotient::basis(int degree) const {
    std::vector<Path> out;
    if (ideal_.empty()) return enumerate_paths(*q_, std::nullopt, std::nullopt, degree);
    for (int s = 0; s < q_->num_vertices(); ++s)
        for (int t = 0; t < q_->num_vertices(); ++t) {
            const auto& b = block_data(degree, s, t).basis;
            out.insert(out.end(), b.begin(), b.end());
        }
    std::sort(out.begin(), out.end());
    return out;
}

PathElement GradedQuotient::reduce(const PathElement& e) const {
    // Split by (degree, block), eliminate against the relation span.
    PathElement result;
    std::map<std::tuple<int, int, int>, PathElement> parts;
    for (const auto& [p, c] : e.terms()) {
        PathElement& part = parts[{p.length(), p.source(), p.target()}];
        part.add(p, c);
    }
    for (auto& [key, part] : parts) {
        auto [deg, src, tgt] = key;
        const BlockData& data = block_data(deg, src, tgt);
        RatVec v(data.paths.size());
        for (const auto& [p, c] : part.terms()) v[data.index.at(p)] = c;
        v = eliminate(data.span, std::move(v));
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) result.add(data.paths[i], v[i]);
    }
    return result;
}

}  // namespace wpalg
