#pragma once

#include "wpalg/matrix.hpp"
#include "wpalg/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wpalg {

struct Arrow {
    int id;
    int src;
    int tgt;
    std::string label;
};

/// Finite directed multigraph. Parallel arrows and loops are allowed.
/// Immutable once built (construct fully, then share).
class Quiver {
public:
    int add_vertex(std::string label);
    int add_arrow(int src, int tgt, std::string label);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_label(int v) const { return vertices_.at(v); }
    const Arrow& arrow(int id) const { return arrows_.at(id); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::optional<int> vertex_by_label(const std::string& label) const;
    std::optional<int> arrow_by_label(const std::string& label) const;

    /// Arrow ids with the given source, ascending.
    std::vector<int> arrows_from(int v) const;
    std::vector<int> arrows_into(int v) const;

    /// Same vertices and arrow ids/labels, all arrows reversed. Involutive.
    Quiver opposite() const;

    std::string to_dot() const;
    std::string to_json() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// Directed path, stored as arrow ids in traversal order (target of each
/// arrow = source of the next). Length 0 paths are the vertex idempotents.
class Path {
public:
    static Path stationary(int vertex) { return Path(vertex, vertex, {}); }
    static Path of_arrow(const Arrow& a) { return Path(a.src, a.tgt, {a.id}); }
    /// Builds a path from arrows in traversal order; checks composability.
    static Path along(const Quiver& q, const std::vector<int>& arrow_ids);

    int length() const { return static_cast<int>(arrows_.size()); }
    int source() const { return source_; }
    int target() const { return target_; }
    const std::vector<int>& arrows() const { return arrows_; }

    /// x.compose(y) is "y first, then x"; requires y.target == x.source.
    std::optional<Path> compose(const Path& y) const;

    /// Ordering: by length, then lexicographically on the arrow-id sequence
    /// (stationary paths by vertex). This is the canonical path order.
    friend auto operator<=>(const Path& a, const Path& b) = default;

    std::string label(const Quiver& q) const;

private:
    Path(int s, int t, std::vector<int> arrows)
        : source_(s), target_(t), arrows_(std::move(arrows)) {}
    int source_, target_;
    std::vector<int> arrows_;
};

/// Finite Rational linear combination of paths. No zero terms are stored.
class PathElement {
public:
    PathElement() = default;
    explicit PathElement(const Path& p, Rational c = Rational(1)) {
        if (!c.is_zero()) terms_[p] = std::move(c);
    }

    const std::map<Path, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Path& p, const Rational& c);
    PathElement& operator+=(const PathElement& o);
    PathElement& operator-=(const PathElement& o);
    PathElement operator*(const Rational& c) const;
    friend PathElement operator+(PathElement a, const PathElement& b) { return a += b; }
    friend PathElement operator-(PathElement a, const PathElement& b) { return a -= b; }
    bool operator==(const PathElement& o) const = default;

    /// Bilinear extension of path composition ("other first, then this");
    /// non-composable products vanish.
    PathElement compose(const PathElement& other) const;

    /// Homogeneous degree if all paths share one length, else nullopt.
    std::optional<int> degree() const;
    /// Common (source, target) if bihomogeneous, else nullopt.
    std::optional<std::pair<int, int>> block() const;

    std::string to_string(const Quiver& q) const;

private:
    std::map<Path, Rational> terms_;
};

/// Homogeneous relations: every generator has a single path length and a
/// single (source, target) pair.
class PathIdeal {
public:
    PathIdeal() = default;
    explicit PathIdeal(std::vector<PathElement> gens);
    const std::vector<PathElement>& generators() const { return gens_; }
    bool empty() const { return gens_.empty(); }

private:
    std::vector<PathElement> gens_;
};

/// All composable paths of exactly `length`, optionally filtered by
/// endpoints, ordered canonically (lex on arrow-id sequences).
std::vector<Path> enumerate_paths(const Quiver& q, std::optional<int> from,
                                  std::optional<int> to, int length);

/// Per-degree linear algebra for kQ/I with homogeneous I: dimensions, the
/// surviving-path basis, and normal forms. Degree data is computed per
/// (source, target) block and cached.
class GradedQuotient {
public:
    GradedQuotient(std::shared_ptr<const Quiver> q, PathIdeal ideal);

    const Quiver& quiver() const { return *q_; }
    const PathIdeal& ideal() const { return ideal_; }

    int dim(int degree) const;
    /// Basis representatives: the lex-smallest complement of the relation
    /// span (pivots are eliminated at lex-largest paths).
    std::vector<Path> basis(int degree) const;
    /// Normal form onto the surviving-path basis.
    PathElement reduce(const PathElement& e) const;

private:
    struct BlockData {
        std::vector<Path> paths;              // canonical ascending order
        std::map<Path, std::size_t> index;
        Echelon span;                         // relation span, pivots at lex-largest
        std::vector<Path> basis;              // non-pivot paths
    };
    const BlockData& block_data(int degree, int src, int tgt) const;

    std::shared_ptr<const Quiver> q_;
    PathIdeal ideal_;
    mutable std::map<std::tuple<int, int, int>, BlockData> cache_;
};

}  // namespace wpalg
