#pragma once

#include "wpalg/quiver.hpp"

#include <memory>

namespace wpalg {

struct QuiverRep;
using RepPtr = std::shared_ptr<const QuiverRep>;

/// Finite-dimensional representation: a vector space per vertex and a matrix
/// per arrow (shape dims[tgt] x dims[src]).
struct QuiverRep {
    std::shared_ptr<const Quiver> quiver;
    std::vector<int> dims;
    std::vector<Matrix> arrow_mats;                 // indexed by arrow id
    std::vector<std::vector<std::string>> labels;   // per-vertex basis labels (may be empty)

    int total_dim() const;
    /// Composite action of a path: product of arrow matrices, V_src -> V_tgt.
    Matrix act(const Path& p) const;
    /// Every bihomogeneous part of the relation evaluates to the zero matrix.
    bool satisfies(const PathElement& relation) const;
};

/// Module homomorphism between representations over the same quiver.
struct RepMap {
    RepPtr source, target;
    std::vector<Matrix> mats;  // per vertex

    bool commutes() const;
    bool is_zero() const;
    RatVec apply(int vertex, const RatVec& v) const { return mats[vertex].apply(v); }
};

/// Composition f ∘ g (g first). Validates endpoint compatibility.
RepMap compose(const RepMap& f, const RepMap& g);

/// Basic finite-dimensional algebra presented on a quiver. Two construction
/// routes: from a homogeneous admissible path ideal (per-degree linear
/// algebra), or from explicitly given projectives (used for commutative
/// quotient rings realized as one-vertex algebras).
class BasicAlgebra {
public:
    static BasicAlgebra from_path_quotient(std::shared_ptr<const Quiver> q, PathIdeal ideal,
                                           int degree_cap = 64);
    static BasicAlgebra from_projectives(std::shared_ptr<const Quiver> q,
                                         std::vector<PathElement> relations,
                                         std::vector<RepPtr> projectives,
                                         std::vector<std::pair<int, int>> generators);

    const Quiver& quiver() const { return *q_; }
    std::shared_ptr<const Quiver> quiver_ptr() const { return q_; }
    int num_simples() const { return q_->num_vertices(); }
    int total_dim() const;
    const std::vector<PathElement>& relations() const { return relations_; }

    RepPtr projective(int v) const { return projectives_.at(v); }
    /// (vertex, index within that vertex block) of e_v inside projective(v).
    std::pair<int, int> generator(int v) const { return generators_.at(v); }
    RepPtr simple(int v) const;

    /// Per-degree dims of the path-quotient construction (empty otherwise).
    const std::vector<int>& degree_dims() const { return degree_dims_; }
    const GradedQuotient* graded() const { return graded_.get(); }

private:
    BasicAlgebra() = default;
    std::shared_ptr<const Quiver> q_;
    std::vector<PathElement> relations_;
    std::vector<RepPtr> projectives_;
    std::vector<std::pair<int, int>> generators_;
    std::vector<int> degree_dims_;
    std::shared_ptr<GradedQuotient> graded_;
};

/// Hom space as exact solutions of the commuting system.
std::vector<RepMap> hom_space(RepPtr M, RepPtr N);
int hom_dim(RepPtr M, RepPtr N);

/// Subrepresentation described by per-vertex echelonized spans in the
/// ambient coordinates.
struct SubRep {
    std::vector<Echelon> spaces;  // one per vertex
    std::vector<int> dims() const;
    int total_dim() const;
};

bool same_subrep(const SubRep& a, const SubRep& b, const std::vector<int>& ambient_dims);

/// Rad M = (sum of arrow images); powers by iterated arrow application.
/// Returns M = Rad^0 ⊇ Rad^1 ⊇ ... down to and including the first zero.
std::vector<SubRep> radical_series(RepPtr M);
/// 0 ⊂ Soc^1 ⊂ ... ⊂ Soc^ℓ = M (ascending, starting at Soc^1).
std::vector<SubRep> socle_series(RepPtr M);
/// Radical and socle filtrations coincide.
bool is_rigid(RepPtr M);

/// Realizes a subrepresentation with its inclusion map.
std::pair<RepPtr, RepMap> realize_subrep(RepPtr M, const SubRep& S);

/// Projective cover P(M) -> M with canonical summand order (by vertex, then
/// by position of the chosen top basis vector).
struct Cover {
    RepPtr module;
    std::vector<int> summand_vertices;
    std::vector<std::pair<int, int>> generators;  // (vertex, index in vertex block)
    RepMap onto;
};
Cover projective_cover(const BasicAlgebra& A, RepPtr M);

/// Kernel of a map, realized with its inclusion.
std::pair<RepPtr, RepMap> kernel(const RepMap& f);

/// Minimal projective resolution by iterated projective covers of kernels.
class ProjectiveResolution {
public:
    ProjectiveResolution(const BasicAlgebra& A, RepPtr M, int steps);

    int steps() const { return static_cast<int>(modules_.size()) - 1; }
    RepPtr target() const { return target_; }
    RepPtr module(int k) const { return modules_.at(k); }
    const std::vector<int>& summand_vertices(int k) const { return vertices_.at(k); }
    const std::vector<std::pair<int, int>>& generators(int k) const { return gens_.at(k); }
    /// ∂_k : P_k → P_{k-1} for k ≥ 1; augmentation() is P_0 → M.
    const RepMap& differential(int k) const { return diffs_.at(k - 1); }
    const RepMap& augmentation() const { return aug_; }

    void extend(const BasicAlgebra& A, int steps);

    /// ∂∘∂ = 0, image ⊆ radical, and exactness via rank counts.
    bool verify_minimal_exact() const;

private:
    RepPtr target_;
    RepMap aug_;
    std::vector<RepPtr> modules_;
    std::vector<std::vector<int>> vertices_;
    std::vector<std::vector<std::pair<int, int>>> gens_;
    std::vector<RepMap> diffs_;   // diffs_[k] : P_{k+1} -> P_k
    std::pair<RepPtr, RepMap> last_kernel_;
};

/// Ext class over a basic algebra: a cocycle Hom(P_n(S_src), S_tgt) in the
/// generator-dual coordinates (the fixed representative normal form).
struct ExtClass {
    int degree;
    int source;  // simple index
    int target;  // simple index
    RatVec coords;
};

/// Resolution/Ext calculator with cached resolutions of the simples.
class ExtEngine {
public:
    explicit ExtEngine(const BasicAlgebra& A) : A_(&A) {}

    const ProjectiveResolution& resolution(int simple, int min_steps);
    int ext_dim(int a, int b, int n);
    /// Coordinate basis classes, ordered by the canonical generator order.
    std::vector<ExtClass> ext_basis(int a, int b, int n);
    ExtClass identity(int simple) const;
    /// Yoneda composite f∘g, f ∈ Ext^m(M,N), g ∈ Ext^n(L,M).
    ExtClass compose(const ExtClass& f, const ExtClass& g);

    const BasicAlgebra& algebra() const { return *A_; }

private:
    RepMap hom_from_generator_images(const ProjectiveResolution& res, int k,
                                     RepPtr N, const std::vector<RatVec>& images);
    const BasicAlgebra* A_;
    std::map<int, ProjectiveResolution> cache_;
};

/// dim Ext^n(M, N) for arbitrary reps via the Hom complex of a minimal
/// resolution of M.
int ext_dim(const BasicAlgebra& A, RepPtr M, RepPtr N, int n);

/// Ext quiver: vertices = simples, arrows a→b from a basis of
/// (Rad P_a / Rad² P_a) at vertex b. Arrow labels "(a->b)#i".
Quiver ext_quiver(const BasicAlgebra& A);

}  // namespace wpalg
