#pragma once

#include <map>
#include <memory>

#include "algebra.hpp"
#include "rng.hpp"

namespace hk {

class Module;
using ModulePtr = std::shared_ptr<const Module>;

/* Representation of an algebra by row operators on F_p^dim:
 * act(x) * act(y) = act(x*y) and act(1) = id, with vectors acting as rows.
 * Carriers constructed by the engine are weight-aligned when the algebra has
 * a nontrivial idempotent family: act(e_v) are then 0/1 diagonal projectors
 * and `block[i]` names the idempotent owning coordinate i. */
class Module {
  public:
    AlgebraPtr alg;
    int dim = 0;
    std::vector<Mat> act;     // one matrix per algebra basis element
    std::vector<int> block;   // weight block per coordinate; empty if not aligned

    Mat act_of(const Vec& coords) const;   // sum of coords[i] * act[i]
    Vec apply(const Vec& v, int basis_index) const { return mul(alg->field, v, act[basis_index]); }
    bool weight_aligned() const { return !block.empty(); }
    Vec weight_dims() const;  // rank of each idempotent action
};

/* Verifies the representation axioms; generator pairs suffice because every
 * basis element of a quiver-presented algebra factors through generators. */
void verify_module(const Module& m);

ModulePtr make_module(AlgebraPtr alg, int dim, std::vector<Mat> act);
/* same, but conjugates the carrier into weight-aligned form first */
ModulePtr make_module_aligned(AlgebraPtr alg, int dim, std::vector<Mat> act, Mat* applied_transform = nullptr);

ModulePtr zero_module(AlgebraPtr alg);
ModulePtr regular_module(AlgebraPtr alg);
ModulePtr simple_module(AlgebraPtr alg, int vertex);
ModulePtr projective_module(AlgebraPtr alg, int vertex);   // span of e_v * A inside the regular module
ModulePtr injective_module(AlgebraPtr alg, int vertex);    // dual of the projective over the opposite
/* algebra basis indices realised by the carrier of projective_module(v), in order;
 * index 0 is always the lazy path at v */
std::vector<int> projective_basis_paths(const Algebra& alg, int vertex);
ModulePtr dual_module(const ModulePtr& m);                 // transposed actions, over opposite(alg)

/* module presented by per-vertex dimensions and one matrix per arrow */
ModulePtr module_from_representation(AlgebraPtr alg, const std::vector<int>& vertex_dims,
                                     const std::map<std::string, Mat>& arrow_mats);

struct ModuleMap {
    ModulePtr src, tgt;
    Mat mat;  // src.dim x tgt.dim, v maps to v*mat
};

ModuleMap make_map(ModulePtr src, ModulePtr tgt, Mat m);  // verifies intertwining
bool is_module_map(const Module& src, const Module& tgt, const Mat& m);
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);  // f then g
ModuleMap zero_map(ModulePtr src, ModulePtr tgt);
ModuleMap identity_map(ModulePtr m);
ModuleMap dual_map(const ModuleMap& f);  // dual(tgt) -> dual(src)

struct Submodule {
    ModulePtr mod;
    ModuleMap include;  // mod -> ambient
};
struct QuotientModule {
    ModulePtr mod;
    ModuleMap project;  // ambient -> mod
};

Submodule kernel(const ModuleMap& f);
Submodule image(const ModuleMap& f);
QuotientModule cokernel(const ModuleMap& f);
/* submodule spanned by the given ambient rows (closed under the action or an error) */
Submodule span_submodule(const ModulePtr& ambient, const Mat& rows);

struct DirectSum {
    ModulePtr mod;
    std::vector<ModuleMap> inject;
    std::vector<ModuleMap> project;
};
DirectSum direct_sum(const std::vector<ModulePtr>& parts);
ModulePtr power_module(const ModulePtr& m, int copies);

/* Basis of intertwiners m -> n as matrices, deterministic order. */
std::vector<Mat> hom_basis(const Module& m, const Module& n);

/* Hom space with coordinate bookkeeping for installing residual actions. */
struct HomSpace {
    ModulePtr src, tgt;
    std::vector<Mat> basis;
    Mat flat;  // basis matrices flattened to rows

    int dim() const { return static_cast<int>(basis.size()); }
    Vec coords_of(const Fp& f, const Mat& member) const;
};
HomSpace make_hom_space(ModulePtr src, ModulePtr tgt);

/* Module structure on a hom space induced by a commuting family:
 *  - postcomposition F -> F * other.act[b]; module over other.alg
 *  - precomposition  F -> other.act[b] * F; module over opposite(other.alg) */
ModulePtr hom_module_post(const HomSpace& h, const ModulePtr& tgt_other);
ModulePtr hom_module_pre(const HomSpace& h, const ModulePtr& src_other);

/* Tensor product over the algebra connecting x and y: requires x.alg opposite
 * to y.alg (same basis labels).  The carrier is the quotient of x (x) y by
 * rows  x*act_x(b) (x) y  -  x (x) y*act_y(b)  over generators b. */
struct TensorSpace {
    ModulePtr x, y;
    std::shared_ptr<Quotient> classes;  // of the x.dim*y.dim coordinate space
    int dim() const { return classes->dim(); }
    Vec class_of(const Fp& f, const Vec& xv, const Vec& yv) const;  // class of xv (x) yv
};
TensorSpace tensor_over(const ModulePtr& x, const ModulePtr& y);
/* residual structures from commuting families on either factor */
ModulePtr tensor_module_from_x(const TensorSpace& t, const ModulePtr& x_other);
ModulePtr tensor_module_from_y(const TensorSpace& t, const ModulePtr& y_other);

/* two commuting module structures on one carrier */
struct Bimodule {
    ModulePtr first;
    ModulePtr second;
};
Bimodule make_bimodule(ModulePtr first, ModulePtr second);  // verifies commutation
/* the regular bimodule: right multiplications over A, left multiplications over opposite(A) */
Bimodule regular_bimodule(const AlgebraPtr& a);

struct EndoAlgebra {
    AlgebraPtr alg;          // composition product F*G read left to right
    ModulePtr action;        // the carrier as a module over alg (act = hom matrices)
    std::vector<Mat> basis;  // hom_basis(m, m)
    Bimodule bimodule;       // base structure and endomorphism structure together
};
EndoAlgebra endomorphism_algebra(const ModulePtr& m);

struct IsoQuery {
    bool isomorphic = false;
    int samples_used = 0;
    bool exhaustive = false;
    Mat witness;  // invertible intertwiner when isomorphic
};
IsoQuery is_isomorphic(const ModulePtr& m, const ModulePtr& n, Rng& rng, int max_samples = 64);

bool algebras_match(const Algebra& a, const Algebra& b);

}  // namespace hk
