#pragma once

#include "module.hpp"

namespace hk {

/* Cochain complex of modules over one algebra (up to content equality).
 * Terms sit in degrees lo..hi and diff(k) maps term(k) to term(k+1);
 * consecutive differentials compose to zero. */
class Complex {
  public:
    Complex(int lo, std::vector<ModulePtr> terms, std::vector<ModuleMap> diffs);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
    bool has(int k) const { return k >= lo() && k <= hi(); }
    const ModulePtr& term(int k) const;
    const ModuleMap& diff(int k) const;  // valid for lo <= k < hi
    Vec term_dims() const;

  private:
    int lo_;
    std::vector<ModulePtr> terms_;
    std::vector<ModuleMap> diffs_;
};

/* Cohomology at one degree, as a module over the terms' algebra, with enough
 * bookkeeping to map cycles to classes. */
struct Cohomology {
    ModulePtr mod;
    Submodule cycles;        // kernel of the outgoing differential inside term(k)
    QuotientModule classes;  // cycles.mod -> mod, killing the incoming image

    Vec class_of(const Fp& f, const Vec& term_coords) const;
};
Cohomology cohomology(const Complex& c, int k);

/* Minimal projective resolution P_len .. P_1 -> P_0 -> M.
 * diffs[i] maps terms[i+1] to terms[i]; complete means the last kernel is 0. */
struct Resolution {
    std::vector<ModulePtr> terms;
    std::vector<ModuleMap> diffs;
    ModuleMap augment;                   // terms[0] -> M, surjective
    std::vector<std::vector<int>> mult;  // per term, multiplicity of each vertex projective
    bool complete = true;
    bool minimal = true;  // differentials and the last kernel land in radicals

    int length() const { return static_cast<int>(terms.size()) - 1; }
};

struct Cover {
    ModuleMap map;  // projective cover onto the module
    std::vector<int> mult;
};
Cover projective_cover(const ModulePtr& m);

Submodule radical_submodule(const ModulePtr& m);
QuotientModule top_quotient(const ModulePtr& m);

Resolution min_proj_resolution(const ModulePtr& m, int cap = 16);
/* the deleted complex P_len .. P_0 placed in degrees -len..0 */
Complex resolution_complex(const Resolution& r);

/* Minimal injective coresolution M -> I_0 -> I_1 .. computed by duality. */
struct Coresolution {
    std::vector<ModulePtr> terms;
    std::vector<ModuleMap> diffs;  // diffs[i]: terms[i] -> terms[i+1]
    ModuleMap coaugment;           // M -> terms[0], injective
    std::vector<std::vector<int>> mult;
    bool complete = true;
    bool minimal = true;

    int length() const { return static_cast<int>(terms.size()) - 1; }
};
Coresolution min_inj_coresolution(const ModulePtr& m, int cap = 16);
Complex coresolution_complex(const Coresolution& r);  // degrees 0..len

/* one-dimensional algebra whose modules are plain spaces */
AlgebraPtr scalar_algebra(const Fp& f);
ModulePtr plain_space(const Fp& f, int dim);

/* Hom(-, x) applied degreewise; degree k becomes -k.  The residual module
 * structure comes from postcomposition with x_family (a commuting structure on
 * x's carrier); pass plain_space(f, x->dim) when only dimensions matter.
 * spaces, when given, receives the hom space of each new degree in order. */
Complex hom_complex_into(const Complex& c, const ModulePtr& x, const ModulePtr& x_family,
                         std::vector<HomSpace>* spaces = nullptr);

/* Hom(x, -) applied degreewise, degrees kept; residual structure by
 * precomposition with x_family, so terms live over opposite(x_family->alg). */
Complex hom_complex_from(const ModulePtr& x, const Complex& c, const ModulePtr& x_family,
                         std::vector<HomSpace>* spaces = nullptr);

/* x (x)_A - and - (x)_A y applied degreewise; terms become plain spaces */
Complex tensor_complex_with_x(const ModulePtr& x, const Complex& c);
Complex tensor_complex_with_y(const Complex& c, const ModulePtr& y);

/* Derived functors as plain spaces; the first argument of ext and the second
 * of tor is resolved, so its algebra needs a quiver presentation. */
ModulePtr ext_space(int i, const ModulePtr& m, const ModulePtr& n);
ModulePtr tor_space(int i, const ModulePtr& x, const ModulePtr& y);
/* same Tor computed by resolving the first factor instead */
ModulePtr tor_space_by_first(int i, const ModulePtr& x, const ModulePtr& y);

int ext_dim(int i, const ModulePtr& m, const ModulePtr& n);
int tor_dim(int i, const ModulePtr& x, const ModulePtr& y);

/* nullopt when the cap was reached first; -1 for the zero module */
std::optional<int> projective_dimension(const ModulePtr& m, int cap = 16);
std::optional<int> injective_dimension(const ModulePtr& m, int cap = 16);
std::optional<int> global_dimension(const AlgebraPtr& a, int cap = 16);

}  // namespace hk
