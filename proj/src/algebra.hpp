#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace hk {

struct Arrow {
    std::string name;
    int src = 0;  // 0-based vertex
    int tgt = 0;
};

struct Quiver {
    int vertices = 0;
    std::vector<Arrow> arrows;
};

/* Per-basis-element path data of a bound quiver algebra.  arrows lists arrow
 * indices in traversal order; empty means the lazy path at src (= tgt). */
struct PathInfo {
    int src = 0;
    int tgt = 0;
    std::vector<int> arrows;
};

/* Finite-dimensional associative unital algebra over F_p, given by structure
 * constants on a fixed basis.  prod[i][j] holds the coordinates of b_i * b_j.
 * For bound quiver algebras the product of basis paths is concatenation, read
 * left to right: for paths p: u -> v and q: v -> w, p*q is "p then q". */
class Algebra {
  public:
    Fp field;
    int dim = 0;
    std::vector<std::string> basis_names;
    std::vector<std::vector<Vec>> prod;
    Vec unit;
    std::vector<Vec> idempotents;  // complete orthogonal family summing to the unit

    /* set iff the algebra carries a quiver presentation (shared by opposites) */
    std::optional<Quiver> quiver;
    std::vector<PathInfo> paths;            // parallel to the basis when quiver is set
    std::vector<int> vertex_basis_index;    // basis index of each lazy path
    bool opposite_oriented = false;         // product reversed relative to path concatenation

    explicit Algebra(const Fp& f) : field(f) {}

    Vec mul(const Vec& x, const Vec& y) const;
    Mat right_mult(const Vec& x) const;  // matrix of v -> v*x on the regular module
    Mat left_mult(const Vec& x) const;   // matrix of v -> x*v
    Vec basis_vec(int i) const;

    bool has_quiver() const { return quiver.has_value(); }
    /* basis indices whose products span the algebra; quiver: lazy paths and arrows */
    std::vector<int> generator_indices() const;
    /* basis indices spanning the Jacobson radical (quiver-presented only) */
    std::vector<int> radical_indices() const;
    bool is_commutative() const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/* Associativity on all basis triples, unit laws, idempotent family axioms. */
void verify_algebra(const Algebra& a);

AlgebraPtr opposite(const AlgebraPtr& a);
bool is_opposite_pair(const Algebra& x, const Algebra& y);

struct RelationTerm {
    uint32_t coeff = 1;                // nonzero mod p
    std::vector<std::string> path;     // arrow names in traversal order, length >= 2
};
using Relation = std::vector<RelationTerm>;

struct BuildCaps {
    int admissibility = 32;   // max path length explored before giving up
    int coordinates = 200000; // max enumerated path coordinates
};

/* Quotient of the path algebra by the two-sided ideal generated by the
 * relations.  Requires the ideal to be admissible: some power of the arrow
 * ideal must land inside it within the cap, detected degree by degree. */
AlgebraPtr build_bound_quiver_algebra(const Fp& field, const Quiver& q, const std::vector<Relation>& rels,
                                      const BuildCaps& caps = {});

}  // namespace hk
