#include "algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hk {

Vec Algebra::mul(const Vec& x, const Vec& y) const {
    Vec out(dim, 0);
    for (int i = 0; i < dim; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < dim; ++j) {
            if (!y[j]) continue;
            uint32_t c = field.mul(x[i], y[j]);
            const Vec& pij = prod[i][j];
            for (int k = 0; k < dim; ++k)
                if (pij[k]) out[k] = field.add(out[k], field.mul(c, pij[k]));
        }
    }
    return out;
}

Mat Algebra::right_mult(const Vec& x) const {
    Mat m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vec row(dim, 0);
        for (int k = 0; k < dim; ++k) {
            if (!x[k]) continue;
            const Vec& pjk = prod[j][k];
            for (int t = 0; t < dim; ++t)
                if (pjk[t]) row[t] = field.add(row[t], field.mul(x[k], pjk[t]));
        }
        m.set_row(j, row);
    }
    return m;
}

Mat Algebra::left_mult(const Vec& x) const {
    Mat m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vec row(dim, 0);
        for (int k = 0; k < dim; ++k) {
            if (!x[k]) continue;
            const Vec& pkj = prod[k][j];
            for (int t = 0; t < dim; ++t)
                if (pkj[t]) row[t] = field.add(row[t], field.mul(x[k], pkj[t]));
        }
        m.set_row(j, row);
    }
    return m;
}

Vec Algebra::basis_vec(int i) const {
    Vec v(dim, 0);
    v[i] = 1;
    return v;
}

std::vector<int> Algebra::generator_indices() const {
    std::vector<int> out;
    if (has_quiver()) {
        for (int i = 0; i < dim; ++i)
            if (paths[i].arrows.size() <= 1) out.push_back(i);
    } else {
        out.resize(dim);
        std::iota(out.begin(), out.end(), 0);
    }
    return out;
}

std::vector<int> Algebra::radical_indices() const {
    require(has_quiver(), errc::domain, "radical basis needs a quiver presentation");
    std::vector<int> out;
    for (int i = 0; i < dim; ++i)
        if (!paths[i].arrows.empty()) out.push_back(i);
    return out;
}

bool Algebra::is_commutative() const {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (prod[i][j] != prod[j][i]) return false;
    return true;
}

void verify_algebra(const Algebra& a) {
    const Fp& f = a.field;
    check_internal(static_cast<int>(a.prod.size()) == a.dim, "structure constant table size");
    /* unit laws */
    for (int i = 0; i < a.dim; ++i) {
        check_internal(a.mul(a.unit, a.basis_vec(i)) == a.basis_vec(i), "left unit law");
        check_internal(a.mul(a.basis_vec(i), a.unit) == a.basis_vec(i), "right unit law");
    }
    /* associativity on basis triples */
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            const Vec& ij = a.prod[i][j];
            for (int k = 0; k < a.dim; ++k) {
                Vec lhs(a.dim, 0), rhs(a.dim, 0);
                for (int m = 0; m < a.dim; ++m) {
                    if (ij[m])
                        for (int t = 0; t < a.dim; ++t)
                            if (a.prod[m][k][t]) lhs[t] = f.add(lhs[t], f.mul(ij[m], a.prod[m][k][t]));
                    if (a.prod[j][k][m])
                        for (int t = 0; t < a.dim; ++t)
                            if (a.prod[i][m][t]) rhs[t] = f.add(rhs[t], f.mul(a.prod[j][k][m], a.prod[i][m][t]));
                }
                check_internal(lhs == rhs, "associativity");
            }
        }
    /* complete orthogonal idempotent family */
    Vec total(a.dim, 0);
    for (size_t i = 0; i < a.idempotents.size(); ++i) {
        for (size_t j = 0; j < a.idempotents.size(); ++j) {
            Vec p = a.mul(a.idempotents[i], a.idempotents[j]);
            if (i == j)
                check_internal(p == a.idempotents[i], "idempotent is not idempotent");
            else
                check_internal(is_zero(p), "idempotents not orthogonal");
        }
        total = add(f, total, a.idempotents[i]);
    }
    check_internal(total == a.unit, "idempotents do not sum to the unit");
}

AlgebraPtr opposite(const AlgebraPtr& a) {
    auto o = std::make_shared<Algebra>(a->field);
    o->dim = a->dim;
    o->basis_names = a->basis_names;
    o->prod.assign(a->dim, std::vector<Vec>(a->dim));
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j) o->prod[i][j] = a->prod[j][i];
    o->unit = a->unit;
    o->idempotents = a->idempotents;
    o->quiver = a->quiver;
    o->paths = a->paths;
    o->vertex_basis_index = a->vertex_basis_index;
    o->opposite_oriented = !a->opposite_oriented;
    return o;
}

bool is_opposite_pair(const Algebra& x, const Algebra& y) {
    if (x.dim != y.dim || x.field.p() != y.field.p()) return false;
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < x.dim; ++j)
            if (x.prod[i][j] != y.prod[j][i]) return false;
    return x.unit == y.unit;
}

namespace {

struct PathRec {
    int src, tgt;
    std::vector<int> arrows;
};

struct PathTable {
    std::vector<PathRec> paths;
    std::map<std::pair<int, std::vector<int>>, int> index;  // (src, arrow word) -> id
    std::vector<std::vector<int>> by_length;

    int add(int src, int tgt, std::vector<int> arrows) {
        int id = static_cast<int>(paths.size());
        index[{src, arrows}] = id;
        size_t len = arrows.size();
        paths.push_back({src, tgt, std::move(arrows)});
        if (by_length.size() <= len) by_length.resize(len + 1);
        by_length[len].push_back(id);
        return id;
    }

    int find(int src, const std::vector<int>& arrows) const {
        auto it = index.find({src, arrows});
        return it == index.end() ? -1 : it->second;
    }
};

void validate_input(const Fp& f, const Quiver& q, const std::vector<Relation>& rels,
                    std::map<std::string, int>& arrow_by_name) {
    require(q.vertices >= 1, errc::invalid_argument, "quiver needs at least one vertex");
    for (size_t i = 0; i < q.arrows.size(); ++i) {
        const Arrow& ar = q.arrows[i];
        require(!ar.name.empty(), errc::invalid_argument, "arrow with empty name");
        require(ar.src >= 0 && ar.src < q.vertices && ar.tgt >= 0 && ar.tgt < q.vertices, errc::invalid_argument,
                "arrow '" + ar.name + "' has endpoints outside the vertex range");
        require(!arrow_by_name.count(ar.name), errc::invalid_argument, "duplicate arrow name '" + ar.name + "'");
        arrow_by_name[ar.name] = static_cast<int>(i);
    }
    for (const Relation& rel : rels) {
        require(!rel.empty(), errc::invalid_argument, "empty relation");
        int rsrc = -1, rtgt = -1;
        for (const RelationTerm& term : rel) {
            require(term.coeff % f.p() != 0, errc::invalid_argument, "relation term with zero coefficient");
            require(term.path.size() >= 2, errc::invalid_argument,
                    "relation paths must have length at least two (admissible ideal)");
            int prev_tgt = -1, src = -1;
            for (const std::string& name : term.path) {
                auto it = arrow_by_name.find(name);
                require(it != arrow_by_name.end(), errc::invalid_argument, "relation uses unknown arrow '" + name + "'");
                const Arrow& ar = q.arrows[it->second];
                if (src < 0)
                    src = ar.src;
                else
                    require(ar.src == prev_tgt, errc::invalid_argument, "relation path is not composable at '" + name + "'");
                prev_tgt = ar.tgt;
            }
            if (rsrc < 0) {
                rsrc = src;
                rtgt = prev_tgt;
            } else {
                require(rsrc == src && rtgt == prev_tgt, errc::invalid_argument,
                        "relation mixes paths with different endpoints");
            }
        }
    }
}

/* Enumerate all paths of length <= maxlen. */
void enumerate_paths(const Quiver& q, int maxlen, int coord_cap, PathTable& tab) {
    if (tab.paths.empty())
        for (int v = 0; v < q.vertices; ++v) tab.add(v, v, {});
    int have = static_cast<int>(tab.by_length.size()) - 1;
    for (int len = have + 1; len <= maxlen; ++len) {
        if (static_cast<int>(tab.by_length.size()) <= len - 1 || tab.by_length[len - 1].empty()) {
            if (static_cast<int>(tab.by_length.size()) <= len) tab.by_length.resize(len + 1);
            continue;  // no shorter paths to extend
        }
        std::vector<int> prev = tab.by_length[len - 1];
        for (int id : prev) {
            for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
                if (q.arrows[ai].src != tab.paths[id].tgt) continue;
                std::vector<int> word = tab.paths[id].arrows;
                word.push_back(static_cast<int>(ai));
                require(static_cast<int>(tab.paths.size()) < coord_cap, errc::invalid_argument,
                        "path enumeration exceeded the coordinate cap; ideal is not admissible within bounds");
                tab.add(tab.paths[id].src, q.arrows[ai].tgt, std::move(word));
            }
        }
        if (static_cast<int>(tab.by_length.size()) <= len) tab.by_length.resize(len + 1);
    }
}

/* Ideal generators x * r * y whose path components all have length <= maxlen,
 * as vectors over the path coordinate space. */
Mat ideal_generators(const Fp& f, const Quiver& q, const std::vector<Relation>& rels,
                     const std::map<std::string, int>& arrow_by_name, const PathTable& tab, int maxlen) {
    std::vector<Vec> rows;
    int ncoord = static_cast<int>(tab.paths.size());
    for (const Relation& rel : rels) {
        int max_term = 0;
        for (const RelationTerm& t : rel) max_term = std::max(max_term, static_cast<int>(t.path.size()));
        /* endpoints shared by all terms */
        int rsrc = q.arrows[arrow_by_name.at(rel[0].path[0])].src;
        int rtgt = q.arrows[arrow_by_name.at(rel[0].path.back())].tgt;
        for (int xid = 0; xid < ncoord; ++xid) {
            const PathRec& x = tab.paths[xid];
            if (x.tgt != rsrc) continue;
            for (int yid = 0; yid < ncoord; ++yid) {
                const PathRec& y = tab.paths[yid];
                if (y.src != rtgt) continue;
                if (static_cast<int>(x.arrows.size() + y.arrows.size()) + max_term > maxlen) continue;
                Vec row(ncoord, 0);
                bool ok = true;
                for (const RelationTerm& t : rel) {
                    std::vector<int> word = x.arrows;
                    for (const std::string& name : t.path) word.push_back(arrow_by_name.at(name));
                    word.insert(word.end(), y.arrows.begin(), y.arrows.end());
                    int pid = tab.find(x.src, word);
                    if (pid < 0) {
                        ok = false;  // component longer than enumerated window; skip generator
                        break;
                    }
                    row[pid] = f.add(row[pid], f.from_int(t.coeff));
                }
                if (ok && !is_zero(row)) rows.push_back(std::move(row));
            }
        }
    }
    return Mat::from_rows(rows, ncoord);
}

}  // namespace

AlgebraPtr build_bound_quiver_algebra(const Fp& field, const Quiver& q, const std::vector<Relation>& rels,
                                      const BuildCaps& caps) {
    std::map<std::string, int> arrow_by_name;
    validate_input(field, q, rels, arrow_by_name);

    /* Find the nilpotency degree: the smallest N >= 2 with every length-N path
     * inside the ideal.  Acyclic quivers terminate here even with no relations
     * because path lengths are bounded. */
    PathTable tab;
    int N = -1;
    for (int L = 2; L <= caps.admissibility; ++L) {
        enumerate_paths(q, L, caps.coordinates, tab);
        Mat gens = ideal_generators(field, q, rels, arrow_by_name, tab, L);
        Subspace ideal(field, gens);
        bool all_dead = true;
        if (static_cast<int>(tab.by_length.size()) > L) {
            for (int pid : tab.by_length[L]) {
                Vec e(tab.paths.size(), 0);
                e[pid] = 1;
                if (!ideal.contains(e)) {
                    all_dead = false;
                    break;
                }
            }
        }
        if (all_dead) {
            N = L;
            break;
        }
    }
    require(N > 0, errc::invalid_argument,
            "ideal is not admissible within the cap of " + std::to_string(caps.admissibility));

    /* Work window: products of surviving paths have length <= 2N-2, and every
     * path of length in [N, 2N-2] is an ideal combination of components that
     * also fit in the window. */
    int window = std::max(2 * N - 2, N);
    enumerate_paths(q, window, caps.coordinates, tab);
    int ncoord = static_cast<int>(tab.paths.size());
    Mat gens = ideal_generators(field, q, rels, arrow_by_name, tab, window);

    /* Long paths first so echelon pivots prefer killing long representatives. */
    std::vector<int> order(ncoord);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return tab.paths[a].arrows.size() > tab.paths[b].arrows.size();
    });
    std::vector<int> pos(ncoord);
    for (int i = 0; i < ncoord; ++i) pos[order[i]] = i;

    Mat permuted(gens.rows(), ncoord);
    for (int i = 0; i < gens.rows(); ++i)
        for (int j = 0; j < ncoord; ++j) permuted.at(i, pos[j]) = gens.at(i, j);
    Rref rr = rref(field, permuted);
    std::vector<bool> is_pivot(ncoord, false);
    for (int c : rr.pivots) is_pivot[c] = true;

    std::vector<int> survivors;  // path ids, non-pivot coordinates
    for (int pid = 0; pid < ncoord; ++pid)
        if (!is_pivot[pos[pid]] && static_cast<int>(tab.paths[pid].arrows.size()) < N) survivors.push_back(pid);
    for (int pid = 0; pid < ncoord; ++pid)
        check_internal(is_pivot[pos[pid]] || static_cast<int>(tab.paths[pid].arrows.size()) < N,
                       "long path escaped the ideal");
    std::stable_sort(survivors.begin(), survivors.end(), [&](int a, int b) {
        if (tab.paths[a].arrows.size() != tab.paths[b].arrows.size())
            return tab.paths[a].arrows.size() < tab.paths[b].arrows.size();
        return a < b;
    });
    for (int v = 0; v < q.vertices; ++v)
        check_internal(!is_pivot[pos[v]], "lazy path fell into the ideal; ideal not admissible");

    std::vector<int> survivor_slot(ncoord, -1);
    for (size_t s = 0; s < survivors.size(); ++s) survivor_slot[survivors[s]] = static_cast<int>(s);

    /* reduce a path-space vector modulo the ideal, then read survivor coords */
    Subspace ideal(field, permuted);
    auto reduce_to_basis = [&](const Vec& raw) {
        Vec perm(ncoord, 0);
        for (int j = 0; j < ncoord; ++j) perm[pos[j]] = raw[j];
        Vec res = ideal.reduce(perm);
        Vec out(survivors.size(), 0);
        for (int j = 0; j < ncoord; ++j) {
            uint32_t c = res[pos[j]];
            if (!c) continue;
            check_internal(survivor_slot[j] >= 0, "residue supported on a pivot coordinate");
            out[survivor_slot[j]] = c;
        }
        return out;
    };

    auto alg = std::make_shared<Algebra>(field);
    int dim = static_cast<int>(survivors.size());
    alg->dim = dim;
    alg->quiver = q;
    alg->vertex_basis_index.assign(q.vertices, -1);
    for (int i = 0; i < dim; ++i) {
        const PathRec& p = tab.paths[survivors[i]];
        alg->paths.push_back({p.src, p.tgt, p.arrows});
        if (p.arrows.empty()) {
            alg->basis_names.push_back("e" + std::to_string(p.src + 1));
            alg->vertex_basis_index[p.src] = i;
        } else {
            std::string name;
            for (size_t k = 0; k < p.arrows.size(); ++k) {
                if (k) name += "*";
                name += q.arrows[p.arrows[k]].name;
            }
            alg->basis_names.push_back(name);
        }
    }
    alg->prod.assign(dim, std::vector<Vec>(dim, Vec(dim, 0)));
    for (int i = 0; i < dim; ++i) {
        const PathRec& pi = tab.paths[survivors[i]];
        for (int j = 0; j < dim; ++j) {
            const PathRec& pj = tab.paths[survivors[j]];
            if (pi.tgt != pj.src) continue;  // not composable: product is zero
            std::vector<int> word = pi.arrows;
            word.insert(word.end(), pj.arrows.begin(), pj.arrows.end());
            int pid = tab.find(pi.src, word);
            check_internal(pid >= 0, "product path missing from the enumeration window");
            Vec e(ncoord, 0);
            e[pid] = 1;
            alg->prod[i][j] = reduce_to_basis(e);
        }
    }
    alg->unit.assign(dim, 0);
    for (int v = 0; v < q.vertices; ++v) {
        Vec e(dim, 0);
        e[alg->vertex_basis_index[v]] = 1;
        alg->idempotents.push_back(e);
        alg->unit[alg->vertex_basis_index[v]] = 1;
    }
    verify_algebra(*alg);
    return alg;
}

}  // namespace hk
