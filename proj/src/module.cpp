#include "module.hpp"

#include <algorithm>

namespace hk {

namespace {

Vec flatten(const Mat& m) {
    Vec out(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[static_cast<size_t>(i) * m.cols() + j] = m.at(i, j);
    return out;
}

Mat unflatten(const Vec& v, int rows, int cols) {
    check_internal(static_cast<int>(v.size()) == rows * cols, "unflatten size mismatch");
    Mat out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = v[static_cast<size_t>(i) * cols + j];
    return out;
}

/* block index per coordinate when every idempotent acts as a 0/1 diagonal
 * projector; empty otherwise */
std::vector<int> detect_blocks(const Algebra& alg, const std::vector<Mat>& act, int dim) {
    if (alg.idempotents.size() < 2 || dim == 0) return {};
    std::vector<int> block(dim, -1);
    for (size_t v = 0; v < alg.idempotents.size(); ++v) {
        Mat p(dim, dim);
        for (int i = 0; i < alg.dim; ++i) {
            uint32_t c = alg.idempotents[v][i];
            if (c == 0) continue;
            for (int r = 0; r < dim; ++r)
                for (int s = 0; s < dim; ++s)
                    p.at(r, s) = alg.field.add(p.at(r, s), alg.field.mul(c, act[i].at(r, s)));
        }
        for (int r = 0; r < dim; ++r)
            for (int s = 0; s < dim; ++s) {
                uint32_t e = p.at(r, s);
                if (e == 0) continue;
                if (r != s || e != 1) return {};
                if (block[r] != -1) return {};
                block[r] = static_cast<int>(v);
            }
    }
    for (int r = 0; r < dim; ++r)
        if (block[r] == -1) return {};
    return block;
}

void check_shapes(const Algebra& alg, int dim, const std::vector<Mat>& act) {
    require(dim >= 0, errc::invalid_argument, "module dimension must be nonnegative");
    require(static_cast<int>(act.size()) == alg.dim, errc::invalid_argument,
            "need one action matrix per algebra basis element");
    for (const Mat& m : act)
        require(m.rows() == dim && m.cols() == dim, errc::invalid_argument,
                "action matrix has wrong shape");
}

Mat act_of_raw(const Algebra& alg, const std::vector<Mat>& act, int dim, const Vec& coords) {
    Mat out(dim, dim);
    for (int i = 0; i < alg.dim; ++i) {
        if (coords[i] == 0) continue;
        for (int r = 0; r < dim; ++r)
            for (int s = 0; s < dim; ++s)
                out.at(r, s) = alg.field.add(out.at(r, s), alg.field.mul(coords[i], act[i].at(r, s)));
    }
    return out;
}

void verify_pair(const Algebra& alg, const std::vector<Mat>& act, int dim, int i, int j) {
    Mat lhs = mul(alg.field, act[i], act[j]);
    Mat rhs = act_of_raw(alg, act, dim, alg.prod[i][j]);
    require(lhs == rhs, errc::domain, "action matrices do not respect the product on " +
                                          alg.basis_names[i] + " * " + alg.basis_names[j]);
}

ModulePtr build_module(AlgebraPtr alg, int dim, std::vector<Mat> act, bool full_verify) {
    check_shapes(*alg, dim, act);
    require(act_of_raw(*alg, act, dim, alg->unit) == Mat::identity(dim), errc::domain,
            "unit must act as the identity");
    if (full_verify) {
        for (int i = 0; i < alg->dim; ++i)
            for (int j = 0; j < alg->dim; ++j) verify_pair(*alg, act, dim, i, j);
    } else if (alg->dim > 0 && dim > 0) {
        /* constructions in this file are representations by design; spot-check anyway */
        uint64_t s = 0x9e3779b97f4a7c15ull ^ (static_cast<uint64_t>(alg->dim) << 32 | dim);
        for (int k = 0; k < 8; ++k) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            int i = static_cast<int>((s >> 33) % alg->dim);
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            int j = static_cast<int>((s >> 33) % alg->dim);
            verify_pair(*alg, act, dim, i, j);
        }
    }
    auto m = std::make_shared<Module>();
    m->alg = std::move(alg);
    m->dim = dim;
    m->block = detect_blocks(*m->alg, act, dim);
    m->act = std::move(act);
    return m;
}

/* Conjugate a carrier so idempotents act as 0/1 diagonal projectors.
 * to_old maps new coordinates to old ones (rows are the new basis). */
struct Alignment {
    Mat to_old, to_new;
    std::vector<Mat> act;
};

Alignment align_carrier(const Algebra& alg, const std::vector<Mat>& act, int dim) {
    Alignment out;
    if (!detect_blocks(alg, act, dim).empty() || alg.idempotents.size() < 2 || dim == 0) {
        out.to_old = Mat::identity(dim);
        out.to_new = out.to_old;
        out.act = act;
        return out;
    }
    Mat basis(0, dim);
    for (const Vec& idem : alg.idempotents) {
        Mat p = act_of_raw(alg, act, dim, idem);
        Rref r = rref(alg.field, p);
        Mat rows(r.rank, dim);
        for (int i = 0; i < r.rank; ++i) rows.set_row(i, r.r.row(i));
        basis = stack(basis, rows);
    }
    check_internal(basis.rows() == dim, "idempotent images must fill the carrier");
    auto inv = inverse(alg.field, basis);
    check_internal(inv.has_value(), "idempotent images must be independent");
    out.to_old = basis;
    out.to_new = *inv;
    out.act.reserve(act.size());
    for (const Mat& a : act) out.act.push_back(mul(alg.field, mul(alg.field, basis, a), out.to_new));
    return out;
}

ModulePtr dual_over(const ModulePtr& m, AlgebraPtr target) {
    check_internal(is_opposite_pair(*m->alg, *target), "dual target must be the opposite algebra");
    std::vector<Mat> act;
    act.reserve(m->act.size());
    for (const Mat& a : m->act) act.push_back(transpose(a));
    return build_module(std::move(target), m->dim, std::move(act), false);
}

/* submodule on given independent rref rows, with the induced action */
Submodule induced_from_rows(const ModulePtr& ambient, const Mat& rows) {
    const Fp& f = ambient->alg->field;
    int d = rows.rows();
    std::vector<Mat> act;
    act.reserve(ambient->act.size());
    for (const Mat& a : ambient->act) {
        auto x = solve_left(f, rows, mul(f, rows, a));
        check_internal(x.has_value(), "rows are not closed under the action");
        act.push_back(std::move(*x));
    }
    Alignment al = align_carrier(*ambient->alg, act, d);
    Submodule out;
    out.mod = build_module(ambient->alg, d, std::move(al.act), false);
    out.include = make_map(out.mod, ambient, mul(f, al.to_old, rows));
    return out;
}

}  // namespace

Mat Module::act_of(const Vec& coords) const { return act_of_raw(*alg, act, dim, coords); }

Vec Module::weight_dims() const {
    Vec out;
    out.reserve(alg->idempotents.size());
    for (const Vec& idem : alg->idempotents)
        out.push_back(static_cast<uint32_t>(rank(alg->field, act_of(idem))));
    return out;
}

void verify_module(const Module& m) {
    check_shapes(*m.alg, m.dim, m.act);
    require(m.act_of(m.alg->unit) == Mat::identity(m.dim), errc::domain,
            "unit must act as the identity");
    for (int i = 0; i < m.alg->dim; ++i)
        for (int j = 0; j < m.alg->dim; ++j) verify_pair(*m.alg, m.act, m.dim, i, j);
    if (!m.block.empty())
        require(detect_blocks(*m.alg, m.act, m.dim) == m.block, errc::domain,
                "stored weight blocks do not match the idempotent actions");
}

ModulePtr make_module(AlgebraPtr alg, int dim, std::vector<Mat> act) {
    return build_module(std::move(alg), dim, std::move(act), true);
}

ModulePtr make_module_aligned(AlgebraPtr alg, int dim, std::vector<Mat> act, Mat* applied_transform) {
    check_shapes(*alg, dim, act);
    require(act_of_raw(*alg, act, dim, alg->unit) == Mat::identity(dim), errc::domain,
            "unit must act as the identity");
    for (int i = 0; i < alg->dim; ++i)
        for (int j = 0; j < alg->dim; ++j) verify_pair(*alg, act, dim, i, j);
    Alignment al = align_carrier(*alg, act, dim);
    if (applied_transform) *applied_transform = al.to_old;
    return build_module(std::move(alg), dim, std::move(al.act), false);
}

bool algebras_match(const Algebra& a, const Algebra& b) {
    if (&a == &b) return true;
    return a.field == b.field && a.dim == b.dim && a.unit == b.unit &&
           a.idempotents == b.idempotents && a.prod == b.prod;
}

ModulePtr zero_module(AlgebraPtr alg) {
    std::vector<Mat> act(alg->dim, Mat(0, 0));
    return build_module(std::move(alg), 0, std::move(act), false);
}

ModulePtr regular_module(AlgebraPtr alg) {
    std::vector<Mat> act;
    act.reserve(alg->dim);
    for (int i = 0; i < alg->dim; ++i) act.push_back(alg->right_mult(alg->basis_vec(i)));
    return build_module(std::move(alg), alg->dim, std::move(act), false);
}

ModulePtr simple_module(AlgebraPtr alg, int vertex) {
    require(alg->has_quiver(), errc::domain, "simple modules need a quiver presentation");
    require(vertex >= 0 && vertex < alg->quiver->vertices, errc::reference, "vertex out of range");
    std::vector<Mat> act;
    act.reserve(alg->dim);
    for (int i = 0; i < alg->dim; ++i) {
        Mat m(1, 1);
        m.at(0, 0) = (alg->paths[i].arrows.empty() && alg->paths[i].src == vertex) ? 1u : 0u;
        act.push_back(m);
    }
    return build_module(std::move(alg), 1, std::move(act), true);
}

ModulePtr projective_module(AlgebraPtr alg, int vertex) {
    require(alg->has_quiver(), errc::domain, "projectives by vertex need a quiver presentation");
    require(vertex >= 0 && vertex < alg->quiver->vertices, errc::reference, "vertex out of range");
    ModulePtr reg = regular_module(alg);
    Mat span = alg->left_mult(alg->idempotents[vertex]);
    Rref r = rref(alg->field, span);
    Mat rows(r.rank, alg->dim);
    for (int i = 0; i < r.rank; ++i) rows.set_row(i, r.r.row(i));
    return induced_from_rows(reg, rows).mod;
}

ModulePtr injective_module(AlgebraPtr alg, int vertex) {
    require(alg->has_quiver(), errc::domain, "injectives by vertex need a quiver presentation");
    AlgebraPtr op = opposite(alg);
    return dual_over(projective_module(op, vertex), alg);
}

std::vector<int> projective_basis_paths(const Algebra& alg, int vertex) {
    require(alg.has_quiver(), errc::domain, "projectives by vertex need a quiver presentation");
    require(vertex >= 0 && vertex < alg.quiver->vertices, errc::reference, "vertex out of range");
    Rref r = rref(alg.field, alg.left_mult(alg.idempotents[vertex]));
    std::vector<int> out(r.pivots.begin(), r.pivots.begin() + r.rank);
    check_internal(!out.empty() && alg.paths[out[0]].arrows.empty(),
                   "projective carrier must start at the lazy path");
    return out;
}

ModulePtr dual_module(const ModulePtr& m) { return dual_over(m, opposite(m->alg)); }

ModulePtr module_from_representation(AlgebraPtr alg, const std::vector<int>& vertex_dims,
                                     const std::map<std::string, Mat>& arrow_mats) {
    require(alg->has_quiver(), errc::domain, "representations need a quiver presentation");
    const Quiver& q = *alg->quiver;
    require(static_cast<int>(vertex_dims.size()) == q.vertices, errc::invalid_argument,
            "need one dimension per vertex");
    std::vector<int> offset(q.vertices + 1, 0);
    for (int v = 0; v < q.vertices; ++v) {
        require(vertex_dims[v] >= 0, errc::invalid_argument, "vertex dimensions must be nonnegative");
        offset[v + 1] = offset[v] + vertex_dims[v];
    }
    int dim = offset[q.vertices];
    require(arrow_mats.size() == q.arrows.size(), errc::invalid_argument,
            "need exactly one matrix per arrow");

    std::vector<Mat> arrow_act;
    arrow_act.reserve(q.arrows.size());
    for (const Arrow& a : q.arrows) {
        auto it = arrow_mats.find(a.name);
        require(it != arrow_mats.end(), errc::reference, "missing matrix for arrow " + a.name);
        int from = alg->opposite_oriented ? a.tgt : a.src;
        int to = alg->opposite_oriented ? a.src : a.tgt;
        const Mat& m = it->second;
        require(m.rows() == vertex_dims[from] && m.cols() == vertex_dims[to], errc::invalid_argument,
                "matrix for arrow " + a.name + " has wrong shape");
        Mat big(dim, dim);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                require(m.at(i, j) < alg->field.p(), errc::invalid_argument,
                        "matrix entries must be reduced mod p");
                big.at(offset[from] + i, offset[to] + j) = m.at(i, j);
            }
        arrow_act.push_back(std::move(big));
    }

    std::vector<Mat> act;
    act.reserve(alg->dim);
    for (int b = 0; b < alg->dim; ++b) {
        const PathInfo& p = alg->paths[b];
        if (p.arrows.empty()) {
            Mat m(dim, dim);
            for (int i = offset[p.src]; i < offset[p.src + 1]; ++i) m.at(i, i) = 1;
            act.push_back(std::move(m));
            continue;
        }
        Mat m = Mat::identity(dim);
        if (alg->opposite_oriented) {
            for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it)
                m = mul(alg->field, m, arrow_act[*it]);
        } else {
            for (int idx : p.arrows) m = mul(alg->field, m, arrow_act[idx]);
        }
        act.push_back(std::move(m));
    }
    return build_module(std::move(alg), dim, std::move(act), true);
}

bool is_module_map(const Module& src, const Module& tgt, const Mat& m) {
    if (m.rows() != src.dim || m.cols() != tgt.dim) return false;
    if (!algebras_match(*src.alg, *tgt.alg)) return false;
    const Fp& f = src.alg->field;
    for (int g : src.alg->generator_indices())
        if (mul(f, src.act[g], m) != mul(f, m, tgt.act[g])) return false;
    return true;
}

ModuleMap make_map(ModulePtr src, ModulePtr tgt, Mat m) {
    require(is_module_map(*src, *tgt, m), errc::domain, "matrix is not a module map");
    return ModuleMap{std::move(src), std::move(tgt), std::move(m)};
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    require(f.tgt->dim == g.src->dim && algebras_match(*f.tgt->alg, *g.src->alg), errc::invalid_argument,
            "maps do not compose");
    return make_map(f.src, g.tgt, mul(f.src->alg->field, f.mat, g.mat));
}

ModuleMap zero_map(ModulePtr src, ModulePtr tgt) {
    Mat m(src->dim, tgt->dim);
    return ModuleMap{std::move(src), std::move(tgt), std::move(m)};
}

ModuleMap identity_map(ModulePtr m) {
    Mat id = Mat::identity(m->dim);
    return ModuleMap{m, m, std::move(id)};
}

ModuleMap dual_map(const ModuleMap& f) {
    AlgebraPtr op = opposite(f.src->alg);
    return make_map(dual_over(f.tgt, op), dual_over(f.src, op), transpose(f.mat));
}

Submodule kernel(const ModuleMap& f) {
    return induced_from_rows(f.src, kernel_rows(f.src->alg->field, f.mat));
}

Submodule image(const ModuleMap& f) {
    Rref r = rref(f.src->alg->field, f.mat);
    Mat rows(r.rank, f.tgt->dim);
    for (int i = 0; i < r.rank; ++i) rows.set_row(i, r.r.row(i));
    return induced_from_rows(f.tgt, rows);
}

QuotientModule cokernel(const ModuleMap& f) {
    const Fp& fld = f.src->alg->field;
    const ModulePtr& amb = f.tgt;
    Quotient q(fld, Mat::identity(amb->dim), f.mat);
    const Mat& reps = q.representatives();
    std::vector<Mat> act;
    act.reserve(amb->act.size());
    for (const Mat& a : amb->act) act.push_back(q.coords(mul(fld, reps, a)));
    Alignment al = align_carrier(*amb->alg, act, q.dim());
    QuotientModule out;
    out.mod = build_module(amb->alg, q.dim(), std::move(al.act), false);
    out.project = make_map(amb, out.mod, mul(fld, q.coords(Mat::identity(amb->dim)), al.to_new));
    return out;
}

Submodule span_submodule(const ModulePtr& ambient, const Mat& rows) {
    require(rows.cols() == ambient->dim, errc::invalid_argument, "spanning rows have wrong width");
    const Fp& f = ambient->alg->field;
    Rref r = rref(f, rows);
    Mat basis(r.rank, ambient->dim);
    for (int i = 0; i < r.rank; ++i) basis.set_row(i, r.r.row(i));
    Subspace sp(f, basis);
    for (int g : ambient->alg->generator_indices())
        require(sp.contains(mul(f, basis, ambient->act[g])), errc::domain,
                "rows do not span a submodule");
    return induced_from_rows(ambient, basis);
}

DirectSum direct_sum(const std::vector<ModulePtr>& parts) {
    require(!parts.empty(), errc::invalid_argument, "direct sum needs at least one part");
    const AlgebraPtr& alg = parts[0]->alg;
    int total = 0;
    for (const ModulePtr& p : parts) {
        require(algebras_match(*p->alg, *alg), errc::invalid_argument,
                "direct sum parts live over different algebras");
        total += p->dim;
    }
    std::vector<Mat> act;
    act.reserve(alg->dim);
    for (int b = 0; b < alg->dim; ++b) {
        Mat m(total, total);
        int off = 0;
        for (const ModulePtr& p : parts) {
            for (int i = 0; i < p->dim; ++i)
                for (int j = 0; j < p->dim; ++j) m.at(off + i, off + j) = p->act[b].at(i, j);
            off += p->dim;
        }
        act.push_back(std::move(m));
    }
    DirectSum out;
    out.mod = build_module(alg, total, std::move(act), false);
    int off = 0;
    for (const ModulePtr& p : parts) {
        Mat in(p->dim, total), pr(total, p->dim);
        for (int i = 0; i < p->dim; ++i) {
            in.at(i, off + i) = 1;
            pr.at(off + i, i) = 1;
        }
        out.inject.push_back(make_map(p, out.mod, std::move(in)));
        out.project.push_back(make_map(out.mod, p, std::move(pr)));
        off += p->dim;
    }
    return out;
}

ModulePtr power_module(const ModulePtr& m, int copies) {
    require(copies >= 0, errc::invalid_argument, "negative power");
    if (copies == 0) return zero_module(m->alg);
    return direct_sum(std::vector<ModulePtr>(copies, m)).mod;
}

std::vector<Mat> hom_basis(const Module& m, const Module& n) {
    require(algebras_match(*m.alg, *n.alg), errc::invalid_argument,
            "hom needs modules over the same algebra");
    if (m.dim == 0 || n.dim == 0) return {};
    const Fp& f = m.alg->field;
    const int cols = m.dim * n.dim;

    Mat s(0, cols);
    std::vector<int> conds;
    if (!m.block.empty() && !n.block.empty() && m.alg->has_quiver()) {
        /* block-diagonal start: idempotent conditions hold by construction */
        std::vector<Vec> rows;
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < n.dim; ++j)
                if (m.block[i] == n.block[j]) {
                    Vec r(cols, 0);
                    r[static_cast<size_t>(i) * n.dim + j] = 1;
                    rows.push_back(std::move(r));
                }
        s = Mat::from_rows(rows, cols);
        for (int g : m.alg->generator_indices())
            if (!m.alg->paths[g].arrows.empty()) conds.push_back(g);
    } else {
        s = Mat::identity(cols);
        conds = m.alg->generator_indices();
    }

    for (int g : conds) {
        if (s.rows() == 0) break;
        Mat img(s.rows(), cols);
        for (int k = 0; k < s.rows(); ++k) {
            Mat cand = unflatten(s.row(k), m.dim, n.dim);
            img.set_row(k, flatten(sub(f, mul(f, m.act[g], cand), mul(f, cand, n.act[g]))));
        }
        if (img.is_zero()) continue;
        s = mul(f, kernel_rows(f, img), s);
    }

    Rref fin = rref(f, s);
    std::vector<Mat> out;
    out.reserve(fin.rank);
    for (int i = 0; i < fin.rank; ++i) out.push_back(unflatten(fin.r.row(i), m.dim, n.dim));
    return out;
}

Vec HomSpace::coords_of(const Fp& f, const Mat& member) const {
    Mat target = Mat::from_rows({flatten(member)}, flat.cols());
    auto x = solve_left(f, flat, target);
    check_internal(x.has_value(), "matrix lies outside the hom space");
    return x->row(0);
}

HomSpace make_hom_space(ModulePtr src, ModulePtr tgt) {
    HomSpace h;
    h.basis = hom_basis(*src, *tgt);
    int cols = src->dim * tgt->dim;
    std::vector<Vec> rows;
    rows.reserve(h.basis.size());
    for (const Mat& b : h.basis) rows.push_back(flatten(b));
    h.flat = Mat::from_rows(rows, cols);
    h.src = std::move(src);
    h.tgt = std::move(tgt);
    return h;
}

ModulePtr hom_module_post(const HomSpace& h, const ModulePtr& tgt_other) {
    require(tgt_other->dim == h.tgt->dim, errc::invalid_argument,
            "residual family must act on the target carrier");
    const Fp& f = h.src->alg->field;
    int d = h.dim();
    std::vector<Mat> act;
    act.reserve(tgt_other->act.size());
    for (const Mat& a : tgt_other->act) {
        Mat m(d, d);
        for (int k = 0; k < d; ++k) m.set_row(k, h.coords_of(f, mul(f, h.basis[k], a)));
        act.push_back(std::move(m));
    }
    return build_module(tgt_other->alg, d, std::move(act), false);
}

ModulePtr hom_module_pre(const HomSpace& h, const ModulePtr& src_other) {
    require(src_other->dim == h.src->dim, errc::invalid_argument,
            "residual family must act on the source carrier");
    const Fp& f = h.src->alg->field;
    int d = h.dim();
    std::vector<Mat> act;
    act.reserve(src_other->act.size());
    for (const Mat& a : src_other->act) {
        Mat m(d, d);
        for (int k = 0; k < d; ++k) m.set_row(k, h.coords_of(f, mul(f, a, h.basis[k])));
        act.push_back(std::move(m));
    }
    return build_module(opposite(src_other->alg), d, std::move(act), false);
}

TensorSpace tensor_over(const ModulePtr& x, const ModulePtr& y) {
    require(is_opposite_pair(*x->alg, *y->alg), errc::invalid_argument,
            "tensor factors must be modules over opposite algebras");
    const Fp& f = x->alg->field;
    const int dx = x->dim, dy = y->dim, n = dx * dy;
    std::vector<Vec> rows;
    for (int b : y->alg->generator_indices()) {
        const Mat& mx = x->act[b];
        const Mat& my = y->act[b];
        for (int i = 0; i < dx; ++i)
            for (int j = 0; j < dy; ++j) {
                Vec r(n, 0);
                for (int k = 0; k < dx; ++k) r[static_cast<size_t>(k) * dy + j] = mx.at(i, k);
                for (int l = 0; l < dy; ++l) {
                    size_t idx = static_cast<size_t>(i) * dy + l;
                    r[idx] = f.sub(r[idx], my.at(j, l));
                }
                if (!is_zero(r)) rows.push_back(std::move(r));
            }
    }
    TensorSpace t;
    t.x = x;
    t.y = y;
    t.classes = std::make_shared<Quotient>(f, Mat::identity(n), Mat::from_rows(rows, n));
    return t;
}

Vec TensorSpace::class_of(const Fp& f, const Vec& xv, const Vec& yv) const {
    check_internal(static_cast<int>(xv.size()) == x->dim && static_cast<int>(yv.size()) == y->dim,
                   "tensor factor coordinates have wrong length");
    Vec w(static_cast<size_t>(x->dim) * y->dim, 0);
    for (int i = 0; i < x->dim; ++i) {
        if (xv[i] == 0) continue;
        for (int j = 0; j < y->dim; ++j) w[static_cast<size_t>(i) * y->dim + j] = f.mul(xv[i], yv[j]);
    }
    return classes->coords(w);
}

ModulePtr tensor_module_from_x(const TensorSpace& t, const ModulePtr& x_other) {
    require(x_other->dim == t.x->dim, errc::invalid_argument,
            "residual family must act on the first factor");
    const Fp& f = x_other->alg->field;
    const Mat& reps = t.classes->representatives();
    int d = t.dim();
    std::vector<Mat> act;
    act.reserve(x_other->act.size());
    for (const Mat& a : x_other->act) {
        Mat ta = transpose(a);
        Mat img(d, static_cast<int>(reps.cols()));
        for (int r = 0; r < d; ++r) {
            Mat v = unflatten(reps.row(r), t.x->dim, t.y->dim);
            img.set_row(r, flatten(mul(f, ta, v)));
        }
        act.push_back(t.classes->coords(img));
    }
    return build_module(x_other->alg, d, std::move(act), false);
}

ModulePtr tensor_module_from_y(const TensorSpace& t, const ModulePtr& y_other) {
    require(y_other->dim == t.y->dim, errc::invalid_argument,
            "residual family must act on the second factor");
    const Fp& f = y_other->alg->field;
    const Mat& reps = t.classes->representatives();
    int d = t.dim();
    std::vector<Mat> act;
    act.reserve(y_other->act.size());
    for (const Mat& a : y_other->act) {
        Mat img(d, static_cast<int>(reps.cols()));
        for (int r = 0; r < d; ++r) {
            Mat v = unflatten(reps.row(r), t.x->dim, t.y->dim);
            img.set_row(r, flatten(mul(f, v, a)));
        }
        act.push_back(t.classes->coords(img));
    }
    return build_module(y_other->alg, d, std::move(act), false);
}

Bimodule make_bimodule(ModulePtr first, ModulePtr second) {
    require(first->dim == second->dim, errc::invalid_argument,
            "bimodule structures must share the carrier");
    const Fp& f = first->alg->field;
    for (int g : first->alg->generator_indices())
        for (int h : second->alg->generator_indices())
            require(mul(f, first->act[g], second->act[h]) == mul(f, second->act[h], first->act[g]),
                    errc::domain, "bimodule structures do not commute");
    return Bimodule{std::move(first), std::move(second)};
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
    ModulePtr right = regular_module(a);
    AlgebraPtr op = opposite(a);
    std::vector<Mat> act;
    act.reserve(a->dim);
    for (int i = 0; i < a->dim; ++i) act.push_back(a->left_mult(a->basis_vec(i)));
    ModulePtr left = build_module(op, a->dim, std::move(act), false);
    return make_bimodule(std::move(right), std::move(left));
}

EndoAlgebra endomorphism_algebra(const ModulePtr& m) {
    require(m->dim > 0, errc::domain, "endomorphism algebra needs a nonzero module");
    HomSpace h = make_hom_space(m, m);
    const Fp& f = m->alg->field;
    int d = h.dim();
    auto alg = std::make_shared<Algebra>(f);
    alg->dim = d;
    alg->basis_names.reserve(d);
    for (int i = 0; i < d; ++i) alg->basis_names.push_back("f" + std::to_string(i));
    alg->prod.assign(d, std::vector<Vec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            alg->prod[i][j] = h.coords_of(f, mul(f, h.basis[i], h.basis[j]));
    alg->unit = h.coords_of(f, Mat::identity(m->dim));
    alg->idempotents = {alg->unit};
    verify_algebra(*alg);

    EndoAlgebra out;
    out.alg = alg;
    out.basis = h.basis;
    out.action = build_module(alg, m->dim, h.basis, false);
    out.bimodule = make_bimodule(m, out.action);
    return out;
}

IsoQuery is_isomorphic(const ModulePtr& m, const ModulePtr& n, Rng& rng, int max_samples) {
    IsoQuery out;
    if (m->dim != n->dim || !algebras_match(*m->alg, *n->alg)) {
        out.exhaustive = true;
        return out;
    }
    if (m->dim == 0) {
        out.isomorphic = true;
        out.exhaustive = true;
        return out;
    }
    if (m->weight_dims() != n->weight_dims()) {
        out.exhaustive = true;
        return out;
    }
    const Fp& f = m->alg->field;
    std::vector<Mat> basis = hom_basis(*m, *n);
    int h = static_cast<int>(basis.size());
    if (h == 0) {
        out.exhaustive = true;
        return out;
    }

    auto assemble = [&](const Vec& c) {
        Mat cand(m->dim, n->dim);
        for (int k = 0; k < h; ++k)
            if (c[k] != 0) cand = add(f, cand, scale(f, c[k], basis[k]));
        return cand;
    };

    uint64_t count = 1;
    bool small = true;
    for (int k = 0; k < h && small; ++k) {
        count *= f.p();
        if (count > 20000) small = false;
    }
    if (small) {
        out.exhaustive = true;
        Vec c(h, 0);
        while (true) {
            int pos = 0;
            while (pos < h && c[pos] + 1 == f.p()) c[pos++] = 0;
            if (pos == h) break;
            ++c[pos];
            Mat cand = assemble(c);
            if (auto inv = inverse(f, cand)) {
                out.isomorphic = true;
                out.witness = cand;
                return out;
            }
        }
        return out;
    }
    for (int s = 0; s < max_samples; ++s) {
        Vec c(h);
        for (int k = 0; k < h; ++k) c[k] = static_cast<uint32_t>(rng.below(f.p()));
        Mat cand = assemble(c);
        ++out.samples_used;
        if (auto inv = inverse(f, cand)) {
            out.isomorphic = true;
            out.witness = cand;
            return out;
        }
    }
    return out;
}

}  // namespace hk
