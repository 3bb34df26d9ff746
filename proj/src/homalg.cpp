#include "homalg.hpp"

#include <algorithm>
#include <numeric>

namespace hk {

namespace {

Mat one_row(const Vec& v) { return Mat::from_rows({v}, static_cast<int>(v.size())); }

/* columns of a sum of vertex projectives that carry the generators, assuming
 * copies are grouped by ascending vertex */
std::vector<int> generator_columns(const Algebra& alg, const std::vector<int>& mult) {
    std::vector<int> out;
    int off = 0;
    for (size_t v = 0; v < mult.size(); ++v) {
        int pdim = static_cast<int>(projective_basis_paths(alg, static_cast<int>(v)).size());
        for (int c = 0; c < mult[v]; ++c) {
            out.push_back(off);
            off += pdim;
        }
    }
    return out;
}

bool radical_valued(const Algebra& alg, const Mat& mat, const std::vector<int>& tgt_mult) {
    for (int col : generator_columns(alg, tgt_mult))
        for (int i = 0; i < mat.rows(); ++i)
            if (mat.at(i, col) != 0) return false;
    return true;
}

}  // namespace

Complex::Complex(int lo, std::vector<ModulePtr> terms, std::vector<ModuleMap> diffs)
    : lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)) {
    require(!terms_.empty(), errc::invalid_argument, "complex needs at least one term");
    require(diffs_.size() + 1 == terms_.size(), errc::invalid_argument,
            "complex needs one differential between consecutive terms");
    const Fp& f = terms_[0]->alg->field;
    for (size_t i = 0; i < terms_.size(); ++i)
        require(algebras_match(*terms_[i]->alg, *terms_[0]->alg), errc::invalid_argument,
                "complex terms live over different algebras");
    for (size_t i = 0; i < diffs_.size(); ++i) {
        require(diffs_[i].src->dim == terms_[i]->dim && diffs_[i].tgt->dim == terms_[i + 1]->dim,
                errc::invalid_argument, "differential endpoints do not match the terms");
        if (i + 1 < diffs_.size())
            require(mul(f, diffs_[i].mat, diffs_[i + 1].mat).is_zero(), errc::domain,
                    "consecutive differentials must compose to zero");
    }
}

const ModulePtr& Complex::term(int k) const {
    require(has(k), errc::invalid_argument, "degree outside the complex");
    return terms_[k - lo_];
}

const ModuleMap& Complex::diff(int k) const {
    require(k >= lo() && k < hi(), errc::invalid_argument, "no differential at this degree");
    return diffs_[k - lo_];
}

Vec Complex::term_dims() const {
    Vec out;
    out.reserve(terms_.size());
    for (const ModulePtr& t : terms_) out.push_back(static_cast<uint32_t>(t->dim));
    return out;
}

Vec Cohomology::class_of(const Fp& f, const Vec& term_coords) const {
    auto x = solve_left(f, cycles.include.mat, one_row(term_coords));
    check_internal(x.has_value(), "vector is not a cycle");
    return mul(f, x->row(0), classes.project.mat);
}

Cohomology cohomology(const Complex& c, int k) {
    require(c.has(k), errc::invalid_argument, "degree outside the complex");
    const ModulePtr& t = c.term(k);
    const Fp& f = t->alg->field;

    Cohomology out;
    if (k < c.hi()) {
        out.cycles = kernel(c.diff(k));
    } else {
        out.cycles = kernel(zero_map(t, zero_module(t->alg)));
    }
    ModuleMap incoming = [&] {
        if (k > c.lo()) {
            const ModuleMap& d = c.diff(k - 1);
            auto x = solve_left(f, out.cycles.include.mat, d.mat);
            check_internal(x.has_value(), "incoming image must consist of cycles");
            return make_map(d.src, out.cycles.mod, std::move(*x));
        }
        return zero_map(zero_module(t->alg), out.cycles.mod);
    }();
    out.classes = cokernel(incoming);
    out.mod = out.classes.mod;
    return out;
}

Submodule radical_submodule(const ModulePtr& m) {
    std::vector<int> rad = m->alg->radical_indices();
    Mat rows(0, m->dim);
    for (int r : rad) rows = stack(rows, m->act[r]);
    return span_submodule(m, rows);
}

QuotientModule top_quotient(const ModulePtr& m) { return cokernel(radical_submodule(m).include); }

Cover projective_cover(const ModulePtr& m) {
    const AlgebraPtr& alg = m->alg;
    require(alg->has_quiver(), errc::domain, "projective covers need a quiver presentation");
    const Fp& f = alg->field;
    int nv = alg->quiver->vertices;

    Cover out;
    out.mult.assign(nv, 0);
    if (m->dim == 0) {
        out.map = make_map(zero_module(alg), m, Mat(0, 0));
        return out;
    }

    QuotientModule top = top_quotient(m);
    int t = top.mod->dim;
    check_internal(t > 0, "nonzero module has nonzero top");
    auto lifted = solve_left(f, top.project.mat, Mat::identity(t));
    check_internal(lifted.has_value(), "top projection must be onto");

    /* group the top coordinates by vertex so generator columns are predictable */
    std::vector<int> order(t);
    std::iota(order.begin(), order.end(), 0);
    auto vertex_of = [&](int c) { return top.mod->block.empty() ? 0 : top.mod->block[c]; };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return vertex_of(a) < vertex_of(b); });

    std::vector<ModulePtr> parts;
    std::vector<Vec> gens;
    for (int c : order) {
        int v = vertex_of(c);
        ++out.mult[v];
        parts.push_back(projective_module(alg, v));
        /* keep only the weight-v component of the lift; it still lifts e_c */
        gens.push_back(mul(f, lifted->row(c), m->act_of(alg->idempotents[v])));
    }

    DirectSum cover = direct_sum(parts);
    Mat rows(cover.mod->dim, m->dim);
    int off = 0;
    for (size_t c = 0; c < parts.size(); ++c) {
        std::vector<int> paths = projective_basis_paths(*alg, vertex_of(order[c]));
        for (size_t i = 0; i < paths.size(); ++i)
            rows.set_row(off + static_cast<int>(i), mul(f, gens[c], m->act[paths[i]]));
        off += parts[c]->dim;
    }
    out.map = make_map(cover.mod, m, std::move(rows));
    check_internal(rank(f, out.map.mat) == m->dim, "cover must be onto");
    return out;
}

Resolution min_proj_resolution(const ModulePtr& m, int cap) {
    require(cap >= 0, errc::invalid_argument, "resolution cap must be nonnegative");
    const AlgebraPtr& alg = m->alg;
    Resolution out;
    if (m->dim == 0) {
        out.terms.push_back(zero_module(alg));
        out.mult.push_back(std::vector<int>(alg->has_quiver() ? alg->quiver->vertices : 0, 0));
        out.augment = make_map(out.terms[0], m, Mat(0, 0));
        return out;
    }

    ModulePtr cur = m;
    Submodule prev;
    for (int step = 0;; ++step) {
        Cover cv = projective_cover(cur);
        out.terms.push_back(cv.map.src);
        out.mult.push_back(cv.mult);
        if (step == 0) {
            out.augment = cv.map;
        } else {
            out.diffs.push_back(compose(cv.map, prev.include));
            if (!radical_valued(*alg, out.diffs.back().mat, out.mult[step - 1])) out.minimal = false;
        }
        Submodule k = kernel(cv.map);
        if (k.mod->dim == 0) break;
        if (step == cap) {
            out.complete = false;
            break;
        }
        prev = k;
        cur = k.mod;
    }
    return out;
}

Complex resolution_complex(const Resolution& r) {
    int len = r.length();
    std::vector<ModulePtr> terms(r.terms.rbegin(), r.terms.rend());
    std::vector<ModuleMap> diffs;
    for (int i = len - 1; i >= 0; --i) diffs.push_back(r.diffs[i]);
    return Complex(-len, std::move(terms), std::move(diffs));
}

Coresolution min_inj_coresolution(const ModulePtr& m, int cap) {
    Resolution r = min_proj_resolution(dual_module(m), cap);
    Coresolution out;
    out.mult = r.mult;
    out.complete = r.complete;
    out.minimal = r.minimal;
    for (const ModulePtr& t : r.terms) out.terms.push_back(dual_module(t));
    if (m->dim == 0) {
        out.coaugment = make_map(m, out.terms[0], Mat(0, 0));
        return out;
    }
    out.coaugment = make_map(m, out.terms[0], transpose(r.augment.mat));
    for (int i = 0; i + 1 < static_cast<int>(out.terms.size()); ++i)
        out.diffs.push_back(make_map(out.terms[i], out.terms[i + 1], transpose(r.diffs[i].mat)));
    return out;
}

Complex coresolution_complex(const Coresolution& r) {
    std::vector<ModuleMap> diffs;
    for (size_t i = 0; i + 1 < r.terms.size(); ++i) diffs.push_back(r.diffs[i]);
    return Complex(0, r.terms, std::move(diffs));
}

AlgebraPtr scalar_algebra(const Fp& f) {
    auto a = std::make_shared<Algebra>(f);
    a->dim = 1;
    a->basis_names = {"1"};
    a->prod = {{Vec{1}}};
    a->unit = Vec{1};
    a->idempotents = {a->unit};
    verify_algebra(*a);
    return a;
}

ModulePtr plain_space(const Fp& f, int dim) {
    return make_module(scalar_algebra(f), dim, {Mat::identity(dim)});
}

Complex hom_complex_into(const Complex& c, const ModulePtr& x, const ModulePtr& x_family,
                         std::vector<HomSpace>* spaces) {
    const Fp& f = x->alg->field;
    std::vector<HomSpace> hs;
    std::vector<ModulePtr> terms;
    for (int k = c.hi(); k >= c.lo(); --k) {
        hs.push_back(make_hom_space(c.term(k), x));
        terms.push_back(hom_module_post(hs.back(), x_family));
    }
    std::vector<ModuleMap> diffs;
    for (int j = 0; j + 1 <= c.hi() - c.lo(); ++j) {
        int k = c.hi() - j;  // map Hom(term(k), x) -> Hom(term(k-1), x)
        const Mat& d = c.diff(k - 1).mat;
        Mat mat(terms[j]->dim, terms[j + 1]->dim);
        for (int r = 0; r < terms[j]->dim; ++r)
            mat.set_row(r, hs[j + 1].coords_of(f, mul(f, d, hs[j].basis[r])));
        diffs.push_back(make_map(terms[j], terms[j + 1], std::move(mat)));
    }
    if (spaces) *spaces = hs;
    return Complex(-c.hi(), std::move(terms), std::move(diffs));
}

Complex hom_complex_from(const ModulePtr& x, const Complex& c, const ModulePtr& x_family,
                         std::vector<HomSpace>* spaces) {
    const Fp& f = x->alg->field;
    std::vector<HomSpace> hs;
    std::vector<ModulePtr> terms;
    for (int k = c.lo(); k <= c.hi(); ++k) {
        hs.push_back(make_hom_space(x, c.term(k)));
        terms.push_back(hom_module_pre(hs.back(), x_family));
    }
    std::vector<ModuleMap> diffs;
    for (int j = 0; j + 1 <= c.hi() - c.lo(); ++j) {
        const Mat& d = c.diff(c.lo() + j).mat;
        Mat mat(terms[j]->dim, terms[j + 1]->dim);
        for (int r = 0; r < terms[j]->dim; ++r)
            mat.set_row(r, hs[j + 1].coords_of(f, mul(f, hs[j].basis[r], d)));
        diffs.push_back(make_map(terms[j], terms[j + 1], std::move(mat)));
    }
    if (spaces) *spaces = hs;
    return Complex(c.lo(), std::move(terms), std::move(diffs));
}

Complex tensor_complex_with_x(const ModulePtr& x, const Complex& c) {
    const Fp& f = x->alg->field;
    std::vector<TensorSpace> ts;
    std::vector<ModulePtr> terms;
    for (int k = c.lo(); k <= c.hi(); ++k) {
        ts.push_back(tensor_over(x, c.term(k)));
        terms.push_back(plain_space(f, ts.back().dim()));
    }
    std::vector<ModuleMap> diffs;
    for (int j = 0; j + 1 <= c.hi() - c.lo(); ++j) {
        const Mat& d = c.diff(c.lo() + j).mat;
        const Mat& reps = ts[j].classes->representatives();
        Mat mat(terms[j]->dim, terms[j + 1]->dim);
        for (int r = 0; r < terms[j]->dim; ++r) {
            Vec w(static_cast<size_t>(x->dim) * c.term(c.lo() + j + 1)->dim, 0);
            for (int i = 0; i < x->dim; ++i)
                for (int l = 0; l < d.cols(); ++l) {
                    uint32_t acc = w[static_cast<size_t>(i) * d.cols() + l];
                    for (int jj = 0; jj < d.rows(); ++jj)
                        acc = f.add(acc, f.mul(reps.at(r, static_cast<size_t>(i) * d.rows() + jj),
                                               d.at(jj, l)));
                    w[static_cast<size_t>(i) * d.cols() + l] = acc;
                }
            mat.set_row(r, ts[j + 1].classes->coords(w));
        }
        diffs.push_back(make_map(terms[j], terms[j + 1], std::move(mat)));
    }
    return Complex(c.lo(), std::move(terms), std::move(diffs));
}

Complex tensor_complex_with_y(const Complex& c, const ModulePtr& y) {
    const Fp& f = y->alg->field;
    std::vector<TensorSpace> ts;
    std::vector<ModulePtr> terms;
    for (int k = c.lo(); k <= c.hi(); ++k) {
        ts.push_back(tensor_over(c.term(k), y));
        terms.push_back(plain_space(f, ts.back().dim()));
    }
    std::vector<ModuleMap> diffs;
    for (int j = 0; j + 1 <= c.hi() - c.lo(); ++j) {
        const Mat& d = c.diff(c.lo() + j).mat;
        const Mat& reps = ts[j].classes->representatives();
        Mat mat(terms[j]->dim, terms[j + 1]->dim);
        for (int r = 0; r < terms[j]->dim; ++r) {
            /* basis e_i (x) e_l maps to (e_i * d) (x) e_l */
            Vec w(static_cast<size_t>(d.cols()) * y->dim, 0);
            for (int i = 0; i < d.rows(); ++i)
                for (int k2 = 0; k2 < d.cols(); ++k2) {
                    if (d.at(i, k2) == 0) continue;
                    for (int l = 0; l < y->dim; ++l) {
                        size_t idx = static_cast<size_t>(k2) * y->dim + l;
                        w[idx] = f.add(w[idx], f.mul(d.at(i, k2),
                                                     reps.at(r, static_cast<size_t>(i) * y->dim + l)));
                    }
                }
            mat.set_row(r, ts[j + 1].classes->coords(w));
        }
        diffs.push_back(make_map(terms[j], terms[j + 1], std::move(mat)));
    }
    return Complex(c.lo(), std::move(terms), std::move(diffs));
}

ModulePtr ext_space(int i, const ModulePtr& m, const ModulePtr& n) {
    require(i >= 0, errc::invalid_argument, "ext degree must be nonnegative");
    const Fp& f = m->alg->field;
    if (m->dim == 0 || n->dim == 0) return plain_space(f, 0);
    Resolution r = min_proj_resolution(m, i + 1);
    Complex rc = resolution_complex(r);
    Complex hc = hom_complex_into(rc, n, plain_space(f, n->dim));
    if (i > hc.hi()) return plain_space(f, 0);
    return cohomology(hc, i).mod;
}

ModulePtr tor_space(int i, const ModulePtr& x, const ModulePtr& y) {
    require(i >= 0, errc::invalid_argument, "tor degree must be nonnegative");
    const Fp& f = y->alg->field;
    if (x->dim == 0 || y->dim == 0) return plain_space(f, 0);
    Resolution r = min_proj_resolution(y, i + 1);
    Complex tc = tensor_complex_with_x(x, resolution_complex(r));
    if (-i < tc.lo()) return plain_space(f, 0);
    return cohomology(tc, -i).mod;
}

ModulePtr tor_space_by_first(int i, const ModulePtr& x, const ModulePtr& y) {
    require(i >= 0, errc::invalid_argument, "tor degree must be nonnegative");
    const Fp& f = x->alg->field;
    if (x->dim == 0 || y->dim == 0) return plain_space(f, 0);
    Resolution r = min_proj_resolution(x, i + 1);
    Complex tc = tensor_complex_with_y(resolution_complex(r), y);
    if (-i < tc.lo()) return plain_space(f, 0);
    return cohomology(tc, -i).mod;
}

int ext_dim(int i, const ModulePtr& m, const ModulePtr& n) { return ext_space(i, m, n)->dim; }
int tor_dim(int i, const ModulePtr& x, const ModulePtr& y) { return tor_space(i, x, y)->dim; }

std::optional<int> projective_dimension(const ModulePtr& m, int cap) {
    if (m->dim == 0) return -1;
    Resolution r = min_proj_resolution(m, cap);
    if (!r.complete) return std::nullopt;
    return r.length();
}

std::optional<int> injective_dimension(const ModulePtr& m, int cap) {
    if (m->dim == 0) return -1;
    return projective_dimension(dual_module(m), cap);
}

std::optional<int> global_dimension(const AlgebraPtr& a, int cap) {
    require(a->has_quiver(), errc::domain, "global dimension needs a quiver presentation");
    int best = 0;
    for (int v = 0; v < a->quiver->vertices; ++v) {
        auto pd = projective_dimension(simple_module(a, v), cap);
        if (!pd) return std::nullopt;
        best = std::max(best, *pd);
    }
    return best;
}

}  // namespace hk
