#include "criteria.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "rng.hpp"

namespace hk {

namespace {

Vec flat_of(const Mat& m) {
    Vec v(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v[static_cast<size_t>(i) * m.cols() + j] = m.at(i, j);
    return v;
}

/* Smallest-first greedy subset of hb whose orbits under endo span the whole
 * hom space; embedding through such a subset keeps every map of the space
 * factoring through the chosen stack.  Picking the largest orbit gain each
 * round keeps the subset near the minimal generator count, so chain terms
 * stay small instead of compounding stage over stage. */
std::vector<int> generating_subset(const Fp& f, const std::vector<Mat>& orbits, int n, int want) {
    std::vector<int> chosen;
    std::vector<bool> used(orbits.size(), false);
    std::vector<Vec> rows;
    std::optional<Subspace> span;
    while (!span || span->dim() < want) {
        int best = -1, best_gain = 0;
        for (int a = 0; a < static_cast<int>(orbits.size()); ++a) {
            if (used[a]) continue;
            int gain;
            if (span) {
                std::vector<Vec> red;
                for (int r = 0; r < orbits[a].rows(); ++r) red.push_back(span->reduce(orbits[a].row(r)));
                gain = rank(f, Mat::from_rows(red, n));
            } else {
                gain = rank(f, orbits[a]);
            }
            if (gain > best_gain) {
                best_gain = gain;
                best = a;
            }
        }
        check_internal(best >= 0, "no candidate extends the span");
        chosen.push_back(best);
        used[best] = true;
        for (int r = 0; r < orbits[best].rows(); ++r) rows.push_back(orbits[best].row(r));
        span.emplace(f, Mat::from_rows(rows, n));
    }
    std::sort(chosen.begin(), chosen.end());
    check_internal(span->dim() == want, "chosen maps do not generate the hom space");
    return chosen;
}

/* Orbits under postcomposition with endo. */
std::vector<int> generating_post_subset(const Fp& f, const std::vector<Mat>& hb,
                                        const std::vector<Mat>& endo) {
    if (hb.empty()) return {};
    const int n = hb[0].rows() * hb[0].cols();
    std::vector<Mat> orbits;
    for (const Mat& h : hb) {
        std::vector<Vec> rows;
        for (const Mat& g : endo) rows.push_back(flat_of(mul(f, h, g)));
        orbits.push_back(Mat::from_rows(rows, n));
    }
    return generating_subset(f, orbits, n, static_cast<int>(hb.size()));
}

/* Mirror image: orbits under precomposition with endo. */
std::vector<int> generating_pre_subset(const Fp& f, const std::vector<Mat>& hb,
                                       const std::vector<Mat>& endo) {
    if (hb.empty()) return {};
    const int n = hb[0].rows() * hb[0].cols();
    std::vector<Mat> orbits;
    for (const Mat& h : hb) {
        std::vector<Vec> rows;
        for (const Mat& g : endo) rows.push_back(flat_of(mul(f, g, h)));
        orbits.push_back(Mat::from_rows(rows, n));
    }
    return generating_subset(f, orbits, n, static_cast<int>(hb.size()));
}

/* Split x as rest plus junk, junk a sum of summands of t, via Fitting
 * decompositions of random composites through t.  Stripping is pure size
 * control: a summand it misses widens later chain terms but never changes a
 * membership or embedding verdict, because those are invariant under
 * summands from add(t). */
struct StripParts {
    ModulePtr rest;
    ModulePtr junk;
    Mat project_rest;  // x.dim x rest.dim
    Mat project_junk;  // x.dim x junk.dim
    Mat include_rest;  // rest.dim x x.dim
    Mat include_junk;  // junk.dim x x.dim
};

StripParts strip_add_part(const ModulePtr& x, const ModulePtr& t) {
    const Fp& f = x->alg->field;
    Rng rng(0x73747269u);  // fixed seed keeps chains deterministic
    StripParts s;
    s.rest = x;
    s.project_rest = Mat::identity(x->dim);
    s.include_rest = Mat::identity(x->dim);
    std::vector<ModulePtr> junk_parts;
    std::vector<Mat> junk_projections;
    std::vector<Mat> junk_includes;
    bool progress = true;
    while (progress && s.rest->dim > 0) {
        progress = false;
        std::vector<Mat> fw = hom_basis(*s.rest, *t);
        std::vector<Mat> bk = hom_basis(*t, *s.rest);
        if (fw.empty() || bk.empty()) break;
        for (int attempt = 0; attempt < 6 && !progress; ++attempt) {
            Mat fc(s.rest->dim, t->dim), gc(t->dim, s.rest->dim);
            for (const Mat& m : fw) fc = add(f, fc, scale(f, static_cast<uint32_t>(rng.below(f.p())), m));
            for (const Mat& m : bk) gc = add(f, gc, scale(f, static_cast<uint32_t>(rng.below(f.p())), m));
            Mat psi = mul(f, fc, gc);
            // stabilized power: its image is a summand on which psi is invertible,
            // and the identity of that image factors through t
            int r = rank(f, psi);
            while (r > 0) {
                Mat sq = mul(f, psi, psi);
                int r2 = rank(f, sq);
                if (r2 == r) break;
                psi = std::move(sq);
                r = r2;
            }
            if (r == 0) continue;
            ModuleMap pm = make_map(s.rest, s.rest, psi);
            Submodule kn = kernel(pm);
            Submodule im = image(pm);
            check_internal(kn.mod->dim + im.mod->dim == s.rest->dim, "stable power must split the module");
            auto binv = inverse(f, stack(kn.include.mat, im.include.mat));
            check_internal(binv.has_value(), "summand bases must be complementary");
            Mat pk(s.rest->dim, kn.mod->dim), pi(s.rest->dim, im.mod->dim);
            for (int i = 0; i < s.rest->dim; ++i) {
                for (int j = 0; j < kn.mod->dim; ++j) pk.at(i, j) = binv->at(i, j);
                for (int j = 0; j < im.mod->dim; ++j) pi.at(i, j) = binv->at(i, kn.mod->dim + j);
            }
            junk_parts.push_back(im.mod);
            junk_projections.push_back(mul(f, s.project_rest, pi));
            junk_includes.push_back(mul(f, im.include.mat, s.include_rest));
            s.project_rest = mul(f, s.project_rest, pk);
            s.include_rest = mul(f, kn.include.mat, s.include_rest);
            s.rest = kn.mod;
            progress = true;
        }
    }
    if (junk_parts.empty()) {
        s.junk = zero_module(x->alg);
        s.project_junk = Mat(x->dim, 0);
        s.include_junk = Mat(0, x->dim);
    } else {
        s.junk = direct_sum(junk_parts).mod;
        s.project_junk = Mat(x->dim, 0);
        for (const Mat& m : junk_projections) s.project_junk = hcat(f, s.project_junk, m);
        s.include_junk = Mat(0, x->dim);
        for (const Mat& m : junk_includes) s.include_junk = stack(s.include_junk, m);
    }
    check_internal(add(f, mul(f, s.project_rest, s.include_rest), mul(f, s.project_junk, s.include_junk)) ==
                       Mat::identity(x->dim),
                   "split projections do not reassemble the identity");
    return s;
}

void verify_coresolve_chain(const Fp& f, const CoresolveChain& ch) {
    check_internal(ch.found, "cannot verify an unfound chain");
    int k = ch.length();
    check_internal(rank(f, ch.first.mat) == ch.anchor->dim, "chain head is not injective");
    if (k >= 1)
        check_internal(mul(f, ch.first.mat, ch.maps[0].mat).is_zero(), "chain head composite is nonzero");
    for (int i = 0; i + 1 < k; ++i)
        check_internal(mul(f, ch.maps[i].mat, ch.maps[i + 1].mat).is_zero(), "chain composite is nonzero");
    for (int i = 0; i <= k; ++i) {
        int incoming = (i == 0) ? rank(f, ch.first.mat) : rank(f, ch.maps[i - 1].mat);
        if (i < k)
            check_internal(incoming + rank(f, ch.maps[i].mat) == ch.terms[i]->dim, "chain is not exact");
        else
            check_internal(incoming == ch.terms[i]->dim, "chain tail is not surjective");
    }
    check_internal(mul(f, ch.terminal.section, ch.terminal.retraction) == Mat::identity(ch.terms[k]->dim),
                   "terminal split pair does not compose to the identity");
}

void verify_resolve_chain(const Fp& f, const ResolveChain& ch) {
    check_internal(ch.found, "cannot verify an unfound chain");
    int k = ch.length();
    check_internal(rank(f, ch.last.mat) == ch.anchor->dim, "chain tail is not surjective");
    if (k >= 1)
        check_internal(mul(f, ch.maps[0].mat, ch.last.mat).is_zero(), "chain tail composite is nonzero");
    for (int i = 0; i + 1 < k; ++i)
        check_internal(mul(f, ch.maps[i + 1].mat, ch.maps[i].mat).is_zero(), "chain composite is nonzero");
    for (int i = 0; i <= k; ++i) {
        int outgoing = (i == 0) ? rank(f, ch.last.mat) : rank(f, ch.maps[i - 1].mat);
        if (i < k)
            check_internal(rank(f, ch.maps[i].mat) + outgoing == ch.terms[i]->dim, "chain is not exact");
        else
            check_internal(outgoing == ch.terms[i]->dim, "chain head is not injective");
    }
    check_internal(mul(f, ch.terminal.section, ch.terminal.retraction) == Mat::identity(ch.terms[k]->dim),
                   "terminal split pair does not compose to the identity");
}

/* The map e (x) id on tensor classes, with e acting on x-coordinates.  The
 * relations must die under the induced matrix, which is checked against the
 * class projection so the result is independent of representatives. */
Mat tensor_induced_x(const Fp& f, const TensorSpace& src, const TensorSpace& tgt,
                     const Mat& src_project, const Mat& e) {
    const int dx = src.x->dim, dy = src.y->dim;
    check_internal(dy == tgt.y->dim && e.rows() == dx && e.cols() == tgt.x->dim,
                   "tensor factors are misaligned");
    Mat pure(dx * dy, tgt.dim());
    for (int i = 0; i < dx; ++i) {
        Vec img = e.row(i);
        for (int j = 0; j < dy; ++j) {
            Vec unit_y(dy, 0);
            unit_y[j] = 1;
            pure.set_row(i * dy + j, tgt.class_of(f, img, unit_y));
        }
    }
    Mat induced = mul(f, src.classes->representatives(), pure);
    check_internal(mul(f, src_project, induced) == pure, "induced tensor map is not well defined");
    return induced;
}

/* Same with e acting on y-coordinates. */
Mat tensor_induced_y(const Fp& f, const TensorSpace& src, const TensorSpace& tgt,
                     const Mat& src_project, const Mat& e) {
    const int dx = src.x->dim, dy = src.y->dim;
    check_internal(dx == tgt.x->dim && e.rows() == dy && e.cols() == tgt.y->dim,
                   "tensor factors are misaligned");
    Mat pure(dx * dy, tgt.dim());
    for (int i = 0; i < dx; ++i) {
        Vec unit_x(dx, 0);
        unit_x[i] = 1;
        for (int j = 0; j < dy; ++j) pure.set_row(i * dy + j, tgt.class_of(f, unit_x, e.row(j)));
    }
    Mat induced = mul(f, src.classes->representatives(), pure);
    check_internal(mul(f, src_project, induced) == pure, "induced tensor map is not well defined");
    return induced;
}

/* Exactness of a dualized chain, re-established by independent rank counts. */
void verify_endo_resolution(const Fp& f, const Complex& del, const ModuleMap& aug) {
    int k = -del.lo();
    check_internal(rank(f, aug.mat) == aug.tgt->dim, "dualized chain does not surject onto the carrier");
    if (k >= 1)
        check_internal(mul(f, del.diff(-1).mat, aug.mat).is_zero(), "dualized chain does not augment to zero");
    for (int j = 0; j <= k; ++j) {
        int outgoing = (j == 0) ? rank(f, aug.mat) : rank(f, del.diff(-j).mat);
        int incoming = (j == k) ? 0 : rank(f, del.diff(-j - 1).mat);
        check_internal(incoming + outgoing == del.term(-j)->dim, "dualized chain is not exact");
    }
}

/* Resolution of the candidate over its endomorphism algebra, obtained by
 * applying Hom(-, t) to the add-chain of the regular module.  Terms are
 * projective on the endo side because every chain term lies in add(t). */
std::pair<Complex, ModuleMap> endo_resolution_from_chain(const Fp& f, const CoresolveChain& ch,
                                                         const ModulePtr& t, const ModulePtr& t_endo) {
    int k = ch.length();
    std::vector<HomSpace> hs;
    std::vector<ModulePtr> q;
    for (int i = 0; i <= k; ++i) {
        hs.push_back(make_hom_space(ch.terms[i], t));
        q.push_back(hom_module_post(hs[i], t_endo));
    }
    std::vector<ModulePtr> terms;
    for (int j = 0; j <= k; ++j) terms.push_back(q[k - j]);
    std::vector<ModuleMap> diffs;
    for (int j = 0; j + 1 <= k; ++j) {
        int i = k - j;  // precomposition with the chain map Y_{i-1} -> Y_i
        Mat mat(q[i]->dim, q[i - 1]->dim);
        for (int r = 0; r < q[i]->dim; ++r)
            mat.set_row(r, hs[i - 1].coords_of(f, mul(f, ch.maps[i - 1].mat, hs[i].basis[r])));
        diffs.push_back(make_map(q[i], q[i - 1], std::move(mat)));
    }
    Complex del(-k, std::move(terms), std::move(diffs));
    // identify Hom(anchor, t) with the carrier through evaluation at the unit
    const Vec& one = t->alg->unit;
    Mat aug(q[0]->dim, t->dim);
    for (int r = 0; r < q[0]->dim; ++r)
        aug.set_row(r, mul(f, one, mul(f, ch.first.mat, hs[0].basis[r])));
    ModuleMap augm = make_map(q[0], t_endo, std::move(aug));
    verify_endo_resolution(f, del, augm);
    return {std::move(del), std::move(augm)};
}

/* Mirror image: resolution of the hom module Hom(u, w) over the candidate's
 * endomorphism side, obtained by applying Hom(u, -) to the cover chain. */
std::pair<Complex, ModuleMap> endo_resolution_from_cochain(const Fp& f, const ResolveChain& ch,
                                                           const ModulePtr& u, const ModulePtr& u_endo,
                                                           const HomSpace& hs_anchor,
                                                           const ModulePtr& carrier) {
    int k = ch.length();
    std::vector<HomSpace> hs;
    std::vector<ModulePtr> q;
    for (int i = 0; i <= k; ++i) {
        hs.push_back(make_hom_space(u, ch.terms[i]));
        q.push_back(hom_module_pre(hs[i], u_endo));
    }
    std::vector<ModulePtr> terms;
    for (int j = 0; j <= k; ++j) terms.push_back(q[k - j]);
    std::vector<ModuleMap> diffs;
    for (int j = 0; j + 1 <= k; ++j) {
        int i = k - j;  // postcomposition with the chain map Y_i -> Y_{i-1}
        Mat mat(q[i]->dim, q[i - 1]->dim);
        for (int r = 0; r < q[i]->dim; ++r)
            mat.set_row(r, hs[i - 1].coords_of(f, mul(f, hs[i].basis[r], ch.maps[i - 1].mat)));
        diffs.push_back(make_map(q[i], q[i - 1], std::move(mat)));
    }
    Complex del(-k, std::move(terms), std::move(diffs));
    Mat aug(q[0]->dim, carrier->dim);
    for (int r = 0; r < q[0]->dim; ++r)
        aug.set_row(r, hs_anchor.coords_of(f, mul(f, hs[0].basis[r], ch.last.mat)));
    ModuleMap augm = make_map(q[0], carrier, std::move(aug));
    verify_endo_resolution(f, del, augm);
    return {std::move(del), std::move(augm)};
}

struct AxiomLabels {
    const char* name;
    const char* one;
    const char* two;
    const char* three;
};

AxiomCheck axioms_projective_side(const ModulePtr& t, int n, const AxiomLabels& lb) {
    require(t != nullptr, errc::invalid_argument, "axiom check needs a module");
    require(n >= 0, errc::invalid_argument, "the degree must be nonnegative");
    require(t->alg->has_quiver(), errc::domain, "axiom checks need a quiver-presented algebra");
    const Fp& f = t->alg->field;
    AxiomCheck out;
    out.criterion = lb.name;

    Resolution res = min_proj_resolution(t, n + 1);
    for (int i = 0; i < static_cast<int>(res.terms.size()); ++i)
        out.evidence.push_back({"projective resolution term", i, res.terms[i]->dim});
    out.certificate.resolution = res;
    if (!res.complete || res.length() > n) {
        out.verdict = Verdict::violated;
        out.detail = std::string(lb.one) +
                     " the minimal projective resolution does not stop within length " + std::to_string(n);
        out.notes.push_back("minimality makes the failure definitive: no shorter resolution exists");
        return out;
    }

    int len = res.length();
    bool ext_ok = true;
    if (len > 0 && t->dim > 0) {
        Complex hc = hom_complex_into(resolution_complex(res), t, plain_space(f, t->dim));
        for (int j = 1; j <= len; ++j) {
            int d = cohomology(hc, j).mod->dim;
            out.evidence.push_back({"self-extension", j, d});
            out.certificate.ext_table.push_back({"self-extension", j, d});
            if (d != 0 && ext_ok) {
                ext_ok = false;
                out.detail = std::string(lb.two) + " the candidate extends itself in degree " + std::to_string(j);
            }
        }
    }
    out.notes.push_back(
        "self-extensions against arbitrary direct sums of the candidate reduce to the finite "
        "table: a finite projective resolution passes through direct sums degreewise");
    if (!ext_ok) {
        out.verdict = Verdict::violated;
        return out;
    }

    CoresolveChain ch = coresolve_by_add(regular_module(t->alg), t, n);
    if (!ch.found) {
        out.verdict = Verdict::violated;
        out.detail = std::string(lb.three) + " " + ch.failure;
        out.notes.push_back(
            "each stage embeds through a generating set of maps into the candidate, so the stage "
            "map is a left approximation and the failed stage refutes every such chain");
        return out;
    }
    verify_coresolve_chain(f, ch);
    for (int i = 0; i < static_cast<int>(ch.terms.size()); ++i)
        out.evidence.push_back({"regular coresolution copies", i, ch.copies[i]});
    out.evidence.push_back({"regular coresolution terminal dimension", ch.length(), ch.terms.back()->dim});
    out.certificate.chain = ch;
    out.verdict = Verdict::satisfied;
    return out;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return "satisfied";
        case Verdict::violated: return "violated";
        default: return "inconclusive";
    }
}

AddMembership in_add(const ModulePtr& x, const ModulePtr& t) {
    require(x && t, errc::invalid_argument, "add membership needs two modules");
    require(algebras_match(*x->alg, *t->alg), errc::invalid_argument,
            "add membership needs modules over one algebra");
    const Fp& f = x->alg->field;
    AddMembership out;
    out.section = Mat(x->dim, 0);
    out.retraction = Mat(0, x->dim);
    if (x->dim == 0) {
        out.member = true;
        return out;
    }
    if (t->dim == 0) return out;
    std::vector<Mat> fw = hom_basis(*x, *t);
    std::vector<Mat> bk = hom_basis(*t, *x);
    if (fw.empty() || bk.empty()) return out;
    const int a = static_cast<int>(fw.size()), b = static_cast<int>(bk.size());
    // x splits off a power of t exactly when the identity is a combination of
    // composites through t; the solved coefficients assemble the split pair
    Mat products(a * b, x->dim * x->dim);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) products.set_row(i * b + j, flat_of(mul(f, fw[i], bk[j])));
    Mat target = Mat::from_rows({flat_of(Mat::identity(x->dim))}, x->dim * x->dim);
    auto gamma = solve_left(f, products, target);
    if (!gamma) return out;
    Mat section(x->dim, 0);
    Mat retraction(0, x->dim);
    int copies = 0;
    for (int i = 0; i < a; ++i) {
        Mat r(t->dim, x->dim);
        for (int j = 0; j < b; ++j) r = add(f, r, scale(f, gamma->at(0, i * b + j), bk[j]));
        if (r.is_zero()) continue;
        section = hcat(f, section, fw[i]);
        retraction = stack(retraction, r);
        ++copies;
    }
    check_internal(mul(f, section, retraction) == Mat::identity(x->dim),
                   "split pair does not compose to the identity");
    out.member = true;
    out.copies = copies;
    out.section = std::move(section);
    out.retraction = std::move(retraction);
    return out;
}

CoresolveChain coresolve_by_add(const ModulePtr& anchor, const ModulePtr& t, int max_len) {
    require(anchor && t, errc::invalid_argument, "chain construction needs two modules");
    require(algebras_match(*anchor->alg, *t->alg), errc::invalid_argument,
            "chain construction needs modules over one algebra");
    require(max_len >= 0, errc::invalid_argument, "the length bound must be nonnegative");
    const Fp& f = anchor->alg->field;
    CoresolveChain ch;
    ch.anchor = anchor;
    std::vector<Mat> endo = hom_basis(*t, *t);
    ModulePtr cur = anchor;
    std::optional<ModuleMap> pending;  // projection from the previous power onto cur
    for (int step = 0;; ++step) {
        AddMembership am = in_add(cur, t);
        if (am.member) {
            ch.terms.push_back(cur);
            ch.copies.push_back(am.copies);
            ch.terminal = am;
            if (step == 0)
                ch.first = identity_map(anchor);
            else
                ch.maps.push_back(*pending);
            ch.found = true;
            return ch;
        }
        if (step == max_len) {
            ch.failure = "stage " + std::to_string(step) +
                         " is not a summand of a power of the candidate and the length bound is reached";
            ch.failed_stage = step;
            return ch;
        }
        StripParts sp = strip_add_part(cur, t);
        std::vector<Mat> hb = hom_basis(*sp.rest, *t);
        Mat full(sp.rest->dim, 0);
        for (const Mat& m : hb) full = hcat(f, full, m);
        if (rank(f, full) < sp.rest->dim) {
            ch.failure = "stage " + std::to_string(step) + " does not embed into any power of the candidate";
            ch.failed_stage = step;
            return ch;
        }
        std::vector<int> chosen = generating_post_subset(f, hb, endo);
        Mat emb(sp.rest->dim, 0);
        for (int c : chosen) emb = hcat(f, emb, hb[c]);
        // maps vanishing on the chosen stack vanish on its endo-closure, which
        // is the whole hom space, so the trimmed stack stays injective
        check_internal(rank(f, emb) == sp.rest->dim, "trimmed embedding lost injectivity");
        ModulePtr y = power_module(t, static_cast<int>(chosen.size()));
        Mat map_mat = mul(f, sp.project_rest, emb);
        if (sp.junk->dim > 0) {
            y = direct_sum({y, sp.junk}).mod;  // the stripped part passes through unchanged
            map_mat = hcat(f, map_mat, sp.project_junk);
        }
        ModuleMap embm = make_map(cur, y, std::move(map_mat));
        check_internal(rank(f, embm.mat) == cur->dim, "stage embedding lost injectivity");
        ch.terms.push_back(y);
        ch.copies.push_back(static_cast<int>(chosen.size()));
        if (step == 0)
            ch.first = embm;
        else
            ch.maps.push_back(make_map(ch.terms[step - 1], y, mul(f, pending->mat, embm.mat)));
        QuotientModule ck = cokernel(embm);
        pending = ck.project;
        cur = ck.mod;
    }
}

ResolveChain resolve_by_add(const ModulePtr& anchor, const ModulePtr& u, int max_len) {
    require(anchor && u, errc::invalid_argument, "chain construction needs two modules");
    require(algebras_match(*anchor->alg, *u->alg), errc::invalid_argument,
            "chain construction needs modules over one algebra");
    require(max_len >= 0, errc::invalid_argument, "the length bound must be nonnegative");
    const Fp& f = anchor->alg->field;
    ResolveChain ch;
    ch.anchor = anchor;
    std::vector<Mat> endo = hom_basis(*u, *u);
    ModulePtr cur = anchor;
    std::optional<ModuleMap> pending;  // inclusion of cur into the previous power
    for (int step = 0;; ++step) {
        AddMembership am = in_add(cur, u);
        if (am.member) {
            ch.terms.push_back(cur);
            ch.copies.push_back(am.copies);
            ch.terminal = am;
            if (step == 0)
                ch.last = identity_map(anchor);
            else
                ch.maps.push_back(*pending);
            ch.found = true;
            return ch;
        }
        if (step == max_len) {
            ch.failure = "stage " + std::to_string(step) +
                         " is not a summand of a power of the candidate and the length bound is reached";
            ch.failed_stage = step;
            return ch;
        }
        StripParts sp = strip_add_part(cur, u);
        std::vector<Mat> hb = hom_basis(*u, *sp.rest);
        Mat full(0, sp.rest->dim);
        for (const Mat& m : hb) full = stack(full, m);
        if (rank(f, full) < sp.rest->dim) {
            ch.failure = "stage " + std::to_string(step) + " is not covered by any power of the candidate";
            ch.failed_stage = step;
            return ch;
        }
        std::vector<int> chosen = generating_pre_subset(f, hb, endo);
        Mat cov(0, sp.rest->dim);
        for (int c : chosen) cov = stack(cov, hb[c]);
        check_internal(rank(f, cov) == sp.rest->dim, "trimmed cover lost surjectivity");
        ModulePtr y = power_module(u, static_cast<int>(chosen.size()));
        Mat map_mat = mul(f, cov, sp.include_rest);
        if (sp.junk->dim > 0) {
            y = direct_sum({y, sp.junk}).mod;  // the stripped part passes through unchanged
            map_mat = stack(map_mat, sp.include_junk);
        }
        ModuleMap covm = make_map(y, cur, std::move(map_mat));
        check_internal(rank(f, covm.mat) == cur->dim, "stage cover lost surjectivity");
        ch.terms.push_back(y);
        ch.copies.push_back(static_cast<int>(chosen.size()));
        if (step == 0)
            ch.last = covm;
        else
            ch.maps.push_back(make_map(y, ch.terms[step - 1], mul(f, covm.mat, pending->mat)));
        Submodule kn = kernel(covm);
        pending = kn.include;
        cur = kn.mod;
    }
}

Complex chain_complex(const CoresolveChain& ch) {
    require(ch.found, errc::invalid_argument, "only a found chain has a complex");
    return Complex(0, ch.terms, ch.maps);
}

AxiomCheck check_tilting(const ModulePtr& t, int n) {
    return axioms_projective_side(t, n, {"tilting axioms", "(T1)", "(T2)", "(T3)'"});
}

AxiomCheck check_ringel(const ModulePtr& m, int n) {
    AxiomCheck out = axioms_projective_side(m, n, {"ringel axioms", "(R1)", "(R2)", "(R3)"});
    out.notes.push_back(
        "(R4) both Mittag-Leffler style conditions hold automatically: a finite dimensional "
        "module is finitely presented and its resolution by finitely generated projectives "
        "realizes the strong condition");
    out.notes.push_back(
        "(R3) for finite dimensional modules every product of copies of the candidate is a "
        "direct sum of copies up to summands, so the chain through finite powers carries the "
        "same force as the product form");
    return out;
}

AxiomCheck check_cotilting(const ModulePtr& u, int n, const ModulePtr& w) {
    require(u && w, errc::invalid_argument, "cotilting check needs two modules");
    require(n >= 0, errc::invalid_argument, "the degree must be nonnegative");
    require(u->alg->has_quiver(), errc::domain, "axiom checks need a quiver-presented algebra");
    require(algebras_match(*u->alg, *w->alg), errc::invalid_argument,
            "cotilting check needs modules over one algebra");
    const Fp& f = u->alg->field;
    AxiomCheck out;
    out.criterion = "cotilting axioms";

    std::string why;
    if (w->dim == 0) {
        why = "it is zero";
    } else {
        auto idw = injective_dimension(w, 1);
        if (!idw || *idw != 0) why = "it is not injective";
    }
    if (why.empty()) {
        for (int v = 0; v < w->alg->quiver->vertices && why.empty(); ++v)
            if (!in_add(injective_module(w->alg, v), w).member)
                why = "it misses the indecomposable injective at vertex " + std::to_string(v);
    }
    if (!why.empty()) {
        out.verdict = Verdict::inconclusive;
        out.detail = "the reference module is not an injective cogenerator: " + why;
        out.notes.push_back(
            "the chain condition is certified against an injective cogenerator only; the sum of "
            "the vertex injectives always works");
        return out;
    }

    Coresolution cores = min_inj_coresolution(u, n + 1);
    for (int i = 0; i < static_cast<int>(cores.terms.size()); ++i)
        out.evidence.push_back({"injective coresolution term", i, cores.terms[i]->dim});
    out.certificate.coresolution = cores;
    if (!cores.complete || cores.length() > n) {
        out.verdict = Verdict::violated;
        out.detail = "(C1) the minimal injective coresolution does not stop within length " + std::to_string(n);
        out.notes.push_back("minimality makes the failure definitive: no shorter coresolution exists");
        return out;
    }

    int len = cores.length();
    bool ext_ok = true;
    if (len > 0 && u->dim > 0) {
        Complex hc = hom_complex_from(u, coresolution_complex(cores), plain_space(f, u->dim));
        for (int j = 1; j <= len; ++j) {
            int d = cohomology(hc, j).mod->dim;
            out.evidence.push_back({"self-extension", j, d});
            out.certificate.ext_table.push_back({"self-extension", j, d});
            if (d != 0 && ext_ok) {
                ext_ok = false;
                out.detail = "(C2) the candidate extends itself in degree " + std::to_string(j);
            }
        }
    }
    out.notes.push_back(
        "self-extensions against arbitrary products of the candidate reduce to the finite "
        "table: a finite injective coresolution passes through products degreewise");
    if (!ext_ok) {
        out.verdict = Verdict::violated;
        return out;
    }

    ResolveChain ch = resolve_by_add(w, u, n);
    if (!ch.found) {
        out.verdict = Verdict::violated;
        out.detail = "(C3)' " + ch.failure;
        out.notes.push_back(
            "each stage is covered through a generating set of maps from the candidate, so the "
            "stage map is a right approximation and the failed stage refutes every such chain");
        return out;
    }
    verify_resolve_chain(f, ch);
    for (int i = 0; i < static_cast<int>(ch.terms.size()); ++i)
        out.evidence.push_back({"cogenerator resolution copies", i, ch.copies[i]});
    out.evidence.push_back({"cogenerator resolution terminal dimension", ch.length(), ch.terms.back()->dim});
    out.certificate.cochain = ch;
    out.verdict = Verdict::satisfied;
    return out;
}

CriterionReport kernel_homological_tilting(const ModulePtr& t, int n, const AxiomCheck* pre) {
    AxiomCheck own;
    if (!pre) {
        own = check_tilting(t, n);
        pre = &own;
    }
    require(pre->passed(), errc::domain, "the kernel criterion applies to verified tilting modules only");
    const Fp& f = t->alg->field;
    CriterionReport rep;
    rep.criterion = "kernel criterion for a tilting module";
    if (n <= 1) {
        rep.verdict = Verdict::satisfied;
        rep.cited_condition =
            "projective dimension at most one: the kernel class is homological with nothing to measure";
        rep.notes.push_back("no dimensions need to vanish in this range");
        return rep;
    }
    check_internal(pre->certificate.resolution && pre->certificate.chain,
                   "a passing tilting check must carry its certificates");
    const Resolution& res = *pre->certificate.resolution;
    const CoresolveChain& ch = *pre->certificate.chain;
    int len = res.length();

    EndoAlgebra endo = endomorphism_algebra(t);
    const ModulePtr& t_endo = endo.action;
    Bimodule reg = regular_bimodule(t->alg);

    // the dualized resolution Hom(P_m, A), carrying the opposite-side structure
    std::vector<HomSpace> dual_spaces;
    Complex dualized = hom_complex_into(resolution_complex(res), reg.first, reg.second, &dual_spaces);

    // its tensor product with the candidate, as modules over the endo side
    std::vector<TensorSpace> tsp;
    std::vector<ModulePtr> tterms;
    std::vector<Mat> tproj;
    for (int m = 0; m <= len; ++m) {
        TensorSpace ts = tensor_over(dualized.term(m), t);
        tterms.push_back(tensor_module_from_y(ts, t_endo));
        tproj.push_back(ts.classes->coords(Mat::identity(dualized.term(m)->dim * t->dim)));
        tsp.push_back(std::move(ts));
    }
    std::vector<ModuleMap> tdiffs;
    for (int m = 0; m < len; ++m)
        tdiffs.push_back(make_map(tterms[m], tterms[m + 1],
                                  tensor_induced_x(f, tsp[m], tsp[m + 1], tproj[m], dualized.diff(m).mat)));
    Complex graded(0, tterms, tdiffs);
    bool upper_zero = true;
    int upper_h2 = 0;
    for (int m = 2; m <= len; ++m) {
        int d = cohomology(graded, m).mod->dim;
        rep.evidence.push_back({"tensor complex cohomology", m, d});
        if (m == 2) upper_h2 = d;
        if (d != 0) upper_zero = false;
    }

    // evaluation maps Hom(P_i, A) (x) T -> Hom(P_i, T) for the two lowest terms
    std::vector<Mat> evals;  // evaluation at each basis vector: A -> t
    for (int j = 0; j < t->dim; ++j) {
        Mat ev(t->alg->dim, t->dim);
        for (int s = 0; s < t->alg->dim; ++s) ev.set_row(s, t->act[s].row(j));
        evals.push_back(std::move(ev));
    }
    std::vector<ModulePtr> phi_src(2), phi_tgt(2);
    std::vector<HomSpace> tgt_space;
    std::vector<Mat> phi(2);
    for (int i = 0; i < 2; ++i) {
        ModulePtr p = (i <= len) ? res.terms[i] : zero_module(t->alg);
        tgt_space.push_back(make_hom_space(p, t));
        phi_tgt[i] = hom_module_post(tgt_space[i], t_endo);
        if (i <= len) {
            phi_src[i] = tterms[i];
            const HomSpace& hs = dual_spaces[i];
            Mat pure(hs.dim() * t->dim, tgt_space[i].dim());
            for (int a = 0; a < hs.dim(); ++a)
                for (int j = 0; j < t->dim; ++j)
                    pure.set_row(a * t->dim + j, tgt_space[i].coords_of(f, mul(f, hs.basis[a], evals[j])));
            phi[i] = mul(f, tsp[i].classes->representatives(), pure);
            check_internal(mul(f, tproj[i], phi[i]) == pure, "evaluation map is not well defined");
        } else {
            phi_src[i] = zero_module(endo.alg);
            phi[i] = Mat(0, phi_tgt[i]->dim);
        }
        check_internal(phi_src[i]->dim == phi_tgt[i]->dim && rank(f, phi[i]) == phi_src[i]->dim,
                       "evaluation against a finitely generated projective must be bijective");
    }
    ModuleMap phim0 = make_map(phi_src[0], phi_tgt[0], phi[0]);
    ModuleMap phim1 = make_map(phi_src[1], phi_tgt[1], phi[1]);

    // the square against the first differential commutes, so the cokernel map descends
    Mat sigma = (len >= 1) ? res.diffs[0].mat : Mat(0, res.terms[0]->dim);
    Mat psi(tgt_space[0].dim(), tgt_space[1].dim());
    for (int b = 0; b < tgt_space[0].dim(); ++b)
        psi.set_row(b, tgt_space[1].coords_of(f, mul(f, sigma, tgt_space[0].basis[b])));
    ModuleMap psim = make_map(phi_tgt[0], phi_tgt[1], psi);
    Mat square_rhs = (len >= 1) ? mul(f, tdiffs[0].mat, phi[1]) : Mat(phi_src[0]->dim, phi_tgt[1]->dim);
    check_internal(mul(f, phi[0], psi) == square_rhs, "evaluation squares do not commute");

    QuotientModule cok0 = cokernel(phim0);
    QuotientModule cok1 = cokernel(phim1);
    rep.evidence.push_back({"evaluation coker", 0, cok0.mod->dim});
    rep.evidence.push_back({"evaluation coker", 1, cok1.mod->dim});
    auto descended = solve_left(f, transpose(cok0.project.mat), transpose(mul(f, psim.mat, cok1.project.mat)));
    check_internal(descended.has_value(), "cokernel comparison map failed to descend");
    ModuleMap deltam = make_map(cok0.mod, cok1.mod, transpose(*descended));
    Submodule kcmp = kernel(deltam);
    rep.evidence.push_back({"comparison kernel", 0, kcmp.mod->dim});

    // endo-side extensions against the comparison kernel, through the dualized add-chain
    auto [del, aug] = endo_resolution_from_chain(f, ch, t, t_endo);
    Complex extc = hom_complex_into(del, kcmp.mod, plain_space(f, kcmp.mod->dim));
    bool ext_zero = true;
    for (int m = 0; m <= n; ++m) {
        int d = extc.has(m) ? cohomology(extc, m).mod->dim : 0;
        rep.evidence.push_back({"endo-side extension against the kernel", m, d});
        if (d != 0) ext_zero = false;
    }

    bool short_zero = true;
    if (n == 2) {
        int e2 = 0, tensored = 0;
        if (dualized.has(2)) {
            Cohomology h2 = cohomology(dualized, 2);
            e2 = h2.mod->dim;
            tensored = tensor_over(h2.mod, t).dim();
        }
        rep.evidence.push_back({"degree-two extension into the algebra", 2, e2});
        rep.evidence.push_back({"degree-two extension tensored with the candidate", 2, tensored});
        check_internal(tensored == upper_h2, "shortcut route disagrees with the graded route");
        short_zero = tensored == 0;
    }

    check_internal(upper_zero == ext_zero, "the two kernel conditions disagree");
    rep.verdict = (upper_zero && ext_zero && short_zero) ? Verdict::satisfied : Verdict::violated;
    rep.cited_condition =
        "upper cohomology of the dualized resolution tensored through the candidate vanishes, and "
        "every endo-side extension against the comparison kernel vanishes in degrees 0.." +
        std::to_string(n);
    rep.notes.push_back(
        "the comparison kernel comes from the evaluation cokernels, which vanish here because "
        "evaluation against a finitely generated projective is bijective");
    rep.notes.push_back(
        "endo-side extensions are measured against the dualized add-chain, whose exactness is "
        "re-verified by independent rank counts");
    if (n == 2)
        rep.notes.push_back(
            "in this range the criterion is equivalent to the vanishing of the tensored "
            "degree-two extension; both routes were computed and agree");
    return rep;
}

CriterionReport kernel_homological_cotilting(const ModulePtr& u, int n, const ModulePtr& w,
                                             const AxiomCheck* pre) {
    AxiomCheck own;
    if (!pre) {
        own = check_cotilting(u, n, w);
        pre = &own;
    }
    require(pre->passed(), errc::domain, "the kernel criterion applies to verified cotilting modules only");
    const Fp& f = u->alg->field;
    CriterionReport rep;
    rep.criterion = "kernel criterion for a cotilting module";
    if (n <= 1) {
        rep.verdict = Verdict::satisfied;
        rep.cited_condition =
            "injective dimension at most one: the kernel class is homological with nothing to measure";
        rep.notes.push_back("no dimensions need to vanish in this range");
        return rep;
    }
    check_internal(pre->certificate.coresolution && pre->certificate.cochain,
                   "a passing cotilting check must carry its certificates");
    const Coresolution& cores = *pre->certificate.coresolution;
    const ResolveChain& ch = *pre->certificate.cochain;
    int len = cores.length();

    EndoAlgebra cog_endo = endomorphism_algebra(w);
    EndoAlgebra cand_endo = endomorphism_algebra(u);
    HomSpace hs_uw = make_hom_space(u, w);
    ModulePtr m_post = hom_module_post(hs_uw, cog_endo.action);  // structure over End(w)
    ModulePtr m_pre = hom_module_pre(hs_uw, cand_endo.action);   // structure over the End(u) side
    make_bimodule(m_post, m_pre);

    // the complex Hom(w, I_m) over the opposite of End(w), from the coresolution
    std::vector<HomSpace> cog_spaces;
    std::vector<ModulePtr> yterms;
    for (int m = 0; m <= len; ++m) {
        cog_spaces.push_back(make_hom_space(w, cores.terms[m]));
        yterms.push_back(hom_module_pre(cog_spaces[m], cog_endo.action));
    }
    std::vector<ModuleMap> ydiffs;
    for (int m = 0; m < len; ++m) {
        Mat mat(yterms[m]->dim, yterms[m + 1]->dim);
        for (int b = 0; b < yterms[m]->dim; ++b)
            mat.set_row(b, cog_spaces[m + 1].coords_of(f, mul(f, cog_spaces[m].basis[b], cores.diffs[m].mat)));
        ydiffs.push_back(make_map(yterms[m], yterms[m + 1], std::move(mat)));
    }
    Complex ycx(0, yterms, ydiffs);

    // its tensor product with Hom(u, w), as modules over the End(u) side
    std::vector<TensorSpace> tsp;
    std::vector<ModulePtr> tterms;
    std::vector<Mat> tproj;
    for (int m = 0; m <= len; ++m) {
        TensorSpace ts = tensor_over(m_post, yterms[m]);
        tterms.push_back(tensor_module_from_x(ts, m_pre));
        tproj.push_back(ts.classes->coords(Mat::identity(m_post->dim * yterms[m]->dim)));
        tsp.push_back(std::move(ts));
    }
    std::vector<ModuleMap> tdiffs;
    for (int m = 0; m < len; ++m)
        tdiffs.push_back(make_map(tterms[m], tterms[m + 1],
                                  tensor_induced_y(f, tsp[m], tsp[m + 1], tproj[m], ydiffs[m].mat)));
    Complex graded(0, tterms, tdiffs);
    bool upper_zero = true;
    int upper_h2 = 0;
    for (int m = 2; m <= len; ++m) {
        int d = cohomology(graded, m).mod->dim;
        rep.evidence.push_back({"cotensor complex cohomology", m, d});
        if (m == 2) upper_h2 = d;
        if (d != 0) upper_zero = false;
    }

    // evaluation maps Hom(u, w) (x) Hom(w, I_i) -> Hom(u, I_i) for the two lowest terms
    std::vector<ModulePtr> phi_src(2), phi_tgt(2);
    std::vector<HomSpace> tgt_space;
    std::vector<Mat> phi(2);
    for (int i = 0; i < 2; ++i) {
        ModulePtr inj = (i <= len) ? cores.terms[i] : zero_module(u->alg);
        tgt_space.push_back(make_hom_space(u, inj));
        phi_tgt[i] = hom_module_pre(tgt_space[i], cand_endo.action);
        if (i <= len) {
            phi_src[i] = tterms[i];
            Mat pure(hs_uw.dim() * cog_spaces[i].dim(), tgt_space[i].dim());
            for (int a = 0; a < hs_uw.dim(); ++a)
                for (int j = 0; j < cog_spaces[i].dim(); ++j)
                    pure.set_row(a * cog_spaces[i].dim() + j,
                                 tgt_space[i].coords_of(f, mul(f, hs_uw.basis[a], cog_spaces[i].basis[j])));
            phi[i] = mul(f, tsp[i].classes->representatives(), pure);
            check_internal(mul(f, tproj[i], phi[i]) == pure, "evaluation map is not well defined");
        } else {
            phi_src[i] = zero_module(m_pre->alg);
            phi[i] = Mat(0, phi_tgt[i]->dim);
        }
        check_internal(phi_src[i]->dim == phi_tgt[i]->dim && rank(f, phi[i]) == phi_src[i]->dim,
                       "evaluation against a summand of the cogenerator must be bijective");
    }
    ModuleMap phim0 = make_map(phi_src[0], phi_tgt[0], phi[0]);
    ModuleMap phim1 = make_map(phi_src[1], phi_tgt[1], phi[1]);

    Mat delta = (len >= 1) ? cores.diffs[0].mat : Mat(cores.terms[0]->dim, 0);
    Mat psi(tgt_space[0].dim(), tgt_space[1].dim());
    for (int b = 0; b < tgt_space[0].dim(); ++b)
        psi.set_row(b, tgt_space[1].coords_of(f, mul(f, tgt_space[0].basis[b], delta)));
    ModuleMap psim = make_map(phi_tgt[0], phi_tgt[1], psi);
    Mat square_rhs = (len >= 1) ? mul(f, tdiffs[0].mat, phi[1]) : Mat(phi_src[0]->dim, phi_tgt[1]->dim);
    check_internal(mul(f, phi[0], psi) == square_rhs, "evaluation squares do not commute");

    QuotientModule cok0 = cokernel(phim0);
    QuotientModule cok1 = cokernel(phim1);
    rep.evidence.push_back({"evaluation coker", 0, cok0.mod->dim});
    rep.evidence.push_back({"evaluation coker", 1, cok1.mod->dim});
    auto descended = solve_left(f, transpose(cok0.project.mat), transpose(mul(f, psim.mat, cok1.project.mat)));
    check_internal(descended.has_value(), "cokernel comparison map failed to descend");
    ModuleMap deltam = make_map(cok0.mod, cok1.mod, transpose(*descended));
    Submodule kcmp = kernel(deltam);
    rep.evidence.push_back({"comparison kernel", 0, kcmp.mod->dim});

    // extensions of the hom module against the kernel, through the covered chain
    auto [del, aug] = endo_resolution_from_cochain(f, ch, u, cand_endo.action, hs_uw, m_pre);
    Complex extc = hom_complex_into(del, kcmp.mod, plain_space(f, kcmp.mod->dim));
    bool ext_zero = true;
    for (int m = 0; m <= n; ++m) {
        int d = extc.has(m) ? cohomology(extc, m).mod->dim : 0;
        rep.evidence.push_back({"endo-side extension against the kernel", m, d});
        if (d != 0) ext_zero = false;
    }

    bool short_zero = true;
    if (n == 2) {
        int e2 = 0, tensored = 0;
        if (ycx.has(2)) {
            Cohomology h2 = cohomology(ycx, 2);
            e2 = h2.mod->dim;
            tensored = tensor_over(m_post, h2.mod).dim();
        }
        rep.evidence.push_back({"degree-two extension from the cogenerator", 2, e2});
        rep.evidence.push_back({"hom module tensored with the degree-two extension", 2, tensored});
        check_internal(tensored == upper_h2, "shortcut route disagrees with the graded route");
        short_zero = tensored == 0;
    }

    check_internal(upper_zero == ext_zero, "the two kernel conditions disagree");
    rep.verdict = (upper_zero && ext_zero && short_zero) ? Verdict::satisfied : Verdict::violated;
    rep.cited_condition =
        "upper cohomology of the cogenerator hom complex tensored with the hom module vanishes, "
        "and every endo-side extension against the comparison kernel vanishes in degrees 0.." +
        std::to_string(n);
    rep.notes.push_back(
        "the comparison kernel comes from the evaluation cokernels, which vanish here because "
        "evaluation against a summand of the cogenerator is bijective");
    rep.notes.push_back(
        "the endomorphism algebra of the cogenerator is finite dimensional, hence noetherian on "
        "both sides, so the criterion applies verbatim");
    if (n == 2)
        rep.notes.push_back(
            "in this range the criterion is equivalent to the vanishing of the tensored "
            "degree-two extension; both routes were computed and agree");
    return rep;
}

CriterionReport split_sufficiency(const ModulePtr& t, const ModulePtr& m_part, const ModulePtr& c_part) {
    require(t && m_part && c_part, errc::invalid_argument, "split sufficiency needs three modules");
    require(algebras_match(*t->alg, *m_part->alg) && algebras_match(*t->alg, *c_part->alg),
            errc::invalid_argument, "split sufficiency needs modules over one algebra");
    CriterionReport rep;
    rep.criterion = "split sufficiency";

    DirectSum ds = direct_sum({m_part, c_part});
    Rng rng(0x73706c69u);  // fixed seed keeps the report reproducible
    IsoQuery iso = is_isomorphic(ds.mod, t, rng);
    if (!iso.isomorphic) {
        require(!iso.exhaustive, errc::domain, "the split decomposition does not reproduce the candidate");
        rep.verdict = Verdict::inconclusive;
        rep.cited_condition = "the decomposition could not be matched to the candidate";
        rep.notes.push_back("no isomorphism was found within the sampling budget; the hypothesis is unverified");
        return rep;
    }

    auto pd_m = projective_dimension(m_part);
    auto pd_c = projective_dimension(c_part);
    rep.evidence.push_back({"projective dimension of the split summand", 0, pd_m ? *pd_m : -2});
    rep.evidence.push_back({"projective dimension of the complement", 0, pd_c ? *pd_c : -2});
    if (!pd_m) {
        rep.verdict = Verdict::inconclusive;
        rep.cited_condition = "the split summand's projective dimension exceeds the resolution cap";
        return rep;
    }
    if (*pd_m > 1) {
        rep.verdict = Verdict::inconclusive;
        rep.cited_condition =
            "hypothesis failed: the shortcut needs the split summand to have projective dimension "
            "at most one";
        rep.notes.push_back("inapplicable, not refuted: the full kernel criterion remains available");
        return rep;
    }

    rep.notes.push_back(
        "the complement's first syzygy is finite dimensional, hence finitely generated, so that "
        "hypothesis is automatic here");
    auto pd_t = projective_dimension(t);
    if (pd_t) {
        int n_eff = *pd_t < 0 ? 0 : *pd_t;
        AxiomCheck ax = check_tilting(t, n_eff);
        if (ax.passed()) {
            CriterionReport full = kernel_homological_tilting(t, n_eff, &ax);
            check_internal(full.satisfied(), "the shortcut and the full criterion must agree");
            rep.notes.push_back("cross-checked against the full kernel criterion, which is satisfied");
        } else {
            rep.verdict = Verdict::inconclusive;
            rep.cited_condition =
                "the candidate fails the tilting axioms, so the shortcut's ambient hypothesis is empty";
            rep.notes.push_back("detail from the axiom check: " + ax.detail);
            return rep;
        }
    }
    rep.verdict = Verdict::satisfied;
    rep.cited_condition =
        "a split summand of projective dimension at most one together with a finitely generated "
        "first syzygy of the complement forces the kernel class to be homological";
    return rep;
}

CriterionReport orthogonality_scan(const std::vector<ModulePtr>& parts, const ModulePtr& w) {
    require(!parts.empty(), errc::invalid_argument, "the scan needs at least one part");
    for (const ModulePtr& p : parts) {
        require(p != nullptr, errc::invalid_argument, "the scan needs modules");
        require(algebras_match(*p->alg, *parts[0]->alg), errc::invalid_argument,
                "the scan needs modules over one algebra");
    }
    if (w)
        require(algebras_match(*w->alg, *parts[0]->alg), errc::invalid_argument,
                "the scan needs modules over one algebra");
    CriterionReport rep;
    rep.criterion = "orthogonality scan";
    int k = static_cast<int>(parts.size());
    bool clean = true;
    for (int i = 0; i + 1 < k; ++i) {
        int back = static_cast<int>(hom_basis(*parts[i + 1], *parts[i]).size());
        rep.evidence.push_back({"hom from next part to previous", i, back});
        if (i >= 1 && back != 0) clean = false;
        int fwd = static_cast<int>(hom_basis(*parts[i], *parts[i + 1]).size());
        rep.evidence.push_back({"hom from previous part to next", i, fwd});
        if (fwd != 0) clean = false;
    }
    if (w) {
        for (int i = 0; i + 1 < k; ++i) {
            int low = ext_dim(i, w, parts[i]);
            rep.evidence.push_back({"extension from the cogenerator at the index degree", i, low});
            int high = ext_dim(i + 1, w, parts[i]);
            rep.evidence.push_back({"extension from the cogenerator one degree above", i, high});
            if (low != 0 || high != 0) clean = false;
        }
    }
    rep.verdict = clean ? Verdict::satisfied : Verdict::violated;
    rep.cited_condition =
        "orthogonality hypotheses of the necessity statements: vanishing hom spaces between "
        "consecutive parts and vanishing extensions from the cogenerator";
    rep.notes.push_back("the scan measures hypotheses only; no conclusion about the kernel class is drawn");
    rep.notes.push_back(
        "the backward hom hypothesis skips the first consecutive pair, matching the shape of the "
        "statement it feeds");
    rep.notes.push_back(
        "the necessity statement in the tilting direction additionally assumes a commutative base "
        "ring, which bound quiver algebras generally are not");
    return rep;
}

CriterionReport classicality_check(const ModulePtr& t, int n) {
    AxiomCheck ax = check_tilting(t, n);
    require(ax.passed(), errc::domain, "classicality applies to verified tilting modules only");
    CriterionReport rep;
    rep.criterion = "classicality";
    rep.verdict = Verdict::satisfied;
    rep.cited_condition =
        "the resolution uses finitely generated projectives only, so the candidate is classical "
        "and its kernel class is homological";
    const Resolution& res = *ax.certificate.resolution;
    for (int i = 0; i < static_cast<int>(res.terms.size()); ++i)
        rep.evidence.push_back({"projective resolution term", i, res.terms[i]->dim});
    CriterionReport full = kernel_homological_tilting(t, n, &ax);
    check_internal(full.satisfied(), "a classical tilting module must satisfy the kernel criterion");
    rep.notes.push_back("kernel criterion recomputed and satisfied, as the classical case forces");
    rep.notes.push_back(
        "every module handled here is finite dimensional, hence finitely generated over the "
        "algebra, so classicality needs no further hypothesis");
    return rep;
}

}  // namespace hk
