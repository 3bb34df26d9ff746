#include "linalg.hpp"

namespace hk {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Fp::Fp(uint32_t p) : p_(p) {
    require(p >= 2 && p < (1u << 16) && is_prime(p), errc::invalid_argument,
            "field characteristic must be a prime below 2^16, got " + std::to_string(p));
}

uint32_t Fp::inv(uint32_t a) const {
    require(a % p_ != 0, errc::domain, "division by zero in F_" + std::to_string(p_));
    /* extended Euclid on (a, p) */
    int64_t t = 0, newt = 1, r = p_, newr = a % p_;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<uint32_t>(t);
}

uint32_t Fp::from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
    Mat m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        check_internal(static_cast<int>(rows[i].size()) == cols, "ragged rows in from_rows");
        m.set_row(i, rows[i]);
    }
    return m;
}

Vec Mat::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void Mat::set_row(int i, const Vec& v) {
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

bool Mat::is_zero() const {
    for (uint32_t x : a_)
        if (x) return false;
    return true;
}

Mat mul(const Fp& f, const Mat& a, const Mat& b) {
    check_internal(a.cols() == b.rows(), "matrix product shape mismatch");
    Mat c(a.rows(), b.cols());
    const uint64_t p = f.p();
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            uint64_t aik = a.at(i, k);
            if (!aik) continue;
            for (int j = 0; j < b.cols(); ++j) {
                uint64_t v = c.at(i, j) + aik * b.at(k, j);
                c.at(i, j) = static_cast<uint32_t>(v % p);
            }
        }
    }
    return c;
}

Vec mul(const Fp& f, const Vec& v, const Mat& m) {
    check_internal(static_cast<int>(v.size()) == m.rows(), "vector-matrix shape mismatch");
    Vec out(m.cols(), 0);
    const uint64_t p = f.p();
    for (int i = 0; i < m.rows(); ++i) {
        uint64_t vi = v[i];
        if (!vi) continue;
        for (int j = 0; j < m.cols(); ++j) out[j] = static_cast<uint32_t>((out[j] + vi * m.at(i, j)) % p);
    }
    return out;
}

Mat add(const Fp& f, const Mat& a, const Mat& b) {
    check_internal(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
    Mat c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = f.add(a.at(i, j), b.at(i, j));
    return c;
}

Mat sub(const Fp& f, const Mat& a, const Mat& b) {
    check_internal(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shape mismatch");
    Mat c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = f.sub(a.at(i, j), b.at(i, j));
    return c;
}

Mat scale(const Fp& f, uint32_t c, const Mat& a) {
    Mat out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = f.mul(c, a.at(i, j));
    return out;
}

Mat transpose(const Mat& a) {
    Mat t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
    return t;
}

Vec add(const Fp& f, const Vec& a, const Vec& b) {
    check_internal(a.size() == b.size(), "vector sum shape mismatch");
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = f.add(a[i], b[i]);
    return c;
}

Vec sub(const Fp& f, const Vec& a, const Vec& b) {
    check_internal(a.size() == b.size(), "vector difference shape mismatch");
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = f.sub(a[i], b[i]);
    return c;
}

Vec scale(const Fp& f, uint32_t c, const Vec& a) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

bool is_zero(const Vec& v) {
    for (uint32_t x : v)
        if (x) return false;
    return true;
}

Mat stack(const Mat& top, const Mat& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    check_internal(top.cols() == bottom.cols(), "stack width mismatch");
    Mat m(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < bottom.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
    return m;
}

Mat hcat(const Fp&, const Mat& left, const Mat& right) {
    check_internal(left.rows() == right.rows(), "hcat height mismatch");
    Mat m(left.rows(), left.cols() + right.cols());
    for (int i = 0; i < left.rows(); ++i) {
        for (int j = 0; j < left.cols(); ++j) m.at(i, j) = left.at(i, j);
        for (int j = 0; j < right.cols(); ++j) m.at(i, left.cols() + j) = right.at(i, j);
    }
    return m;
}

Rref rref(const Fp& f, const Mat& m) {
    Rref out;
    out.r = m;
    out.transform = Mat::identity(m.rows());
    Mat& r = out.r;
    Mat& u = out.transform;
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        int piv = -1;
        for (int i = lead; i < m.rows(); ++i)
            if (r.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead) {
            for (int j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
            for (int j = 0; j < u.cols(); ++j) std::swap(u.at(piv, j), u.at(lead, j));
        }
        uint32_t s = f.inv(r.at(lead, col));
        if (s != 1) {
            for (int j = 0; j < r.cols(); ++j) r.at(lead, j) = f.mul(s, r.at(lead, j));
            for (int j = 0; j < u.cols(); ++j) u.at(lead, j) = f.mul(s, u.at(lead, j));
        }
        for (int i = 0; i < m.rows(); ++i) {
            if (i == lead) continue;
            uint32_t c = r.at(i, col);
            if (!c) continue;
            uint32_t nc = f.neg(c);
            for (int j = 0; j < r.cols(); ++j) r.at(i, j) = f.add(r.at(i, j), f.mul(nc, r.at(lead, j)));
            for (int j = 0; j < u.cols(); ++j) u.at(i, j) = f.add(u.at(i, j), f.mul(nc, u.at(lead, j)));
        }
        out.pivots.push_back(col);
        ++lead;
    }
    out.rank = static_cast<int>(out.pivots.size());
    return out;
}

int rank(const Fp& f, const Mat& m) { return rref(f, m).rank; }

Mat kernel_rows(const Fp& f, const Mat& m) {
    Rref rr = rref(f, m);
    int n = m.rows() - rr.rank;
    Mat k(n, m.rows());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m.rows(); ++j) k.at(i, j) = rr.transform.at(rr.rank + i, j);
    return k;
}

std::optional<Mat> solve_left(const Fp& f, const Mat& m, const Mat& targets) {
    check_internal(m.cols() == targets.cols(), "solve_left shape mismatch");
    Rref rr = rref(f, m);
    Mat x(targets.rows(), m.rows());
    for (int t = 0; t < targets.rows(); ++t) {
        Vec v = targets.row(t);
        Vec c(m.rows(), 0);
        for (int k = 0; k < rr.rank; ++k) {
            uint32_t coef = v[rr.pivots[k]];
            if (!coef) continue;
            c = add(f, c, scale(f, coef, rr.transform.row(k)));
            v = sub(f, v, scale(f, coef, rr.r.row(k)));
        }
        if (!is_zero(v)) return std::nullopt;
        x.set_row(t, c);
    }
    return x;
}

std::optional<Mat> inverse(const Fp& f, const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    Rref rr = rref(f, m);
    if (rr.rank != m.rows()) return std::nullopt;
    return rr.transform;
}

Subspace::Subspace(const Fp& f, const Mat& spanning_rows) : f_(f) {
    Rref rr = rref(f, spanning_rows);
    basis_ = Mat(rr.rank, spanning_rows.cols());
    for (int i = 0; i < rr.rank; ++i) basis_.set_row(i, rr.r.row(i));
    pivots_ = rr.pivots;
}

Vec Subspace::reduce(const Vec& v) const {
    Vec r = v;
    for (int k = 0; k < basis_.rows(); ++k) {
        uint32_t c = r[pivots_[k]];
        if (!c) continue;
        r = sub(f_, r, scale(f_, c, basis_.row(k)));
    }
    return r;
}

bool Subspace::contains(const Mat& rows) const {
    for (int i = 0; i < rows.rows(); ++i)
        if (!contains(rows.row(i))) return false;
    return true;
}

Quotient::Quotient(const Fp& f, const Mat& total_rows, const Mat& denom_rows) : f_(f) {
    Subspace denom(f, denom_rows);
    Subspace total(f, total_rows);
    check_internal(total.contains(denom_rows), "quotient denominator not inside total space");
    denom_dim_ = denom.dim();

    /* pick representatives from the reduced total rows, greedily independent mod denom */
    std::vector<Vec> reps;
    Mat grow = denom.basis();
    Subspace grown(f, grow);
    for (int i = 0; i < total.basis().rows(); ++i) {
        Vec v = total.basis().row(i);
        Vec res = grown.reduce(v);
        if (!is_zero(res)) {
            reps.push_back(v);
            grow = stack(grow, Mat::from_rows({v}, static_cast<int>(v.size())));
            grown = Subspace(f, grow);
        }
    }
    reps_ = Mat::from_rows(reps, total_rows.cols());
    solve_basis_ = stack(denom.basis(), reps_);
    check_internal(reps_.rows() == total.dim() - denom.dim(), "quotient dimension mismatch");
}

Vec Quotient::coords(const Vec& v) const {
    auto x = solve_left(f_, solve_basis_, Mat::from_rows({v}, static_cast<int>(v.size())));
    check_internal(x.has_value(), "coords of a vector outside the total space");
    Vec full = x->row(0);
    return Vec(full.begin() + denom_dim_, full.end());
}

Mat Quotient::coords(const Mat& rows) const {
    Mat out(rows.rows(), dim());
    for (int i = 0; i < rows.rows(); ++i) out.set_row(i, coords(rows.row(i)));
    return out;
}

}  // namespace hk
