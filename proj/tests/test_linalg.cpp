#include <functional>
#include <algorithm>
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linalg.hpp"
#include "rng.hpp"

using namespace hk;

namespace {

Mat random_matrix(Rng& rng, const Fp& f, int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<uint32_t>(rng.below(f.p()));
    return m;
}

/* Independent rank oracle: expansion-by-minors determinants of all square
 * submatrices.  Exponential, fine for the sizes used here, and shares no code
 * with the elimination path it checks. */
uint32_t det_minor(const Fp& f, const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    uint32_t acc = 0;
    std::vector<int> subcols(cols.begin() + 1, cols.end());
    std::vector<int> subrows = rows;
    for (size_t i = 0; i < n; ++i) {
        subrows.erase(subrows.begin() + i);
        uint32_t term = f.mul(m.at(rows[i], cols[0]), det_minor(f, m, subrows, subcols));
        acc = (i % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
        subrows.insert(subrows.begin() + i, rows[i]);
    }
    return acc;
}

bool has_nonzero_minor(const Fp& f, const Mat& m, int size) {
    std::vector<int> rows(size), cols(size);
    std::vector<int> rsel, csel;
    // enumerate size-subsets of rows and cols
    std::vector<int> ridx(size), cidx(size);
    std::function<bool(int, int)> pick_cols = [&](int ci, int start) -> bool {
        if (ci == size) return det_minor(f, m, ridx, cidx) != 0;
        for (int c = start; c < m.cols(); ++c) {
            cidx[ci] = c;
            if (pick_cols(ci + 1, c + 1)) return true;
        }
        return false;
    };
    std::function<bool(int, int)> pick_rows = [&](int ri, int start) -> bool {
        if (ri == size) return pick_cols(0, 0);
        for (int r = start; r < m.rows(); ++r) {
            ridx[ri] = r;
            if (pick_rows(ri + 1, r + 1)) return true;
        }
        return false;
    };
    return pick_rows(0, 0);
}

int rank_oracle(const Fp& f, const Mat& m) {
    int bound = std::min(m.rows(), m.cols());
    for (int size = bound; size >= 1; --size)
        if (has_nonzero_minor(f, m, size)) return size;
    return 0;
}

}  // namespace

TEST_CASE("field arithmetic in F_5") {
    Fp f(5);
    CHECK(f.add(3, 4) == 2);
    CHECK(f.sub(1, 3) == 3);
    CHECK(f.mul(3, 4) == 2);
    CHECK(f.neg(2) == 3);
    for (uint32_t a = 1; a < 5; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.from_int(-7) == 3);
}

TEST_CASE("field rejects non-prime characteristic") {
    CHECK_THROWS_AS(Fp(1), error);
    CHECK_THROWS_AS(Fp(6), error);
    CHECK_NOTHROW(Fp(2));
    CHECK_NOTHROW(Fp(13));
}

TEST_CASE("rref on a frozen example") {
    Fp f(5);
    /* rows (1 2 3; 2 4 1; 0 0 4): rank 2 over F_5 since row2 = 2*row1 - row3... check: 2*(1,2,3)=(2,4,6)=(2,4,1), so rows 1,2 dependent mod the third coordinate: 6 mod 5 = 1 -> row2 = 2*row1 exactly. */
    Mat m(3, 3);
    uint32_t vals[3][3] = {{1, 2, 3}, {2, 4, 1}, {0, 0, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
    Rref rr = rref(f, m);
    CHECK(rr.rank == 2);
    CHECK(rr.pivots == std::vector<int>{0, 2});
    CHECK(mul(f, rr.transform, m) == rr.r);
    CHECK(rank_oracle(f, m) == 2);
}

TEST_CASE("rank agrees with the determinant-minor oracle on random matrices") {
    Fp f(5);
    Rng rng(0x11aa22bb33cc44ddULL);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + static_cast<int>(rng.below(5));
        int c = 1 + static_cast<int>(rng.below(5));
        Mat m = random_matrix(rng, f, r, c);
        CHECK(rank(f, m) == rank_oracle(f, m));
    }
}

TEST_CASE("rank is invariant under transpose") {
    Fp f(5);
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Mat m = random_matrix(rng, f, 2 + rng.below(6), 2 + rng.below(6));
        CHECK(rank(f, m) == rank(f, transpose(m)));
    }
}

TEST_CASE("kernel rows annihilate the matrix and have complementary dimension") {
    Fp f(5);
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Mat m = random_matrix(rng, f, 1 + rng.below(7), 1 + rng.below(7));
        Mat k = kernel_rows(f, m);
        CHECK(k.rows() == m.rows() - rank(f, m));
        if (k.rows() > 0) {
            CHECK(mul(f, k, m).is_zero());
            CHECK(rank(f, k) == k.rows());
        }
    }
}

TEST_CASE("solve_left finds exact preimages and detects unsolvable systems") {
    Fp f(5);
    Rng rng(1234);
    int solved = 0, unsolvable = 0;
    for (int trial = 0; trial < 80; ++trial) {
        Mat m = random_matrix(rng, f, 1 + rng.below(5), 1 + rng.below(5));
        Mat t = random_matrix(rng, f, 1 + rng.below(3), m.cols());
        auto x = solve_left(f, m, t);
        Subspace rowspace(f, m);
        bool solvable = true;
        for (int i = 0; i < t.rows(); ++i) solvable = solvable && rowspace.contains(t.row(i));
        CHECK(x.has_value() == solvable);
        if (x) {
            CHECK(mul(f, *x, m) == t);
            ++solved;
        } else {
            ++unsolvable;
        }
    }
    CHECK(solved > 0);
    CHECK(unsolvable > 0);
}

TEST_CASE("inverse works exactly when the rank is full") {
    Fp f(5);
    Rng rng(555);
    int invertible = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng.below(5));
        Mat m = random_matrix(rng, f, n, n);
        auto inv = inverse(f, m);
        CHECK(inv.has_value() == (rank(f, m) == n));
        if (inv) {
            CHECK(mul(f, *inv, m) == Mat::identity(n));
            CHECK(mul(f, m, *inv) == Mat::identity(n));
            ++invertible;
        }
    }
    CHECK(invertible > 0);
}

TEST_CASE("subspace reduction is a projection modulo the space") {
    Fp f(5);
    Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        Mat m = random_matrix(rng, f, 3, 6);
        Subspace s(f, m);
        for (int i = 0; i < m.rows(); ++i) CHECK(s.contains(m.row(i)));
        Vec v = random_matrix(rng, f, 1, 6).row(0);
        Vec r = s.reduce(v);
        CHECK(s.reduce(r) == r);
        /* v - r lies in the space */
        CHECK(s.contains(sub(f, v, r)));
    }
}

TEST_CASE("quotient coordinates are consistent with representatives") {
    Fp f(5);
    Rng rng(4321);
    for (int trial = 0; trial < 30; ++trial) {
        Mat total = random_matrix(rng, f, 5, 7);
        /* denominator: random combinations of total rows */
        Mat combo = random_matrix(rng, f, 2, 5);
        Mat denom = mul(f, combo, total);
        Quotient q(f, total, denom);
        CHECK(q.dim() == rank(f, total) - rank(f, denom));
        Subspace dsub(f, denom);
        for (int i = 0; i < q.dim(); ++i) {
            Vec rep = q.representatives().row(i);
            Vec c = q.coords(rep);
            Vec e(q.dim(), 0);
            e[i] = 1;
            CHECK(c == e);
        }
        /* class of a denominator element is zero */
        if (denom.rows() > 0 && q.dim() > 0) CHECK(is_zero(q.coords(denom.row(0))));
    }
}

TEST_CASE("composition of maps reads left to right") {
    Fp f(5);
    /* v*(AB) equals (v*A)*B */
    Rng rng(10);
    Mat a = random_matrix(rng, f, 3, 4);
    Mat b = random_matrix(rng, f, 4, 2);
    Vec v = random_matrix(rng, f, 1, 3).row(0);
    CHECK(mul(f, v, mul(f, a, b)) == mul(f, mul(f, v, a), b));
}
