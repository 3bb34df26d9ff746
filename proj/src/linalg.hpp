#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "common.hpp"

namespace hk {

/* Arithmetic in the prime field F_p.  p must be prime and < 2^16 so that
 * products fit comfortably in 64-bit intermediates. */
class Fp {
  public:
    explicit Fp(uint32_t p);

    uint32_t p() const { return p_; }
    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p_; }
    uint32_t sub(uint32_t a, uint32_t b) const { return (a + p_ - b) % p_; }
    uint32_t mul(uint32_t a, uint32_t b) const { return static_cast<uint32_t>((uint64_t)a * b % p_); }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t inv(uint32_t a) const;
    uint32_t from_int(int64_t v) const;

    bool operator==(const Fp& o) const { return p_ == o.p_; }

  private:
    uint32_t p_;
};

bool is_prime(uint32_t n);

using Vec = std::vector<uint32_t>;

/* Dense row-major matrix over F_p.  Vectors are rows and act on the left:
 * the map represented by M sends v to v*M, and composing maps reads left to
 * right as a matrix product. */
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint32_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    uint32_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Vec row(int i) const;
    void set_row(int i, const Vec& v);

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    int rows_, cols_;
    std::vector<uint32_t> a_;
};

Mat mul(const Fp& f, const Mat& a, const Mat& b);
Vec mul(const Fp& f, const Vec& v, const Mat& m);
Mat add(const Fp& f, const Mat& a, const Mat& b);
Mat sub(const Fp& f, const Mat& a, const Mat& b);
Mat scale(const Fp& f, uint32_t c, const Mat& a);
Mat transpose(const Mat& a);
Vec add(const Fp& f, const Vec& a, const Vec& b);
Vec sub(const Fp& f, const Vec& a, const Vec& b);
Vec scale(const Fp& f, uint32_t c, const Vec& a);
bool is_zero(const Vec& v);

/* vertical / horizontal concatenation */
Mat stack(const Mat& top, const Mat& bottom);
Mat hcat(const Fp& f, const Mat& left, const Mat& right);

/* Reduced row echelon form with a recorded transform: transform * input = r.
 * Pivot selection is first nonzero from the top, so the result is canonical
 * for a given input; everything downstream inherits determinism from this. */
struct Rref {
    Mat r;
    Mat transform;
    std::vector<int> pivots;
    int rank = 0;
};

Rref rref(const Fp& f, const Mat& m);
int rank(const Fp& f, const Mat& m);

/* Basis of { v : v*m = 0 }, one row per basis vector (possibly 0 rows). */
Mat kernel_rows(const Fp& f, const Mat& m);

/* X with X*m = targets (row-wise), or nullopt if any row has no preimage. */
std::optional<Mat> solve_left(const Fp& f, const Mat& m, const Mat& targets);

std::optional<Mat> inverse(const Fp& f, const Mat& m);

/* Row space held in reduced echelon form. */
class Subspace {
  public:
    Subspace(const Fp& f, const Mat& spanning_rows);

    int dim() const { return basis_.rows(); }
    int ambient() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }

    Vec reduce(const Vec& v) const;  // residue of v modulo the space
    bool contains(const Vec& v) const { return is_zero(reduce(v)); }
    bool contains(const Mat& rows) const;

  private:
    Fp f_;
    Mat basis_;  // rref rows, zero rows dropped
    std::vector<int> pivots_;
};

/* Subquotient total/denominator of a coordinate space, with representative
 * rows and a coordinate map.  denominator must lie inside the span of total. */
class Quotient {
  public:
    Quotient(const Fp& f, const Mat& total_rows, const Mat& denom_rows);

    int dim() const { return reps_.rows(); }
    const Mat& representatives() const { return reps_; }

    /* v must lie in span(total); returns its class in representative coords */
    Vec coords(const Vec& v) const;
    Mat coords(const Mat& rows) const;

  private:
    Fp f_;
    Mat reps_;
    Mat solve_basis_;  // denom basis stacked over reps; coords() solves against this
    int denom_dim_;
};

}  // namespace hk
