#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sl2cox/errors.hpp"

namespace sl2cox {

using Integer = mpz_class;

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}
    Rational(const Integer& v) : q_(v) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Rational parse(const std::string& s);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    Integer floor() const;
    Integer ceil() const;
    double to_double() const { return q_.get_d(); }
    std::string str() const;
    const mpq_class& raw() const { return q_; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

Rational abs(const Rational& r);

// element of Q(i)
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}
    GaussianRational(const Rational& re, const Rational& im = Rational(0)) : re_(re), im_(im) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    // accepts "a", "p/q", "a+bi", "-i", "3/2-1/2i"
    static GaussianRational parse(const std::string& s);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational pow(unsigned e) const;
    std::string str() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ != b.re_ ? a.re_ < b.re_ : a.im_ < b.im_;
    }
    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

private:
    Rational re_, im_;
};

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, size_t cols = 0);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Integer& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Integer> row(size_t i) const;
    std::vector<Integer> col(size_t j) const;
    void append_row(const std::vector<Integer>& r);
    IntMatrix transpose() const;
    IntMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    Integer determinant() const;
    bool is_zero() const;

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    // row_i += k * row_j
    void add_row(size_t i, size_t j, const Integer& k);
    void add_col(size_t i, size_t j, const Integer& k);
    void negate_row(size_t i);

    std::vector<Integer> apply(const std::vector<Integer>& x) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

// U * M * V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal
struct SmithForm {
    IntMatrix U, D, V, Vinv;
    std::vector<Integer> invariant_factors;  // nonzero diagonal entries
    size_t rank() const { return invariant_factors.size(); }
};

SmithForm smith_normal_form(const IntMatrix& M);

// Z^r x Z/d_1 x ... with every d_i > 1 and d_i | d_{i+1}
struct FinAbGroup {
    size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_torsion_free() const { return torsion.empty(); }
    bool torsion_is_cyclic() const { return torsion.size() <= 1; }
    Integer torsion_order() const;
    std::string str() const;
    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

// quotient of Z^cols by the row span of the relation matrix
struct Cokernel {
    FinAbGroup group;
    // column j is the image of generator j in adapted coordinates, free ones first;
    // torsion entries reduced into [0, d)
    IntMatrix projection;
    // row k is an integer combination of generators mapping to adapted basis vector k
    IntMatrix lift;
    std::vector<Integer> moduli;  // 0 for free coordinates

    std::vector<Integer> image(const std::vector<Integer>& x) const;
    std::vector<Integer> reduce(std::vector<Integer> y) const;
    size_t dim() const { return moduli.size(); }
};

Cokernel cokernel(const IntMatrix& relations, size_t ngens);
inline Cokernel cokernel(const IntMatrix& relations) { return cokernel(relations, relations.cols()); }

// all x in [0, bound]^k with A x = b, row i taken modulo moduli[i] when that is nonzero;
// results in lexicographic order
std::vector<std::vector<Integer>> solve_nonneg(const IntMatrix& A, const std::vector<Integer>& b,
                                               const Integer& bound,
                                               const std::vector<Integer>& moduli = {});

Integer gcd_all(const std::vector<Integer>& v);
Integer mod_floor(const Integer& a, const Integer& m);
Integer binomial(long n, long k);

}  // namespace sl2cox
