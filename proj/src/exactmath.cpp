#include "sl2cox/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sl2cox {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ParseError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

static bool all_digits(const std::string& s, size_t from) {
    if (from >= s.size()) return false;
    for (size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

static Integer parse_integer(const std::string& s) {
    size_t from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (!all_digits(s, from)) throw ParseError("not an integer: '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

Rational Rational::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + raw + "'");
    return Rational(parse_integer(s.substr(0, slash)), den);
}

Integer Rational::floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Integer Rational::ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

GaussianRational GaussianRational::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty number");
    if (s.back() != 'i') return GaussianRational(Rational::parse(s));
    std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is not leading and not part of an exponent
    size_t cut = std::string::npos;
    for (size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') { cut = k; break; }
    std::string re_s = cut == std::string::npos ? "" : body.substr(0, cut);
    std::string im_s = cut == std::string::npos ? body : body.substr(cut);
    Rational im;
    if (im_s.empty() || im_s == "+") im = 1;
    else if (im_s == "-") im = -1;
    else {
        if (im_s.back() == '*') im_s.pop_back();
        im = Rational::parse(im_s);
    }
    Rational re = re_s.empty() ? Rational(0) : Rational::parse(re_s);
    return {re, im};
}

GaussianRational GaussianRational::pow(unsigned e) const {
    GaussianRational r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string ims;
    if (im_ == Rational(1)) ims = "i";
    else if (im_ == Rational(-1)) ims = "-i";
    else ims = im_.str() + "i";
    if (re_.is_zero()) return ims;
    return re_.str() + (im_.sign() > 0 ? "+" : "") + ims;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = i;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (n.is_zero()) throw std::domain_error("division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
        for (long v : r) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, size_t cols) {
    if (!rows.empty()) cols = rows[0].size();
    IntMatrix m(0, cols);
    for (auto& r : rows) m.append_row(r);
    return m;
}

std::vector<Integer> IntMatrix::row(size_t i) const {
    return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
}

std::vector<Integer> IntMatrix::col(size_t j) const {
    std::vector<Integer> c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void IntMatrix::append_row(const std::vector<Integer>& r) {
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    IntMatrix b(nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

// Bareiss elimination
Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Integer& v) { return v == 0; });
}

void IntMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row(size_t i, size_t j, const Integer& k) {
    if (k == 0) return;
    for (size_t c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col(size_t i, size_t j, const Integer& k) {
    if (k == 0) return;
    for (size_t r = 0; r < rows_; ++r) (*this)(r, i) += k * (*this)(r, j);
}

void IntMatrix::negate_row(size_t i) {
    for (size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Integer> y(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Integer& v = a(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < b.cols_; ++j) c(i, j) += v * b(k, j);
        }
    return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

namespace {

struct SmithWork {
    IntMatrix D, U, V, Vinv;

    void swap_rows(size_t i, size_t j) {
        D.swap_rows(i, j);
        U.swap_rows(i, j);
    }
    void swap_cols(size_t i, size_t j) {
        D.swap_cols(i, j);
        V.swap_cols(i, j);
        Vinv.swap_rows(i, j);
    }
    void add_row(size_t i, size_t j, const Integer& k) {
        D.add_row(i, j, k);
        U.add_row(i, j, k);
    }
    // col_i += k col_j
    void add_col(size_t i, size_t j, const Integer& k) {
        D.add_col(i, j, k);
        V.add_col(i, j, k);
        Vinv.add_row(j, i, -k);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
    const size_t r = M.rows(), c = M.cols();
    SmithWork w{M, IntMatrix::identity(r), IntMatrix::identity(c), IntMatrix::identity(c)};
    IntMatrix& D = w.D;
    size_t t = 0;
    for (; t < std::min(r, c); ++t) {
        // pick the smallest nonzero entry of the trailing block
        bool found = false;
        size_t pi = 0, pj = 0;
        for (size_t i = t; i < r; ++i)
            for (size_t j = t; j < c; ++j)
                if (D(i, j) != 0 && (!found || ::abs(D(i, j)) < ::abs(D(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < r; ++i) {
                if (D(i, t) == 0) continue;
                Integer q = D(i, t) / D(t, t);
                w.add_row(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (size_t j = t + 1; j < c; ++j) {
                if (D(t, j) == 0) continue;
                Integer q = D(t, j) / D(t, t);
                w.add_col(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) {
                size_t bi = t, bj = t;
                for (size_t i = t + 1; i < r; ++i)
                    if (D(i, t) != 0 && ::abs(D(i, t)) < ::abs(D(bi, bj))) { bi = i; bj = t; }
                for (size_t j = t + 1; j < c; ++j)
                    if (D(t, j) != 0 && ::abs(D(t, j)) < ::abs(D(bi, bj))) { bi = t; bj = j; }
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            bool fixed = false;
            for (size_t i = t + 1; i < r && !fixed; ++i)
                for (size_t j = t + 1; j < c; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        w.add_row(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            w.U.negate_row(t);
        }
    }
    SmithForm out{w.U, w.D, w.V, w.Vinv, {}};
    for (size_t i = 0; i < t; ++i) out.invariant_factors.push_back(out.D(i, i));
    return out;
}

Integer FinAbGroup::torsion_order() const {
    Integer o = 1;
    for (auto& d : torsion) o *= d;
    return o;
}

std::string FinAbGroup::str() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (auto& d : torsion) parts.push_back("Z/" + d.get_str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
    return s;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    if (m == 0) return a;
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r < 0) r += ::abs(m);
    return r;
}

Integer gcd_all(const std::vector<Integer>& v) {
    Integer g = 0;
    for (auto& x : v) g = gcd(g, x);
    return g;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Cokernel cokernel(const IntMatrix& relations, size_t ngens) {
    IntMatrix R = relations;
    if (R.rows() == 0) R = IntMatrix(0, ngens);
    if (R.cols() != ngens) throw std::invalid_argument("relation matrix width mismatch");
    SmithForm s = smith_normal_form(R);
    std::vector<size_t> coords;
    Cokernel k;
    for (size_t j = s.rank(); j < ngens; ++j) {
        coords.push_back(j);
        k.moduli.push_back(0);
    }
    k.group.free_rank = ngens - s.rank();
    for (size_t i = 0; i < s.rank(); ++i)
        if (s.invariant_factors[i] > 1) {
            coords.push_back(i);
            k.moduli.push_back(s.invariant_factors[i]);
            k.group.torsion.push_back(s.invariant_factors[i]);
        }
    k.projection = IntMatrix(coords.size(), ngens);
    k.lift = IntMatrix(coords.size(), ngens);
    for (size_t a = 0; a < coords.size(); ++a)
        for (size_t j = 0; j < ngens; ++j) {
            k.projection(a, j) = mod_floor(s.V(j, coords[a]), k.moduli[a]);
            k.lift(a, j) = s.Vinv(coords[a], j);
        }
    return k;
}

std::vector<Integer> Cokernel::image(const std::vector<Integer>& x) const {
    return reduce(projection.apply(x));
}

std::vector<Integer> Cokernel::reduce(std::vector<Integer> y) const {
    for (size_t a = 0; a < y.size(); ++a) y[a] = mod_floor(y[a], moduli[a]);
    return y;
}

namespace {

// lower column echelon form by unimodular column operations; zero columns dropped
IntMatrix column_echelon(IntMatrix K, std::vector<size_t>& pivots) {
    size_t lead = 0;
    pivots.clear();
    for (size_t i = 0; i < K.rows() && lead < K.cols(); ++i) {
        for (;;) {
            size_t best = K.cols();
            for (size_t j = lead; j < K.cols(); ++j)
                if (K(i, j) != 0 && (best == K.cols() || ::abs(K(i, j)) < ::abs(K(i, best)))) best = j;
            if (best == K.cols()) break;
            K.swap_cols(lead, best);
            bool done = true;
            for (size_t j = lead + 1; j < K.cols(); ++j) {
                if (K(i, j) == 0) continue;
                K.add_col(j, lead, -(K(i, j) / K(i, lead)));
                if (K(i, j) != 0) done = false;
            }
            if (done) {
                pivots.push_back(i);
                ++lead;
                break;
            }
        }
    }
    return K.block(0, 0, K.rows(), lead);
}

struct Enumerator {
    const IntMatrix& K;
    const std::vector<size_t>& pivots;
    const std::vector<Integer>& xp;
    Integer bound;
    std::vector<Integer> t, x;
    std::vector<std::vector<Integer>> out;

    Integer fixed_part(size_t row, size_t upto) const {
        Integer v = xp[row];
        for (size_t c = 0; c < upto; ++c) v += K(row, c) * t[c];
        return v;
    }

    void run(size_t row, size_t col) {
        if (row == xp.size()) {
            out.push_back(x);
            return;
        }
        if (col < pivots.size() && pivots[col] == row) {
            Integer base = fixed_part(row, col);
            Integer step = K(row, col);
            Integer m = ::abs(step);
            for (Integer v = mod_floor(base, m); v <= bound; v += m) {
                t[col] = (v - base) / step;
                x[row] = v;
                run(row + 1, col + 1);
            }
            return;
        }
        Integer v = fixed_part(row, col);
        if (v < 0 || v > bound) return;
        x[row] = v;
        run(row + 1, col);
    }
};

}  // namespace

std::vector<std::vector<Integer>> solve_nonneg(const IntMatrix& A, const std::vector<Integer>& b,
                                               const Integer& bound,
                                               const std::vector<Integer>& moduli) {
    const size_t m = A.rows(), k = A.cols();
    if (b.size() != m) throw std::invalid_argument("right-hand side length mismatch");
    if (!moduli.empty() && moduli.size() != m) throw std::invalid_argument("moduli length mismatch");
    std::vector<size_t> slack_rows;
    for (size_t i = 0; i < moduli.size(); ++i)
        if (moduli[i] != 0) slack_rows.push_back(i);
    IntMatrix Ax(m, k + slack_rows.size());
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < k; ++j) Ax(i, j) = A(i, j);
    for (size_t s = 0; s < slack_rows.size(); ++s) Ax(slack_rows[s], k + s) = moduli[slack_rows[s]];

    SmithForm sf = smith_normal_form(Ax);
    std::vector<Integer> c = sf.U.apply(b);
    std::vector<Integer> z(Ax.cols());
    for (size_t i = 0; i < m; ++i) {
        if (i < sf.rank()) {
            if (c[i] % sf.invariant_factors[i] != 0) throw EmptySolutionSet("no integer solution");
            z[i] = c[i] / sf.invariant_factors[i];
        } else if (c[i] != 0) {
            throw EmptySolutionSet("inconsistent system");
        }
    }
    std::vector<Integer> xfull = sf.V.apply(z);
    std::vector<Integer> xp(xfull.begin(), xfull.begin() + k);
    IntMatrix Kfull(k, Ax.cols() - sf.rank());
    for (size_t i = 0; i < k; ++i)
        for (size_t j = sf.rank(); j < Ax.cols(); ++j) Kfull(i, j - sf.rank()) = sf.V(i, j);
    std::vector<size_t> pivots;
    IntMatrix K = column_echelon(Kfull, pivots);

    Enumerator e{K, pivots, xp, bound, std::vector<Integer>(K.cols()), std::vector<Integer>(k), {}};
    if (bound >= 0) e.run(0, 0);
    if (e.out.empty()) throw EmptySolutionSet("no solution within bound " + bound.get_str());
    return e.out;
}

}  // namespace sl2cox
