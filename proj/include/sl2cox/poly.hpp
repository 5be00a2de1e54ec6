#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sl2cox/exactmath.hpp"

namespace sl2cox {

// variable -> positive exponent
using Monomial = std::map<std::string, long>;

Monomial operator*(Monomial a, const Monomial& b);
long total_degree(const Monomial& m);
std::string monomial_str(const Monomial& m);

class SparsePoly {
public:
    SparsePoly() = default;
    SparsePoly(const GaussianRational& c);
    SparsePoly(long c) : SparsePoly(GaussianRational(c)) {}
    static SparsePoly var(const std::string& name, long e = 1);
    static SparsePoly term(const GaussianRational& c, const Monomial& m);
    // "s_1 t_2 - 2 r_1^4 r_2 + (1/2+i) a", coefficients before the monomial
    static SparsePoly parse(const std::string& s);

    const std::map<Monomial, GaussianRational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    std::vector<std::string> variables() const;
    long degree_in(const std::string& v) const;
    bool contains(const std::string& v) const { return degree_in(v) > 0; }
    // coefficient polynomial of v^e
    SparsePoly coefficient(const std::string& v, long e) const;
    GaussianRational coefficient(const Monomial& m) const;

    SparsePoly substitute(const std::string& v, const SparsePoly& by) const;
    SparsePoly substitute(const std::map<std::string, SparsePoly>& by) const;
    SparsePoly map_monomials(const std::function<SparsePoly(const Monomial&)>& f) const;
    SparsePoly pow(unsigned e) const;

    // leading term under the map order; the polynomial divided by its coefficient
    SparsePoly monic() const;

    std::string str() const;

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const SparsePoly& o);
    SparsePoly& operator*=(const GaussianRational& c);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(SparsePoly a, const GaussianRational& c) { return a *= c; }
    friend SparsePoly operator*(const GaussianRational& c, SparsePoly a) { return a *= c; }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

private:
    void add_term(const Monomial& m, const GaussianRational& c);
    std::map<Monomial, GaussianRational> t_;
};

// coordinate ring of SL2: variables g1..g4, normal form modulo g1 g4 - g2 g3 - 1
// (no monomial divisible by g1 g4)
SparsePoly sl2_reduce(const SparsePoly& p);
// the lowering derivation g1 d/dg3 + g2 d/dg4
SparsePoly sl2_lower(const SparsePoly& p);

}  // namespace sl2cox
