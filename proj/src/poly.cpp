#include "sl2cox/poly.hpp"

#include <cctype>
#include <set>

namespace sl2cox {

Monomial operator*(Monomial a, const Monomial& b) {
    for (auto& [v, e] : b) a[v] += e;
    return a;
}

long total_degree(const Monomial& m) {
    long d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

namespace {

bool invariant_like(const std::string& v) { return v.rfind("r_", 0) == 0 || v.rfind("y_", 0) == 0; }

long invariant_degree(const Monomial& m) {
    long d = 0;
    for (auto& [v, e] : m)
        if (invariant_like(v)) d += e;
    return d;
}

}  // namespace

// color variables first, invariant sections r_*, y_* last
std::string monomial_str(const Monomial& m) {
    std::string s;
    for (int pass = 0; pass < 2; ++pass)
        for (auto& [v, e] : m) {
            if (invariant_like(v) != (pass == 1)) continue;
            if (!s.empty()) s += " ";
            s += v;
            if (e != 1) s += "^" + std::to_string(e);
        }
    return s;
}

SparsePoly::SparsePoly(const GaussianRational& c) {
    if (!c.is_zero()) t_[Monomial{}] = c;
}

SparsePoly SparsePoly::var(const std::string& name, long e) { return term(GaussianRational(1), Monomial{{name, e}}); }

SparsePoly SparsePoly::term(const GaussianRational& c, const Monomial& m) {
    SparsePoly p;
    Monomial clean;
    for (auto& [v, e] : m) {
        if (e < 0) throw std::invalid_argument("negative exponent on " + v);
        if (e > 0) clean[v] = e;
    }
    p.add_term(clean, c);
    return p;
}

void SparsePoly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

std::vector<std::string> SparsePoly::variables() const {
    std::set<std::string> vs;
    for (auto& [m, c] : t_)
        for (auto& [v, e] : m) vs.insert(v);
    return {vs.begin(), vs.end()};
}

long SparsePoly::degree_in(const std::string& v) const {
    long d = 0;
    for (auto& [m, c] : t_) {
        auto it = m.find(v);
        if (it != m.end()) d = std::max(d, it->second);
    }
    return d;
}

SparsePoly SparsePoly::coefficient(const std::string& v, long e) const {
    SparsePoly out;
    for (auto& [m, c] : t_) {
        auto it = m.find(v);
        long have = it == m.end() ? 0 : it->second;
        if (have != e) continue;
        Monomial rest = m;
        rest.erase(v);
        out.add_term(rest, c);
    }
    return out;
}

GaussianRational SparsePoly::coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? GaussianRational(0) : it->second;
}

SparsePoly SparsePoly::map_monomials(const std::function<SparsePoly(const Monomial&)>& f) const {
    SparsePoly out;
    for (auto& [m, c] : t_) out += f(m) * c;
    return out;
}

SparsePoly SparsePoly::substitute(const std::map<std::string, SparsePoly>& by) const {
    return map_monomials([&](const Monomial& m) {
        SparsePoly r(1);
        Monomial kept;
        for (auto& [v, e] : m) {
            auto it = by.find(v);
            if (it == by.end()) kept[v] = e;
            else r *= it->second.pow(static_cast<unsigned>(e));
        }
        return r * term(GaussianRational(1), kept);
    });
}

SparsePoly SparsePoly::substitute(const std::string& v, const SparsePoly& by) const { return substitute({{v, by}}); }

SparsePoly SparsePoly::pow(unsigned e) const {
    SparsePoly r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

SparsePoly SparsePoly::monic() const {
    if (is_zero()) return *this;
    GaussianRational c = t_.rbegin()->second;
    return *this * (GaussianRational(1) / c);
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (auto& [ma, ca] : a.t_)
        for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly& SparsePoly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [m, x] : t_) x *= c;
    return *this;
}

namespace {

std::string coeff_str(const GaussianRational& c) {
    if (c.is_real()) return c.re().str();
    return "(" + c.str() + ")";
}

// leading sign of a coefficient for display purposes
bool looks_negative(const GaussianRational& c) {
    if (c.is_real()) return c.re().sign() < 0;
    if (c.re().is_zero()) return c.im().sign() < 0;
    return false;
}

}  // namespace

std::string SparsePoly::str() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Monomial, GaussianRational>> v(t_.begin(), t_.end());
    std::stable_sort(v.begin(), v.end(), [](auto& x, auto& y) {
        long ix = invariant_degree(x.first), iy = invariant_degree(y.first);
        if (ix != iy) return ix < iy;
        return total_degree(x.first) > total_degree(y.first);
    });
    std::string s;
    for (auto& [m, c0] : v) {
        GaussianRational c = c0;
        bool neg = looks_negative(c);
        if (neg) c = -c;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        bool one = c == GaussianRational(1);
        if (!one || m.empty()) s += coeff_str(c);
        if (!m.empty()) s += (one ? "" : " ") + monomial_str(m);
    }
    return s;
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at_end() {
        ws();
        return i >= s.size();
    }
    bool is_var_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) && c != 'i'; }
    bool is_var_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    long integer() {
        ws();
        size_t j = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (j == i) throw ParseError("expected integer in polynomial '" + s + "'");
        return std::stol(s.substr(j, i - j));
    }

    GaussianRational scalar() {
        ws();
        if (s[i] == '(') {
            size_t close = s.find(')', i);
            if (close == std::string::npos) throw ParseError("unbalanced parenthesis in '" + s + "'");
            auto g = GaussianRational::parse(s.substr(i + 1, close - i - 1));
            i = close + 1;
            return g;
        }
        size_t j = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        return GaussianRational(Rational::parse(s.substr(j, i - j)));
    }

    SparsePoly term() {
        GaussianRational c(1);
        Monomial m;
        ws();
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '(')) c = scalar();
        while (true) {
            ws();
            if (i >= s.size()) break;
            if (s[i] == '*') {
                ++i;
                continue;
            }
            if (s[i] == 'i' && (i + 1 >= s.size() || !is_var_char(s[i + 1]))) {
                c *= GaussianRational::i();
                ++i;
                continue;
            }
            if (!std::isalpha(static_cast<unsigned char>(s[i]))) break;
            size_t j = i;
            while (i < s.size() && is_var_char(s[i])) ++i;
            std::string v = s.substr(j, i - j);
            long e = 1;
            ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = integer();
            }
            m[v] += e;
        }
        return SparsePoly::term(c, m);
    }

    SparsePoly poly() {
        SparsePoly p;
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (s[i] == '+' || s[i] == '-') {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
            } else if (!first) {
                throw ParseError("expected + or - in polynomial '" + s + "'");
            }
            ws();
            size_t before = i;
            SparsePoly t = term();
            if (i == before) throw ParseError("empty term in polynomial '" + s + "'");
            p += sign < 0 ? -t : t;
            first = false;
        }
        return p;
    }
};

}  // namespace

SparsePoly SparsePoly::parse(const std::string& s) {
    Parser p{s};
    return p.poly();
}

SparsePoly sl2_reduce(const SparsePoly& p) {
    return p.map_monomials([](const Monomial& m) {
        auto get = [&](const char* v) {
            auto it = m.find(v);
            return it == m.end() ? 0L : it->second;
        };
        long a = get("g1"), d = get("g4");
        long k = std::min(a, d);
        if (k == 0) return SparsePoly::term(GaussianRational(1), m);
        Monomial base = m;
        base["g1"] = a - k;
        base["g4"] = d - k;
        // (g1 g4)^k = (1 + g2 g3)^k
        SparsePoly out;
        for (long j = 0; j <= k; ++j) {
            Monomial t = base;
            t["g2"] += j;
            t["g3"] += j;
            out += SparsePoly::term(GaussianRational(Rational(binomial(k, j))), t);
        }
        return out;
    });
}

SparsePoly sl2_lower(const SparsePoly& p) {
    SparsePoly out;
    for (auto& [m, c] : p.terms()) {
        for (auto [from, to] : {std::pair<const char*, const char*>{"g3", "g1"}, {"g4", "g2"}}) {
            auto it = m.find(from);
            if (it == m.end()) continue;
            Monomial t = m;
            long e = it->second;
            t[from] = e - 1;
            t[to] += 1;
            out += SparsePoly::term(c * GaussianRational(e), t);
        }
    }
    return out;
}

}  // namespace sl2cox
