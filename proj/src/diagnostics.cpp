#include "sl2cox/diagnostics.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "sl2cox/errors.hpp"

namespace sl2cox {

namespace {

std::string tuple_str(const std::vector<long>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

PlatonicVerdict fail(std::vector<long> t, std::string reason) {
    PlatonicVerdict v;
    v.is_platonic = false;
    v.witness = std::move(t);
    v.reason = std::move(reason);
    return v;
}

}  // namespace

PlatonicVerdict is_platonic_tuple(std::vector<long> t) {
    for (long x : t)
        if (x < 1) throw MalformedGenerators("tuple entries must be positive, got " + tuple_str(t));
    std::vector<long> s = t;
    std::sort(s.rbegin(), s.rend());
    PlatonicVerdict ok;
    ok.reason = "platonic";
    if (s.size() <= 2) return ok;
    for (size_t i = 3; i < s.size(); ++i)
        if (s[i] != 1) return fail(t, "more than three entries exceed 1 in " + tuple_str(t));
    long x = s[0], y = s[1], z = s[2];
    bool triple = z == 1 || (y == 2 && z == 2) || (z == 2 && y == 3 && x >= 3 && x <= 5);
    if (!triple) return fail(t, tuple_str({x, y, z}) + " is not a Platonic triple");
    return ok;
}

PlatonicVerdict is_platonic_ring(const Ap0Input& ap0, PlatonicMethod method) {
    const auto& L = ap0.exponent_vectors;
    PlatonicVerdict ok;
    ok.reason = "platonic";
    if (L.size() <= 2) {
        ok.reason = "at most two exponent vectors";
        return ok;
    }
    for (auto& l : L)
        if (l.empty()) throw MalformedGenerators("empty exponent vector");

    if (method == PlatonicMethod::Auto) {
        double prod = 1;
        for (auto& l : L) prod *= static_cast<double>(l.size());
        method = prod <= 1e6 ? PlatonicMethod::Enumerate : PlatonicMethod::Maxima;
    }
    if (method == PlatonicMethod::Maxima) {
        // the Platonic tuples are closed under lowering entries, so the maxima decide
        std::vector<long> maxima;
        for (auto& l : L) maxima.push_back(*std::max_element(l.begin(), l.end()));
        auto v = is_platonic_tuple(maxima);
        return v.is_platonic ? ok : v;
    }
    std::vector<size_t> idx(L.size(), 0);
    std::vector<long> t(L.size());
    while (true) {
        for (size_t i = 0; i < L.size(); ++i) t[i] = L[i][idx[i]];
        auto v = is_platonic_tuple(t);
        if (!v.is_platonic) return v;
        size_t i = 0;
        while (i < L.size() && ++idx[i] == L[i].size()) idx[i++] = 0;
        if (i == L.size()) break;
    }
    return ok;
}

PlatonicVerdict log_terminal_total_space(const EmbeddingData& E) {
    require_valid(E);
    return is_platonic_ring(derive_ap0_input(E));
}

std::string to_string(OrbitClass::Kind k) {
    switch (k) {
        case OrbitClass::Kind::FixedPoint: return "FixedPoint";
        case OrbitClass::Kind::TypeAl: return "TypeAl";
        case OrbitClass::Kind::Other: return "Other";
    }
    return "Other";
}

namespace {

struct Color {
    std::string name;
    HyperspaceVector v;
};

std::vector<Color> colors_of(const EmbeddingData& E) {
    SectionConvention sc = section_convention(E);
    std::vector<Color> out;
    for (auto& p : exceptional_points(E)) out.push_back({p.name, color_vector(E.group, p.point, sc)});
    if (has_separate_distinguished(E)) out.push_back({"d", color_vector(E.group, sc.distinguished, sc)});
    return out;
}

bool proportional(const HyperspaceVector& a, const HyperspaceVector& b) {
    return a.base == b.base && a.h * b.l == a.l * b.h && a.h.sign() == b.h.sign();
}

bool is_eps(const HyperspaceVector& v) { return v.h == Rational(1) && v.l.is_zero(); }

bool contains_color(const ColoredHypercone& c, const HyperspaceVector& col) {
    if (is_eps(col) && std::find(c.eps_excluded.begin(), c.eps_excluded.end(), col.base) == c.eps_excluded.end())
        return true;
    return std::any_of(c.generators.begin(), c.generators.end(),
                       [&](const HyperspaceVector& g) { return g.h.sign() > 0 && proportional(g, col); });
}

}  // namespace

OrbitClass classify_hypercone_orbit(const ColoredHypercone& c, const EmbeddingData& E) {
    OrbitClass out;
    auto colors = colors_of(E);
    bool all = std::all_of(colors.begin(), colors.end(), [&](const Color& k) { return contains_color(c, k.v); });
    if (all) {
        out.kind = OrbitClass::Kind::FixedPoint;
        return out;
    }
    if (c.kind != HyperconeKind::TypeB) return out;

    std::vector<const HyperspaceVector*> extra;
    for (auto& g : c.generators) {
        if (g.h.sign() <= 0) return out;
        bool is_color = std::any_of(colors.begin(), colors.end(), [&](const Color& k) { return proportional(g, k.v); });
        if (!is_color) extra.push_back(&g);
    }
    std::set<BasePoint> seen;
    std::vector<long> tuple;
    std::vector<std::string> names;
    for (auto* g : extra) {
        auto col = std::find_if(colors.begin(), colors.end(), [&](const Color& k) { return k.v.base == g->base; });
        if (col == colors.end() || !seen.insert(g->base).second || !g->h.is_integer()) return out;
        if (contains_color(c, col->v)) return out;
        tuple.push_back(g->h.num().get_si());
        names.push_back(col->name);
    }
    for (auto& k : colors)
        if (!seen.count(k.v.base) && !contains_color(c, k.v)) return out;
    if (tuple.empty()) return out;
    out.kind = OrbitClass::Kind::TypeAl;
    out.tuple = tuple;
    out.points = names;
    return out;
}

PlatonicVerdict log_terminal_X(const EmbeddingData& E, const std::vector<ColoredHypercone>& hypercones) {
    std::optional<PlatonicVerdict> bad;
    for (auto& c : hypercones) {
        auto k = classify_hypercone_orbit(c, E);
        if (k.kind == OrbitClass::Kind::FixedPoint) return fail({}, "FixedPoint");
        if (k.kind == OrbitClass::Kind::TypeAl && !bad && k.tuple.size() > 2) {
            auto v = is_platonic_tuple(k.tuple);
            if (!v.is_platonic) bad = fail(k.tuple, "orbit of type A_" + std::to_string(k.tuple.size()) + " with tuple " +
                                                        tuple_str(k.tuple) + " is not Platonic");
        }
    }
    if (bad) return *bad;
    PlatonicVerdict ok;
    ok.reason = "no fixed point and every A_l orbit is Platonic";
    return ok;
}

bool special_fiber_normal(const EmbeddingData& E) {
    auto nonempty = [&](const std::string& over) {
        return std::any_of(E.divisors.begin(), E.divisors.end(), [&](const DivisorSpec& d) { return d.over == over; });
    };
    if (E.group.is_cyclic()) {
        if (E.group.n <= 2) return true;
        return (nonempty("x0") && nonempty("xinf")) || E.extra_points.empty();
    }
    bool v = nonempty("xv"), e = nonempty("xe"), f = nonempty("xf");
    return (v && e && f) || (E.extra_points.empty() && !v && !e && !f);
}

ConstantFunctionsVerdict constant_functions_only(const EmbeddingData& E) {
    require_valid(E);
    if (!E.group.is_cyclic()) throw HypothesesNotMet("the group is not cyclic");
    if (!special_fiber_normal(E)) throw HypothesesNotMet("the special fiber is not normal");
    auto pts = exceptional_points(E);
    if (pts.size() < 3) throw HypothesesNotMet("fewer than three exceptional points");

    SectionConvention sc = section_convention(E);
    std::stable_partition(pts.begin(), pts.end(), [&](const ExceptionalPoint& p) { return p.point != sc.distinguished; });
    ConstantFunctionsVerdict out;
    out.certificate = Rational(1);
    for (auto& p : pts) {
        if (out.points.size() == 3) break;
        if (p.divisors.empty()) continue;
        Rational best;
        bool first = true;
        for (size_t i : p.divisors) {
            Rational s = E.divisors[i].l / Rational(E.divisors[i].h);
            if (first || s < best) best = s;
            first = false;
        }
        out.certificate += best;
        out.points.push_back(p.name);
    }
    if (out.points.size() < 3) throw HypothesesNotMet("fewer than three exceptional points carry a divisor");
    out.constant_only = out.certificate.sign() < 0;
    return out;
}

}  // namespace sl2cox
