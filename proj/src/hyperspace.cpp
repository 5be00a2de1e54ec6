#include "sl2cox/hyperspace.hpp"

#include <algorithm>
#include <set>

namespace sl2cox {

BasePoint BasePoint::of(PointTag t) {
    BasePoint p;
    p.tag = t;
    return p;
}

BasePoint BasePoint::at(const GaussianRational& a, const GaussianRational& b) {
    if (a.is_zero() && b.is_zero()) throw ParseError("point [0:0] is not projective");
    BasePoint p;
    p.tag = PointTag::Coord;
    p.alpha = a;
    p.beta = b;
    return p;
}

namespace {

std::pair<GaussianRational, GaussianRational> normalized(const BasePoint& p) {
    if (!p.beta.is_zero()) return {p.alpha / p.beta, GaussianRational(1)};
    return {GaussianRational(1), GaussianRational(0)};
}

}  // namespace

bool operator==(const BasePoint& a, const BasePoint& b) {
    if (a.tag != b.tag) return false;
    if (a.tag != PointTag::Coord) return true;
    return a.alpha * b.beta == a.beta * b.alpha;
}

bool operator<(const BasePoint& a, const BasePoint& b) {
    if (a.tag != b.tag) return a.tag < b.tag;
    if (a.tag != PointTag::Coord) return false;
    auto na = normalized(a), nb = normalized(b);
    if (na.second != nb.second) return nb.second < na.second;
    return na.first < nb.first;
}

std::string BasePoint::str() const {
    switch (tag) {
        case PointTag::X0: return "x0";
        case PointTag::XINF: return "xinf";
        case PointTag::XV: return "xv";
        case PointTag::XE: return "xe";
        case PointTag::XF: return "xf";
        case PointTag::XD: return "xd";
        case PointTag::Generic: return "x";
        case PointTag::Coord: return "[" + alpha.str() + ":" + beta.str() + "]";
    }
    return "?";
}

std::string HyperspaceVector::str() const {
    return "(" + (h.is_zero() ? std::string("E") : base.str()) + "," + h.str() + "," + l.str() + ")";
}

std::string Interval::str() const {
    return "[" + (lo ? lo->str() : std::string("-inf")) + "," + (hi ? hi->str() : std::string("+inf")) + "]";
}

bool PointCone::has_interior() const {
    if (flat) return false;
    if (!slopes.lo || !slopes.hi) return true;
    return *slopes.lo < *slopes.hi;
}

Rational valuation_max_slope(const FiniteSubgroup& F, const BasePoint& x, const SectionConvention& sc) {
    if (F.is_cyclic()) return x == sc.distinguished ? Rational(1, 2) : Rational(-1, 2);
    // the two points whose colors have l > 0 carry the inequality l <= 0
    PointTag other = F.kind == GroupKind::BinaryDihedral ? PointTag::XE : PointTag::XF;
    if (x.tag == PointTag::XV || x.tag == other) return Rational(0);
    return Rational(-1);
}

bool valuation_cone_contains(const FiniteSubgroup& F, const HyperspaceVector& v, const SectionConvention& sc) {
    if (v.h.sign() < 0) return false;
    if (v.h.is_zero()) return v.l.sign() <= 0;
    return v.l <= valuation_max_slope(F, v.base, sc) * v.h;
}

HyperspaceVector color_vector(const FiniteSubgroup& F, const BasePoint& p, const SectionConvention& sc) {
    if (F.is_cyclic()) {
        if (p == sc.distinguished) return {p, 1, 1};
        if (F.n >= 3 && (p.tag == PointTag::X0 || p.tag == PointTag::XINF)) {
            long nb = F.nbar();
            return {p, nb, Rational(-(nb - 1), 2)};
        }
        return {p, 1, 0};
    }
    switch (p.tag) {
        case PointTag::XV:
            switch (F.kind) {
                case GroupKind::BinaryIcosahedral: return {p, 5, 1};
                case GroupKind::BinaryDihedral: return {p, 2, 1};
                default: return {p, 3, 1};
            }
        case PointTag::XE:
            if (F.kind == GroupKind::BinaryDihedral) return {p, 2, 1};
            return {p, 2, -1};
        case PointTag::XF:
            switch (F.kind) {
                case GroupKind::BinaryOctahedral: return {p, 4, 1};
                case GroupKind::BinaryDihedral: return {p, F.n, 1 - F.n};
                default: return {p, 3, 1};
            }
        default: return {p, 1, 0};
    }
}

const PointCone& ColoredHypercone::cone_at(const BasePoint& x) const {
    auto it = per_point.find(x);
    return it == per_point.end() ? generic_cone : it->second;
}

std::vector<BasePoint> ColoredHypercone::special_points() const {
    std::vector<BasePoint> out;
    for (auto& kv : per_point) out.push_back(kv.first);
    return out;
}

ColoredHypercone hypercone_from_generators(const std::vector<HyperspaceVector>& gens,
                                           const std::vector<BasePoint>& eps_excluded) {
    ColoredHypercone c;
    c.generators = gens;
    c.eps_excluded = eps_excluded;
    std::set<BasePoint> excluded(eps_excluded.begin(), eps_excluded.end());
    std::map<BasePoint, std::vector<Rational>> slopes;
    ECone K0;
    for (auto& g : gens) {
        if (g.h.sign() < 0) throw MalformedGenerators("generator " + g.str() + " has h < 0");
        if (g.h.is_zero()) {
            if (g.l.sign() < 0) K0.neg = true;
            if (g.l.sign() > 0) K0.pos = true;
            continue;
        }
        slopes[g.base].push_back(g.l / g.h);
    }
    for (auto& x : excluded) slopes.try_emplace(x);

    // P = sum of the hulls P_x; generic points contribute {0}
    bool P_empty = false;
    Rational Plo = 0, Phi = 0;
    for (auto& [x, s] : slopes) {
        std::vector<Rational> pts = s;
        if (!excluded.count(x)) pts.push_back(0);
        if (pts.empty()) {
            P_empty = true;
            continue;
        }
        Plo += *std::min_element(pts.begin(), pts.end());
        Phi += *std::max_element(pts.begin(), pts.end());
    }
    c.K = K0;
    if (!P_empty) {
        c.P = Interval{Plo, Phi};
        if (Plo.sign() < 0) c.K.neg = true;
        if (Phi.sign() > 0) c.K.pos = true;
    }

    auto make_cone = [&](std::vector<Rational> pts) {
        PointCone pc;
        if (pts.empty()) return pc;
        pc.flat = false;
        if (!c.K.neg) pc.slopes.lo = *std::min_element(pts.begin(), pts.end());
        if (!c.K.pos) pc.slopes.hi = *std::max_element(pts.begin(), pts.end());
        return pc;
    };
    for (auto& [x, s] : slopes) {
        std::vector<Rational> pts = s;
        if (!excluded.count(x)) pts.push_back(0);
        c.per_point[x] = make_cone(pts);
    }
    c.generic_cone = make_cone({Rational(0)});

    if (P_empty) {
        c.kind = HyperconeKind::TypeA;
    } else {
        // B_x = P_x + K, so B = P + K, which always lies in K = cone(K0, P)
        c.kind = HyperconeKind::TypeB;
        Interval B;
        if (!c.K.neg) B.lo = Plo;
        if (!c.K.pos) B.hi = Phi;
        c.B = B;
    }
    c.strictly_convex = !c.K.is_line() && !(c.B && c.B->contains(0));
    return c;
}

namespace {

std::vector<BasePoint> check_points(const std::vector<const ColoredHypercone*>& cs, const FiniteSubgroup& F,
                                    const SectionConvention& sc) {
    std::set<BasePoint> pts;
    for (auto* c : cs)
        for (auto& kv : c->per_point) pts.insert(kv.first);
    if (F.is_cyclic()) pts.insert(sc.distinguished);
    else {
        pts.insert(BasePoint::of(PointTag::XV));
        pts.insert(BasePoint::of(PointTag::XE));
        pts.insert(BasePoint::of(PointTag::XF));
    }
    pts.insert(BasePoint::generic());
    return {pts.begin(), pts.end()};
}

bool lt(const std::optional<Rational>& lo, const Rational& v) { return !lo || *lo < v; }

}  // namespace

bool is_supported(const ColoredHypercone& c, const FiniteSubgroup& F, const SectionConvention& sc) {
    if (c.kind != HyperconeKind::TypeB) throw WrongKind("supportedness is defined for type B hypercones");
    for (auto& x : check_points({&c}, F, sc)) {
        const PointCone& pc = c.cone_at(x);
        if (pc.has_interior() && lt(pc.slopes.lo, valuation_max_slope(F, x, sc))) return true;
    }
    return c.K.neg;
}

bool interiors_disjoint(const ColoredHypercone& c1, const ColoredHypercone& c2, const FiniteSubgroup& F,
                        const SectionConvention& sc) {
    for (auto& x : check_points({&c1, &c2}, F, sc)) {
        const PointCone& a = c1.cone_at(x);
        const PointCone& b = c2.cone_at(x);
        if (!a.has_interior() || !b.has_interior()) continue;
        std::optional<Rational> lo = a.slopes.lo, hi = a.slopes.hi;
        if (b.slopes.lo && (!lo || *b.slopes.lo > *lo)) lo = b.slopes.lo;
        if (b.slopes.hi && (!hi || *b.slopes.hi < *hi)) hi = b.slopes.hi;
        bool overlap = !lo || !hi || *lo < *hi;
        if (overlap && lt(lo, valuation_max_slope(F, x, sc))) return false;
    }
    return !(c1.K.neg && c2.K.neg);
}

}  // namespace sl2cox
