#include "sl2cox/embedding.hpp"

#include <algorithm>

namespace sl2cox {

namespace {

std::optional<size_t> parse_extra(const std::string& over) {
    if (over.rfind("extra:", 0) != 0) return std::nullopt;
    std::string idx = over.substr(6);
    if (idx.empty() || idx.size() > 9 || !std::all_of(idx.begin(), idx.end(), ::isdigit)) return std::nullopt;
    return static_cast<size_t>(std::stoul(idx));
}

std::optional<std::string> canonical_name(const std::string& over) {
    if (over == "x0") return "0";
    if (over == "xinf") return "inf";
    if (over == "xv") return "v";
    if (over == "xe") return "e";
    if (over == "xf") return "f";
    return std::nullopt;
}

PointTag tag_of(const std::string& name) {
    if (name == "0") return PointTag::X0;
    if (name == "inf") return PointTag::XINF;
    if (name == "v") return PointTag::XV;
    if (name == "e") return PointTag::XE;
    return PointTag::XF;
}

std::vector<std::pair<GaussianRational, GaussianRational>> canonical_coords(const FiniteSubgroup& F) {
    using G = GaussianRational;
    switch (F.kind) {
        case GroupKind::Cyclic:
            if (F.n >= 3) return {{G(0), G(1)}, {G(-1), G(0)}};
            return {};
        case GroupKind::BinaryDihedral: {
            G c = G::i().pow(static_cast<unsigned>(F.n)) / G(4);
            return {{G(0), G(1)}, {G(1), G(0)}, {-c, c}};
        }
        default: return {{G(0), G(1)}, {G(1), G(0)}, {G(-1), G(-1)}};
    }
}

bool group_ok(const FiniteSubgroup& F) {
    if (F.kind == GroupKind::Cyclic) return F.n >= 1;
    if (F.kind == GroupKind::BinaryDihedral) return F.n >= 2;
    return true;
}

bool same_point(const std::pair<GaussianRational, GaussianRational>& a,
                const std::pair<GaussianRational, GaussianRational>& b) {
    return a.first * b.second == a.second * b.first;
}

// index into exceptional_points order, or nullopt
std::optional<size_t> point_index(const EmbeddingData& E, const std::string& over) {
    auto canon = E.group.canonical_points();
    if (auto c = canonical_name(over)) {
        auto it = std::find(canon.begin(), canon.end(), *c);
        if (it == canon.end()) return std::nullopt;
        return static_cast<size_t>(it - canon.begin());
    }
    if (auto k = parse_extra(over)) {
        if (*k < 1 || *k > E.extra_points.size()) return std::nullopt;
        return canon.size() + *k - 1;
    }
    return std::nullopt;
}

}  // namespace

size_t distinguished_extra(const EmbeddingData& E) {
    if (!E.group.is_cyclic()) return 0;
    switch (E.section.mode) {
        case SectionChoice::Mode::Generic: return 0;
        case SectionChoice::Mode::Extra: return E.section.extra <= E.extra_points.size() ? E.section.extra : 0;
        case SectionChoice::Mode::Default: return E.group.n <= 2 && !E.extra_points.empty() ? 1 : 0;
    }
    return 0;
}

bool has_separate_distinguished(const EmbeddingData& E) {
    return E.group.is_cyclic() && distinguished_extra(E) == 0;
}

SectionConvention section_convention(const EmbeddingData& E) {
    SectionConvention sc;
    if (size_t k = distinguished_extra(E)) {
        auto& p = E.extra_points[k - 1];
        sc.distinguished = BasePoint::at(p.first, p.second);
    }
    return sc;
}

std::optional<size_t> dominating_divisor(const EmbeddingData& E) {
    for (size_t i = 0; i < E.divisors.size(); ++i)
        if (E.divisors[i].over == "dominating") return i;
    return std::nullopt;
}

std::vector<ExceptionalPoint> exceptional_points(const EmbeddingData& E) {
    std::vector<ExceptionalPoint> pts;
    auto names = E.group.canonical_points();
    auto mult = E.group.canonical_multiplicities();
    auto coords = canonical_coords(E.group);
    SectionConvention sc = section_convention(E);
    for (size_t i = 0; i < names.size(); ++i) {
        ExceptionalPoint p;
        p.name = names[i];
        p.canonical = true;
        p.point = BasePoint::of(tag_of(names[i]));
        p.alpha = coords[i].first;
        p.beta = coords[i].second;
        p.multiplicity = mult[i];
        p.color_l = color_vector(E.group, p.point, sc).l;
        pts.push_back(p);
    }
    for (size_t k = 0; k < E.extra_points.size(); ++k) {
        ExceptionalPoint p;
        p.name = std::to_string(k + 1);
        p.point = BasePoint::at(E.extra_points[k].first, E.extra_points[k].second);
        p.alpha = E.extra_points[k].first;
        p.beta = E.extra_points[k].second;
        p.color_l = color_vector(E.group, p.point, sc).l;
        pts.push_back(p);
    }
    for (size_t i = 0; i < E.divisors.size(); ++i)
        if (auto idx = point_index(E, E.divisors[i].over)) pts[*idx].divisors.push_back(i);
    return pts;
}

HyperspaceVector divisor_vector(const EmbeddingData& E, size_t i) {
    const DivisorSpec& d = E.divisors[i];
    if (d.over == "dominating") return {BasePoint::generic(), 0, d.l};
    if (auto c = canonical_name(d.over)) return {BasePoint::of(tag_of(*c)), d.h, d.l};
    if (auto k = parse_extra(d.over); k && *k >= 1 && *k <= E.extra_points.size()) {
        auto& p = E.extra_points[*k - 1];
        return {BasePoint::at(p.first, p.second), d.h, d.l};
    }
    throw InvalidEmbedding("divisor over unknown point '" + d.over + "'");
}

std::vector<Violation> validate(const EmbeddingData& E) {
    std::vector<Violation> out;
    auto add = [&](const std::string& code, const std::string& msg) { out.push_back({code, msg}); };
    if (!group_ok(E.group)) {
        add("BadGroup", "group " + E.group.name() + " is out of range");
        return out;
    }
    auto canon = canonical_coords(E.group);
    for (size_t k = 0; k < E.extra_points.size(); ++k) {
        auto& p = E.extra_points[k];
        std::string name = "extra:" + std::to_string(k + 1);
        if (p.first.is_zero() && p.second.is_zero()) {
            add("ZeroPoint", name + " is [0:0]");
            continue;
        }
        for (auto& c : canon)
            if (same_point(p, c)) add("ExtraPointCoincides", name + " coincides with a canonical point");
        for (size_t j = 0; j < k; ++j) {
            auto& q = E.extra_points[j];
            if (!(q.first.is_zero() && q.second.is_zero()) && same_point(p, q))
                add("ExtraPointCoincides", name + " coincides with extra:" + std::to_string(j + 1));
        }
    }
    if (E.section.mode == SectionChoice::Mode::Extra) {
        if (!E.group.is_cyclic()) add("BadSection", "distinguished point override needs a cyclic group");
        else if (E.section.extra < 1 || E.section.extra > E.extra_points.size())
            add("BadSection", "section refers to a missing extra point");
    } else if (E.section.mode == SectionChoice::Mode::Generic && !E.group.is_cyclic()) {
        add("BadSection", "distinguished point override needs a cyclic group");
    }

    std::vector<bool> used(E.extra_points.size(), false);
    size_t dominating = 0;
    SectionConvention sc = section_convention(E);
    bool points_ok = std::none_of(out.begin(), out.end(), [](const Violation& v) { return v.code == "ZeroPoint"; });
    for (size_t i = 0; i < E.divisors.size(); ++i) {
        const DivisorSpec& d = E.divisors[i];
        std::string name = "divisor " + std::to_string(i) + " over " + d.over;
        if ((E.group.u() * d.l).is_integer() == false)
            add("LNotIntegral", name + ": l = " + d.l.str() + " is not in (1/u)Z");
        if (d.over == "dominating") {
            ++dominating;
            if (d.h != 0 || d.l.sign() >= 0) add("BadDominating", name + ": needs h = 0 and l < 0");
            continue;
        }
        auto idx = point_index(E, d.over);
        if (!idx) {
            add("UnknownPoint", name + ": no such point for " + E.group.name());
            continue;
        }
        if (auto k = parse_extra(d.over)) used[*k - 1] = true;
        if (d.h < 1) {
            add("NonPositiveH", name + ": h must be a positive integer");
            continue;
        }
        if (points_ok && !valuation_cone_contains(E.group, divisor_vector(E, i), sc))
            add("ValuationOutsideCone", name + ": " + divisor_vector(E, i).str() + " violates the cone inequality");
    }
    if (dominating > 1) add("TooManyDominating", std::to_string(dominating) + " dominating divisors");
    for (size_t k = 0; k < used.size(); ++k)
        if (!used[k]) add("ExtraPointWithoutDivisor", "extra:" + std::to_string(k + 1) + " carries no divisor");

    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        return a.code != b.code ? a.code < b.code : a.message < b.message;
    });
    return out;
}

void require_valid(const EmbeddingData& E) {
    auto v = validate(E);
    if (v.empty()) return;
    std::vector<std::string> codes;
    std::string msg;
    for (auto& x : v) {
        codes.push_back(x.code);
        msg += (msg.empty() ? "" : "; ") + x.code + ": " + x.message;
    }
    throw InvalidInput(codes, msg);
}

Ap0Input derive_ap0_input(const EmbeddingData& E) {
    require_valid(E);
    Ap0Input in;
    for (auto& p : exceptional_points(E)) {
        in.A.emplace_back(p.alpha, p.beta);
        std::vector<long> ev{p.multiplicity};
        for (size_t i : p.divisors) ev.push_back(E.divisors[i].h);
        in.exponent_vectors.push_back(ev);
    }
    in.m = dominating_divisor(E) ? 1 : 0;
    return in;
}

Counts counts(const EmbeddingData& E) {
    Counts c;
    for (auto& d : E.divisors) {
        if (d.over == "dominating" || canonical_name(d.over)) ++c.N;
        else ++c.Nprime;
    }
    return c;
}

EmbeddingData affine_embedding(long n, long h, const Rational& l) {
    EmbeddingData E;
    E.group = FiniteSubgroup::cyclic(n);
    if (n >= 3) {
        E.divisors.push_back({"x0", h, l});
    } else {
        E.extra_points.push_back({GaussianRational(0), GaussianRational(1)});
        E.divisors.push_back({"extra:1", h, l});
        E.section.mode = SectionChoice::Mode::Generic;
    }
    return E;
}

}  // namespace sl2cox
