#include "sl2cox/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sl2cox {

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + " must be an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw ParseError("unknown key '" + it.key() + "' in " + where);
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ParseError("expected a rational as integer or \"p/q\" string, got " + j.dump());
}

GaussianRational gaussian_from_json(const json& j) {
    if (j.is_object()) {
        check_keys(j, {"re", "im"}, "gaussian number");
        Rational re = j.contains("re") ? rational_from_json(j["re"]) : Rational(0);
        Rational im = j.contains("im") ? rational_from_json(j["im"]) : Rational(0);
        return {re, im};
    }
    if (j.is_string()) return GaussianRational::parse(j.get<std::string>());
    return GaussianRational(rational_from_json(j));
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const GaussianRational& g) {
    if (g.is_real()) return g.re().str();
    return json{{"re", g.re().str()}, {"im", g.im().str()}};
}

FiniteSubgroup group_from_json(const json& j) {
    check_keys(j, {"type", "n"}, "group");
    if (!j.contains("type") || !j["type"].is_string()) throw ParseError("group.type missing");
    std::string t = j["type"].get<std::string>();
    auto need_n = [&]() {
        if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("group.n missing for " + t);
        return j["n"].get<long>();
    };
    // out-of-range n is kept and reported by validate
    if (t == "cyclic") return {GroupKind::Cyclic, need_n()};
    if (t == "dihedral") return {GroupKind::BinaryDihedral, need_n()};
    if (j.contains("n")) throw ParseError("group.n is not used for " + t);
    if (t == "tetrahedral") return FiniteSubgroup::tetrahedral();
    if (t == "octahedral") return FiniteSubgroup::octahedral();
    if (t == "icosahedral") return FiniteSubgroup::icosahedral();
    throw ParseError("unknown group type '" + t + "'");
}

json group_to_json(const FiniteSubgroup& F) {
    switch (F.kind) {
        case GroupKind::Cyclic: return {{"type", "cyclic"}, {"n", F.n}};
        case GroupKind::BinaryDihedral: return {{"type", "dihedral"}, {"n", F.n}};
        case GroupKind::BinaryTetrahedral: return {{"type", "tetrahedral"}};
        case GroupKind::BinaryOctahedral: return {{"type", "octahedral"}};
        case GroupKind::BinaryIcosahedral: return {{"type", "icosahedral"}};
    }
    return {};
}

EmbeddingData embedding_from_json(const json& j) {
    check_keys(j, {"group", "extra_points", "divisors", "section", "comment"}, "embedding");
    EmbeddingData E;
    if (!j.contains("group")) throw ParseError("missing key 'group'");
    E.group = group_from_json(j["group"]);
    if (j.contains("extra_points")) {
        if (!j["extra_points"].is_array()) throw ParseError("extra_points must be a list");
        for (auto& p : j["extra_points"]) {
            check_keys(p, {"alpha", "beta"}, "extra point");
            if (!p.contains("alpha") || !p.contains("beta")) throw ParseError("extra point needs alpha and beta");
            E.extra_points.emplace_back(gaussian_from_json(p["alpha"]), gaussian_from_json(p["beta"]));
        }
    }
    if (j.contains("divisors")) {
        if (!j["divisors"].is_array()) throw ParseError("divisors must be a list");
        for (auto& d : j["divisors"]) {
            check_keys(d, {"over", "h", "l"}, "divisor");
            if (!d.contains("over") || !d["over"].is_string()) throw ParseError("divisor.over missing");
            DivisorSpec s;
            s.over = d["over"].get<std::string>();
            if (d.contains("h")) {
                if (!d["h"].is_number_integer()) throw ParseError("divisor.h must be an integer");
                s.h = d["h"].get<long>();
            } else if (s.over != "dominating") {
                throw ParseError("divisor.h missing");
            }
            if (!d.contains("l")) throw ParseError("divisor.l missing");
            s.l = rational_from_json(d["l"]);
            E.divisors.push_back(s);
        }
    }
    if (j.contains("section")) {
        if (!j["section"].is_string()) throw ParseError("section must be a string");
        std::string s = j["section"].get<std::string>();
        if (s == "default") E.section.mode = SectionChoice::Mode::Default;
        else if (s == "generic") E.section.mode = SectionChoice::Mode::Generic;
        else if (s.rfind("extra:", 0) == 0 && s.size() > 6 &&
                 s.find_first_not_of("0123456789", 6) == std::string::npos && s.size() < 16) {
            E.section.mode = SectionChoice::Mode::Extra;
            E.section.extra = std::stoul(s.substr(6));
        } else {
            throw ParseError("section must be default, generic or extra:<k>");
        }
    }
    return E;
}

json embedding_to_json(const EmbeddingData& E) {
    json j;
    j["group"] = group_to_json(E.group);
    j["extra_points"] = json::array();
    for (auto& p : E.extra_points) j["extra_points"].push_back({{"alpha", to_json(p.first)}, {"beta", to_json(p.second)}});
    j["divisors"] = json::array();
    for (auto& d : E.divisors) j["divisors"].push_back({{"over", d.over}, {"h", d.h}, {"l", d.l.str()}});
    switch (E.section.mode) {
        case SectionChoice::Mode::Default: break;
        case SectionChoice::Mode::Generic: j["section"] = "generic"; break;
        case SectionChoice::Mode::Extra: j["section"] = "extra:" + std::to_string(E.section.extra); break;
    }
    return j;
}

EmbeddingData load_embedding(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return embedding_from_json(j);
}

json to_json(const FinAbGroup& g) {
    json t = json::array();
    for (auto& d : g.torsion) t.push_back(d.get_str());
    return {{"free_rank", g.free_rank}, {"torsion", t}, {"text", g.str()}};
}

FinAbGroup finab_from_json(const json& j) {
    FinAbGroup g;
    g.free_rank = j.at("free_rank").get<size_t>();
    for (auto& d : j.at("torsion")) g.torsion.emplace_back(d.get<std::string>());
    return g;
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (size_t k = 0; k < m.cols(); ++k) {
            const Integer& v = m(i, k);
            if (v.fits_slong_p()) r.push_back(v.get_si());
            else r.push_back(v.get_str());
        }
        rows.push_back(r);
    }
    return rows;
}

IntMatrix intmatrix_from_json(const json& j) {
    std::vector<std::vector<Integer>> rows;
    for (auto& r : j) {
        std::vector<Integer> row;
        for (auto& v : r) row.push_back(v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<long>()));
        rows.push_back(row);
    }
    return IntMatrix::from_rows(rows);
}

json to_json(const BasePoint& p) {
    switch (p.tag) {
        case PointTag::Coord: return {{"alpha", to_json(p.alpha)}, {"beta", to_json(p.beta)}};
        case PointTag::Generic: return "generic";
        default: return p.str();
    }
}

BasePoint basepoint_from_json(const json& j) {
    if (j.is_object()) {
        check_keys(j, {"alpha", "beta"}, "point");
        if (!j.contains("alpha") || !j.contains("beta")) throw ParseError("point needs alpha and beta");
        auto a = gaussian_from_json(j["alpha"]), b = gaussian_from_json(j["beta"]);
        if (a.is_zero() && b.is_zero()) throw ParseError("point [0:0] is not in P^1");
        return BasePoint::at(a, b);
    }
    if (!j.is_string()) throw ParseError("point must be a name or {alpha, beta}, got " + j.dump());
    static const std::map<std::string, PointTag> names = {
        {"x0", PointTag::X0}, {"xinf", PointTag::XINF}, {"xv", PointTag::XV}, {"xe", PointTag::XE},
        {"xf", PointTag::XF}, {"xd", PointTag::XD},     {"generic", PointTag::Generic}};
    auto it = names.find(j.get<std::string>());
    if (it == names.end()) throw ParseError("unknown point '" + j.get<std::string>() + "'");
    return BasePoint::of(it->second);
}

std::vector<ColoredHypercone> hypercones_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("hypercones must be a list");
    std::vector<ColoredHypercone> out;
    for (auto& c : j) {
        check_keys(c, {"generators", "eps_excluded", "comment", "kind"}, "hypercone");
        std::vector<HyperspaceVector> gens;
        std::vector<BasePoint> excl;
        if (c.contains("generators"))
            for (auto& g : c["generators"]) {
                check_keys(g, {"point", "h", "l"}, "generator");
                if (!g.contains("h") || !g.contains("l")) throw ParseError("generator needs h and l");
                BasePoint b = g.contains("point") ? basepoint_from_json(g["point"]) : BasePoint::generic();
                gens.push_back({b, rational_from_json(g["h"]), rational_from_json(g["l"])});
            }
        if (c.contains("eps_excluded"))
            for (auto& p : c["eps_excluded"]) excl.push_back(basepoint_from_json(p));
        auto cone = hypercone_from_generators(gens, excl);
        if (c.contains("kind") && c["kind"] != (cone.kind == HyperconeKind::TypeA ? "A" : "B"))
            throw ParseError("hypercone declared of type " + c["kind"].dump() + " but its generators say otherwise");
        out.push_back(std::move(cone));
    }
    return out;
}

std::vector<ColoredHypercone> load_hypercones(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return hypercones_from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json to_json(const ColoredHypercone& c) {
    json g = json::array(), e = json::array();
    for (auto& v : c.generators) g.push_back({{"point", to_json(v.base)}, {"h", to_json(v.h)}, {"l", to_json(v.l)}});
    for (auto& p : c.eps_excluded) e.push_back(to_json(p));
    return {{"generators", g}, {"eps_excluded", e}, {"kind", c.kind == HyperconeKind::TypeA ? "A" : "B"}};
}

json to_json(const SparsePoly& p) {
    json out = json::array();
    for (auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (auto& [v, e] : m) mono[v] = e;
        out.push_back({{"coefficient", {{"re", c.re().str()}, {"im", c.im().str()}}}, {"monomial", mono}});
    }
    return out;
}

SparsePoly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a list of terms");
    SparsePoly p;
    for (auto& t : j) {
        check_keys(t, {"coefficient", "monomial"}, "term");
        Monomial m;
        for (auto it = t.at("monomial").begin(); it != t.at("monomial").end(); ++it) m[it.key()] = it.value().get<long>();
        p += SparsePoly::term(gaussian_from_json(t.at("coefficient")), m);
    }
    return p;
}

json to_json(const GradedPresentation& P) {
    json vars = json::array();
    for (auto& v : P.variables) {
        json deg = json::array();
        for (auto& d : v.degree_image) deg.push_back(d.get_str());
        vars.push_back({{"name", v.name}, {"degree", deg}, {"b_weight", v.b_weight}, {"module", v.module_tag}});
    }
    json rels = json::array();
    for (size_t i = 0; i < P.relations.size(); ++i) {
        json r = {{"terms", to_json(P.relations[i])}, {"text", P.relations[i].str()}};
        if (i < P.modules.size() && !P.modules[i].label.empty()) {
            r["module"] = P.modules[i].label;
            r["iso_type"] = P.modules[i].iso_type;
        }
        rels.push_back(r);
    }
    json moduli = json::array();
    for (auto& d : P.degree_moduli) moduli.push_back(d.get_str());
    json subs = json::object();
    for (auto& [v, p] : P.substitutions) subs[v] = to_json(p);
    json warn = json::array();
    for (auto& w : P.warnings) warn.push_back(w);
    json log = json::array();
    for (auto& w : P.log) log.push_back(w);
    return {{"variables", vars},      {"relations", rels},    {"grading_group", to_json(P.grading_group)},
            {"degree_moduli", moduli}, {"substitutions", subs}, {"log", log},
            {"warnings", warn}};
}

GradedPresentation presentation_from_json(const json& j) {
    GradedPresentation P;
    for (auto& v : j.at("variables")) {
        GradedVariable g;
        g.name = v.at("name").get<std::string>();
        for (auto& d : v.at("degree")) g.degree_image.emplace_back(d.get<std::string>());
        g.b_weight = v.at("b_weight").get<long>();
        g.module_tag = v.value("module", "");
        P.variables.push_back(g);
    }
    bool tagged = false;
    for (auto& r : j.at("relations")) {
        P.relations.push_back(poly_from_json(r.at("terms")));
        RelationModule m;
        m.label = r.value("module", "");
        m.kind = m.label.substr(0, 1);
        m.iso_type = r.value("iso_type", 0L);
        m.highest = P.relations.back();
        tagged = tagged || !m.label.empty();
        P.modules.push_back(std::move(m));
    }
    if (!tagged) P.modules.clear();
    P.grading_group = finab_from_json(j.at("grading_group"));
    for (auto& d : j.at("degree_moduli")) P.degree_moduli.emplace_back(d.get<std::string>());
    if (j.contains("substitutions"))
        for (auto it = j["substitutions"].begin(); it != j["substitutions"].end(); ++it)
            P.substitutions[it.key()] = poly_from_json(it.value());
    if (j.contains("log"))
        for (auto& w : j["log"]) P.log.push_back(w.get<std::string>());
    if (j.contains("warnings"))
        for (auto& w : j["warnings"]) P.warnings.push_back(w.get<std::string>());
    return P;
}

}  // namespace sl2cox
