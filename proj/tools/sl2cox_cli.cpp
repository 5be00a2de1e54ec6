#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sl2cox/classgroup.hpp"
#include "sl2cox/coxring.hpp"
#include "sl2cox/diagnostics.hpp"
#include "sl2cox/errors.hpp"
#include "sl2cox/io.hpp"
#include "sl2cox/iteration.hpp"

using namespace sl2cox;

namespace {

enum Exit { Ok = 0, BadInput = 1, Failed = 2, Usage = 3 };

struct Options {
    std::string format = "pretty";
    bool seed_free = false;
    bool verify = false;
    bool special_fiber = false;
    std::string file, hypercones;
    long n = 0, h = 0;
    std::string l;
};

struct Report {
    std::string command, input, digest;
    json result = json::object();
    std::vector<std::string> warnings;
    std::string pretty;
    int status = Ok;
};

std::string fnv1a(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string bytes = ss.str();
    unsigned long long hsh = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        hsh ^= c;
        hsh *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", hsh);
    return buf;
}

json group_json(const FinAbGroup& G) {
    json t = json::array();
    for (auto& d : G.torsion) t.push_back(d.fits_slong_p() ? json(d.get_si()) : json(d.get_str()));
    return {{"rank", G.free_rank}, {"torsion", t}, {"text", G.str()}};
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

std::string combo_str(const std::vector<std::string>& labels, const std::vector<Integer>& c) {
    std::string s;
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        Integer a = abs(c[j]);
        if (s.empty()) s += c[j] < 0 ? "-" : "";
        else s += c[j] < 0 ? " - " : " + ";
        if (a != 1) s += a.get_str();
        s += "[" + labels[j] + "]";
    }
    return s.empty() ? "0" : s;
}

void do_validate(const EmbeddingData& E, Report& r) {
    auto vs = validate(E);
    json list = json::array();
    std::string p;
    for (auto& v : vs) {
        list.push_back({{"code", v.code}, {"message", v.message}});
        p += "  " + v.code + ": " + v.message + "\n";
    }
    r.result = {{"valid", vs.empty()}, {"violations", list}};
    r.pretty = vs.empty() ? "valid\n" : "invalid\n" + p;
    if (!vs.empty()) r.status = BadInput;
}

void do_classgroup(const EmbeddingData& E, Report& r) {
    require_valid(E);
    auto R = class_group(E);
    std::vector<std::string> labels;
    for (auto& g : R.generators) labels.push_back(g.label);
    std::vector<std::string> inv_labels;
    for (size_t j : R.invariant_indices()) inv_labels.push_back(labels[j]);
    json ids = json::array();
    std::string p = "Cl(X) = " + R.group().str() + "\n";
    p += "generators: " + join(labels, " ") + "\npresentation:\n";
    for (size_t i = 0; i < R.presentation.rows(); ++i) {
        std::vector<std::string> row;
        for (size_t j = 0; j < R.presentation.cols(); ++j) row.push_back(R.presentation(i, j).get_str());
        p += "  [" + join(row, " ") + "]\n";
    }
    for (size_t j = 0; j < R.generators.size(); ++j) {
        auto k = R.generators[j].kind;
        if (k == GeneratorKind::Invariant || k == GeneratorKind::Dominating) continue;
        auto c = express_integrally(R, R.unit(labels[j]));
        if (!c) continue;
        std::string s = "[" + labels[j] + "] = " + combo_str(inv_labels, *c);
        json cj = json::array();
        for (auto& x : *c) cj.push_back(x.get_si());
        ids.push_back({{"generator", labels[j]}, {"coefficients", cj}, {"text", s}});
        p += s + "\n";
    }
    json fh = json::array();
    for (size_t j = 0; j < R.generators.size(); ++j) {
        auto c = generator_character(E, R.generators[j]);
        json cj = json::array();
        for (auto& x : c) cj.push_back(x.get_si());
        fh.push_back(cj);
    }
    r.result = {{"group", group_json(R.group())},
                {"generators", labels},
                {"invariant_generators", inv_labels},
                {"presentation", to_json(R.presentation)},
                {"identities", ids},
                {"characters", fh}};
    r.pretty = p;
}

void verify_into(const GradedPresentation& P, Report& r) {
    for (auto& w : check_homogeneous(P)) r.warnings.push_back("verify: " + w);
    if (!P.expansions.empty())
        for (auto& w : verify_by_substitution(P)) r.warnings.push_back("verify: " + w);
}

std::string presentation_pretty(const GradedPresentation& P) {
    std::string s = "grading group: " + P.grading_group.str() + "\ngenerators:\n";
    for (auto& v : P.variables) {
        std::vector<std::string> deg;
        for (auto& d : v.degree_image) deg.push_back(d.get_str());
        s += "  " + v.name + "  degree (" + join(deg, ",") + ")  weight " + std::to_string(v.b_weight) + "w\n";
    }
    s += "relations:\n";
    for (size_t i = 0; i < P.relations.size(); ++i) {
        std::string tag;
        if (i < P.modules.size() && !P.modules[i].label.empty()) tag = P.modules[i].label + "  ";
        s += "  " + tag + P.relations[i].str() + "\n";
    }
    for (auto& [v, e] : P.substitutions) s += "  " + v + " = " + e.str() + "\n";
    return s;
}

void emit_presentation(const GradedPresentation& P, const Options& o, Report& r) {
    r.result["presentation"] = to_json(P);
    r.pretty += presentation_pretty(P);
    for (auto& w : P.warnings) r.warnings.push_back(w);
    if (o.verify) verify_into(P, r);
}

void do_cox_u(const EmbeddingData& E, const Options& o, Report& r) {
    require_valid(E);
    auto P = cox_u_presentation(E);
    if (o.special_fiber) {
        P = special_fiber_u(P, E);
        auto shape = classify_fiber(P);
        r.result["fiber_shape"] = to_string(shape);
        r.result["special_fiber_normal"] = special_fiber_normal(E);
        r.pretty += "special fiber: " + to_string(shape) + "\n";
    }
    emit_presentation(P, o, r);
}

void do_cox_full(const EmbeddingData& E, const Options& o, Report& r) {
    require_valid(E);
    auto P = full_cox_presentation_cyclic(E);
    json table = json::array();
    std::string t = "relation table:\n";
    for (auto& m : P.modules) {
        table.push_back({{"label", m.label}, {"kind", m.kind}, {"iso_type", m.iso_type}, {"highest", m.highest.str()}});
        t += "  " + m.label + "  V_" + std::to_string(m.iso_type) + "  " + m.highest.str() + "\n";
    }
    r.result["table"] = table;
    emit_presentation(P, o, r);
    r.pretty += t;
    for (auto& l : P.log) r.pretty += "note: " + l + "\n";
}

json verdict_json(const PlatonicVerdict& v) {
    json j = {{"value", v.is_platonic}, {"reason", v.reason}};
    if (v.witness) j["witness"] = *v.witness;
    return j;
}

std::string verdict_str(const PlatonicVerdict& v) {
    std::string s = v.is_platonic ? "yes" : "no";
    if (v.witness) {
        std::vector<std::string> w;
        for (long x : *v.witness) w.push_back(std::to_string(x));
        s += " (witness (" + join(w, ",") + "))";
    }
    return s + ", " + v.reason;
}

void do_diagnose(const EmbeddingData& E, const Options& o, Report& r) {
    require_valid(E);
    auto ap0 = derive_ap0_input(E);
    auto lt = log_terminal_total_space(E);
    r.result["log_terminal_total_space"] = verdict_json(lt);
    r.pretty += "total coordinate space log terminal: " + verdict_str(lt) + "\n";
    json vecs = json::array();
    for (auto& v : ap0.exponent_vectors) vecs.push_back(v);
    r.result["exponent_vectors"] = vecs;
    bool sfn = special_fiber_normal(E);
    r.result["special_fiber_normal"] = sfn;
    r.pretty += std::string("special fiber normal: ") + (sfn ? "yes" : "no") + "\n";
    try {
        auto c = constant_functions_only(E);
        r.result["constant_functions_only"] = {
            {"value", c.constant_only}, {"certificate", c.certificate.str()}, {"points", c.points}};
        r.pretty += std::string("only constant invariant functions: ") + (c.constant_only ? "yes" : "no") +
                    " (certificate " + c.certificate.str() + " over " + join(c.points, ", ") + ")\n";
    } catch (const HypothesesNotMet& e) {
        r.result["constant_functions_only"] = {{"value", nullptr}, {"reason", e.what()}};
        r.pretty += std::string("only constant invariant functions: not applicable, ") + e.what() + "\n";
    }
    if (!o.hypercones.empty()) {
        auto cs = load_hypercones(o.hypercones);
        json orbits = json::array();
        for (size_t i = 0; i < cs.size(); ++i) {
            auto k = classify_hypercone_orbit(cs[i], E);
            orbits.push_back({{"kind", to_string(k.kind)}, {"tuple", k.tuple}, {"points", k.points}});
            r.pretty += "hypercone " + std::to_string(i) + ": " + to_string(k.kind);
            if (k.kind == OrbitClass::Kind::TypeAl) {
                std::vector<std::string> t;
                for (long x : k.tuple) t.push_back(std::to_string(x));
                r.pretty += " (" + join(t, ",") + ") over " + join(k.points, ", ");
            }
            r.pretty += "\n";
        }
        auto x = log_terminal_X(E, cs);
        r.result["orbits"] = orbits;
        r.result["log_terminal_X"] = verdict_json(x);
        r.pretty += "X log terminal: " + verdict_str(x) + "\n";
    }
}

json step_json(const IterationStep& s) {
    json j = {{"subgroup", s.subgroup.name()}, {"label", s.label}, {"determined", s.determined}};
    if (s.torsion) {
        j["torsion"] = group_json(s.torsion->group());
        json els = json::array();
        for (auto& e : s.torsion->elements) {
            json x = json::array();
            for (auto& v : e) x.push_back(v.get_si());
            els.push_back(x);
        }
        j["characters"] = els;
    } else {
        j["torsion"] = nullptr;
    }
    json ev = json::object();
    for (auto& [k, v] : s.evidence) {
        if (ev.contains(k)) ev[k].push_back(v);
        else ev[k] = k == "admissible_torsion_order" ? json::array({v}) : json(v);
    }
    j["evidence"] = ev;
    return j;
}

std::string step_str(const IterationStep& s) {
    std::string t = s.label;
    if (s.torsion) t += " [torsion " + s.torsion->group().str() + "]";
    else t += " [torsion ?]";
    return t;
}

void do_iterate(const EmbeddingData& E, Report& r) {
    auto rep = iterate(E);
    json steps = json::array(), chains = json::array();
    std::vector<std::string> ps;
    for (auto& s : rep.steps) {
        steps.push_back(step_json(s));
        ps.push_back(step_str(s));
    }
    std::string p = "steps: " + join(ps, " -> ") + "\n";
    for (auto& c : rep.chains) {
        json cs = json::array();
        std::vector<std::string> names;
        for (auto& s : c.steps) {
            cs.push_back(step_json(s));
            names.push_back(step_str(s));
        }
        chains.push_back({{"steps", cs}, {"m_lo", c.m_lo}, {"m_hi", c.m_hi}});
        p += "  chain: " + join(names, " -> ") + "  m in [" + std::to_string(c.m_lo) + "," + std::to_string(c.m_hi) + "]\n";
    }
    r.result = {{"steps", steps},   {"chains", chains},         {"m_lo", rep.m_lo},
                {"m_hi", rep.m_hi}, {"determined", rep.determined()}, {"bound", rep.bound},
                {"master_factorial", rep.master_factorial}};
    if (rep.determined()) r.result["m"] = rep.m_lo;
    p += rep.determined() ? "m = " + std::to_string(rep.m_lo)
                          : "m in [" + std::to_string(rep.m_lo) + "," + std::to_string(rep.m_hi) + "]";
    p += " (bound " + std::to_string(rep.bound) + ")\n";
    r.pretty = p;
}

void do_batyrev_haddad(const EmbeddingData& E, Report& r) {
    require_valid(E);
    auto b = batyrev_haddad(E);
    r.result = {{"p", b.p.get_str()},           {"q", b.q.get_str()},   {"k", b.k.get_str()},
                {"a", b.a.get_str()},           {"b", b.b.get_str()},   {"height", b.height.str()},
                {"cox_exponent", b.cox_exponent.get_str()}, {"degree_map_ok", b.degree_map_ok}};
    r.pretty = "p = " + b.p.get_str() + ", q = " + b.q.get_str() + ", k = " + b.k.get_str() + ", a = " + b.a.get_str() +
               ", b = " + b.b.get_str() + "\nheight = " + b.height.str() +
               "\nrelation exponent -(h+2l) = " + b.cox_exponent.get_str() +
               "\ndegree map well defined: " + (b.degree_map_ok ? "yes" : "no") + "\n";
}

void do_affine(const Options& o, Report& r) {
    auto E = affine_embedding(o.n, o.h, Rational::parse(o.l));
    r.result = embedding_to_json(E);
    r.pretty = embedding_to_json(E).dump(2) + "\n";
    auto vs = validate(E);
    for (auto& v : vs) r.warnings.push_back(v.code + ": " + v.message);
}

void print(const Report& r, const Options& o) {
    if (o.format == "json" || r.command == "affine") {
        json out = r.command == "affine" && o.format != "json"
                       ? r.result
                       : json{{"command", r.command}, {"input", r.input},     {"input_digest", r.digest},
                              {"result", r.result},   {"warnings", r.warnings}, {"status", r.status}};
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << r.pretty;
    for (auto& w : r.warnings) std::cout << "warning: " << w << "\n";
}

int run(const std::string& cmd, const Options& o) {
    Report r;
    r.command = cmd;
    r.input = o.file;
    try {
        if (cmd == "affine") {
            do_affine(o, r);
            print(r, o);
            return r.status;
        }
        r.digest = fnv1a(o.file);
        EmbeddingData E = load_embedding(o.file);
        if (cmd == "validate") do_validate(E, r);
        else if (cmd == "classgroup") do_classgroup(E, r);
        else if (cmd == "cox-u") do_cox_u(E, o, r);
        else if (cmd == "cox-full") do_cox_full(E, o, r);
        else if (cmd == "diagnose") do_diagnose(E, o, r);
        else if (cmd == "iterate") do_iterate(E, r);
        else if (cmd == "batyrev-haddad") do_batyrev_haddad(E, r);
    } catch (const InvalidInput& e) {
        r.status = BadInput;
        json codes = json::array();
        for (auto& c : e.codes) codes.push_back(c);
        r.result = {{"error", "InvalidInput"}, {"codes", codes}, {"message", e.what()}};
        r.pretty = std::string("invalid input: ") + e.what() + "\n";
    } catch (const ParseError& e) {
        r.status = BadInput;
        r.result = {{"error", "ParseError"}, {"message", e.what()}};
        r.pretty = std::string("invalid input: ") + e.what() + "\n";
    } catch (const Error& e) {
        r.status = Failed;
        r.result = {{"error", e.code()}, {"message", e.what()}};
        r.pretty = e.code() + ": " + e.what() + "\n";
    } catch (const std::exception& e) {
        r.status = Failed;
        r.result = {{"error", "Internal"}, {"message", e.what()}};
        r.pretty = std::string("error: ") + e.what() + "\n";
    }
    if (r.status != Ok && o.format != "json") {
        std::cerr << r.pretty;
        return r.status;
    }
    print(r, o);
    return r.status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Class groups, Cox rings and singularity diagnostics of almost homogeneous SL2-threefolds"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "pretty"}));
    app.add_flag("--seed-free", o.seed_free, "skip randomized checks (all checks are currently deterministic)");
    app.add_flag("--verify", o.verify, "re-check homogeneity and vanishing of emitted relations");

    auto file_cmd = [&](const std::string& name, const std::string& help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("file", o.file, "embedding JSON")->required();
        c->fallthrough();
        return c;
    };
    file_cmd("validate", "list schema and consistency violations");
    file_cmd("classgroup", "class group with presentation and identities");
    file_cmd("cox-u", "Cox ring of U-invariants")->add_flag("--special-fiber", o.special_fiber, "zero fiber");
    file_cmd("cox-full", "full Cox ring presentation, cyclic groups");
    file_cmd("diagnose", "singularity and normality predicates")
        ->add_option("--hypercones", o.hypercones, "colored hypercones JSON");
    file_cmd("iterate", "Cox ring iteration");
    file_cmd("batyrev-haddad", "affine parameters of a one-divisor cyclic embedding");
    auto* aff = app.add_subcommand("affine", "print the embedding with one divisor (h, l)");
    aff->add_option("order", o.n, "order of the cyclic group")->required()->check(CLI::PositiveNumber);
    aff->add_option("height", o.h, "h")->required();
    aff->add_option("slope", o.l, "l, rational")->required();
    aff->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }
    return run(app.get_subcommands().front()->get_name(), o);
}
