#include "sl2cox/coxring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sl2cox {

bool GradedPresentation::has_variable(const std::string& name) const {
    return std::any_of(variables.begin(), variables.end(), [&](const GradedVariable& v) { return v.name == name; });
}

const GradedVariable& GradedPresentation::variable(const std::string& name) const {
    for (auto& v : variables)
        if (v.name == name) return v;
    throw std::out_of_range("no variable " + name);
}

std::string GradedPresentation::str() const {
    std::string s = "generators:";
    for (auto& v : variables) s += " " + v.name;
    s += "\nrelations:\n";
    for (auto& r : relations) s += "  " + r.str() + "\n";
    return s;
}

namespace {

long total_weight(const FiniteSubgroup& F) {
    switch (F.kind) {
        case GroupKind::Cyclic: return F.nbar();
        case GroupKind::BinaryDihedral: return 2 * F.n;
        case GroupKind::BinaryTetrahedral: return 12;
        case GroupKind::BinaryOctahedral: return 24;
        case GroupKind::BinaryIcosahedral: return 60;
    }
    return 1;
}

std::string r_name(const std::string& label) { return "r" + label.substr(1); }

ClassVector fiber_class(const EmbeddingData& E, const ClassGroupResult& R) {
    ClassVector v(R.generators.size());
    if (!R.generators.empty() && R.generators[0].kind == GeneratorKind::Distinguished) {
        v[0] = 1;
        return v;
    }
    auto pts = exceptional_points(E);
    for (size_t j = 0; j < R.generators.size(); ++j) {
        const auto& g = R.generators[j];
        if (g.point != 0) continue;
        if (g.kind == GeneratorKind::Color) v[j] = pts[0].multiplicity;
        else if (g.kind == GeneratorKind::Invariant) v[j] = E.divisors[g.divisor].h;
    }
    return v;
}

ClassVector add(ClassVector a, const ClassVector& b, long s = 1) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

GradedVariable make_var(const ClassGroupResult& R, const std::string& name, const ClassVector& deg, long w,
                        const std::string& tag) {
    return {name, deg, R.image(deg), w, tag};
}

void set_grading(GradedPresentation& P, const ClassGroupResult& R) {
    P.grading_group = R.group();
    P.degree_moduli = R.cok.moduli;
}

std::string weight_tag(long w, const std::string& point) { return "V_" + std::to_string(w) + "(" + point + ")"; }

// (c_p, c_q) with (beta_i, alpha_i) = c_p (beta_p, alpha_p) + c_q (beta_q, alpha_q)
std::pair<GaussianRational, GaussianRational> point_combination(const ExceptionalPoint& p, const ExceptionalPoint& q,
                                                                const ExceptionalPoint& i) {
    GaussianRational det = p.beta * q.alpha - q.beta * p.alpha;
    GaussianRational cp = (i.beta * q.alpha - q.beta * i.alpha) / det;
    GaussianRational cq = (p.beta * i.alpha - i.beta * p.alpha) / det;
    return {cp, cq};
}

std::string basis_name(long k, const std::string& point) {
    static const char* letters = "stuvw";
    std::string head = k < 5 ? std::string(1, letters[k]) : "e" + std::to_string(k);
    return head + "_" + point;
}

SparsePoly g(int i, long e = 1) { return SparsePoly::var("g" + std::to_string(i), e); }

}  // namespace

GradedPresentation cox_u_presentation(const EmbeddingData& E) {
    require_valid(E);
    auto R = class_group(E);
    auto pts = exceptional_points(E);
    const long W = total_weight(E.group);
    const bool cyc = E.group.is_cyclic();
    const long n = E.group.n;

    GradedPresentation P;
    set_grading(P, R);
    ClassVector fib = fiber_class(E, R);
    P.variables.push_back(make_var(R, "a", fib, W, weight_tag(W, "fiber")));
    P.variables.push_back(make_var(R, "b", fib, W, weight_tag(W, "fiber")));
    if (cyc) {
        P.expansions["a"] = n >= 3 ? g(3, W) : g(4);
        P.expansions["b"] = n >= 3 ? g(4, W) : g(3);
    }
    for (auto& p : pts) {
        long w = W / p.multiplicity;
        std::string s = "s_" + p.name;
        P.variables.push_back(make_var(R, s, R.unit("E_" + p.name), w, weight_tag(w, p.name)));
        if (cyc) {
            if (n >= 3) P.expansions[s] = p.canonical ? g(p.name == "0" ? 3 : 4) : p.beta * g(3, W) - p.alpha * g(4, W);
            else P.expansions[s] = p.beta * g(4) - p.alpha * g(3);
        }
    }
    std::map<size_t, std::string> rvar;
    for (auto& gen : R.generators) {
        if (gen.kind != GeneratorKind::Invariant && gen.kind != GeneratorKind::Dominating) continue;
        std::string name = r_name(gen.label);
        rvar[size_t(gen.divisor)] = name;
        P.variables.push_back(make_var(R, name, R.unit(gen.label), 0, "trivial"));
        P.expansions[name] = SparsePoly(1);
    }
    if (!cyc) P.expansions.clear();
    for (auto& p : pts) {
        Monomial m{{"s_" + p.name, p.multiplicity}};
        for (size_t d : p.divisors) m[rvar.at(d)] += E.divisors[d].h;
        SparsePoly rel = p.beta * SparsePoly::var("a") - p.alpha * SparsePoly::var("b") - SparsePoly::term(GaussianRational(1), m);
        P.relations.push_back(rel);
        RelationModule M{"U", "U_" + p.name, W, rel, {{W, rel}}, {}};
        P.modules.push_back(M);
    }
    return P;
}

GradedPresentation eliminate(const GradedPresentation& P0, const std::vector<std::string>& targets) {
    GradedPresentation P = P0;
    for (auto& v : targets) {
        bool appears = std::any_of(P.relations.begin(), P.relations.end(), [&](const SparsePoly& r) { return r.contains(v); });
        if (!appears) continue;
        std::optional<size_t> pick;
        for (size_t i = 0; i < P.relations.size() && !pick; ++i) {
            const auto& r = P.relations[i];
            if (r.degree_in(v) != 1) continue;
            SparsePoly c = r.coefficient(v, 1);
            if (c.size() == 1 && c.terms().begin()->first.empty()) pick = i;
        }
        if (!pick) throw NotLinearInTarget("no relation is linear in " + v + " with constant coefficient");
        const SparsePoly& r = P.relations[*pick];
        GaussianRational c = r.coefficient(v, 1).terms().begin()->second;
        SparsePoly value = -(r.coefficient(v, 0)) * (GaussianRational(1) / c);
        P.log.push_back(v + " = " + value.str());
        for (auto& [w, val] : P.substitutions) val = val.substitute(v, value);
        P.substitutions[v] = value;
        P.relations.erase(P.relations.begin() + long(*pick));
        if (!P.modules.empty()) P.modules.erase(P.modules.begin() + long(*pick));
        for (auto& other : P.relations) other = other.substitute(v, value);
        for (auto& M : P.modules) {
            M.highest = M.highest.substitute(v, value);
            for (auto& row : M.weight_table_rows) row.second = row.second.substitute(v, value);
        }
        P.variables.erase(std::remove_if(P.variables.begin(), P.variables.end(),
                                         [&](const GradedVariable& x) { return x.name == v; }),
                          P.variables.end());
        P.expansions.erase(v);
    }
    return P;
}

std::string to_string(FiberShape s) {
    switch (s) {
        case FiberShape::AffineSpace: return "affine space";
        case FiberShape::ReducedReducible: return "reduced reducible";
        case FiberShape::NonReduced: return "non-reduced";
        case FiberShape::Other: return "other";
    }
    return "other";
}

FiberShape classify_fiber(const GradedPresentation& P) {
    if (P.relations.empty()) return FiberShape::AffineSpace;
    for (auto& r : P.relations) {
        if (r.size() != 1) continue;
        for (auto& [v, e] : r.terms().begin()->first)
            if (e >= 2) return FiberShape::NonReduced;
    }
    if (P.relations.size() == 1 && P.relations[0].size() == 2) {
        auto it = P.relations[0].terms().begin();
        const Monomial& m1 = it->first;
        const Monomial& m2 = std::next(it)->first;
        if (m1.size() == 1 && m2.size() == 1 && m1.begin()->first != m2.begin()->first &&
            m1.begin()->second == m2.begin()->second && m1.begin()->second >= 2)
            return FiberShape::ReducedReducible;
    }
    return FiberShape::Other;
}

GradedPresentation special_fiber_u(const GradedPresentation& P0, const EmbeddingData&) {
    GradedPresentation P = P0;
    if (P.has_variable("a") || P.has_variable("b")) P = eliminate(P);
    std::map<std::string, SparsePoly> zero;
    for (auto& v : P.variables)
        if (v.module_tag == "trivial") zero[v.name] = SparsePoly();
    std::vector<SparsePoly> rels;
    for (auto& r : P.relations) {
        auto q = r.substitute(zero);
        if (!q.is_zero()) rels.push_back(q);
    }
    // reduced echelon form over the monomials, largest monomial leading
    std::set<Monomial> mons;
    for (auto& r : rels)
        for (auto& [m, c] : r.terms()) mons.insert(m);
    std::vector<Monomial> cols(mons.rbegin(), mons.rend());
    std::vector<std::vector<GaussianRational>> A;
    for (auto& r : rels) {
        std::vector<GaussianRational> row;
        for (auto& m : cols) row.push_back(r.coefficient(m));
        A.push_back(row);
    }
    size_t rank = 0;
    for (size_t c = 0; c < cols.size() && rank < A.size(); ++c) {
        size_t piv = rank;
        while (piv < A.size() && A[piv][c].is_zero()) ++piv;
        if (piv == A.size()) continue;
        std::swap(A[piv], A[rank]);
        GaussianRational inv = GaussianRational(1) / A[rank][c];
        for (auto& x : A[rank]) x *= inv;
        for (size_t i = 0; i < A.size(); ++i) {
            if (i == rank || A[i][c].is_zero()) continue;
            GaussianRational f = A[i][c];
            for (size_t k = 0; k < cols.size(); ++k) A[i][k] -= f * A[rank][k];
        }
        ++rank;
    }
    P.relations.clear();
    P.modules.clear();
    for (size_t i = 0; i < rank; ++i) {
        SparsePoly r;
        for (size_t k = 0; k < cols.size(); ++k) r += SparsePoly::term(A[i][k], cols[k]);
        P.relations.push_back(r);
    }
    P.variables.erase(std::remove_if(P.variables.begin(), P.variables.end(),
                                     [&](const GradedVariable& x) { return zero.count(x.name) > 0; }),
                      P.variables.end());
    for (auto& [v, _] : zero) P.expansions.erase(v);
    P.log.push_back("special fiber: invariant sections set to 0, shape " + to_string(classify_fiber(P)));
    return P;
}

namespace {

struct ColorModule {
    std::string point;
    long top = 0;
    long mult = 1;
    GaussianRational alpha, beta;
    std::vector<std::string> vars;
    std::vector<SparsePoly> g;
    ClassVector cls;       // class group of the working embedding
    ClassVector cls_orig;  // class group of the input
    Monomial rmono;        // prod r^h over the point
};

bool same_proj(const GaussianRational& a1, const GaussianRational& b1, const GaussianRational& a2,
               const GaussianRational& b2) {
    return a1 * b2 == a2 * b1;
}

bool technical_conditions(const EmbeddingData& E, const ClassGroupResult& R) {
    if (!R.group().is_torsion_free()) return false;
    if (E.group.n <= 2) return true;
    auto pts = exceptional_points(E);
    return !pts[0].divisors.empty() && !pts[1].divisors.empty();
}

EmbeddingData augment(const EmbeddingData& E, std::vector<std::string>& log) {
    const long u = E.group.u();
    const bool big = E.group.n >= 3;
    std::string over0 = big ? "x0" : "extra:1", over1 = big ? "xinf" : "extra:2";
    for (long s = 2; s <= 24 * u; ++s)
        for (long j0 = 1; j0 < s; ++j0) {
            long j1 = s - j0;
            EmbeddingData W = E;
            Rational l0(-j0, u), l1(-j1, u);
            W.divisors.push_back({over0, 1, l0});
            W.divisors.push_back({over1, 1, l1});
            if (!validate(W).empty()) continue;
            if (!class_group(W).group().is_torsion_free()) continue;
            log.push_back("augmented with virtual divisors (" + over0 + ", 1, " + l0.str() + ") and (" + over1 + ", 1, " +
                          l1.str() + "); Cox(X) = Cox(X1)/(y_0 - 1, y_inf - 1)");
            return W;
        }
    throw TorsionAfterAugmentation("no virtual divisors over " + over0 + ", " + over1 +
                                   " give a torsion-free class group");
}

}  // namespace

GradedPresentation full_cox_presentation_cyclic(const EmbeddingData& E) {
    if (!E.group.is_cyclic()) throw NotCyclic("full presentations are available for cyclic groups only, got " + E.group.name());
    require_valid(E);
    const long n = E.group.n, nb = E.group.nbar();
    const bool big = n >= 3;
    auto R0 = class_group(E);
    auto pts0 = exceptional_points(E);
    long extra_count = big ? long(pts0.size()) - 2 : std::max(0L, long(pts0.size()) - 2);

    GradedPresentation out;
    set_grading(out, R0);
    EmbeddingData W = E;
    if (extra_count >= 1 && !technical_conditions(E, R0)) W = augment(E, out.log);
    auto RW = class_group(W);
    auto ptsW = exceptional_points(W);

    // names of invariant sections, by divisor index of W
    std::map<size_t, std::string> rvar;
    for (auto& gen : R0.generators)
        if (gen.kind == GeneratorKind::Invariant || gen.kind == GeneratorKind::Dominating)
            rvar[size_t(gen.divisor)] = r_name(gen.label);
    std::vector<std::string> virtual_vars;
    for (size_t d = E.divisors.size(); d < W.divisors.size(); ++d) {
        std::string name = W.divisors[d].over == "x0" || W.divisors[d].over == "extra:1" ? "y_0" : "y_inf";
        rvar[d] = name;
        virtual_vars.push_back(name);
    }
    std::map<std::string, ClassVector> rcls;  // in RW
    for (auto& gen : RW.generators)
        if (gen.kind == GeneratorKind::Invariant || gen.kind == GeneratorKind::Dominating)
            rcls[rvar.at(size_t(gen.divisor))] = RW.unit(gen.label);

    std::vector<ColorModule> mods;
    for (size_t i = 0; i < ptsW.size(); ++i) {
        const auto& p = ptsW[i];
        ColorModule M;
        M.point = p.name;
        M.mult = p.multiplicity;
        M.alpha = p.alpha;
        M.beta = p.beta;
        M.top = big && !p.canonical ? nb : 1;
        M.cls = RW.unit("E_" + p.name);
        M.cls_orig = R0.unit("E_" + p.name);
        for (size_t d : p.divisors) M.rmono[rvar.at(d)] += W.divisors[d].h;
        mods.push_back(M);
    }
    if (!big) {
        const std::vector<std::tuple<long, long, std::string>> cand{{0, 1, "0"}, {1, 0, "inf"}, {1, 1, "aux"}};
        for (auto& [a, b, name] : cand) {
            if (mods.size() >= 2) break;
            GaussianRational al(a), be(b);
            bool clash = std::any_of(mods.begin(), mods.end(), [&](const ColorModule& m) { return same_proj(m.alpha, m.beta, al, be); });
            if (clash) continue;
            ColorModule M;
            M.point = name;
            M.alpha = al;
            M.beta = be;
            M.top = 1;
            M.cls = fiber_class(W, RW);
            M.cls_orig = fiber_class(E, R0);
            mods.push_back(M);
            out.log.push_back("auxiliary non-exceptional point " + name + " = [" + al.str() + ":" + be.str() + "]");
        }
    }
    for (auto& M : mods) {
        SparsePoly top;
        if (big) {
            if (M.point == "0") top = g(3);
            else if (M.point == "inf") top = g(4);
            else top = M.beta * g(3, nb) - M.alpha * g(4, nb);
        } else {
            top = M.beta * g(4) - M.alpha * g(3);
        }
        SparsePoly cur = top;
        Integer falling = 1;
        for (long k = 0; k <= M.top; ++k) {
            if (k > 0) {
                cur = sl2_lower(cur);
                falling *= M.top - k + 1;
            }
            M.vars.push_back(basis_name(k, M.point));
            M.g.push_back(cur * (GaussianRational(1) / GaussianRational(Rational(falling))));
        }
    }

    for (auto& M : mods)
        for (long k = 0; k <= M.top; ++k) {
            out.variables.push_back(make_var(R0, M.vars[k], M.cls_orig, M.top - 2 * k, weight_tag(M.top, M.point)));
            out.expansions[M.vars[k]] = M.g[k];
        }
    for (auto& gen : R0.generators)
        if (gen.kind == GeneratorKind::Invariant || gen.kind == GeneratorKind::Dominating) {
            auto name = r_name(gen.label);
            out.variables.push_back(make_var(R0, name, R0.unit(gen.label), 0, "trivial"));
            out.expansions[name] = SparsePoly(1);
        }

    auto rmonomial = [&](const std::vector<Integer>& m) {
        auto idx = RW.invariant_indices();
        Monomial mono;
        for (size_t c = 0; c < idx.size(); ++c)
            if (m[c] != 0) mono[rvar.at(size_t(RW.generators[idx[c]].divisor))] = m[c].get_si();
        return mono;
    };

    std::vector<std::pair<size_t, size_t>> pairs;
    if (big) {
        pairs.push_back({1, 0});
        for (size_t i = 2; i < mods.size(); ++i) pairs.push_back({0, i});
        for (size_t i = 2; i < mods.size(); ++i) pairs.push_back({1, i});
        for (size_t i = 2; i < mods.size(); ++i)
            for (size_t j = i; j < mods.size(); ++j) pairs.push_back({i, j});
    } else {
        for (size_t i = 0; i < mods.size(); ++i)
            for (size_t j = i + 1; j < mods.size(); ++j) pairs.push_back({i, j});
    }

    for (auto [ki, li] : pairs) {
        const auto& A = mods[ki];
        const auto& B = mods[li];
        const bool same = ki == li;
        ClassVector target = add(A.cls, B.cls);
        std::string label = "M_" + A.point + "," + B.point;
        std::vector<std::pair<long, SparsePoly>> rows;
        rows.push_back({A.top + B.top, SparsePoly::var(A.vars[0]) * SparsePoly::var(B.vars[0])});
        std::vector<RelationModule> pending;
        std::vector<long> zero_images;
        for (long p = 1; p <= std::min(A.top, B.top); ++p) {
            if (same && p % 2) continue;
            SparsePoly y, img;
            for (long j = 0; j <= p; ++j) {
                GaussianRational c(Rational(binomial(p, j)));
                if (j % 2) c = -c;
                y += c * (SparsePoly::var(A.vars[j]) * SparsePoly::var(B.vars[p - j]));
                img += c * (A.g[j] * B.g[p - j]);
            }
            img = sl2_reduce(img);
            if (same) {
                GaussianRational mid(Rational(binomial(p, p / 2)));
                if ((p / 2) % 2) mid = -mid;
                GaussianRational inv = GaussianRational(1) / mid;
                y *= inv;
                img *= inv;
            }
            SparsePoly expr;
            std::vector<std::vector<Integer>> alts;
            for (auto& [m, c] : img.terms()) {
                long a = 0, b = 0;
                for (auto& [v, e] : m) {
                    if (v == "g3") a = e;
                    else if (v == "g4") b = e;
                    else throw std::logic_error("image of " + y.str() + " is not U-invariant");
                }
                if (!big && (a || b)) throw std::logic_error("non-constant invariant image for " + y.str());
                ClassVector t = target;
                Monomial mono;
                if (a) {
                    t = add(t, mods[0].cls, -a);
                    mono[mods[0].vars[0]] = a;
                }
                if (b) {
                    t = add(t, mods[1].cls, -b);
                    mono[mods[1].vars[0]] = b;
                }
                auto sols = express_in_invariant_divisors(RW, t);
                if (sols.size() > 1) {
                    out.warnings.push_back("AmbiguousSolution: " + std::to_string(sols.size()) + " exponent vectors for " +
                                           format_class(RW, t) + " in " + label);
                    alts.insert(alts.end(), sols.begin() + 1, sols.end());
                }
                expr += SparsePoly::term(c, mono * rmonomial(sols.front()));
            }
            if (expr.is_zero()) zero_images.push_back(p);
            long w = A.top + B.top - 2 * p;
            rows.push_back({w, expr});
            RelationModule R{"M", label, w, y - expr, {}, alts};
            pending.push_back(R);
        }
        if (big && ki >= 2 && li >= 2 && !same) {
            bool split = (A.alpha * B.beta + B.alpha * A.beta).is_zero();
            bool pattern = true;
            for (long p = 1; p <= nb; ++p) {
                bool z = std::find(zero_images.begin(), zero_images.end(), p) != zero_images.end();
                if (z != (split && p % 2 == 0)) pattern = false;
            }
            if (!pattern) out.warnings.push_back("weight pattern of " + label + " differs from the expected table row");
        }
        for (auto& R : pending) {
            R.weight_table_rows = rows;
            out.relations.push_back(R.highest);
            out.modules.push_back(R);
        }
    }

    // N_i: the point relation of x_i through those of the first two points
    for (size_t i = 2; i < mods.size(); ++i) {
        const auto& P0 = ptsW[0];
        const auto& P1 = ptsW[1];
        auto [c0, c1] = point_combination(P0, P1, ptsW[i]);
        for (long k = 0; k <= (big ? 0 : 1); ++k) {
            auto side = [&](const ColorModule& M) {
                Monomial m = M.rmono;
                m[M.vars[k]] += k == 0 ? M.mult : 1;
                return SparsePoly::term(GaussianRational(1), m);
            };
            SparsePoly rel = c0 * side(mods[0]) + c1 * side(mods[1]) - side(mods[i]);
            long w = mods[i].top - 2 * k;
            RelationModule R{"N", "N_" + mods[i].point, mods[i].top, rel, {{w, rel}}, {}};
            out.relations.push_back(rel);
            out.modules.push_back(R);
        }
    }

    if (!virtual_vars.empty()) {
        std::map<std::string, SparsePoly> one;
        for (auto& v : virtual_vars) one[v] = SparsePoly(1);
        for (auto& r : out.relations) r = r.substitute(one);
        for (auto& M : out.modules) {
            M.highest = M.highest.substitute(one);
            for (auto& row : M.weight_table_rows) row.second = row.second.substitute(one);
        }
        out.log.push_back("specialized y_0 = y_inf = 1");
    }
    return out;
}

std::vector<std::string> check_homogeneous(const GradedPresentation& P) {
    std::map<std::string, const GradedVariable*> vars;
    for (auto& v : P.variables) vars[v.name] = &v;
    std::vector<std::string> bad;
    for (size_t i = 0; i < P.relations.size(); ++i) {
        const auto& r = P.relations[i];
        std::optional<std::vector<Integer>> deg;
        std::optional<long> wt;
        bool ok = true;
        for (auto& [m, c] : r.terms()) {
            std::vector<Integer> d(P.degree_moduli.size());
            long w = 0;
            for (auto& [v, e] : m) {
                auto it = vars.find(v);
                if (it == vars.end()) {
                    bad.push_back("relation " + std::to_string(i) + " uses unknown variable " + v);
                    ok = false;
                    continue;
                }
                for (size_t k = 0; k < d.size(); ++k) d[k] += e * it->second->degree_image[k];
                w += e * it->second->b_weight;
            }
            for (size_t k = 0; k < d.size(); ++k)
                if (P.degree_moduli[k] != 0) d[k] = mod_floor(d[k], P.degree_moduli[k]);
            if (!deg) deg = d;
            else if (*deg != d) ok = false;
            if (!wt) wt = w;
            else if (*wt != w) ok = false;
        }
        if (!ok) bad.push_back("relation " + std::to_string(i) + " is not homogeneous: " + r.str());
    }
    return bad;
}

std::vector<std::string> verify_by_substitution(const GradedPresentation& P) {
    std::vector<std::string> bad;
    if (P.expansions.empty()) return {"no SL2 expansions available"};
    for (size_t i = 0; i < P.relations.size(); ++i) {
        const auto& r = P.relations[i];
        bool known = true;
        for (auto& v : r.variables())
            if (!P.expansions.count(v)) known = false;
        if (!known) {
            bad.push_back("relation " + std::to_string(i) + " has variables without expansion");
            continue;
        }
        if (!sl2_reduce(r.substitute(P.expansions)).is_zero())
            bad.push_back("relation " + std::to_string(i) + " does not vanish: " + r.str());
    }
    return bad;
}

std::vector<long> clebsch_gordan(long n, long m) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative highest weight");
    if (n < m) std::swap(n, m);
    std::vector<long> out;
    for (long k = n + m; k >= n - m; k -= 2) out.push_back(k);
    return out;
}

BatyrevHaddadParams batyrev_haddad(const EmbeddingData& E) {
    if (!E.group.is_cyclic()) throw NotAffineShape("affine embeddings need a cyclic group, got " + E.group.name());
    const long n = E.group.n, nb = E.group.nbar(), u = E.group.u();
    if (E.divisors.size() != 1) throw NotAffineShape("affine embeddings have exactly one G-stable divisor");
    const auto& d = E.divisors[0];
    bool shape = n >= 3 ? d.over == "x0" && E.extra_points.empty() : d.over == "extra:1" && E.extra_points.size() == 1;
    if (!shape || d.h <= 0) throw NotAffineShape("the G-stable divisor must lie over x0 with h > 0");
    Rational ul = d.l * Rational(u);
    if (!ul.is_integer() || std::gcd(d.h, std::labs(ul.num().get_si())) != 1)
        throw NotAffineShape("the valuation (h, l) is not primitive");
    Rational h(d.h), l = d.l, N(nb);
    Rational den = h * (Rational(1) - N) - Rational(2) * l * N;
    if (den.is_zero()) throw HeightOutOfRange("alpha is undefined for l/h = " + (l / h).str());
    Rational alpha = (h * (N + Rational(1)) + Rational(2) * l * N) / den;
    if (alpha.sign() <= 0 || alpha > Rational(1)) throw HeightOutOfRange("alpha = " + alpha.str() + " is outside (0, 1]");

    BatyrevHaddadParams B;
    B.height = alpha;
    B.p = alpha.num();
    B.q = alpha.den();
    Integer diff = B.q - B.p;
    mpz_gcd(B.k.get_mpz_t(), diff.get_mpz_t(), Integer(n).get_mpz_t());
    B.a = Integer(n) / B.k;
    B.b = diff / B.k;
    Rational ce = -(h + Rational(2) * l);
    B.cox_exponent = ce.num();

    auto R = class_group(E);
    std::vector<Integer> f(R.generators.size());
    for (size_t j = 0; j < R.generators.size(); ++j) {
        const auto& gen = R.generators[j];
        if (gen.kind == GeneratorKind::Distinguished) f[j] = n >= 3 ? Integer(nb) * B.q : B.q;
        else if (gen.kind == GeneratorKind::Invariant) f[j] = B.k;
        else if (gen.label == "E_inf") f[j] = B.q;
        else f[j] = -B.p;
    }
    B.degree_map_ok = true;
    for (size_t i = 0; i < R.presentation.rows(); ++i) {
        Integer s = 0;
        for (size_t j = 0; j < f.size(); ++j) s += R.presentation(i, j) * f[j];
        if (s != 0) B.degree_map_ok = false;
    }
    return B;
}

}  // namespace sl2cox
