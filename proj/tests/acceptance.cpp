#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "sl2cox/classgroup.hpp"
#include "sl2cox/coxring.hpp"
#include "sl2cox/diagnostics.hpp"
#include "sl2cox/io.hpp"
#include "sl2cox/iteration.hpp"

using namespace sl2cox;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::string data(const char* name) { return std::string(SL2COX_DATA_DIR) + "/" + name; }

long nbar(long n) { return n % 2 ? n : n / 2; }

// all (h, l) with -1/2 - 1/(2 nbar) < l/h <= -1/2, l in (1/2)Z and gcd(h, u l) = 1
std::vector<std::pair<long, Rational>> affine_grid(long n, long hmax) {
    std::vector<std::pair<long, Rational>> out;
    long u = n % 2 ? 1 : 2;
    for (long h = 1; h <= hmax; ++h)
        for (long ul = -4 * h * u; ul <= 0; ++ul) {
            Rational l(ul, u), s = l / Rational(h);
            if (!(s <= Rational(-1, 2) && s > Rational(-1, 2) - Rational(1, 2 * nbar(n)))) continue;
            if (std::gcd(h, std::abs(ul)) != 1) continue;
            out.push_back({h, l});
        }
    return out;
}

// torsion order of the affine class group
long affine_d(long n, long h, const Rational& l) {
    Rational s = Rational(h) + Rational(2) * l;
    if (n % 2 || (s.is_integer() && s.num() % 2 == 0)) return std::gcd(n, h);
    return std::gcd(nbar(n) + h, std::abs(nbar(n) - h));
}

Outcome criterion1() {
    Outcome o;
    auto E = load_embedding(data("sl2_trivial_4pts.json"));
    auto P = presentation_matrix(E);
    IntMatrix printed{{-1, -2, 1, 3, 0, 0, 0, 0},
                      {-1, -2, 0, 0, 1, 1, 0, 0},
                      {-1, -2, 0, 0, 0, 0, 1, 5},
                      {1, -1, 0, -5, 0, -1, 0, -4}};
    if (!(P.matrix == printed)) o.fail("presentation matrix differs");
    auto R = class_group(E);
    if (R.group().str() != "Z^4") o.fail("class group " + R.group().str());
    std::map<std::string, std::vector<long>> ids{
        {"E_1", {1, 5, 1, 4}}, {"E_2", {3, 2, 1, 4}}, {"E_3", {3, 5, 0, 4}}, {"E_4", {3, 5, 1, -1}}};
    for (auto& [g, want] : ids) {
        auto c = express_integrally(R, R.unit(g));
        if (!c) {
            o.fail("no integral expression for " + g);
            continue;
        }
        std::vector<long> got;
        for (auto& x : *c) got.push_back(x.get_si());
        if (got != want) o.fail("identity for " + g);
        // the identity holds in the cokernel itself
        ClassVector v(R.generators.size());
        for (size_t k = 0; k < 4; ++k) v[R.index("X_" + std::to_string(k + 1))] = want[k];
        if (!R.equal(R.unit(g), v)) o.fail("identity for " + g + " fails in Cl");
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto P = full_cox_presentation_cyclic(load_embedding(data("sl2_trivial_4pts.json")));
    std::set<std::string> names, want_names;
    for (auto& v : P.variables) names.insert(v.name);
    for (int i = 1; i <= 4; ++i)
        for (auto p : {"s_", "t_", "r_"}) want_names.insert(p + std::to_string(i));
    if (names != want_names || P.variables.size() != 12) o.fail("generators differ");
    std::set<std::string> got, want;
    for (auto& r : P.relations) got.insert(r.str());
    for (auto* r : {"s_1 t_2-s_2 t_1-r_1^4 r_2^7 r_3^2 r_4^8", "s_1 t_3-s_3 t_1-r_1^4 r_2^10 r_3 r_4^8",
                    "s_1 t_4-s_4 t_1-r_1^4 r_2^10 r_3^2 r_4^3", "s_2 t_3-s_3 t_2+r_1^6 r_2^7 r_3 r_4^8",
                    "s_2 t_4-s_4 t_2+2 r_1^6 r_2^7 r_3^2 r_4^3", "s_3 t_4-s_4 t_3+r_1^6 r_2^10 r_3 r_4^3",
                    "s_2 r_2^3+s_1 r_1^2-s_3 r_3", "t_2 r_2^3+t_1 r_1^2-t_3 r_3", "s_2 r_2^3+2 s_1 r_1^2-s_4 r_4^5",
                    "t_2 r_2^3+2 t_1 r_1^2-t_4 r_4^5"})
        want.insert(SparsePoly::parse(r).str());
    if (P.relations.size() != 10 || got != want) o.fail("relations differ");
    if (!check_homogeneous(P).empty()) o.fail("inhomogeneous relation");
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto E = load_embedding(data("mu3.json"));
    auto R = class_group(E);
    if (R.group().str() != "Z^3") o.fail("class group " + R.group().str());
    auto P = full_cox_presentation_cyclic(E);
    // alpha = 2, beta = 3
    std::vector<std::pair<std::string, std::string>> table{
        {"M_inf,0", "t_0 s_inf - s_0 t_inf - r_0 r_inf r_1^2"},
        {"M_0,1", "t_1 s_0 - s_1 t_0 - 2 s_inf^2 r_0 r_inf^2 r_1"},
        {"M_inf,1", "t_1 s_inf - s_1 t_inf - 3 s_0^2 r_0^2 r_inf r_1"},
        {"M_1,1", "t_1^2 - s_1 u_1 - 6 s_0 s_inf r_0^3 r_inf^3 r_1^2"},
        {"N_1", "3 s_0^3 r_0 - 2 s_inf^3 r_inf - s_1 r_1"}};
    std::vector<long> weights{0, 2, 2, 2, 3};
    if (P.relations.size() != 5 || P.modules.size() != 5) {
        o.fail("expected five relations");
        return o;
    }
    for (size_t i = 0; i < 5; ++i) {
        if (P.modules[i].label != table[i].first) o.fail("row " + std::to_string(i) + " label " + P.modules[i].label);
        if (!(P.relations[i] == SparsePoly::parse(table[i].second))) o.fail("row " + table[i].first + " relation");
        if (P.modules[i].iso_type != weights[i]) o.fail("row " + table[i].first + " B-weight");
    }
    if (!verify_by_substitution(P).empty()) o.fail("relations do not vanish");
    return o;
}

Outcome criterion4() {
    Outcome o;
    int cases = 0;
    for (long n = 1; n <= 15; ++n)
        for (auto [h, l] : affine_grid(n, 12)) {
            std::ostringstream tag;
            tag << "n=" << n << " h=" << h << " l=" << l.str();
            auto E = affine_embedding(n, h, l);
            FinAbGroup want;
            want.free_rank = 1;
            if (long d = affine_d(n, h, l); d > 1) want.torsion = {Integer(d)};
            if (!(class_group(E).group() == want)) o.fail(tag.str() + ": class group");
            Rational m = -(Rational(h) + Rational(2) * l);
            auto P = full_cox_presentation_cyclic(E);
            std::string r = n >= 3 ? "r_0" : "r_1";
            if (P.relations.size() != 1 || Rational(P.relations[0].degree_in(r)) != m)
                o.fail(tag.str() + ": relation exponent");
            try {
                auto B = batyrev_haddad(E);
                if (Rational(B.b) != m) o.fail(tag.str() + ": b");
                if (B.k == 0 || B.b * B.k != B.q - B.p) o.fail(tag.str() + ": b != (q-p)/k");
                if (gcd(B.p, B.q) != 1) o.fail(tag.str() + ": gcd(p,q)");
                if (!(B.height.sign() > 0 && B.height <= Rational(1))) o.fail(tag.str() + ": height range");
                if ((B.height == Rational(1)) != (l / Rational(h) == Rational(-1, 2))) o.fail(tag.str() + ": height 1");
            } catch (const Error& e) {
                o.fail(tag.str() + ": " + e.what());
            }
            ++cases;
        }
    if (cases < 100) o.fail("sweep too small");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(cases) + " cases";
    return o;
}

std::string shape_oracle(const GradedPresentation& P) {
    // polynomial: no relations; reduced: a single squarefree relation; non-reduced: a pure power relation
    if (P.relations.empty()) return "polynomial";
    for (auto& r : P.relations)
        if (r.size() == 1) {
            for (auto& [m, c] : r.terms())
                for (auto& [v, e] : m)
                    if (e > 1) return "non-reduced";
        }
    if (P.relations.size() == 1 && P.relations[0].size() >= 2) return "reduced-reducible";
    return "other";
}

Outcome criterion5() {
    Outcome o;
    std::mt19937_64 rng(11);
    int counts[3] = {0, 0, 0};
    for (int it = 0; it < 600; ++it) {
        long n = 3 + long(rng() % 10);
        int shape = it % 3;
        EmbeddingData E;
        E.group = FiniteSubgroup::cyclic(n);
        auto div = [&](const std::string& over) {
            long h = 1 + long(rng() % 4);
            long l = -((h + 1) / 2) - long(rng() % 2);
            E.divisors.push_back({over, h, Rational(l)});
        };
        int extras = shape == 0 ? int(rng() % 3) : shape == 1 ? 1 : 2 + int(rng() % 3);
        std::set<std::pair<long, long>> used;
        while (int(E.extra_points.size()) < extras) {
            long a = 1 + long(rng() % 9), b = 1 + long(rng() % 9);
            if (std::gcd(a, b) != 1 || !used.insert({a, b}).second) continue;
            E.extra_points.push_back({GaussianRational(a), GaussianRational(b)});
            div("extra:" + std::to_string(E.extra_points.size()));
        }
        if (shape == 0) {
            div("x0");
            div("xinf");
        }
        if (!validate(E).empty()) continue;
        auto F = special_fiber_u(cox_u_presentation(E), E);
        std::string want = shape == 0 ? "polynomial" : shape == 1 ? "reduced-reducible" : "non-reduced";
        FiberShape lib = classify_fiber(F);
        FiberShape lib_want = shape == 0   ? FiberShape::AffineSpace
                              : shape == 1 ? FiberShape::ReducedReducible
                                           : FiberShape::NonReduced;
        if (shape_oracle(F) != want || lib != lib_want)
            o.fail("n=" + std::to_string(n) + " extras=" + std::to_string(extras) + ": got " + to_string(lib));
        if ((shape == 0) != special_fiber_normal(E)) o.fail("normality predicate disagrees");
        ++counts[shape];
    }
    if (counts[0] < 100 || counts[1] < 100 || counts[2] < 100) o.fail("too few valid samples");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(counts[0] + counts[1] + counts[2]) + " embeddings";
    return o;
}

// pattern list: after removing 1s, (x), (x,y), (2,2,x), (2,3,3), (2,3,4), (2,3,5)
bool platonic_pattern(std::vector<long> v) {
    v.erase(std::remove(v.begin(), v.end(), 1L), v.end());
    std::sort(v.begin(), v.end());
    if (v.size() <= 2) return true;
    if (v.size() > 3) return false;
    if (v[0] == 2 && v[1] == 2) return true;
    return v[0] == 2 && v[1] == 3 && v[2] <= 5;
}

Outcome criterion6() {
    Outcome o;
    long tuples = 0;
    for (size_t len = 1; len <= 5; ++len) {
        std::vector<long> t(len, 1);
        while (true) {
            if (is_platonic_tuple(t).is_platonic != platonic_pattern(t) ||
                platonic_pattern(t) != oracle::platonic_by_definition(t))
                o.fail("tuple disagreement");
            ++tuples;
            size_t i = 0;
            while (i < len && t[i] == 8) t[i++] = 1;
            if (i == len) break;
            ++t[i];
        }
    }
    std::mt19937_64 rng(17);
    int rings = 0;
    while (rings < 500) {
        Ap0Input ap;
        size_t r = 3 + rng() % 4;
        long prod = 1;
        for (size_t i = 0; i < r; ++i) {
            std::vector<long> v(1 + rng() % 6);
            for (auto& x : v) x = 1 + long(rng() % (rng() % 3 ? 4 : 9));
            prod *= long(v.size());
            ap.exponent_vectors.push_back(v);
        }
        if (prod > 10000) continue;
        ++rings;
        bool all = true;
        std::vector<size_t> idx(r, 0);
        while (all) {
            std::vector<long> t;
            for (size_t i = 0; i < r; ++i) t.push_back(ap.exponent_vectors[i][idx[i]]);
            all = platonic_pattern(t);
            size_t i = 0;
            while (i < r && ++idx[i] == ap.exponent_vectors[i].size()) idx[i++] = 0;
            if (i == r) break;
        }
        auto fast = is_platonic_ring(ap, PlatonicMethod::Maxima);
        if (fast.is_platonic != all) o.fail("ring disagreement");
        if (is_platonic_ring(ap).is_platonic != all) o.fail("default method disagreement");
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(tuples) + " tuples, " + std::to_string(rings) + " rings";
    return o;
}

Outcome criterion7() {
    Outcome o;
    struct Row {
        FiniteSubgroup F;
        long bound;
    };
    std::vector<Row> table{{FiniteSubgroup::cyclic(1), 1}, {FiniteSubgroup::cyclic(2), 1},
                           {FiniteSubgroup::cyclic(3), 2}, {FiniteSubgroup::cyclic(7), 2},
                           {FiniteSubgroup::cyclic(20), 2}, {FiniteSubgroup::dihedral(2), 3},
                           {FiniteSubgroup::dihedral(5), 3}, {FiniteSubgroup::dihedral(8), 3},
                           {FiniteSubgroup::tetrahedral(), 3}, {FiniteSubgroup::octahedral(), 4},
                           {FiniteSubgroup::icosahedral(), 1}};
    for (auto& [F, b] : table)
        if (bound_for(F) != b) o.fail("bound for " + F.name());

    EmbeddingData G;
    G.group = FiniteSubgroup::cyclic(1);
    if (cyclic_iteration_exact(G).m_hi != 0) o.fail("X = G");

    // divisors over 0 and infinity from small grids, plus the affine grids
    int cyclic_cases = 0;
    for (long n = 1; n <= 20; ++n) {
        std::vector<EmbeddingData> es;
        for (auto [h, l] : affine_grid(n, 6)) es.push_back(affine_embedding(n, h, l));
        long u = n % 2 ? 1 : 2;
        for (long h0 = 1; h0 <= 3; ++h0)
            for (long l0 = -4 * u; l0 <= 0; ++l0)
                for (long h1 = 1; h1 <= 3; ++h1)
                    for (long l1 = -4 * u; l1 <= 0; l1 += 2) {
                        EmbeddingData E;
                        E.group = FiniteSubgroup::cyclic(n);
                        E.divisors = {{"x0", h0, Rational(l0, u)}, {"xinf", h1, Rational(l1, u)}};
                        if (validate(E).empty()) es.push_back(E);
                    }
        for (auto& E : es) {
            auto rep = cyclic_iteration_exact(E);
            if (!rep.determined()) o.fail("cyclic length undetermined");
            if (n == 2 && rep.m_hi != 1) o.fail("mu_2 gives m=" + std::to_string(rep.m_hi));
            if (n >= 3 && rep.m_hi > 2) o.fail("mu_" + std::to_string(n) + " gives m=" + std::to_string(rep.m_hi));
            if (rep.m_hi > bound_for(E.group)) o.fail("cyclic bound");
            ++cyclic_cases;
        }
    }

    std::mt19937_64 rng(23);
    std::vector<FiniteSubgroup> poly{FiniteSubgroup::tetrahedral(), FiniteSubgroup::octahedral(),
                                     FiniteSubgroup::icosahedral()};
    for (long n = 2; n <= 9; ++n) poly.push_back(FiniteSubgroup::dihedral(n));
    int chains = 0, poly_cases = 0;
    for (int it = 0; it < 400; ++it) {
        EmbeddingData E;
        E.group = poly[rng() % poly.size()];
        for (auto p : {"xv", "xe", "xf"})
            if (rng() % 2) E.divisors.push_back({p, 1 + long(rng() % 3), Rational(-1 - long(rng() % 4))});
        if (rng() % 2) {
            E.extra_points.push_back({GaussianRational(2 + long(rng() % 5)), GaussianRational(3)});
            E.divisors.push_back({"extra:1", 1 + long(rng() % 3), Rational(-2 - long(rng() % 3))});
        }
        if (!validate(E).empty()) continue;
        ++poly_cases;
        auto rep = iterate(E);
        long bound = bound_for(E.group);
        if (rep.m_hi > bound || rep.m_lo > rep.m_hi) o.fail(E.group.name() + ": m outside bound");
        if (rep.steps.empty() || !rep.steps[0].determined) o.fail(E.group.name() + ": first step not computed");
        for (auto& c : rep.chains) {
            ++chains;
            if (c.m_hi > bound) o.fail(E.group.name() + ": chain exceeds bound");
            for (size_t k = 1; k < c.steps.size(); ++k) {
                auto& prev = c.steps[k - 1];
                auto& cur = c.steps[k];
                if (!cur.torsion || !prev.torsion || cur.torsion->is_trivial()) continue;
                auto T = cur.torsion->group();
                bool cyclic = T.torsion.size() <= 1;
                if (prev.torsion->group().torsion.size() <= 1 && cyclic && cur.torsion->order() % 2 == 0)
                    o.fail("even cyclic torsion after cyclic torsion");
                if (prev.subgroup.kind == GroupKind::BinaryDihedral &&
                    (!cyclic || prev.subgroup.n % long(cur.torsion->order()) != 0))
                    o.fail("dihedral torsion exceeds Z/n");
            }
        }
    }
    if (poly_cases < 100) o.fail("too few polyhedral samples");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(cyclic_cases) + " cyclic, " +
                std::to_string(poly_cases) + " polyhedral, " + std::to_string(chains) + " chains";
    return o;
}

// determinant by elimination over Q
Rational det_over_q(const IntMatrix& M) {
    size_t n = M.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(M(i, j));
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(29);
    for (int it = 0; it < 1000; ++it) {
        size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        IntMatrix M = oracle::random_matrix(rng, r, c, -20, 20);
        if (it % 4 == 0 && r > 1) M.add_row(0, r - 1, long(rng() % 5) - 2);
        auto s = smith_normal_form(M);
        if (!(s.U * M * s.V == s.D)) o.fail("U M V != D");
        Rational du = det_over_q(s.U), dv = det_over_q(s.V);
        if (!(du == Rational(1) || du == Rational(-1)) || !(dv == Rational(1) || dv == Rational(-1)))
            o.fail("non-unimodular transform");
        for (size_t i = 0; i < s.D.rows(); ++i)
            for (size_t j = 0; j < s.D.cols(); ++j)
                if (i != j && s.D(i, j) != 0) o.fail("D not diagonal");
        for (size_t k = 0; k < s.rank(); ++k) {
            if (s.D(k, k) != s.invariant_factors[k] || s.invariant_factors[k] <= 0) o.fail("bad diagonal");
            if (k > 0 && s.invariant_factors[k] % s.invariant_factors[k - 1] != 0) o.fail("divisibility chain");
        }
        if (r <= 5 && c <= 5 && s.invariant_factors != oracle::invariant_factors_by_minors(M))
            o.fail("invariant factors differ from minors");
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all{{1, "class group of the four-point example", 1.0, criterion1},
                               {2, "full Cox presentation of the four-point example", 5.0, criterion2},
                               {3, "mu_3 example relation table", 5.0, criterion3},
                               {4, "affine sweep", 10.0, criterion4},
                               {5, "special fiber shapes", 30.0, criterion5},
                               {6, "Platonic tuples and rings", 30.0, criterion6},
                               {7, "Cox ring iteration", 10.0, criterion7},
                               {8, "Smith normal form", 30.0, criterion8}};
    int failures = 0;
    for (auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= c.limit) o.fail("time limit exceeded");
        if (!o.ok) ++failures;
        std::printf("criterion %d: %s  %s  (%.3f s, limit %.0f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs,
                    c.limit, o.detail.empty() ? "" : "  ", o.detail.c_str());
    }
    return failures ? 1 : 0;
}
