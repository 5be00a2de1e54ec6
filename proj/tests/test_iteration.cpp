#include <numeric>
#include <set>
#include <random>

#include "doctest.h"
#include "sl2cox/classgroup.hpp"
#include "sl2cox/errors.hpp"
#include "sl2cox/io.hpp"
#include "sl2cox/iteration.hpp"

using namespace sl2cox;

namespace {

FinAbGroup fin(std::vector<long> t) {
    FinAbGroup g;
    for (long x : t) g.torsion.push_back(Integer(x));
    return g;
}

// brute force: order of the group generated, by repeated addition in Z/a x Z/b
size_t closure_size(long a, long b, std::vector<std::pair<long, long>> gens) {
    std::set<std::pair<long, long>> s{{0, 0}};
    bool grew = true;
    while (grew) {
        grew = false;
        auto cur = s;
        for (auto& x : cur)
            for (auto& g : gens)
                grew |= s.insert({(x.first + g.first) % a, (x.second + g.second) % b}).second;
    }
    return s.size();
}

EmbeddingData polyhedral(FiniteSubgroup F, std::vector<DivisorSpec> divs,
                         std::vector<std::pair<GaussianRational, GaussianRational>> extras = {}) {
    EmbeddingData E;
    E.group = F;
    E.divisors = std::move(divs);
    E.extra_points = std::move(extras);
    return E;
}

}  // namespace

TEST_CASE("character subgroups") {
    auto A = fin({2, 2});
    auto subs = all_subgroups(A);
    CHECK(subs.size() == 5);
    auto C = all_subgroups(fin({12}));
    CHECK(C.size() == 6);
    for (auto& H : C) CHECK(H.is_cyclic());
    CHECK(!CharacterSubgroup::full(A).is_cyclic());
    CHECK(CharacterSubgroup::full(A).group() == fin({2, 2}));
    CHECK(CharacterSubgroup::full(fin({4})).group() == fin({4}));
    CHECK(CharacterSubgroup::trivial(fin({4})).group().is_trivial());
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        long a = 1 + long(rng() % 6), b = 1 + long(rng() % 6);
        if (a % b) continue;
        std::vector<std::pair<long, long>> gp;
        std::vector<std::vector<Integer>> g;
        for (int k = 0; k < 2; ++k) {
            long x = long(rng() % a), y = long(rng() % b);
            gp.push_back({x, y});
            g.push_back({Integer(x), Integer(y)});
        }
        auto H = CharacterSubgroup::generated(fin({a, b}), g);
        CHECK(H.order() == closure_size(a, b, gp));
        CHECK(H.group().torsion_order() == Integer(H.order()));
    }
}

TEST_CASE("d tilde") {
    for (long n = 1; n <= 40; ++n)
        for (long d = 1; d <= n; ++d) {
            if (n % d) continue;
            long nb = n % 2 ? n : n / 2;
            long q = n / d;
            long qb = q % 2 ? q : q / 2;
            CHECK(nb % qb == 0);
            CHECK(d_tilde(n, d) == nb / qb);
            CHECK(d_tilde(n, d) >= 1);
        }
    CHECK(d_tilde(2, 2) == 1);
    CHECK_THROWS(d_tilde(6, 4));
}

TEST_CASE("bounds") {
    CHECK(bound_for(FiniteSubgroup::octahedral()) == 4);
    CHECK(bound_for(FiniteSubgroup::cyclic(7)) == 2);
    CHECK(bound_for(FiniteSubgroup::icosahedral()) == 1);
    CHECK(bound_for(FiniteSubgroup::cyclic(2)) == 1);
    CHECK(bound_for(FiniteSubgroup::cyclic(1)) == 1);
    CHECK(bound_for(FiniteSubgroup::tetrahedral()) == 3);
    CHECK(bound_for(FiniteSubgroup::dihedral(5)) == 3);
}

TEST_CASE("descending subgroups") {
    auto O = FiniteSubgroup::octahedral();
    CHECK(descend_subgroup(O, CharacterSubgroup::full(O.character_group())).subgroup == FiniteSubgroup::tetrahedral());
    auto T = FiniteSubgroup::tetrahedral();
    CHECK(descend_subgroup(T, CharacterSubgroup::full(T.character_group())).subgroup == FiniteSubgroup::dihedral(2));
    for (long n = 1; n <= 24; ++n) {
        auto F = FiniteSubgroup::cyclic(n);
        for (auto& H : all_subgroups(F.character_group()))
            CHECK(descend_subgroup(F, H).subgroup == FiniteSubgroup::cyclic(n / long(H.order())));
    }
    CHECK(descend_subgroup(O, CharacterSubgroup::trivial(O.character_group())).subgroup == O);
    auto D6 = FiniteSubgroup::dihedral(6);
    int dihedral = 0, cyclic = 0;
    for (auto& H : all_subgroups(D6.character_group())) {
        auto d = descend_subgroup(D6, H);
        if (H.order() == 2) {
            if (d.subgroup == FiniteSubgroup::dihedral(3)) ++dihedral;
            if (d.subgroup == FiniteSubgroup::cyclic(12)) ++cyclic;
        }
        if (H.order() == 4) CHECK(d.subgroup == FiniteSubgroup::cyclic(6));
    }
    CHECK(dihedral == 2);
    CHECK(cyclic == 1);
    auto D5 = FiniteSubgroup::dihedral(5);
    auto sub2 = CharacterSubgroup::generated(D5.character_group(), {{Integer(2)}});
    CHECK(descend_subgroup(D5, sub2).subgroup == FiniteSubgroup::cyclic(10));
    CHECK_THROWS_AS(descend_subgroup(O, CharacterSubgroup::full(fin({3}))), UnknownCharacterLattice);
}

TEST_CASE("descended subgroups have index equal to the number of characters") {
    std::vector<FiniteSubgroup> Fs = {FiniteSubgroup::octahedral(), FiniteSubgroup::tetrahedral(),
                                      FiniteSubgroup::icosahedral()};
    for (long n = 2; n <= 12; ++n) Fs.push_back(FiniteSubgroup::dihedral(n));
    for (long n = 1; n <= 12; ++n) Fs.push_back(FiniteSubgroup::cyclic(n));
    for (auto& F : Fs)
        for (auto& H : all_subgroups(F.character_group())) {
            auto D = descend_subgroup(F, H);
            CHECK(F.order() == D.subgroup.order() * long(H.order()));
        }
}

TEST_CASE("torsion characters") {
    EmbeddingData G;
    G.group = FiniteSubgroup::cyclic(1);
    CHECK(torsion_characters(G).is_trivial());
    EmbeddingData I;
    I.group = FiniteSubgroup::icosahedral();
    CHECK(torsion_characters(I).is_trivial());
    auto mu3 = load_embedding(SL2COX_DATA_DIR "/mu3.json");
    CHECK(torsion_characters(mu3).is_trivial());
    for (long n = 3; n <= 15; n += 2)
        for (long h = 1; h <= 8; ++h)
            for (long ul = -3 * h; ul < 0; ++ul) {
                Rational l(ul, n);
                auto E = affine_embedding(n, h, l);
                if (!validate(E).empty()) continue;
                auto T = torsion_characters(E);
                CHECK(long(T.order()) == std::gcd(n, h));
            }
}

TEST_CASE("restriction embeds the torsion subgroup") {
    std::mt19937_64 rng(21);
    int seen = 0;
    for (int it = 0; it < 150; ++it) {
        EmbeddingData E;
        long pick = long(rng() % 4);
        if (pick == 0) E.group = FiniteSubgroup::cyclic(1 + long(rng() % 9));
        if (pick == 1) E.group = FiniteSubgroup::dihedral(2 + long(rng() % 5));
        if (pick == 2) E.group = FiniteSubgroup::tetrahedral();
        if (pick == 3) E.group = FiniteSubgroup::octahedral();
        auto pts = E.group.canonical_points();
        for (auto& p : pts)
            if (rng() % 2) E.divisors.push_back({"x" + p, 1 + long(rng() % 4), Rational(-1 - long(rng() % 6))});
        if (!validate(E).empty()) continue;
        ++seen;
        auto R = class_group(E);
        auto T = torsion_characters(E);
        CHECK(Integer(T.order()) == R.group().torsion_order());
        CHECK(T.group() == FinAbGroup{0, R.group().torsion});
    }
    CHECK(seen > 50);
}

TEST_CASE("cyclic iteration lengths") {
    EmbeddingData G;
    G.group = FiniteSubgroup::cyclic(1);
    auto r = iterate(G);
    CHECK(r.m_lo == 0);
    CHECK(r.determined());

    EmbeddingData M2;
    M2.group = FiniteSubgroup::cyclic(2);
    CHECK(iterate(M2).m_hi == 1);
    M2.extra_points = {{GaussianRational(0), GaussianRational(1)}};
    M2.divisors = {{"extra:1", 1, -1}};
    CHECK(iterate(M2).m_hi == 1);

    auto mu3 = load_embedding(SL2COX_DATA_DIR "/mu3.json");
    auto r3 = iterate(mu3);
    CHECK(r3.m_lo == 1);
    CHECK(r3.determined());

    // Cl = Z/3 x free, two extra points split into three over the cover
    EmbeddingData E;
    E.group = FiniteSubgroup::cyclic(3);
    E.divisors = {{"x0", 3, -2}};
    E.extra_points = {{GaussianRational(1), GaussianRational(1)}};
    E.divisors.push_back({"extra:1", 1, -1});
    auto re = iterate(E);
    CHECK(re.steps.size() == 2);
    CHECK(re.steps[1].subgroup == FiniteSubgroup::cyclic(1));
    CHECK(re.m_lo == 2);

    CHECK_THROWS_AS(cyclic_iteration_exact(polyhedral(FiniteSubgroup::tetrahedral(), {})), NotCyclic);
}

TEST_CASE("cyclic sweep stays within the bound and reaches torsion-free in two steps") {
    for (long n = 1; n <= 20; ++n)
        for (long h = 1; h <= 6; ++h)
            for (long ul = -2 * h; ul <= 0; ++ul) {
                auto E = affine_embedding(n, h, Rational(ul, FiniteSubgroup::cyclic(n).u()));
                if (!validate(E).empty()) continue;
                auto r = iterate(E);
                CHECK(r.m_hi <= bound_for(E.group));
                CHECK(r.determined());
                auto& last = r.steps.back();
                REQUIRE(last.torsion);
                CHECK(r.steps.size() <= 2);
                if (r.steps.size() == 2) CHECK(last.torsion->is_trivial());
            }
}

TEST_CASE("polyhedral iteration") {
    auto I = polyhedral(FiniteSubgroup::icosahedral(), {{"xv", 1, -1}});
    auto ri = iterate(I);
    CHECK(ri.m_hi <= 1);
    CHECK(ri.steps.size() == 1);
    CHECK(iterate(polyhedral(FiniteSubgroup::icosahedral(), {})).m_hi == 0);

    auto Ohom = iterate(polyhedral(FiniteSubgroup::octahedral(), {}));
    CHECK(Ohom.determined());
    CHECK(Ohom.m_lo == 4);
    CHECK(Ohom.steps.size() == 5);
    CHECK(Ohom.steps[1].subgroup == FiniteSubgroup::tetrahedral());
    CHECK(Ohom.steps[2].subgroup == FiniteSubgroup::dihedral(2));
    CHECK(Ohom.steps[3].subgroup == FiniteSubgroup::cyclic(2));
    CHECK(iterate(polyhedral(FiniteSubgroup::tetrahedral(), {})).m_lo == 3);

    // a single divisor over x_v keeps the torsion Z/2
    auto O = polyhedral(FiniteSubgroup::octahedral(), {{"xv", 1, -1}});
    auto t = torsion_characters(O);
    REQUIRE(t.order() == 2);
    auto ro = iterate(O);
    CHECK(ro.bound == 4);
    CHECK(ro.m_lo == 2);
    CHECK(ro.m_hi == 4);
    CHECK(ro.steps[1].subgroup == FiniteSubgroup::tetrahedral());
    CHECK(!ro.steps[1].determined);
    CHECK(ro.chains.size() == 3);
}

TEST_CASE("polyhedral chains respect the bound and the pruning rules") {
    std::mt19937_64 rng(41);
    int nontrivial = 0;
    for (int it = 0; it < 300; ++it) {
        EmbeddingData E;
        long pick = long(rng() % 3);
        if (pick == 0) E.group = FiniteSubgroup::dihedral(2 + long(rng() % 9));
        if (pick == 1) E.group = FiniteSubgroup::tetrahedral();
        if (pick == 2) E.group = FiniteSubgroup::octahedral();
        for (auto& p : E.group.canonical_points())
            if (rng() % 2) E.divisors.push_back({"x" + p, 1 + long(rng() % 4), Rational(-1 - long(rng() % 6))});
        if (!validate(E).empty()) continue;
        auto r = iterate(E);
        CHECK(r.m_hi <= r.bound);
        CHECK(r.m_lo <= r.m_hi);
        if (r.chains.empty()) continue;
        ++nontrivial;
        for (auto& c : r.chains) {
            CHECK(c.m_hi <= r.bound);
            for (size_t i = 1; i < c.steps.size(); ++i) {
                CHECK(c.steps[i].subgroup.order() < c.steps[i - 1].subgroup.order());
                auto& prev = c.steps[i - 1];
                auto& cur = c.steps[i];
                if (!cur.torsion || cur.torsion->is_trivial()) continue;
                if (prev.torsion->is_cyclic()) CHECK(!(cur.torsion->is_cyclic() && cur.torsion->order() % 2 == 0));
                if (prev.subgroup.kind == GroupKind::BinaryDihedral) {
                    CHECK(cur.torsion->is_cyclic());
                    CHECK(prev.subgroup.n % long(cur.torsion->order()) == 0);
                }
            }
        }
        if (E.group.kind == GroupKind::BinaryDihedral && E.group.n % 2)
            for (auto& c : r.chains) CHECK(c.steps[1].subgroup.is_cyclic());
    }
    CHECK(nontrivial > 20);
}
