#include "sl2cox/iteration.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sl2cox/classgroup.hpp"
#include "sl2cox/errors.hpp"

namespace sl2cox {

namespace {

using Elem = std::vector<Integer>;

Elem add(const FinAbGroup& A, const Elem& x, const Elem& y) {
    Elem z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = mod_floor(x[i] + y[i], A.torsion[i]);
    return z;
}

Integer element_order(const FinAbGroup& A, const Elem& x) {
    Integer o = 1;
    for (size_t i = 0; i < x.size(); ++i) {
        Integer g = gcd(x[i], A.torsion[i]);
        Integer oi = A.torsion[i] / g;
        o = lcm(o, oi);
    }
    return o;
}

std::vector<Elem> all_elements(const FinAbGroup& A) {
    std::vector<Elem> out{Elem(A.torsion.size(), Integer(0))};
    for (size_t i = 0; i < A.torsion.size(); ++i) {
        std::vector<Elem> next;
        for (auto& e : out)
            for (Integer k = 0; k < A.torsion[i]; ++k) {
                Elem f = e;
                f[i] = k;
                next.push_back(f);
            }
        out = std::move(next);
    }
    return out;
}

long nbar_of(long k) { return k % 2 ? k : k / 2; }

}  // namespace

CharacterSubgroup CharacterSubgroup::trivial(const FinAbGroup& ambient) {
    if (ambient.free_rank) throw std::invalid_argument("character groups are finite");
    return {ambient, {Elem(ambient.torsion.size(), Integer(0))}};
}

CharacterSubgroup CharacterSubgroup::generated(const FinAbGroup& ambient, const std::vector<Elem>& gens) {
    CharacterSubgroup H = trivial(ambient);
    std::set<Elem> seen(H.elements.begin(), H.elements.end());
    std::vector<Elem> frontier = H.elements;
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (auto& x : frontier)
            for (auto& g : gens) {
                if (g.size() != ambient.torsion.size()) throw std::invalid_argument("character has the wrong length");
                Elem y = add(ambient, x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    H.elements.assign(seen.begin(), seen.end());
    return H;
}

CharacterSubgroup CharacterSubgroup::full(const FinAbGroup& ambient) {
    std::vector<Elem> gens;
    for (size_t i = 0; i < ambient.torsion.size(); ++i) {
        Elem e(ambient.torsion.size(), Integer(0));
        e[i] = 1;
        gens.push_back(e);
    }
    return generated(ambient, gens);
}

bool CharacterSubgroup::contains(const Elem& x) const { return std::binary_search(elements.begin(), elements.end(), x); }

bool CharacterSubgroup::is_cyclic() const {
    return std::any_of(elements.begin(), elements.end(),
                       [&](const Elem& x) { return element_order(ambient, x) == Integer(order()); });
}

FinAbGroup CharacterSubgroup::group() const {
    if (ambient.torsion.size() > 2) throw Unsupported("subgroups of groups with more than two invariant factors");
    // at most two invariant factors: the exponent and the cofactor
    Integer e = 1;
    for (auto& x : elements) e = lcm(e, element_order(ambient, x));
    FinAbGroup g;
    Integer rest = Integer(order()) / e;
    if (e > 1) g.torsion.push_back(e);
    if (rest > 1) g.torsion.insert(g.torsion.begin(), rest);
    return g;
}

std::vector<CharacterSubgroup> all_subgroups(const FinAbGroup& A) {
    if (A.free_rank) throw std::invalid_argument("character groups are finite");
    std::vector<CharacterSubgroup> out;
    if (A.torsion.size() <= 1) {
        long n = A.torsion.empty() ? 1 : A.torsion[0].get_si();
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) {
                std::vector<Elem> g;
                if (n > 1) g.push_back({Integer(n / d)});
                out.push_back(CharacterSubgroup::generated(A, g));
            }
        return out;
    }
    auto els = all_elements(A);
    if (els.size() > 10000) throw Unsupported("character group too large to enumerate subgroups");
    std::set<std::vector<Elem>> seen;
    for (size_t i = 0; i < els.size(); ++i)
        for (size_t j = i; j < els.size(); ++j) {
            auto H = CharacterSubgroup::generated(A, {els[i], els[j]});
            if (seen.insert(H.elements).second) out.push_back(H);
        }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

CharacterSubgroup torsion_characters(const EmbeddingData& E) {
    require_valid(E);
    auto R = class_group(E);
    FinAbGroup fh = E.group.character_group();
    std::vector<Elem> gens;
    for (size_t k = 0; k < R.cok.moduli.size(); ++k) {
        if (R.cok.moduli[k] == 0) continue;
        gens.push_back(restrict_to_Fhat(E, R, R.cok.lift.row(k)));
    }
    return CharacterSubgroup::generated(fh, gens);
}

Descent descend_subgroup(const FiniteSubgroup& F, const CharacterSubgroup& chars) {
    if (!(chars.ambient == F.character_group()))
        throw UnknownCharacterLattice("characters do not belong to the character group of " + F.name());
    if (chars.is_trivial()) return {F, F.name()};
    long ord = static_cast<long>(chars.order());
    auto unknown = [&] {
        return UnknownCharacterLattice("no listed subgroup of " + F.name() + " is cut out by characters of order " +
                                       std::to_string(ord));
    };
    switch (F.kind) {
        case GroupKind::Cyclic: {
            auto G = FiniteSubgroup::cyclic(F.n / ord);
            return {G, G.name()};
        }
        case GroupKind::BinaryOctahedral:
            if (ord == 2) return {FiniteSubgroup::tetrahedral(), "F_T"};
            throw unknown();
        case GroupKind::BinaryTetrahedral:
            if (ord == 3) return {FiniteSubgroup::dihedral(2), "F_D2"};
            throw unknown();
        case GroupKind::BinaryIcosahedral: throw unknown();
        case GroupKind::BinaryDihedral: {
            long n = F.n;
            if (ord == 4) return {FiniteSubgroup::cyclic(n), "mu_" + std::to_string(n)};
            if (ord != 2) throw unknown();
            if (n % 2) return {FiniteSubgroup::cyclic(2 * n), "mu_" + std::to_string(2 * n)};
            // characters (h -> (-1)^a, r -> (-1)^b) on h = diag(zeta, zeta^-1) and r
            const Elem& x = chars.elements.back();
            if (x == Elem{Integer(0), Integer(1)}) return {FiniteSubgroup::cyclic(2 * n), "mu_" + std::to_string(2 * n)};
            std::string copy = x == Elem{Integer(1), Integer(0)} ? "<h^2,r>" : "<h^2,hr>";
            if (n == 2) return {FiniteSubgroup::cyclic(4), "F_D1=mu_4 " + copy};
            auto G = FiniteSubgroup::dihedral(n / 2);
            return {G, G.name() + " " + copy};
        }
    }
    throw unknown();
}

long bound_for(const FiniteSubgroup& F) {
    switch (F.kind) {
        case GroupKind::Cyclic: return F.n <= 2 ? 1 : 2;
        case GroupKind::BinaryIcosahedral: return 1;
        case GroupKind::BinaryDihedral:
        case GroupKind::BinaryTetrahedral: return 3;
        case GroupKind::BinaryOctahedral: return 4;
    }
    return 4;
}

long d_tilde(long n, long d) {
    if (n < 1 || d < 1 || n % d) throw std::invalid_argument("d must divide n");
    return nbar_of(n) / nbar_of(n / d);
}

namespace {

IterationStep first_step(const EmbeddingData& E, const CharacterSubgroup& chars) {
    IterationStep s;
    s.subgroup = E.group;
    s.label = E.group.name();
    s.torsion = chars;
    s.evidence.push_back({"torsion_order", static_cast<long>(chars.order())});
    return s;
}

// restrictions on the torsion of the next step
bool admissible(const CharacterSubgroup& prev_torsion, const FiniteSubgroup& prev_group, const CharacterSubgroup& T) {
    if (T.is_trivial()) return true;
    if (prev_torsion.is_cyclic() && T.is_cyclic() && T.order() % 2 == 0) return false;
    if (prev_group.kind == GroupKind::BinaryDihedral)
        if (!T.is_cyclic() || prev_group.n % static_cast<long>(T.order()) != 0) return false;
    return true;
}

void walk(std::vector<IterationStep> prefix, const Descent& D, long i, std::vector<IterationChain>& out) {
    const IterationStep& prev = prefix.back();
    FinAbGroup fh = D.subgroup.character_group();
    IterationStep s;
    s.subgroup = D.subgroup;
    s.label = D.label;
    s.determined = false;
    if (D.subgroup.is_cyclic()) {
        // one more descent at most, then the class group of the total space is free
        IterationChain c;
        c.m_lo = c.m_hi = i + 1;
        long k = D.subgroup.n;
        for (auto& T : all_subgroups(fh)) {
            if (T.is_trivial() || !admissible(*prev.torsion, prev.subgroup, T)) continue;
            s.evidence.push_back({"admissible_torsion_order", static_cast<long>(T.order())});
            if (d_tilde(k, static_cast<long>(T.order())) > 1) c.m_hi = i + 2;
        }
        prefix.push_back(s);
        c.steps = std::move(prefix);
        out.push_back(std::move(c));
        return;
    }
    for (auto& T : all_subgroups(fh)) {
        if (!admissible(*prev.torsion, prev.subgroup, T)) continue;
        IterationStep t = s;
        t.torsion = T;
        auto next = prefix;
        next.push_back(t);
        if (T.is_trivial()) {
            IterationChain c;
            c.m_lo = c.m_hi = i + 1;
            c.steps = std::move(next);
            out.push_back(std::move(c));
        } else {
            walk(std::move(next), descend_subgroup(D.subgroup, T), i + 1, out);
        }
    }
}

}  // namespace

IterationReport cyclic_iteration_exact(const EmbeddingData& E) {
    if (!E.group.is_cyclic()) throw NotCyclic("exact iteration length needs a cyclic group, got " + E.group.name());
    require_valid(E);
    auto R = class_group(E);
    auto chars = torsion_characters(E);
    IterationReport rep;
    rep.bound = bound_for(E.group);
    rep.steps.push_back(first_step(E, chars));
    const FinAbGroup& cl = R.group();
    if (cl.is_trivial()) return rep;
    if (cl.is_torsion_free()) {
        rep.m_lo = rep.m_hi = 1;
        return rep;
    }
    long n = E.group.n;
    long d = static_cast<long>(chars.order());
    long dt = d_tilde(n, d);
    long np = counts(E).Nprime;
    long rank = (dt - 1) * np;
    auto& ev = rep.steps[0].evidence;
    ev.push_back({"d", d});
    ev.push_back({"d_tilde", dt});
    ev.push_back({"N_prime", np});
    ev.push_back({"rank_cl_hat", rank});
    auto D = descend_subgroup(E.group, chars);
    IterationStep s;
    s.subgroup = D.subgroup;
    s.label = D.label;
    s.torsion = CharacterSubgroup::trivial(D.subgroup.character_group());
    rep.steps.push_back(s);
    rep.m_lo = rep.m_hi = rank == 0 ? 1 : 2;
    return rep;
}

IterationReport iterate(const EmbeddingData& E) {
    require_valid(E);
    if (E.group.is_cyclic()) return cyclic_iteration_exact(E);
    auto R = class_group(E);
    auto chars = torsion_characters(E);
    IterationReport rep;
    rep.bound = bound_for(E.group);
    rep.steps.push_back(first_step(E, chars));
    if (chars.is_trivial()) {
        rep.m_lo = rep.m_hi = R.group().is_trivial() ? 0 : 1;
        return rep;
    }
    if (E.divisors.empty()) {
        // X = G/F: every class group is the full character group of the current subgroup
        Descent D = descend_subgroup(E.group, chars);
        long i = 1;
        while (true) {
            IterationStep s;
            s.subgroup = D.subgroup;
            s.label = D.label;
            auto fh = D.subgroup.character_group();
            s.torsion = CharacterSubgroup::full(fh);
            rep.steps.push_back(s);
            if (s.torsion->is_trivial()) break;
            D = descend_subgroup(D.subgroup, *s.torsion);
            ++i;
        }
        rep.m_lo = rep.m_hi = i;
        return rep;
    }
    Descent D = descend_subgroup(E.group, chars);
    IterationStep s;
    s.subgroup = D.subgroup;
    s.label = D.label;
    s.determined = false;
    rep.steps.push_back(s);
    walk({rep.steps[0]}, D, 1, rep.chains);
    rep.m_lo = rep.chains.front().m_lo;
    rep.m_hi = rep.chains.front().m_hi;
    for (auto& c : rep.chains) {
        rep.m_lo = std::min(rep.m_lo, c.m_lo);
        rep.m_hi = std::max(rep.m_hi, c.m_hi);
    }
    return rep;
}

}  // namespace sl2cox
