#include "sl2cox/classgroup.hpp"

#include <algorithm>

namespace sl2cox {

namespace {

Integer as_integer(const Rational& r) {
    if (!r.is_integer()) throw InvalidEmbedding("non-integral entry " + r.str() + " in the l-row");
    return r.num();
}

}  // namespace

std::vector<DivisorGenerator> divisor_generators(const EmbeddingData& E) {
    std::vector<DivisorGenerator> g;
    if (has_separate_distinguished(E)) g.push_back({"D", GeneratorKind::Distinguished});
    auto pts = exceptional_points(E);
    for (size_t p = 0; p < pts.size(); ++p) {
        g.push_back({"E_" + pts[p].name, GeneratorKind::Color, long(p)});
        for (size_t j = 0; j < pts[p].divisors.size(); ++j) {
            std::string label = "X_" + pts[p].name;
            if (pts[p].divisors.size() > 1) label += "_" + std::to_string(j + 1);
            g.push_back({label, GeneratorKind::Invariant, long(p), long(pts[p].divisors[j])});
        }
    }
    if (auto d = dominating_divisor(E)) g.push_back({"X_dom", GeneratorKind::Dominating, -1, long(*d)});
    return g;
}

Presentation presentation_matrix(const EmbeddingData& E) {
    require_valid(E);
    Presentation P;
    P.generators = divisor_generators(E);
    auto pts = exceptional_points(E);
    const size_t k = P.generators.size();

    auto fiber = [&](long p) {
        std::vector<Integer> r(k);
        for (size_t j = 0; j < k; ++j) {
            const auto& g = P.generators[j];
            if (g.point != p) continue;
            if (g.kind == GeneratorKind::Color) r[j] = pts[p].multiplicity;
            else if (g.kind == GeneratorKind::Invariant) r[j] = E.divisors[g.divisor].h;
        }
        return r;
    };
    std::vector<Integer> base(k);
    long first = 0;
    if (!P.generators.empty() && P.generators[0].kind == GeneratorKind::Distinguished) {
        base[0] = 1;
        first = -1;
    } else if (!pts.empty()) {
        base = fiber(0);
    }
    std::vector<std::vector<Integer>> rows;
    for (long p = 0; p < long(pts.size()); ++p) {
        if (p == first) continue;
        auto r = fiber(p);
        for (size_t j = 0; j < k; ++j) r[j] -= base[j];
        rows.push_back(r);
    }

    const long u = E.group.u();
    std::vector<Integer> lrow(k);
    for (size_t j = 0; j < k; ++j) {
        const auto& g = P.generators[j];
        Rational l;
        switch (g.kind) {
            case GeneratorKind::Distinguished: l = 1; break;
            case GeneratorKind::Color: l = pts[g.point].color_l; break;
            default: l = E.divisors[g.divisor].l; break;
        }
        lrow[j] = as_integer(l * Rational(u));
    }
    if (k > 0) rows.push_back(lrow);
    P.matrix = IntMatrix::from_rows(rows, k);
    return P;
}

size_t ClassGroupResult::index(const std::string& label) const {
    for (size_t j = 0; j < generators.size(); ++j)
        if (generators[j].label == label) return j;
    throw std::out_of_range("no generator " + label);
}

ClassVector ClassGroupResult::unit(const std::string& label) const {
    ClassVector v(generators.size());
    v[index(label)] = 1;
    return v;
}

std::vector<size_t> ClassGroupResult::invariant_indices() const {
    std::vector<size_t> idx;
    for (size_t j = 0; j < generators.size(); ++j)
        if (generators[j].kind == GeneratorKind::Invariant || generators[j].kind == GeneratorKind::Dominating)
            idx.push_back(j);
    return idx;
}

ClassGroupResult class_group(const EmbeddingData& E) {
    Presentation P = presentation_matrix(E);
    ClassGroupResult R;
    R.generators = P.generators;
    R.presentation = P.matrix;
    R.cok = cokernel(P.matrix, P.generators.size());
    return R;
}

std::vector<std::vector<Integer>> express_in_invariant_divisors(const ClassGroupResult& R, const ClassVector& target,
                                                                const Integer& bound) {
    auto idx = R.invariant_indices();
    IntMatrix A(R.cok.dim(), idx.size());
    for (size_t c = 0; c < idx.size(); ++c)
        for (size_t i = 0; i < R.cok.dim(); ++i) A(i, c) = R.cok.projection(i, idx[c]);
    try {
        return solve_nonneg(A, R.image(target), bound, R.cok.moduli);
    } catch (const EmptySolutionSet&) {
        throw EmptySolutionSet("class " + format_class(R, target) + " is not a non-negative combination of invariant divisors");
    }
}

std::vector<Integer> express_unique(const ClassGroupResult& R, const ClassVector& target, const Integer& bound) {
    auto sols = express_in_invariant_divisors(R, target, bound);
    if (sols.size() > 1)
        throw AmbiguousSolution(std::to_string(sols.size()) + " exponent vectors for " + format_class(R, target));
    return sols.front();
}

std::optional<std::vector<Integer>> express_integrally(const ClassGroupResult& R, const ClassVector& target) {
    const FinAbGroup& G = R.group();
    auto inv = R.invariant_indices();
    if (!G.is_torsion_free() || inv.size() != G.free_rank) return std::nullopt;
    size_t k = inv.size();
    // Gauss-Jordan on [B | y] over Q
    std::vector<std::vector<Rational>> A(k, std::vector<Rational>(k + 1));
    auto y = R.image(target);
    for (size_t j = 0; j < k; ++j) {
        auto c = R.generator_image(inv[j]);
        for (size_t i = 0; i < k; ++i) A[i][j] = Rational(c[i]);
    }
    for (size_t i = 0; i < k; ++i) A[i][k] = Rational(y[i]);
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        while (piv < k && A[piv][col].is_zero()) ++piv;
        if (piv == k) return std::nullopt;
        std::swap(A[piv], A[col]);
        Rational d = A[col][col];
        for (auto& x : A[col]) x /= d;
        for (size_t i = 0; i < k; ++i) {
            if (i == col || A[i][col].is_zero()) continue;
            Rational f = A[i][col];
            for (size_t t = col; t <= k; ++t) A[i][t] -= f * A[col][t];
        }
    }
    std::vector<Integer> out;
    for (size_t i = 0; i < k; ++i) {
        if (!A[i][k].is_integer()) return std::nullopt;
        out.push_back(A[i][k].num());
    }
    return out;
}

std::vector<Integer> generator_character(const EmbeddingData& E, const DivisorGenerator& g) {
    const FiniteSubgroup& F = E.group;
    std::vector<Integer> zero(F.character_group().torsion.size());
    if (g.kind == GeneratorKind::Invariant || g.kind == GeneratorKind::Dominating) return zero;
    std::string p = "";
    if (g.kind == GeneratorKind::Color) {
        auto pts = exceptional_points(E);
        if (pts[g.point].canonical) p = pts[g.point].name;
    }
    switch (F.kind) {
        case GroupKind::Cyclic: {
            if (F.n == 1) return zero;
            if (p == "0") return {Integer(1)};
            if (p == "inf") return {Integer(F.n - 1)};
            return {Integer(F.n >= 3 ? F.nbar() % F.n : 1)};
        }
        case GroupKind::BinaryTetrahedral:
            if (p == "v") return {Integer(1)};
            if (p == "f") return {Integer(2)};
            return {Integer(0)};
        case GroupKind::BinaryOctahedral:
            if (p == "e" || p == "f") return {Integer(1)};
            return {Integer(0)};
        case GroupKind::BinaryIcosahedral: return zero;
        case GroupKind::BinaryDihedral: {
            // character h -> (-1)^a, r -> i^b
            long a = 0, b = 0;
            if (p == "v") a = 1, b = F.n % 4;
            else if (p == "e") a = 1, b = (F.n + 2) % 4;
            else if (p == "f") b = 2;
            else b = (2 * F.n) % 4;
            if (F.n % 2) return {Integer(b)};
            return {Integer(a), Integer((b / 2) % 2)};
        }
    }
    return zero;
}

std::vector<Integer> restrict_to_Fhat(const EmbeddingData& E, const ClassGroupResult& R, const ClassVector& cls) {
    FinAbGroup fh = E.group.character_group();
    std::vector<Integer> out(fh.torsion.size());
    for (size_t j = 0; j < R.generators.size(); ++j) {
        if (cls[j] == 0) continue;
        auto c = generator_character(E, R.generators[j]);
        for (size_t t = 0; t < out.size(); ++t) out[t] += cls[j] * c[t];
    }
    for (size_t t = 0; t < out.size(); ++t) out[t] = mod_floor(out[t], fh.torsion[t]);
    return out;
}

std::string format_class(const ClassGroupResult& R, const ClassVector& x) {
    std::string s;
    for (size_t j = 0; j < x.size(); ++j) {
        if (x[j] == 0) continue;
        Integer c = x[j];
        if (s.empty()) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        c = abs(c);
        if (c != 1) s += c.get_str();
        s += "[" + R.generators[j].label + "]";
    }
    return s.empty() ? "0" : s;
}

}  // namespace sl2cox
