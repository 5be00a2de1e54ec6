#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2cox/embedding.hpp"
#include "sl2cox/exactmath.hpp"

namespace sl2cox {

enum class GeneratorKind { Distinguished, Color, Invariant, Dominating };

struct DivisorGenerator {
    std::string label;  // D, E_<p>, X_<p> or X_<p>_<j>, X_dom
    GeneratorKind kind;
    long point = -1;     // index into exceptional_points(E), -1 for D and X_dom
    long divisor = -1;   // index into EmbeddingData::divisors for invariant ones
};

// generator order: D (when separate), then per exceptional point its color followed by
// the invariant divisors over it, then X_dom
std::vector<DivisorGenerator> divisor_generators(const EmbeddingData& E);

struct Presentation {
    std::vector<DivisorGenerator> generators;
    IntMatrix matrix;  // rows are relations, columns generators
};

// rows [pi^*(x)] - [pi^*(base)] for every fiber other than the base one, then u times the l-row;
// base is D when it is a separate generator, else the first exceptional point
Presentation presentation_matrix(const EmbeddingData& E);

using ClassVector = std::vector<Integer>;  // integer combination of generators

struct ClassGroupResult {
    std::vector<DivisorGenerator> generators;
    IntMatrix presentation;
    Cokernel cok;

    const FinAbGroup& group() const { return cok.group; }
    size_t index(const std::string& label) const;
    ClassVector unit(const std::string& label) const;
    std::vector<Integer> image(const ClassVector& x) const { return cok.image(x); }
    std::vector<Integer> generator_image(size_t j) const { return cok.projection.col(j); }
    bool equal(const ClassVector& a, const ClassVector& b) const { return image(a) == image(b); }
    std::vector<size_t> invariant_indices() const;
};

ClassGroupResult class_group(const EmbeddingData& E);

// all non-negative vectors m over invariant_indices() with sum m_j [X_j] = target in Cl(X)
std::vector<std::vector<Integer>> express_in_invariant_divisors(const ClassGroupResult& R, const ClassVector& target,
                                                                const Integer& bound = 64);
// as above but requires a single solution; throws AmbiguousSolution otherwise
std::vector<Integer> express_unique(const ClassGroupResult& R, const ClassVector& target,
                                    const Integer& bound = 64);

// integer coordinates of target in the invariant divisors when Cl(X) is free on them
std::optional<std::vector<Integer>> express_integrally(const ClassGroupResult& R, const ClassVector& target);

// value of a generator combination on the character group of F, in the coordinates of
// F.character_group(); invariant divisors restrict to 0
std::vector<Integer> restrict_to_Fhat(const EmbeddingData& E, const ClassGroupResult& R, const ClassVector& cls);
std::vector<Integer> generator_character(const EmbeddingData& E, const DivisorGenerator& g);

std::string format_class(const ClassGroupResult& R, const ClassVector& x);

}  // namespace sl2cox
