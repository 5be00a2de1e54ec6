#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2cox/embedding.hpp"
#include "sl2cox/exactmath.hpp"

namespace sl2cox {

// subgroup of the character group of F, listed element by element
struct CharacterSubgroup {
    FinAbGroup ambient;
    std::vector<std::vector<Integer>> elements;  // sorted, contains 0

    static CharacterSubgroup trivial(const FinAbGroup& ambient);
    static CharacterSubgroup generated(const FinAbGroup& ambient, const std::vector<std::vector<Integer>>& gens);
    static CharacterSubgroup full(const FinAbGroup& ambient);

    size_t order() const { return elements.size(); }
    bool is_trivial() const { return elements.size() <= 1; }
    bool is_cyclic() const;
    FinAbGroup group() const;  // abstract isomorphism type
    bool contains(const std::vector<Integer>& x) const;
    friend bool operator==(const CharacterSubgroup& a, const CharacterSubgroup& b) {
        return a.ambient == b.ambient && a.elements == b.elements;
    }
};

// every subgroup of a finite abelian group of order at most 10^4
std::vector<CharacterSubgroup> all_subgroups(const FinAbGroup& ambient);

CharacterSubgroup torsion_characters(const EmbeddingData& E);

struct Descent {
    FiniteSubgroup subgroup;
    std::string label;  // distinguishes the two dihedral copies
};
// intersection of the kernels of the characters
Descent descend_subgroup(const FiniteSubgroup& F, const CharacterSubgroup& chars);

struct IterationStep {
    FiniteSubgroup subgroup;
    std::string label;
    std::optional<CharacterSubgroup> torsion;  // nullopt when not determined by E
    bool determined = true;
    std::vector<std::pair<std::string, long>> evidence;
};

struct IterationChain {
    std::vector<IterationStep> steps;
    long m_lo = 0, m_hi = 0;
};

struct IterationReport {
    std::vector<IterationStep> steps;  // the part fixed by E
    std::vector<IterationChain> chains; // admissible continuations, polyhedral only
    long m_lo = 0, m_hi = 0;
    long bound = 0;
    bool determined() const { return m_lo == m_hi; }
    bool master_factorial = true;
};

long bound_for(const FiniteSubgroup& F);

// nbar / overline(n/d)
long d_tilde(long n, long d);

IterationReport cyclic_iteration_exact(const EmbeddingData& E);
IterationReport iterate(const EmbeddingData& E);

}  // namespace sl2cox
