#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl2cox/classgroup.hpp"
#include "sl2cox/poly.hpp"

namespace sl2cox {

struct GradedVariable {
    std::string name;
    ClassVector degree;                // generator combination in the class group
    std::vector<Integer> degree_image; // adapted coordinates
    long b_weight = 0;                 // T-weight as a multiple of omega
    std::string module_tag;            // V_m(<point>) for colors, "trivial" for invariant sections
};

struct RelationModule {
    std::string kind;   // M | N | U
    std::string label;  // M_inf,0  N_2  U_v
    long iso_type = 0;  // module is V_m
    SparsePoly highest; // highest weight B-semi-invariant (the emitted relation)
    std::vector<std::pair<long, SparsePoly>> weight_table_rows;
    std::vector<std::vector<Integer>> alternatives;  // extra exponent vectors when ambiguous
};

struct GradedPresentation {
    std::vector<GradedVariable> variables;
    std::vector<SparsePoly> relations;
    std::vector<RelationModule> modules;  // parallel to relations when present
    FinAbGroup grading_group;
    std::vector<Integer> degree_moduli;            // 0 for free coordinates
    std::map<std::string, SparsePoly> expansions;  // SL2 coordinates of each variable, cyclic only
    std::map<std::string, SparsePoly> substitutions;  // eliminated variables
    std::vector<std::string> log;
    std::vector<std::string> warnings;

    bool has_variable(const std::string& name) const;
    const GradedVariable& variable(const std::string& name) const;
    std::string str() const;
};

// generators a, b, s_<p>, r_<...> and one relation beta a - alpha b - s^mult prod r^h per exceptional point
GradedPresentation cox_u_presentation(const EmbeddingData& E);

// removes each target through the first relation linear in it with constant coefficient
GradedPresentation eliminate(const GradedPresentation& P, const std::vector<std::string>& targets = {"a", "b"});

enum class FiberShape { AffineSpace, ReducedReducible, NonReduced, Other };
std::string to_string(FiberShape s);
FiberShape classify_fiber(const GradedPresentation& P);

// r-variables set to zero; relations replaced by a reduced echelon basis of their span
GradedPresentation special_fiber_u(const GradedPresentation& P, const EmbeddingData& E);

GradedPresentation full_cox_presentation_cyclic(const EmbeddingData& E);

// descriptions of every relation that fails class or weight homogeneity
std::vector<std::string> check_homogeneous(const GradedPresentation& P);
// substitutes the SL2 expansions of the generators; lists relations that do not vanish
std::vector<std::string> verify_by_substitution(const GradedPresentation& P);

std::vector<long> clebsch_gordan(long n, long m);

struct BatyrevHaddadParams {
    Integer p, q, k, a, b;
    Rational height;
    Integer cox_exponent;        // -(h + 2l)
    bool degree_map_ok = false;  // Cl(X) -> Z given by the degrees of y, t_i is well defined
};
BatyrevHaddadParams batyrev_haddad(const EmbeddingData& E);

}  // namespace sl2cox
