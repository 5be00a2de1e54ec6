#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2cox/embedding.hpp"
#include "sl2cox/hyperspace.hpp"

namespace sl2cox {

struct PlatonicVerdict {
    bool is_platonic = true;
    std::optional<std::vector<long>> witness;  // offending tuple, present iff false
    std::string reason;
};

// (5,3,2), (4,3,2), (3,3,2), (x,2,2), (x,y,1) after sorting decreasingly, rest ones
PlatonicVerdict is_platonic_tuple(std::vector<long> t);

enum class PlatonicMethod { Auto, Enumerate, Maxima };
// every cross tuple taking one entry per exponent vector is Platonic
PlatonicVerdict is_platonic_ring(const Ap0Input& ap0, PlatonicMethod method = PlatonicMethod::Auto);

PlatonicVerdict log_terminal_total_space(const EmbeddingData& E);

struct OrbitClass {
    enum class Kind { FixedPoint, TypeAl, Other } kind = Kind::Other;
    std::vector<long> tuple;   // (h_1, ..., h_l) for TypeAl
    std::vector<std::string> points;
};
std::string to_string(OrbitClass::Kind k);

OrbitClass classify_hypercone_orbit(const ColoredHypercone& c, const EmbeddingData& E);
PlatonicVerdict log_terminal_X(const EmbeddingData& E, const std::vector<ColoredHypercone>& hypercones);

bool special_fiber_normal(const EmbeddingData& E);

struct ConstantFunctionsVerdict {
    bool constant_only = false;
    Rational certificate;             // l_0/h_0 + l_inf/h_inf + l_1/h_1 + 1
    std::vector<std::string> points;  // the three exceptional points used
};
// throws HypothesesNotMet unless F is cyclic, the special fiber is normal and there are
// at least three exceptional points
ConstantFunctionsVerdict constant_functions_only(const EmbeddingData& E);

}  // namespace sl2cox
