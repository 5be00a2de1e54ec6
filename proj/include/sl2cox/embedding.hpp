#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2cox/exactmath.hpp"
#include "sl2cox/group.hpp"
#include "sl2cox/hyperspace.hpp"

namespace sl2cox {

struct DivisorSpec {
    std::string over;  // x0 | xinf | xv | xe | xf | extra:<k> (1-based) | dominating
    long h = 0;
    Rational l;
};

// where the distinguished point x_d of a cyclic group sits
struct SectionChoice {
    enum class Mode { Default, Generic, Extra } mode = Mode::Default;
    size_t extra = 0;  // 1-based, Mode::Extra only
};

struct EmbeddingData {
    FiniteSubgroup group;
    std::vector<std::pair<GaussianRational, GaussianRational>> extra_points;
    std::vector<DivisorSpec> divisors;
    SectionChoice section;
};

struct Violation {
    std::string code;
    std::string message;
};

// sorted by code, then message
std::vector<Violation> validate(const EmbeddingData& E);
void require_valid(const EmbeddingData& E);

// an exceptional point of pi : X --> P^1 with its data
struct ExceptionalPoint {
    std::string name;  // 0, inf, v, e, f, or 1, 2, ... for extra points
    bool canonical = false;
    BasePoint point;
    GaussianRational alpha, beta;  // coordinates used for A and for the relations
    long multiplicity = 1;         // of the color in pi^*(x)
    Rational color_l;              // l-coordinate of the color
    std::vector<size_t> divisors;  // indices into EmbeddingData::divisors
};

// canonical points first, then extra points in input order
std::vector<ExceptionalPoint> exceptional_points(const EmbeddingData& E);

// 1-based extra index of the distinguished point, 0 when it is a separate generic color;
// always 0 for polyhedral groups
size_t distinguished_extra(const EmbeddingData& E);
bool has_separate_distinguished(const EmbeddingData& E);
SectionConvention section_convention(const EmbeddingData& E);
std::optional<size_t> dominating_divisor(const EmbeddingData& E);

// hyperspace vector of divisor i
HyperspaceVector divisor_vector(const EmbeddingData& E, size_t i);

struct Ap0Input {
    std::vector<std::pair<GaussianRational, GaussianRational>> A;  // columns (alpha, beta)
    std::vector<std::vector<long>> exponent_vectors;
    long m = 0;
};
Ap0Input derive_ap0_input(const EmbeddingData& E);

struct Counts {
    long N = 0, Nprime = 0;
};
Counts counts(const EmbeddingData& E);

// single divisor (h, l): over x0 when n >= 3, over the extra point [0:1] otherwise
EmbeddingData affine_embedding(long n, long h, const Rational& l);

}  // namespace sl2cox
