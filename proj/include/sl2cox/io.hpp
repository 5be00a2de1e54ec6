#pragma once

#include <string>

#include "json.hpp"
#include "sl2cox/coxring.hpp"
#include "sl2cox/embedding.hpp"
#include "sl2cox/hyperspace.hpp"

namespace sl2cox {

using json = nlohmann::ordered_json;

// rationals as "p/q" strings or integers; Gaussian numbers additionally as {"re","im"}
Rational rational_from_json(const json& j);
GaussianRational gaussian_from_json(const json& j);
json to_json(const Rational& r);
json to_json(const GaussianRational& g);

EmbeddingData embedding_from_json(const json& j);
json embedding_to_json(const EmbeddingData& E);
EmbeddingData load_embedding(const std::string& path);

json group_to_json(const FiniteSubgroup& F);
FiniteSubgroup group_from_json(const json& j);

json to_json(const FinAbGroup& g);
FinAbGroup finab_from_json(const json& j);
json to_json(const IntMatrix& m);
IntMatrix intmatrix_from_json(const json& j);

// "x0", "xinf", "xv", "xe", "xf", "xd", "generic" or {"alpha", "beta"}
json to_json(const BasePoint& p);
BasePoint basepoint_from_json(const json& j);

// [{"generators": [{"point", "h", "l"}], "eps_excluded": [point]}]
std::vector<ColoredHypercone> hypercones_from_json(const json& j);
std::vector<ColoredHypercone> load_hypercones(const std::string& path);
json to_json(const ColoredHypercone& c);

// [{"coefficient": {"re", "im"}, "monomial": {"var": exponent}}]
json to_json(const SparsePoly& p);
SparsePoly poly_from_json(const json& j);

json to_json(const GradedPresentation& P);
// variables, relations, grading group, substitutions and warnings
GradedPresentation presentation_from_json(const json& j);

}  // namespace sl2cox
