#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sl2cox {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define SL2COX_ERROR(Name)                                              \
    struct Name : Error {                                               \
        explicit Name(const std::string& w) : Error(#Name, w) {}        \
    }

SL2COX_ERROR(ParseError);
SL2COX_ERROR(EmptySolutionSet);
SL2COX_ERROR(WrongKind);
SL2COX_ERROR(NotAffineShape);
SL2COX_ERROR(HeightOutOfRange);
SL2COX_ERROR(HypothesesNotMet);
SL2COX_ERROR(TorsionAfterAugmentation);
SL2COX_ERROR(AmbiguousSolution);
SL2COX_ERROR(Unsupported);
SL2COX_ERROR(MalformedGenerators);
SL2COX_ERROR(NotLinearInTarget);
SL2COX_ERROR(NotCyclic);
SL2COX_ERROR(InvalidEmbedding);
SL2COX_ERROR(UnknownCharacterLattice);

#undef SL2COX_ERROR

// validation failure carrying every detected code
struct InvalidInput : Error {
    explicit InvalidInput(std::vector<std::string> codes, const std::string& w)
        : Error("InvalidInput", w), codes(std::move(codes)) {}
    std::vector<std::string> codes;
};

}  // namespace sl2cox
