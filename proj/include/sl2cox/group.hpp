#pragma once

#include <string>
#include <vector>

#include "sl2cox/exactmath.hpp"

namespace sl2cox {

enum class GroupKind { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

// finite subgroup of SL2 up to conjugacy
struct FiniteSubgroup {
    GroupKind kind = GroupKind::Cyclic;
    long n = 1;

    static FiniteSubgroup cyclic(long n);
    static FiniteSubgroup dihedral(long n);
    static FiniteSubgroup tetrahedral() { return {GroupKind::BinaryTetrahedral, 0}; }
    static FiniteSubgroup octahedral() { return {GroupKind::BinaryOctahedral, 0}; }
    static FiniteSubgroup icosahedral() { return {GroupKind::BinaryIcosahedral, 0}; }

    bool is_cyclic() const { return kind == GroupKind::Cyclic; }
    bool is_polyhedral() const { return !is_cyclic(); }
    long nbar() const;
    long u() const;
    long order() const;
    FinAbGroup character_group() const;

    // "0","inf" for cyclic n >= 3; "v","e","f" for polyhedral; none otherwise
    std::vector<std::string> canonical_points() const;
    std::vector<long> canonical_multiplicities() const;

    std::string name() const;
    friend bool operator==(const FiniteSubgroup& a, const FiniteSubgroup& b) {
        return a.kind == b.kind && a.n == b.n;
    }
};

}  // namespace sl2cox
