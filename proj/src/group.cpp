#include "sl2cox/group.hpp"

namespace sl2cox {

FiniteSubgroup FiniteSubgroup::cyclic(long n) {
    if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
    return {GroupKind::Cyclic, n};
}

FiniteSubgroup FiniteSubgroup::dihedral(long n) {
    if (n < 2) throw std::invalid_argument("binary dihedral group needs n > 1");
    return {GroupKind::BinaryDihedral, n};
}

long FiniteSubgroup::nbar() const {
    if (!is_cyclic()) return 1;
    return n % 2 ? n : n / 2;
}

long FiniteSubgroup::u() const { return is_cyclic() && n % 2 == 0 ? 2 : 1; }

long FiniteSubgroup::order() const {
    switch (kind) {
        case GroupKind::Cyclic: return n;
        case GroupKind::BinaryDihedral: return 4 * n;
        case GroupKind::BinaryTetrahedral: return 24;
        case GroupKind::BinaryOctahedral: return 48;
        case GroupKind::BinaryIcosahedral: return 120;
    }
    return 0;
}

FinAbGroup FiniteSubgroup::character_group() const {
    FinAbGroup g;
    switch (kind) {
        case GroupKind::Cyclic:
            if (n > 1) g.torsion = {Integer(n)};
            break;
        case GroupKind::BinaryDihedral:
            if (n % 2) g.torsion = {Integer(4)};
            else g.torsion = {Integer(2), Integer(2)};
            break;
        case GroupKind::BinaryTetrahedral: g.torsion = {Integer(3)}; break;
        case GroupKind::BinaryOctahedral: g.torsion = {Integer(2)}; break;
        case GroupKind::BinaryIcosahedral: break;
    }
    return g;
}

std::vector<std::string> FiniteSubgroup::canonical_points() const {
    if (is_cyclic()) {
        if (n >= 3) return {"0", "inf"};
        return {};
    }
    return {"v", "e", "f"};
}

std::vector<long> FiniteSubgroup::canonical_multiplicities() const {
    switch (kind) {
        case GroupKind::Cyclic:
            if (n >= 3) return {nbar(), nbar()};
            return {};
        case GroupKind::BinaryDihedral: return {2, 2, n};
        case GroupKind::BinaryTetrahedral: return {3, 2, 3};
        case GroupKind::BinaryOctahedral: return {3, 2, 4};
        case GroupKind::BinaryIcosahedral: return {5, 2, 3};
    }
    return {};
}

std::string FiniteSubgroup::name() const {
    switch (kind) {
        case GroupKind::Cyclic: return "mu_" + std::to_string(n);
        case GroupKind::BinaryDihedral: return "F_D" + std::to_string(n);
        case GroupKind::BinaryTetrahedral: return "F_T";
        case GroupKind::BinaryOctahedral: return "F_O";
        case GroupKind::BinaryIcosahedral: return "F_I";
    }
    return "?";
}

}  // namespace sl2cox
