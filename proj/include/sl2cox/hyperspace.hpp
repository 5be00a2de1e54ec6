#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sl2cox/exactmath.hpp"
#include "sl2cox/group.hpp"

namespace sl2cox {

enum class PointTag { Coord, X0, XINF, XV, XE, XF, XD, Generic };

// a point of P^1 = B\G/F, either by homogeneous coordinates or by a symbolic tag
struct BasePoint {
    PointTag tag = PointTag::Generic;
    GaussianRational alpha, beta;

    static BasePoint of(PointTag t);
    static BasePoint at(const GaussianRational& a, const GaussianRational& b);
    static BasePoint generic() { return of(PointTag::Generic); }

    bool is_coord() const { return tag == PointTag::Coord; }
    std::string str() const;

    friend bool operator==(const BasePoint& a, const BasePoint& b);
    friend bool operator!=(const BasePoint& a, const BasePoint& b) { return !(a == b); }
    friend bool operator<(const BasePoint& a, const BasePoint& b);
};

struct HyperspaceVector {
    BasePoint base;
    Rational h, l;

    bool in_E() const { return h.is_zero(); }
    std::string str() const;
};

struct SectionConvention {
    BasePoint distinguished = BasePoint::of(PointTag::XD);
};

// V_x = { h >= 0, l <= c_x h }; the E-part is l <= 0
Rational valuation_max_slope(const FiniteSubgroup& F, const BasePoint& x, const SectionConvention& sc = {});
bool valuation_cone_contains(const FiniteSubgroup& F, const HyperspaceVector& v,
                             const SectionConvention& sc = {});

HyperspaceVector color_vector(const FiniteSubgroup& F, const BasePoint& p, const SectionConvention& sc = {});

// cone in the rank one space E: which of the two open directions it contains
struct ECone {
    bool neg = false, pos = false;
    bool is_zero() const { return !neg && !pos; }
    bool is_line() const { return neg && pos; }
    bool contains(const Rational& l) const { return l.is_zero() || (l.sign() < 0 ? neg : pos); }
    friend bool operator==(const ECone& a, const ECone& b) { return a.neg == b.neg && a.pos == b.pos; }
};

// rational interval with optional infinite ends
struct Interval {
    std::optional<Rational> lo, hi;  // nullopt = unbounded
    bool contains(const Rational& v) const { return (!lo || *lo <= v) && (!hi || v <= *hi); }
    std::string str() const;
    friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// cone in the half-plane E_x, as the slopes l/h of its rays; vertical rays are infinite slopes
struct PointCone {
    bool flat = true;  // no ray with h > 0, the cone is K itself
    Interval slopes;
    bool has_interior() const;
    friend bool operator==(const PointCone& a, const PointCone& b) {
        return a.flat == b.flat && (a.flat || a.slopes == b.slopes);
    }
};

enum class HyperconeKind { TypeA, TypeB };

struct ColoredHypercone {
    std::vector<HyperspaceVector> generators;
    std::vector<BasePoint> eps_excluded;  // epsilon_x is a generator at every other point
    HyperconeKind kind = HyperconeKind::TypeA;
    std::map<BasePoint, PointCone> per_point;  // points carrying a generator or lacking epsilon
    PointCone generic_cone;
    ECone K;
    std::optional<Interval> P;  // empty when some P_x is empty
    std::optional<Interval> B;  // TypeB only
    bool strictly_convex = false;

    const PointCone& cone_at(const BasePoint& x) const;
    std::vector<BasePoint> special_points() const;
};

ColoredHypercone hypercone_from_generators(const std::vector<HyperspaceVector>& gens,
                                           const std::vector<BasePoint>& eps_excluded = {});

bool is_supported(const ColoredHypercone& c, const FiniteSubgroup& F, const SectionConvention& sc = {});
bool interiors_disjoint(const ColoredHypercone& c1, const ColoredHypercone& c2, const FiniteSubgroup& F,
                        const SectionConvention& sc = {});

}  // namespace sl2cox
