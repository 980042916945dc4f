#pragma once

#include <map>
#include <optional>

#include "lefint/lefschetz.hpp"

namespace lefint {

struct WeightedSupport {
    long long coeff;
    OpenSet support;
};

/// Integer-valued function constant on each open cell of its host, optionally
/// carrying a presentation as a weighted sum of indicator functions.
struct ConstructibleFunction {
    ComplexPtr host;
    std::vector<long long> values;  // per simplex id; unlisted cells are 0
    std::optional<std::vector<WeightedSupport>> presentation;

    long long value(int cell_id) const { return values[cell_id]; }
};

/// Sum the presentation into per-cell values; the presentation is retained.
ConstructibleFunction normalize(const std::vector<WeightedSupport>& presentation);

ConstructibleFunction constant_function(const ComplexPtr& host, long long value);
ConstructibleFunction indicator(const OpenSet& support);

/// Integral against the Lefschetz measure: sum of coeff * Lambda(f, U_j) over
/// the presentation. Requires every support invariant (depth 0). Falls back
/// to the validated level-set formula when no presentation is attached.
Rational integrate(const ConstructibleFunction& h, const LefschetzMeasure& m);

/// Partition of the host cells by value; the zero level is omitted.
std::map<long long, OpenSet> level_sets(const ConstructibleFunction& h);

/// Sum of k * Lambda(f, {h=k}) over nonzero levels. Agrees with integrate for
/// every valid presentation (well-definedness of the integral).
Rational integrate_via_levels(const ConstructibleFunction& h, const LefschetzMeasure& m);

/// Euler-calculus integral: integration against the identity measure.
long long euler_integrate(const ConstructibleFunction& h);

struct FubiniResult {
    Rational lhs;  // integral over the product, via the tensor endomorphism
    Rational rhs;  // base integral (d chi) of the fiberwise Lefschetz integrals
};

/// Fubini on a trivial bundle B x F with the fiberwise map id x l2. h must be
/// constant on each open-cell pair of the product (checked against the
/// staircase cell structure).
FubiniResult fubini_trivial_bundle(const ProductRecord& rec, const LefschetzMeasure& fiber_measure,
                                   const ConstructibleFunction& h);

}  // namespace lefint
