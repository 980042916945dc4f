#pragma once

#include <optional>
#include <string>

#include "lefint/integral.hpp"

namespace lefint {

/// A sensor field: a floor complex, a symmetry of it, and one target support
/// per target. Every support must be invariant under the symmetry.
struct Scenario {
    ComplexPtr host;
    SelfMap symmetry;  // depth 0
    std::vector<OpenSet> supports;
    std::optional<long long> ground_truth;  // carried by the generator, for testing
    std::string kind;
    unsigned seed = 0;
};

/// h(x) = number of supports containing x, with the presentation attached.
ConstructibleFunction build_counting_function(const Scenario& s);

/// The common value N = Lambda(f, U_alpha)_X if all supports share one
/// nonzero value; nothing otherwise (the symmetry cannot count this scenario).
std::optional<Rational> common_lambda(const Scenario& s);

/// |I| = (1/N) * integral of the counting function. Throws PreconditionError
/// when no common nonzero N exists.
long long count_targets(const Scenario& s);

struct ScenarioParams {
    std::string kind = "identity";  // "identity" | "mirror" | "product"
    int targets = 3;
    int size = 8;  // scale knob for the identity kind's floor complex
};

/// Deterministic pseudo-random scenario with a constructed symmetry and
/// invariant supports of equal Lambda; the true target count is retained.
Scenario generate_scenario(unsigned seed, const ScenarioParams& params);

}  // namespace lefint
