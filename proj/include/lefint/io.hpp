#pragma once

#include <map>
#include <string>

#include "lefint/counting.hpp"

namespace lefint {

/// Syntax error with file/line/column context.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A name used before (or without) being declared.
struct UnknownReferenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything named in a set of input files. All cross-references are
/// resolved and every object has passed its module's validator.
struct DocumentBundle {
    std::map<std::string, ComplexPtr> complexes;
    std::map<std::string, OpenSet> open_sets;
    std::map<std::string, SelfMap> maps;
    std::map<std::string, ConstructibleFunction> functions;
    std::map<std::string, Scenario> scenarios;
};

/// Text format, one section per object:
///
///   complex X
///     vertices a b c
///     simplex a b c        # maximal faces suffice; the closure is computed
///   openset U on X
///     cell a b
///   map f on X [depth n]
///     a -> b
///   function h on X
///     2 U                  # coefficient, support name
///   scenario s on X
///     symmetry f
///     supports U V
///
/// '#' starts a comment; references must be declared before use.
DocumentBundle parse_bundle(const std::vector<std::string>& files);

/// Parse from an in-memory string (used by tests and stdin input).
void parse_into(DocumentBundle& bundle, const std::string& text, const std::string& filename);

std::string serialize_complex(const std::string& name, const SimplicialComplex& x);
std::string serialize_open_set(const std::string& name, const std::string& host_name,
                               const OpenSet& s);
std::string serialize_map(const std::string& name, const std::string& host_name, const SelfMap& f);
/// Emits the supports as named openset sections followed by the function.
std::string serialize_function(const std::string& name, const std::string& host_name,
                               const ConstructibleFunction& h);
/// Self-contained bundle: floor complex, symmetry map, supports, scenario.
std::string serialize_scenario(const std::string& name, const Scenario& s);

/// "p/q" with q omitted when 1.
std::string rational_to_string(const Rational& r);

}  // namespace lefint
