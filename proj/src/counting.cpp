#include "lefint/counting.hpp"

#include <algorithm>
#include <random>

namespace lefint {

ConstructibleFunction build_counting_function(const Scenario& s) {
    if (s.supports.empty()) throw ValidationError("scenario has no target supports");
    std::vector<WeightedSupport> presentation;
    presentation.reserve(s.supports.size());
    for (const OpenSet& u : s.supports) {
        if (!same_host(u.host, s.host))
            throw ValidationError("scenario support hosted on a different complex");
        presentation.push_back({1, u});
    }
    return normalize(presentation);
}

std::optional<Rational> common_lambda(const Scenario& s) {
    LefschetzMeasure m = make_measure(s.symmetry);
    std::optional<Rational> n;
    for (const OpenSet& u : s.supports) {
        Rational v;
        try {
            v = lambda(m, u);
        } catch (const PreconditionError&) {
            return std::nullopt;  // support not invariant under this symmetry
        }
        if (v == 0) return std::nullopt;
        if (!n)
            n = v;
        else if (*n != v)
            return std::nullopt;
    }
    return n;
}

long long count_targets(const Scenario& s) {
    std::optional<Rational> n = common_lambda(s);
    if (!n)
        throw PreconditionError(
            "count_targets: supports have no common nonzero Lambda under this symmetry");
    LefschetzMeasure m = make_measure(s.symmetry);
    Rational integral = integrate(build_counting_function(s), m);
    Rational count = integral / *n;
    if (boost::multiprecision::denominator(count) != 1)
        throw PreconditionError("count_targets: integral / N is not an integer");
    return static_cast<long long>(boost::multiprecision::numerator(count));
}

namespace {

// Scratch complex under construction; indices are resolved at the end.
struct Builder {
    std::vector<std::string> names;
    std::vector<Simplex> tuples;
    std::vector<int> perm;  // symmetry assignment, extended as vertices appear

    int vertex(const std::string& name) {
        names.push_back(name);
        perm.push_back(static_cast<int>(perm.size()));  // fixed by default
        return static_cast<int>(names.size()) - 1;
    }
    void swap_pair(int a, int b) {
        perm[a] = b;
        perm[b] = a;
    }
    void simplex(std::initializer_list<int> vs) { tuples.push_back(Simplex(vs)); }
};

Scenario finish(Builder& b, std::vector<std::vector<Simplex>> support_tuples, unsigned seed,
                const ScenarioParams& params) {
    ComplexPtr host = validate_complex_indexed(b.names, b.tuples);
    Scenario s;
    s.host = host;
    s.symmetry = make_self_map(host, b.perm);
    for (auto& cells : support_tuples) {
        OpenSet u = make_open_set(host, cells);
        s.supports.push_back(closure(u));
    }
    s.ground_truth = params.targets;
    s.kind = params.kind;
    s.seed = seed;
    return s;
}

Scenario identity_scenario(std::mt19937& rng, unsigned seed, const ScenarioParams& params) {
    // Random floor complex: a cluster of small maximal simplices on a shared
    // vertex pool; supports are closed vertex stars (cones, so Lambda = 1).
    int nverts = std::max(4, params.size);
    Builder b;
    for (int i = 0; i < nverts; ++i) b.vertex("v" + std::to_string(i));
    std::uniform_int_distribution<int> pick(0, nverts - 1);
    std::uniform_int_distribution<int> arity(1, 4);  // up to tetrahedra
    int nmax = std::max(3, nverts);
    for (int k = 0; k < nmax; ++k) {
        std::set<int> vs;
        int a = arity(rng);
        while (static_cast<int>(vs.size()) < a) vs.insert(pick(rng));
        b.tuples.push_back(Simplex(vs.begin(), vs.end()));
    }
    // Spine so every vertex is present even if unused above.
    for (int i = 0; i + 1 < nverts; ++i) b.simplex({i, i + 1});

    ComplexPtr host = validate_complex_indexed(b.names, b.tuples);
    Scenario s;
    s.host = host;
    s.symmetry = identity_self_map(host);
    for (int t = 0; t < params.targets; ++t) {
        int v = pick(rng);
        OpenSet star{host, {}};
        for (int id = 0; id < host->size(); ++id) {
            const Simplex& sx = host->simplices[id];
            if (std::binary_search(sx.begin(), sx.end(), v)) star.cells.insert(id);
        }
        s.supports.push_back(closure(star));
    }
    s.ground_truth = params.targets;
    s.kind = params.kind;
    s.seed = seed;
    return s;
}

Scenario mirror_scenario(std::mt19937& rng, unsigned seed, const ScenarioParams& params) {
    // Hubs on the reflection axis, one gadget per target hanging off its hub.
    // Gadgets come in two shapes with different Euler characteristics but the
    // same Lambda = 1 under the reflection, so mixed scenarios defeat
    // identity-based counting while the reflection still counts.
    Builder b;
    std::vector<std::vector<Simplex>> supports;
    std::bernoulli_distribution loops(0.5);
    int prev_hub = -1;
    for (int t = 0; t < params.targets; ++t) {
        std::string tag = std::to_string(t);
        int hub = b.vertex("h" + tag);
        if (prev_hub >= 0) b.simplex({prev_hub, hub});  // axis spine, fixed
        prev_hub = hub;
        std::vector<Simplex> cells;
        if (loops(rng)) {
            // Wedge of two swapped circles: chi = -1, Lambda = 1.
            int l1 = b.vertex("l" + tag + "a"), l2 = b.vertex("l" + tag + "b"),
                l3 = b.vertex("l" + tag + "c");
            int r1 = b.vertex("r" + tag + "a"), r2 = b.vertex("r" + tag + "b"),
                r3 = b.vertex("r" + tag + "c");
            b.swap_pair(l1, r1);
            b.swap_pair(l2, r2);
            b.swap_pair(l3, r3);
            for (Simplex e : {Simplex{hub, l1}, {hub, r1}, {l1, l2}, {l2, l3}, {l1, l3},
                              {r1, r2}, {r2, r3}, {r1, r3}}) {
                b.tuples.push_back(e);
                cells.push_back(e);
            }
        } else {
            // Mirrored whiskers: contractible, chi = Lambda = 1.
            int l = b.vertex("l" + tag), r = b.vertex("r" + tag);
            b.swap_pair(l, r);
            for (Simplex e : {Simplex{hub, l}, {hub, r}}) {
                b.tuples.push_back(e);
                cells.push_back(e);
            }
        }
        supports.push_back(std::move(cells));
    }
    return finish(b, std::move(supports), seed, params);
}

Scenario product_scenario(std::mt19937& rng, unsigned seed, const ScenarioParams& params) {
    // Disjoint staircase squares, each carrying the coordinate swap of both
    // factors (a half-turn); Lambda over a closed square is 1 * 1 = 1.
    (void)rng;
    Builder b;
    std::vector<std::vector<Simplex>> supports;
    for (int t = 0; t < params.targets; ++t) {
        std::string tag = std::to_string(t);
        int v00 = b.vertex("q" + tag + "ac"), v01 = b.vertex("q" + tag + "ad"),
            v10 = b.vertex("q" + tag + "bc"), v11 = b.vertex("q" + tag + "bd");
        b.swap_pair(v00, v11);
        b.swap_pair(v01, v10);
        b.simplex({v00, v01, v11});
        b.simplex({v00, v10, v11});
        supports.push_back({Simplex{v00, v01, v11}, Simplex{v00, v10, v11}});
    }
    return finish(b, std::move(supports), seed, params);
}

}  // namespace

Scenario generate_scenario(unsigned seed, const ScenarioParams& params) {
    if (params.targets < 1 || params.targets > 20 || params.size > 200)
        throw ValidationError("generate_scenario: parameters out of desk-scale bounds");
    std::mt19937 rng(seed);
    if (params.kind == "identity") return identity_scenario(rng, seed, params);
    if (params.kind == "mirror") return mirror_scenario(rng, seed, params);
    if (params.kind == "product") return product_scenario(rng, seed, params);
    throw ValidationError("generate_scenario: unknown kind '" + params.kind + "'");
}

}  // namespace lefint
