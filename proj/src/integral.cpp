#include "lefint/integral.hpp"

namespace lefint {

ConstructibleFunction normalize(const std::vector<WeightedSupport>& presentation) {
    if (presentation.empty())
        throw ValidationError("normalize: empty presentation has no host complex");
    ComplexPtr host = presentation.front().support.host;
    ConstructibleFunction h;
    h.host = host;
    h.values.assign(host->size(), 0);
    for (const auto& [coeff, support] : presentation) {
        if (!same_host(support.host, host))
            throw ValidationError("normalize: supports live on different host complexes");
        for (int id : support.cells) h.values[id] += coeff;
    }
    h.presentation = presentation;
    return h;
}

ConstructibleFunction constant_function(const ComplexPtr& host, long long value) {
    return normalize({{value, full_set(host)}});
}

ConstructibleFunction indicator(const OpenSet& support) { return normalize({{1, support}}); }

Rational integrate(const ConstructibleFunction& h, const LefschetzMeasure& m) {
    if (!same_host(h.host, m.host))
        throw ValidationError("integrate: function hosted on a different complex");
    if (!h.presentation) {
        // Per-cell values alone certify nothing; the level sets are validated
        // for invariance inside integrate_via_levels.
        return integrate_via_levels(h, m);
    }
    Rational total = 0;
    for (const auto& [coeff, support] : *h.presentation) total += coeff * lambda(m, support);
    return total;
}

std::map<long long, OpenSet> level_sets(const ConstructibleFunction& h) {
    std::map<long long, OpenSet> levels;
    for (int id = 0; id < h.host->size(); ++id) {
        long long v = h.values[id];
        if (v == 0) continue;
        auto [it, fresh] = levels.try_emplace(v, OpenSet{h.host, {}});
        it->second.cells.insert(id);
    }
    return levels;
}

Rational integrate_via_levels(const ConstructibleFunction& h, const LefschetzMeasure& m) {
    if (!same_host(h.host, m.host))
        throw ValidationError("integrate_via_levels: function hosted on a different complex");
    Rational total = 0;
    for (const auto& [k, level] : level_sets(h)) total += k * lambda(m, level);
    return total;
}

long long euler_integrate(const ConstructibleFunction& h) {
    long long total = 0;
    for (int id = 0; id < h.host->size(); ++id) {
        if (h.values[id] == 0) continue;
        int p = SimplicialComplex::dim_of(h.host->simplices[id]);
        total += (p % 2 == 0 ? 1 : -1) * h.values[id];
    }
    return total;
}

FubiniResult fubini_trivial_bundle(const ProductRecord& rec, const LefschetzMeasure& fiber_measure,
                                   const ConstructibleFunction& h) {
    if (!same_host(fiber_measure.host, rec.right))
        throw ValidationError("fubini_trivial_bundle: fiber measure is not on the fiber factor");
    if (!same_host(h.host, rec.product))
        throw ValidationError("fubini_trivial_bundle: function is not on the product complex");

    // h must induce a well-defined value per open-cell pair (beta, phi).
    std::map<std::pair<int, int>, long long> pair_value;
    for (int id = 0; id < rec.product->size(); ++id) {
        auto key = rec.cell_carrier[id];
        auto [it, fresh] = pair_value.try_emplace(key, h.values[id]);
        if (!fresh && it->second != h.values[id])
            throw PreconditionError(
                "fubini_trivial_bundle: function is not constant on an open cell pair");
    }

    const ChainMap& phi2 = fiber_measure.endomorphism;
    auto fiber_diag = [&](int fiber_cell) {
        int q = SimplicialComplex::dim_of(rec.right->simplices[fiber_cell]);
        int pos = phi2.source->basis_position(fiber_cell);
        return phi2.mats[q](pos, pos);
    };
    auto sign_of = [&](const ComplexPtr& c, int cell) {
        return SimplicialComplex::dim_of(c->simplices[cell]) % 2 == 0 ? 1 : -1;
    };

    // Left side: alternating tensor-diagonal sum over all cell pairs, with the
    // identity acting on the base factor.
    Rational lhs = 0;
    for (const auto& [key, value] : pair_value) {
        if (value == 0) continue;
        auto [beta, fib] = key;
        lhs += Rational(value) * sign_of(rec.left, beta) * sign_of(rec.right, fib) *
               fiber_diag(fib);
    }

    // Right side: integrate the fiberwise Lefschetz integrals over the base
    // against the Euler characteristic.
    Rational rhs = 0;
    for (int beta = 0; beta < rec.left->size(); ++beta) {
        Rational fiber_integral = 0;
        for (int fib = 0; fib < rec.right->size(); ++fib) {
            auto it = pair_value.find({beta, fib});
            if (it == pair_value.end() || it->second == 0) continue;
            fiber_integral += Rational(it->second) * sign_of(rec.right, fib) * fiber_diag(fib);
        }
        rhs += sign_of(rec.left, beta) * fiber_integral;
    }
    return FubiniResult{lhs, rhs};
}

}  // namespace lefint
