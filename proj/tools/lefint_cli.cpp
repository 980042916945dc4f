// lefint: exact Lefschetz numbers, Lefschetz integrals and target counting on
// finite simplicial complexes. One verb per operation family; see README.
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lefint/io.hpp"

using nlohmann::json;
using namespace lefint;

namespace {

struct Report {
    std::string command;
    json inputs = json::object();
    json values = json::object();
    std::vector<std::string> diagnostics;
    bool as_json = false;

    void value(const std::string& key, const Rational& r) {
        values[key] = {{"num", boost::multiprecision::numerator(r).str()},
                       {"den", boost::multiprecision::denominator(r).str()}};
    }
    void value(const std::string& key, long long n) { value(key, Rational(n)); }
    void note(std::string line) { diagnostics.push_back(std::move(line)); }

    void emit() const {
        if (as_json) {
            json out = {{"command", command},
                        {"inputs", inputs},
                        {"values", values},
                        {"diagnostics", diagnostics}};
            std::cout << out.dump(2) << "\n";
            return;
        }
        for (auto it = values.begin(); it != values.end(); ++it) {
            const json& v = *it;
            std::string den = v["den"].get<std::string>();
            std::cout << it.key() << " = " << v["num"].get<std::string>();
            if (den != "1") std::cout << "/" << den;
            std::cout << "\n";
        }
        for (const auto& d : diagnostics) std::cout << d << "\n";
    }
};

template <typename M>
const typename M::mapped_type& lookup(const M& m, const std::string& name,
                                      const std::string& what) {
    auto it = m.find(name);
    if (it == m.end()) throw UnknownReferenceError("unknown " + what + " '" + name + "'");
    return it->second;
}

OpenSet resolve_set(const DocumentBundle& b, const std::string& set_name, const ComplexPtr& host) {
    if (set_name.empty()) return full_set(host);
    OpenSet u = lookup(b.open_sets, set_name, "openset");
    if (!same_host(u.host, host))
        throw ValidationError("openset '" + set_name + "' lives on a different complex");
    return u;
}

std::string scenario_csv_row(unsigned seed, const Scenario& s) {
    std::ostringstream row;
    LefschetzMeasure m = make_measure(s.symmetry);
    std::optional<Rational> n = common_lambda(s);
    Rational integral = integrate(build_counting_function(s), m);
    row << seed << "," << s.kind << ",";
    if (n) {
        row << rational_to_string(*n) << "," << rational_to_string(integral) << ",";
        Rational count = integral / *n;
        row << rational_to_string(count) << ","
            << (s.ground_truth ? std::to_string(*s.ground_truth) : "") << ",";
        bool pass = s.ground_truth && count == Rational(*s.ground_truth);
        row << (pass ? "pass" : "fail");
    } else {
        row << ",," << "," << (s.ground_truth ? std::to_string(*s.ground_truth) : "") << ",fail";
    }
    return row.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Lefschetz numbers and Lefschetz integration on simplicial complexes"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    bool as_json = false;
    app.add_option("-i,--input", files, "input file(s), shared by all subcommands");
    app.add_flag("--json", as_json, "emit the machine-readable JSON report");

    std::string complex_name, second_complex, map_name, set_name, function_name, scenario_name,
        out_name = "out";
    int depth = 1;
    unsigned seed = 0;
    int batch = 1;
    ScenarioParams params;

    CLI::App* validate = app.add_subcommand("validate", "parse and validate input files");
    CLI::App* homology = app.add_subcommand("homology", "Betti numbers; induced map with --map");
    homology->add_option("--complex", complex_name)->required();
    homology->add_option("--map", map_name);
    CLI::App* lefschetz = app.add_subcommand("lefschetz", "Lambda(f, U)_X");
    lefschetz->add_option("--map", map_name)->required();
    lefschetz->add_option("--set", set_name, "defaults to the whole complex");
    CLI::App* integrate_cmd = app.add_subcommand("integrate", "integral of h against dLambda_f");
    integrate_cmd->add_option("--function", function_name)->required();
    integrate_cmd->add_option("--map", map_name)->required();
    CLI::App* euler = app.add_subcommand("euler", "Euler integral of a function or set");
    euler->add_option("--function", function_name);
    euler->add_option("--set", set_name);
    CLI::App* count = app.add_subcommand("count", "target count of a scenario");
    count->add_option("--scenario", scenario_name)->required();
    CLI::App* subdivide = app.add_subcommand("subdivide", "barycentric subdivision");
    subdivide->add_option("--complex", complex_name)->required();
    subdivide->add_option("--depth", depth)->check(CLI::PositiveNumber);
    CLI::App* product = app.add_subcommand("product", "staircase product triangulation");
    product->add_option("--left", complex_name)->required();
    product->add_option("--right", second_complex)->required();
    CLI::App* fixedpoint = app.add_subcommand("fixedpoint", "fixed-point certificate");
    fixedpoint->add_option("--map", map_name)->required();
    fixedpoint->add_option("--set", set_name, "defaults to the whole complex");
    CLI::App* gen = app.add_subcommand("scenario-gen", "generate a counting scenario");
    gen->add_option("--seed", seed);
    gen->add_option("--kind", params.kind)->check(CLI::IsMember({"identity", "mirror", "product"}));
    gen->add_option("--targets", params.targets);
    gen->add_option("--size", params.size);
    gen->add_option("--name", out_name);
    CLI::App* batch_cmd = app.add_subcommand("scenario-batch", "generate + count a scenario batch");
    batch_cmd->add_option("--seed", seed, "first seed");
    batch_cmd->add_option("--count", batch, "number of scenarios")->check(CLI::PositiveNumber);
    batch_cmd->add_option("--kind", params.kind)
        ->check(CLI::IsMember({"identity", "mirror", "product"}));
    batch_cmd->add_option("--targets", params.targets);
    batch_cmd->add_option("--size", params.size);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    Report report;
    report.as_json = as_json;
    report.command = app.get_subcommands().front()->get_name();
    report.inputs["files"] = files;

    DocumentBundle bundle = parse_bundle(files);

    if (*validate) {
        report.value("complexes", static_cast<long long>(bundle.complexes.size()));
        report.value("opensets", static_cast<long long>(bundle.open_sets.size()));
        report.value("maps", static_cast<long long>(bundle.maps.size()));
        report.value("functions", static_cast<long long>(bundle.functions.size()));
        report.value("scenarios", static_cast<long long>(bundle.scenarios.size()));
        for (const auto& [name, x] : bundle.complexes)
            report.note("complex " + name + ": " + std::to_string(x->size()) +
                        " simplices, dim " + std::to_string(x->dim()));
        report.note("ok");
    } else if (*homology) {
        report.inputs["complex"] = complex_name;
        ComplexPtr x = lookup(bundle.complexes, complex_name, "complex");
        std::vector<int> b = betti_numbers(x);
        for (size_t p = 0; p < b.size(); ++p)
            report.value("betti_" + std::to_string(p), static_cast<long long>(b[p]));
        if (!map_name.empty()) {
            report.inputs["map"] = map_name;
            const SelfMap& f = lookup(bundle.maps, map_name, "map");
            if (!same_host(f.host, x))
                throw ValidationError("map '" + map_name + "' lives on a different complex");
            report.value("lefschetz_homological", lefschetz_homological(make_measure(f).endomorphism));
        }
    } else if (*lefschetz) {
        report.inputs["map"] = map_name;
        const SelfMap& f = lookup(bundle.maps, map_name, "map");
        OpenSet u = resolve_set(bundle, set_name, f.host);
        report.inputs["set"] = set_name.empty() ? "(whole complex)" : set_name;
        report.value("lambda", lambda(make_measure(f), u));
    } else if (*integrate_cmd) {
        report.inputs["function"] = function_name;
        report.inputs["map"] = map_name;
        const ConstructibleFunction& h = lookup(bundle.functions, function_name, "function");
        const SelfMap& f = lookup(bundle.maps, map_name, "map");
        if (!same_host(h.host, f.host))
            throw ValidationError("function '" + function_name + "' lives on a different complex");
        LefschetzMeasure m = make_measure(f);
        report.value("integral", integrate(h, m));
        report.value("via_level_sets", integrate_via_levels(h, m));
        for (const auto& [level, cells] : level_sets(h))
            report.note("level " + std::to_string(level) + ": " +
                        std::to_string(cells.cells.size()) + " cells, Lambda = " +
                        rational_to_string(lambda(m, cells)));
    } else if (*euler) {
        if (function_name.empty() == set_name.empty())
            throw ValidationError("euler: give exactly one of --function, --set");
        if (!function_name.empty()) {
            report.inputs["function"] = function_name;
            const ConstructibleFunction& h = lookup(bundle.functions, function_name, "function");
            report.value("euler_integral", euler_integrate(h));
        } else {
            report.inputs["set"] = set_name;
            const OpenSet& u = lookup(bundle.open_sets, set_name, "openset");
            report.value("euler", combinatorial_euler(u));
        }
    } else if (*count) {
        report.inputs["scenario"] = scenario_name;
        const Scenario& s = lookup(bundle.scenarios, scenario_name, "scenario");
        std::optional<Rational> n = common_lambda(s);
        if (!n) throw PreconditionError("scenario '" + scenario_name + "': no common nonzero N");
        report.value("N", *n);
        report.value("integral", integrate(build_counting_function(s), make_measure(s.symmetry)));
        report.value("count", static_cast<long long>(count_targets(s)));
    } else if (*subdivide) {
        report.inputs["complex"] = complex_name;
        report.inputs["depth"] = depth;
        ComplexPtr x = lookup(bundle.complexes, complex_name, "complex");
        SubdivisionRecord rec = barycentric_subdivision(x, depth);
        report.value("cells", static_cast<long long>(rec.refined->size()));
        report.note(serialize_complex(complex_name + "_sd" + std::to_string(depth), *rec.refined));
    } else if (*product) {
        report.inputs["left"] = complex_name;
        report.inputs["right"] = second_complex;
        ComplexPtr a = lookup(bundle.complexes, complex_name, "complex");
        ComplexPtr b = lookup(bundle.complexes, second_complex, "complex");
        ProductRecord rec = product_complex(a, b);
        report.value("cells", static_cast<long long>(rec.product->size()));
        report.value("dim", static_cast<long long>(rec.product->dim()));
        report.note(serialize_complex(complex_name + "_x_" + second_complex, *rec.product));
    } else if (*fixedpoint) {
        report.inputs["map"] = map_name;
        const SelfMap& f = lookup(bundle.maps, map_name, "map");
        OpenSet u = resolve_set(bundle, set_name, f.host);
        report.inputs["set"] = set_name.empty() ? "(whole complex)" : set_name;
        Rational lam = lambda(make_measure(f), u);
        report.value("lambda", lam);
        std::optional<FixedPointCertificate> cert = fixed_point_certificate(f, u);
        if (cert) {
            std::string cell;
            for (int v : cert->cell) cell += (cell.empty() ? "" : " ") + f.host->vertex_names[v];
            report.note("fixed simplex: " + cell);
            std::string bc;
            for (const auto& [name, w] : cert->barycenter)
                bc += (bc.empty() ? "" : " + ") + rational_to_string(w) + "*" + name;
            report.note("fixed point: " + bc);
        } else {
            report.note("no setwise-fixed simplex in the closure");
        }
    } else if (*gen) {
        report.inputs["seed"] = seed;
        report.inputs["kind"] = params.kind;
        Scenario s = generate_scenario(seed, params);
        report.value("targets", static_cast<long long>(*s.ground_truth));
        report.note(serialize_scenario(out_name, s));
    } else if (*batch_cmd) {
        report.inputs["seed"] = seed;
        report.inputs["count"] = batch;
        report.inputs["kind"] = params.kind;
        report.note("seed,kind,N,integral,count,ground_truth,result");
        for (int k = 0; k < batch; ++k) {
            unsigned s = seed + static_cast<unsigned>(k);
            report.note(scenario_csv_row(s, generate_scenario(s, params)));
        }
    }

    report.emit();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownReferenceError& e) {
        std::cerr << "unknown reference: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
