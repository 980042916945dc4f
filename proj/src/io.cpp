#include "lefint/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lefint {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line.substr(0, line.find('#')));
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

struct Cursor {
    const std::vector<std::vector<std::string>>& lines;  // tokenized, comments stripped
    const std::string& filename;
    size_t i = 0;

    [[noreturn]] void fail(size_t line_idx, const std::string& msg) const {
        throw ParseError(filename + ":" + std::to_string(line_idx + 1) + ": " + msg);
    }
};

bool is_section_keyword(const std::string& t) {
    return t == "complex" || t == "openset" || t == "map" || t == "function" || t == "scenario";
}

int vertex_index(const ComplexPtr& host, const std::string& name, Cursor& c, size_t line) {
    auto it = std::find(host->vertex_names.begin(), host->vertex_names.end(), name);
    if (it == host->vertex_names.end())
        throw UnknownReferenceError(c.filename + ":" + std::to_string(line + 1) +
                                    ": unknown vertex '" + name + "'");
    return static_cast<int>(it - host->vertex_names.begin());
}

ComplexPtr find_complex(const DocumentBundle& b, const std::string& name, Cursor& c, size_t line) {
    auto it = b.complexes.find(name);
    if (it == b.complexes.end())
        throw UnknownReferenceError(c.filename + ":" + std::to_string(line + 1) +
                                    ": unknown complex '" + name + "'");
    return it->second;
}

void parse_complex(DocumentBundle& b, Cursor& c, const std::vector<std::string>& header) {
    if (header.size() != 2) c.fail(c.i, "expected: complex NAME");
    std::string name = header[1];
    std::vector<std::string> vertices;
    std::vector<std::vector<std::string>> tuples;
    ++c.i;
    for (; c.i < c.lines.size(); ++c.i) {
        const auto& toks = c.lines[c.i];
        if (toks.empty()) continue;
        if (is_section_keyword(toks[0])) break;
        if (toks[0] == "vertices")
            vertices.insert(vertices.end(), toks.begin() + 1, toks.end());
        else if (toks[0] == "simplex")
            tuples.emplace_back(toks.begin() + 1, toks.end());
        else
            c.fail(c.i, "expected 'vertices' or 'simplex' in complex body, got '" + toks[0] + "'");
    }
    b.complexes[name] = validate_complex(vertices, tuples);
}

void parse_openset(DocumentBundle& b, Cursor& c, const std::vector<std::string>& header) {
    if (header.size() != 4 || header[2] != "on") c.fail(c.i, "expected: openset NAME on COMPLEX");
    std::string name = header[1];
    ComplexPtr host = find_complex(b, header[3], c, c.i);
    OpenSet s{host, {}};
    ++c.i;
    for (; c.i < c.lines.size(); ++c.i) {
        const auto& toks = c.lines[c.i];
        if (toks.empty()) continue;
        if (is_section_keyword(toks[0])) break;
        if (toks[0] != "cell") c.fail(c.i, "expected 'cell' in openset body, got '" + toks[0] + "'");
        Simplex cell;
        for (size_t k = 1; k < toks.size(); ++k) cell.push_back(vertex_index(host, toks[k], c, c.i));
        std::sort(cell.begin(), cell.end());
        int id = host->id_of(cell);
        if (id < 0) c.fail(c.i, "cell is not a simplex of the host complex");
        s.cells.insert(id);
    }
    b.open_sets[name] = std::move(s);
}

void parse_map(DocumentBundle& b, Cursor& c, const std::vector<std::string>& header) {
    int depth = 0;
    if (header.size() == 6 && header[4] == "depth")
        depth = std::stoi(header[5]);
    else if (header.size() != 4)
        c.fail(c.i, "expected: map NAME on COMPLEX [depth N]");
    if (header[2] != "on") c.fail(c.i, "expected: map NAME on COMPLEX [depth N]");
    std::string name = header[1];
    ComplexPtr host = find_complex(b, header[3], c, c.i);
    ComplexPtr domain = host;
    if (depth > 0) domain = barycentric_subdivision(host, depth).refined;

    std::vector<int> assignment(domain->vertex_names.size(), -1);
    ++c.i;
    for (; c.i < c.lines.size(); ++c.i) {
        const auto& toks = c.lines[c.i];
        if (toks.empty()) continue;
        if (is_section_keyword(toks[0])) break;
        if (toks.size() != 3 || toks[1] != "->") c.fail(c.i, "expected: SOURCE -> TARGET");
        int src = vertex_index(domain, toks[0], c, c.i);
        assignment[src] = vertex_index(host, toks[2], c, c.i);
    }
    for (size_t v = 0; v < assignment.size(); ++v)
        if (assignment[v] < 0)
            throw ValidationError(c.filename + ": map '" + name + "' leaves vertex '" +
                                  domain->vertex_names[v] + "' unassigned");
    b.maps[name] = depth == 0 ? make_self_map(host, std::move(assignment))
                              : SelfMap{host, depth,
                                        make_vertex_map(domain, host, std::move(assignment))};
}

void parse_function(DocumentBundle& b, Cursor& c, const std::vector<std::string>& header) {
    if (header.size() != 4 || header[2] != "on") c.fail(c.i, "expected: function NAME on COMPLEX");
    std::string name = header[1];
    ComplexPtr host = find_complex(b, header[3], c, c.i);
    std::vector<WeightedSupport> presentation;
    ++c.i;
    for (; c.i < c.lines.size(); ++c.i) {
        const auto& toks = c.lines[c.i];
        if (toks.empty()) continue;
        if (is_section_keyword(toks[0])) break;
        if (toks.size() != 2) c.fail(c.i, "expected: COEFFICIENT OPENSET");
        long long coeff;
        try {
            coeff = std::stoll(toks[0]);
        } catch (const std::exception&) {
            c.fail(c.i, "bad coefficient '" + toks[0] + "'");
        }
        auto it = b.open_sets.find(toks[1]);
        if (it == b.open_sets.end())
            throw UnknownReferenceError(c.filename + ":" + std::to_string(c.i + 1) +
                                        ": unknown openset '" + toks[1] + "'");
        if (!same_host(it->second.host, host))
            throw ValidationError(c.filename + ": support '" + toks[1] +
                                  "' is not hosted on '" + header[3] + "'");
        presentation.push_back({coeff, it->second});
    }
    if (presentation.empty()) {
        ConstructibleFunction h;
        h.host = host;
        h.values.assign(host->size(), 0);
        b.functions[name] = std::move(h);
    } else {
        b.functions[name] = normalize(presentation);
    }
}

void parse_scenario(DocumentBundle& b, Cursor& c, const std::vector<std::string>& header) {
    if (header.size() != 4 || header[2] != "on") c.fail(c.i, "expected: scenario NAME on COMPLEX");
    std::string name = header[1];
    ComplexPtr host = find_complex(b, header[3], c, c.i);
    Scenario s;
    s.host = host;
    s.kind = "file";
    bool have_symmetry = false;
    ++c.i;
    for (; c.i < c.lines.size(); ++c.i) {
        const auto& toks = c.lines[c.i];
        if (toks.empty()) continue;
        if (is_section_keyword(toks[0])) break;
        if (toks[0] == "symmetry" && toks.size() == 2) {
            auto it = b.maps.find(toks[1]);
            if (it == b.maps.end())
                throw UnknownReferenceError(c.filename + ":" + std::to_string(c.i + 1) +
                                            ": unknown map '" + toks[1] + "'");
            if (it->second.depth != 0)
                throw ValidationError("scenario symmetry must be a depth-0 map");
            s.symmetry = it->second;
            have_symmetry = true;
        } else if (toks[0] == "supports") {
            for (size_t k = 1; k < toks.size(); ++k) {
                auto it = b.open_sets.find(toks[k]);
                if (it == b.open_sets.end())
                    throw UnknownReferenceError(c.filename + ":" + std::to_string(c.i + 1) +
                                                ": unknown openset '" + toks[k] + "'");
                s.supports.push_back(it->second);
            }
        } else {
            c.fail(c.i, "expected 'symmetry' or 'supports' in scenario body");
        }
    }
    if (!have_symmetry) throw ValidationError("scenario '" + name + "' declares no symmetry");
    for (const OpenSet& u : s.supports) {
        if (!same_host(u.host, host))
            throw ValidationError("scenario support hosted on a different complex");
        if (!check_invariant(s.symmetry, u))
            throw ValidationError("scenario support is not invariant under the symmetry");
    }
    b.scenarios[name] = std::move(s);
}

}  // namespace

void parse_into(DocumentBundle& bundle, const std::string& text, const std::string& filename) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(tokenize(line));

    Cursor c{lines, filename, 0};
    while (c.i < lines.size()) {
        const auto& toks = lines[c.i];
        if (toks.empty()) {
            ++c.i;
            continue;
        }
        if (toks[0] == "complex")
            parse_complex(bundle, c, toks);
        else if (toks[0] == "openset")
            parse_openset(bundle, c, toks);
        else if (toks[0] == "map")
            parse_map(bundle, c, toks);
        else if (toks[0] == "function")
            parse_function(bundle, c, toks);
        else if (toks[0] == "scenario")
            parse_scenario(bundle, c, toks);
        else
            c.fail(c.i, "expected a section keyword, got '" + toks[0] + "'");
    }
}

DocumentBundle parse_bundle(const std::vector<std::string>& files) {
    DocumentBundle bundle;
    for (const std::string& path : files) {
        std::ifstream in(path);
        if (!in) throw ParseError(path + ": cannot open file");
        std::stringstream ss;
        ss << in.rdbuf();
        parse_into(bundle, ss.str(), path);
    }
    return bundle;
}

namespace {

std::vector<int> maximal_simplices(const SimplicialComplex& x) {
    std::vector<int> out;
    for (int i = 0; i < x.size(); ++i) {
        bool maximal = true;
        for (int j = 0; j < x.size() && maximal; ++j) {
            if (j == i || x.simplices[j].size() <= x.simplices[i].size()) continue;
            maximal = !std::includes(x.simplices[j].begin(), x.simplices[j].end(),
                                     x.simplices[i].begin(), x.simplices[i].end());
        }
        if (maximal) out.push_back(i);
    }
    return out;
}

void write_vertex_tuple(std::ostream& os, const SimplicialComplex& x, const Simplex& s) {
    for (size_t k = 0; k < s.size(); ++k) os << (k ? " " : "") << x.vertex_names[s[k]];
}

}  // namespace

std::string serialize_complex(const std::string& name, const SimplicialComplex& x) {
    std::ostringstream os;
    os << "complex " << name << "\n  vertices";
    for (const auto& v : x.vertex_names) os << " " << v;
    os << "\n";
    for (int id : maximal_simplices(x)) {
        os << "  simplex ";
        write_vertex_tuple(os, x, x.simplices[id]);
        os << "\n";
    }
    return os.str();
}

std::string serialize_open_set(const std::string& name, const std::string& host_name,
                               const OpenSet& s) {
    std::ostringstream os;
    os << "openset " << name << " on " << host_name << "\n";
    for (int id : s.cells) {
        os << "  cell ";
        write_vertex_tuple(os, *s.host, s.host->simplices[id]);
        os << "\n";
    }
    return os.str();
}

std::string serialize_map(const std::string& name, const std::string& host_name,
                          const SelfMap& f) {
    std::ostringstream os;
    os << "map " << name << " on " << host_name;
    if (f.depth > 0) os << " depth " << f.depth;
    os << "\n";
    for (size_t v = 0; v < f.map.assignment.size(); ++v)
        os << "  " << f.map.source->vertex_names[v] << " -> "
           << f.map.target->vertex_names[f.map.assignment[v]] << "\n";
    return os.str();
}

std::string serialize_function(const std::string& name, const std::string& host_name,
                               const ConstructibleFunction& h) {
    std::ostringstream os;
    if (!h.presentation)
        throw ValidationError("serialize_function: function has no presentation");
    int j = 0;
    for (const auto& ws : *h.presentation)
        os << serialize_open_set(name + "_s" + std::to_string(j++), host_name, ws.support);
    os << "function " << name << " on " << host_name << "\n";
    j = 0;
    for (const auto& ws : *h.presentation)
        os << "  " << ws.coeff << " " << name << "_s" << std::to_string(j++) << "\n";
    return os.str();
}

std::string serialize_scenario(const std::string& name, const Scenario& s) {
    std::ostringstream os;
    std::string floor = name + "_floor";
    os << serialize_complex(floor, *s.host);
    os << serialize_map(name + "_sym", floor, s.symmetry);
    for (size_t j = 0; j < s.supports.size(); ++j)
        os << serialize_open_set(name + "_u" + std::to_string(j), floor, s.supports[j]);
    os << "scenario " << name << " on " << floor << "\n";
    os << "  symmetry " << name << "_sym\n";
    os << "  supports";
    for (size_t j = 0; j < s.supports.size(); ++j) os << " " << name << "_u" << j;
    os << "\n";
    return os.str();
}

}  // namespace lefint
