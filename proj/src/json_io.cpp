#include "jacobi/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "jacobi/common.hpp"

namespace jacobi {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

const json& field(const json& j, const char* name, const std::string& where) {
    if (!j.is_object())
        fail(where, "expected an object");
    auto it = j.find(name);
    if (it == j.end())
        fail(where + "." + name, "missing field");
    return *it;
}

std::string str_at(const json& j, const std::string& where) {
    if (!j.is_string())
        fail(where, "expected a string");
    return j.get<std::string>();
}

int int_at(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        fail(where, "expected an integer");
    return j.get<int>();
}

Rational rational_at(const json& j, const std::string& where) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (!j.is_string())
        fail(where, "expected a rational as \"p\" or \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const InputError& e) {
        fail(where, e.what());
    }
}

const char* flavor_name(Flavor f) {
    switch (f) {
        case Flavor::Plain: return "plain";
        case Flavor::Dual: return "dual";
        case Flavor::Bar: return "translated";
        case Flavor::DualBar: return "dual-translated";
    }
    return "plain";
}

Flavor flavor_from(const std::string& name, const std::string& where) {
    if (name == "plain") return Flavor::Plain;
    if (name == "dual") return Flavor::Dual;
    if (name == "translated") return Flavor::Bar;
    if (name == "dual-translated") return Flavor::DualBar;
    fail(where, "unknown flavor '" + name + "'");
}

Color color_at(const json& j, const std::string& where) {
    if (j.is_string()) {
        const std::string base = j.get<std::string>();
        if (base.empty())
            fail(where, "color base must be nonempty");
        return plain(base);
    }
    if (!j.is_object())
        fail(where, "expected a color (string or {base, flavor})");
    Color c;
    c.base = str_at(field(j, "base", where), where + ".base");
    if (c.base.empty())
        fail(where + ".base", "color base must be nonempty");
    if (j.contains("flavor"))
        c.flavor = flavor_from(str_at(j["flavor"], where + ".flavor"), where + ".flavor");
    return c;
}

json color_json(const Color& c) {
    if (c.flavor == Flavor::Plain)
        return json(c.base);
    return json{{"base", c.base}, {"flavor", flavor_name(c.flavor)}};
}

Diagram diagram_at(const json& j, const std::string& where) {
    if (!j.is_object())
        fail(where, "expected a diagram object");

    std::map<std::string, int> ids;
    auto claim = [&](const std::string& name, const std::string& at) {
        if (name.empty())
            fail(at, "half-edge name must be nonempty");
        auto [it, fresh] = ids.emplace(name, static_cast<int>(ids.size()));
        if (!fresh)
            fail(at, "half-edge '" + name + "' declared twice");
        return it->second;
    };
    auto lookup = [&](const std::string& name, const std::string& at) {
        auto it = ids.find(name);
        if (it == ids.end())
            fail(at, "unknown half-edge '" + name + "'");
        return it->second;
    };

    std::vector<Leg> legs;
    if (j.contains("legs")) {
        const json& jl = j["legs"];
        if (!jl.is_array())
            fail(where + ".legs", "expected an array");
        for (size_t i = 0; i < jl.size(); ++i) {
            const std::string at = where + ".legs[" + std::to_string(i) + "]";
            const json& one = jl[i];
            const int he = claim(str_at(field(one, "he", at), at + ".he"), at + ".he");
            legs.push_back({he, color_at(field(one, "color", at), at + ".color")});
        }
    }

    std::vector<TrivalentVertex> vertices;
    if (j.contains("vertices")) {
        const json& jv = j["vertices"];
        if (!jv.is_array())
            fail(where + ".vertices", "expected an array");
        for (size_t i = 0; i < jv.size(); ++i) {
            const std::string at = where + ".vertices[" + std::to_string(i) + "]";
            const json& cyc = field(jv[i], "cyclic", at);
            if (!cyc.is_array() || cyc.size() != 3)
                fail(at + ".cyclic", "expected exactly three half-edges");
            TrivalentVertex v{};
            for (int s = 0; s < 3; ++s) {
                const std::string slot = at + ".cyclic[" + std::to_string(s) + "]";
                v.cyclic[s] = claim(str_at(cyc[s], slot), slot);
            }
            vertices.push_back(v);
        }
    }

    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        const json& je = j["edges"];
        if (!je.is_array())
            fail(where + ".edges", "expected an array");
        for (size_t i = 0; i < je.size(); ++i) {
            const std::string at = where + ".edges[" + std::to_string(i) + "]";
            const json& e = je[i];
            if (!e.is_array() || e.size() != 2)
                fail(at, "expected a pair of half-edges");
            const int a = lookup(str_at(e[0], at + "[0]"), at + "[0]");
            const int b = lookup(str_at(e[1], at + "[1]"), at + "[1]");
            edges.emplace_back(a, b);
        }
    }

    int circles = 0;
    if (j.contains("circles"))
        circles = int_at(j["circles"], where + ".circles");

    try {
        return Diagram::build(std::move(legs), std::move(vertices), std::move(edges), circles);
    } catch (const InputError& e) {
        fail(where, e.what());
    }
}

json diagram_json(const Diagram& d) {
    json legs = json::array();
    for (const Leg& leg : d.legs())
        legs.push_back({{"he", "h" + std::to_string(leg.half_edge)},
                        {"color", color_json(leg.color)}});

    json vertices = json::array();
    for (const TrivalentVertex& v : d.vertices()) {
        json cyc = json::array();
        for (int h : v.cyclic) cyc.push_back("h" + std::to_string(h));
        vertices.push_back({{"cyclic", cyc}});
    }

    std::vector<std::pair<int, int>> sorted = d.edges();
    for (auto& [a, b] : sorted)
        if (a > b) std::swap(a, b);
    std::sort(sorted.begin(), sorted.end());
    json edges = json::array();
    for (const auto& [a, b] : sorted)
        edges.push_back({"h" + std::to_string(a), "h" + std::to_string(b)});

    return json{{"legs", legs},
                {"vertices", vertices},
                {"edges", edges},
                {"circles", d.circles()}};
}

std::optional<Truncation> truncation_at(const json& j, const std::string& where) {
    if (j.is_null())
        return std::nullopt;
    if (!j.is_object())
        fail(where, "expected null or a truncation object");
    Truncation t;
    if (j.contains("max_degree") && !j["max_degree"].is_null())
        t.max_degree = int_at(j["max_degree"], where + ".max_degree");
    if (j.contains("max_legs_per_color") && !j["max_legs_per_color"].is_null())
        t.max_legs_per_color = int_at(j["max_legs_per_color"], where + ".max_legs_per_color");
    return t;
}

json truncation_json(const std::optional<Truncation>& t) {
    if (!t)
        return json(nullptr);
    json out = json::object();
    out["max_degree"] = t->max_degree ? json(*t->max_degree) : json(nullptr);
    out["max_legs_per_color"] =
        t->max_legs_per_color ? json(*t->max_legs_per_color) : json(nullptr);
    return out;
}

void add_terms(DiagramSum& sum, const json& jt, const std::string& where) {
    if (!jt.is_array())
        fail(where, "expected an array of terms");
    for (size_t i = 0; i < jt.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        const json& term = jt[i];
        const Rational coeff = rational_at(field(term, "coeff", at), at + ".coeff");
        sum.add(diagram_at(field(term, "diagram", at), at + ".diagram"), coeff);
    }
}

DiagramSum sum_at(const json& j, const std::string& where) {
    std::optional<Truncation> trunc;
    if (j.contains("truncation"))
        trunc = truncation_at(j["truncation"], where + ".truncation");
    DiagramSum sum(trunc);
    add_terms(sum, field(j, "terms", where), where + ".terms");
    return sum;
}

json terms_json(const DiagramSum& s) {
    json terms = json::array();
    for (const auto& [key, term] : s.terms())
        terms.push_back({{"coeff", term.coeff.str()}, {"diagram", diagram_json(term.representative)}});
    return terms;
}

json sum_json(const DiagramSum& s) {
    return json{{"truncation", truncation_json(s.truncation())}, {"terms", terms_json(s)}};
}

QuadraticForm form_at(const json& j, const std::string& where) {
    const json& jc = field(j, "colors", where);
    if (!jc.is_array())
        fail(where + ".colors", "expected an array");
    std::vector<Color> colors;
    for (size_t i = 0; i < jc.size(); ++i)
        colors.push_back(color_at(jc[i], where + ".colors[" + std::to_string(i) + "]"));

    const json& je = field(j, "entries", where);
    if (!je.is_array() || je.size() != colors.size())
        fail(where + ".entries", "expected one row per color");
    Matrix entries;
    for (size_t i = 0; i < je.size(); ++i) {
        const std::string at = where + ".entries[" + std::to_string(i) + "]";
        if (!je[i].is_array() || je[i].size() != colors.size())
            fail(at, "expected one entry per color");
        std::vector<Rational> row;
        for (size_t k = 0; k < je[i].size(); ++k)
            row.push_back(rational_at(je[i][k], at + "[" + std::to_string(k) + "]"));
        entries.push_back(std::move(row));
    }
    try {
        return QuadraticForm::build(std::move(colors), std::move(entries));
    } catch (const InputError& e) {
        fail(where, e.what());
    }
}

json form_json(const QuadraticForm& form) {
    json colors = json::array();
    for (const Color& c : form.colors) colors.push_back(color_json(c));
    json entries = json::array();
    for (const auto& row : form.entries) {
        json jrow = json::array();
        for (const Rational& v : row) jrow.push_back(v.str());
        entries.push_back(jrow);
    }
    return json{{"colors", colors}, {"entries", entries}};
}

ExpIntegrand integrand_at(const json& j, const std::string& where) {
    const json& body = field(j, "exp_of", where);
    ExpIntegrand out;
    if (body.contains("struts")) {
        const json& js = body["struts"];
        if (!js.is_array())
            fail(where + ".exp_of.struts", "expected an array");
        for (size_t i = 0; i < js.size(); ++i) {
            const std::string at = where + ".exp_of.struts[" + std::to_string(i) + "]";
            StrutTerm st{color_at(field(js[i], "a", at), at + ".a"),
                         color_at(field(js[i], "b", at), at + ".b"),
                         rational_at(field(js[i], "coeff", at), at + ".coeff")};
            out.struts.push_back(std::move(st));
        }
    }
    if (body.contains("perturbation"))
        add_terms(out.perturbation_exponent, body["perturbation"], where + ".exp_of.perturbation");
    if (j.contains("truncation"))
        out.truncation = truncation_at(j["truncation"], where + ".truncation");
    return out;
}

PerturbedGaussian perturbed_at(const json& j, const std::string& where) {
    QuadraticForm lambda = form_at(field(j, "lambda", where), where + ".lambda");
    DiagramSum pert = sum_at(field(j, "perturbation", where), where + ".perturbation");
    try {
        return PerturbedGaussian::build(std::move(lambda), std::move(pert));
    } catch (const InputError& e) {
        fail(where, e.what());
    }
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

} // namespace

ParsedInput parse_input_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw InputError("input: expected a JSON object");

    if (j.contains("lambda") && j.contains("perturbation"))
        return perturbed_at(j, "input");
    if (j.contains("exp_of"))
        return integrand_at(j, "input");
    if (j.contains("entries"))
        return form_at(j, "input");
    if (j.contains("terms"))
        return sum_at(j, "input");
    if (j.contains("legs") || j.contains("vertices") || j.contains("edges") ||
        j.contains("circles"))
        return diagram_at(j, "input");
    throw InputError("input: unrecognized shape (expected a diagram, sum, matrix, "
                     "integrand, or perturbed Gaussian)");
}

ParsedInput parse_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_input_text(buf.str());
}

std::string to_json(const QuadraticForm& form) { return dump(form_json(form)); }
std::string to_json(const Diagram& d) { return dump(diagram_json(d)); }
std::string to_json(const DiagramSum& s) { return dump(sum_json(s)); }

std::string to_json(const PerturbedGaussian& g) {
    return dump(json{{"lambda", form_json(g.lambda)}, {"perturbation", sum_json(g.perturbation)}});
}

std::string to_json(const CheckReport& report) {
    return dump(json{{"check", report.check},
                     {"m", report.m},
                     {"equal", report.pass},
                     {"mode", report.mode},
                     {"detail", report.detail},
                     {"lhs", terms_json(report.lhs)},
                     {"rhs", terms_json(report.rhs)},
                     {"residual", terms_json(report.residual)}});
}

namespace {

std::string describe(const Diagram& d) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const Leg& leg : d.legs()) {
        if (!first) out << " ";
        out << to_string(leg.color);
        first = false;
    }
    out << " | t=" << d.vertices().size() << " o=" << d.circles() << "]";
    return out.str();
}

} // namespace

std::string pretty(const DiagramSum& s) {
    std::ostringstream out;
    if (s.empty()) {
        out << "0\n";
        return out.str();
    }
    for (const auto& [key, term] : s.terms())
        out << term.coeff.str() << " * " << describe(term.representative) << "\n";
    return out.str();
}

std::string pretty(const CheckReport& report) {
    std::ostringstream out;
    out << "check:  " << report.check << " (m=" << report.m << ")\n"
        << "result: " << (report.pass ? "pass" : "FAIL") << " [" << report.mode << "]\n"
        << "detail: " << report.detail << "\n"
        << "lhs:\n" << pretty(report.lhs)
        << "rhs:\n" << pretty(report.rhs);
    if (!report.residual.empty())
        out << "residual:\n" << pretty(report.residual);
    return out.str();
}

} // namespace jacobi
