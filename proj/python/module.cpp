#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jacobi/common.hpp"
#include "jacobi/dot.hpp"
#include "jacobi/gluing.hpp"
#include "jacobi/integrals.hpp"
#include "jacobi/json_io.hpp"

namespace py = pybind11;
using namespace jacobi;

namespace {

DiagramSum sum_arg(const std::string& text) {
    const ParsedInput in = parse_input_text(text);
    if (std::holds_alternative<DiagramSum>(in)) return std::get<DiagramSum>(in);
    if (std::holds_alternative<Diagram>(in)) return DiagramSum::single(std::get<Diagram>(in));
    throw InputError("expected a diagram or diagram sum");
}

PerturbedGaussian perturbed_arg(const std::string& text) {
    const ParsedInput in = parse_input_text(text);
    if (std::holds_alternative<PerturbedGaussian>(in)) return std::get<PerturbedGaussian>(in);
    if (std::holds_alternative<ExpIntegrand>(in))
        return split_gaussian(std::get<ExpIntegrand>(in));
    if (std::holds_alternative<QuadraticForm>(in))
        return PerturbedGaussian::build(std::get<QuadraticForm>(in), DiagramSum::unit());
    throw InputError("expected a perturbed Gaussian, integrand, or quadratic form");
}

QuadraticForm form_arg(const std::string& text) {
    const ParsedInput in = parse_input_text(text);
    if (std::holds_alternative<QuadraticForm>(in)) return std::get<QuadraticForm>(in);
    throw InputError("expected a quadratic form");
}

std::vector<Color> color_args(const std::vector<std::string>& names) {
    std::vector<Color> out;
    for (const std::string& n : names) out.push_back(plain(n));
    return out;
}

std::vector<Color> plain_colors_of(const DiagramSum& s) {
    std::vector<Color> out;
    for (const auto& [key, term] : s.terms())
        for (const Leg& leg : term.representative.legs())
            if (leg.color.flavor == Flavor::Plain &&
                std::find(out.begin(), out.end(), leg.color) == out.end())
                out.push_back(leg.color);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

PYBIND11_MODULE(jacobi_diagrams, mod) {
    mod.doc() = "Exact calculus of colored uni-trivalent diagrams: pairings, negative-"
                "dimensional and formal Gaussian integration, relation spans.  All inputs "
                "and outputs are JSON strings in the same shapes the command line uses.";

    py::register_exception<InputError>(mod, "InputError", PyExc_ValueError);
    py::register_exception<BoundError>(mod, "BoundError", PyExc_RuntimeError);
    py::register_exception<SingularMatrixError>(mod, "SingularMatrixError", PyExc_ArithmeticError);

    mod.def(
        "pair",
        [](const std::string& left, const std::string& right,
           const std::vector<std::string>& colors) {
            return to_json(pairing(sum_arg(left), sum_arg(right), color_args(colors)));
        },
        py::arg("left"), py::arg("right"), py::arg("colors"),
        "Bilinear pairing of two diagram sums over the given colors.");

    mod.def(
        "integrate_nd",
        [](const std::string& input, int m, bool reduce,
           const std::optional<std::vector<std::string>>& colors) {
            const ParsedInput in = parse_input_text(input);
            DiagramSum integrand;
            std::vector<Color> X;
            if (std::holds_alternative<DiagramSum>(in) || std::holds_alternative<Diagram>(in)) {
                integrand = sum_arg(input);
                X = colors ? color_args(*colors) : plain_colors_of(integrand);
            } else {
                const PerturbedGaussian g = perturbed_arg(input);
                DiagramSum pert;
                for (const auto& [key, term] : g.perturbation.terms())
                    pert.add_canonical(key, term.representative, term.coeff);
                integrand = mul(
                    gaussian_part(g.lambda, 1, false, Truncation{std::nullopt, 2 * m}), pert);
                X = colors ? color_args(*colors) : g.lambda.colors;
            }
            return to_json(nd_integrate(integrand, X, m, reduce));
        },
        py::arg("input"), py::arg("m"), py::arg("reduce") = true,
        py::arg("colors") = std::nullopt,
        "Negative-dimensional integral at level m; colors default to the form's or the "
        "sum's plain colors.");

    mod.def(
        "integrate_fg",
        [](const std::string& input, int degree_bound) {
            const PerturbedGaussian g = perturbed_arg(input);
            return to_json(fg_integrate(g, g.lambda.colors, degree_bound));
        },
        py::arg("input"), py::arg("degree_bound"),
        "Formal Gaussian integral of a perturbed Gaussian through the given closed degree.");

    mod.def(
        "reduce",
        [](const std::string& input, int m) { return to_json(o_reduce(sum_arg(input), m)); },
        py::arg("input"), py::arg("m"),
        "Replaces every circle by the scalar -2m.");

    mod.def(
        "det",
        [](const std::string& input, const std::string& method, int m) {
            const QuadraticForm q = form_arg(input);
            if (method == "bareiss") return det_bareiss(q).str();
            if (method == "leibniz") return det_leibniz(q).str();
            if (method == "diagrammatic") return diagrammatic_det(q, m).str();
            throw InputError("unknown determinant method '" + method + "'");
        },
        py::arg("input"), py::arg("method") = "bareiss", py::arg("m") = 1,
        "Determinant of a quadratic form: 'bareiss', 'leibniz', or 'diagrammatic'.");

    mod.def(
        "check",
        [](const std::string& kind, const std::string& input, int m) {
            if (kind == "gaussian-identity")
                return to_json(check_gaussian_identity(form_arg(input), m));
            if (kind == "translation-invariance") {
                const DiagramSum s = sum_arg(input);
                if (s.size() != 1)
                    throw InputError("translation-invariance expects a single diagram");
                const Diagram d = s.terms().begin()->second.representative;
                return to_json(check_translation_invariance(d, plain_colors_of(s), m));
            }
            if (kind == "comparison") {
                const PerturbedGaussian g = perturbed_arg(input);
                return to_json(check_comparison(g, g.lambda.colors, m));
            }
            throw InputError("unknown check kind '" + kind + "'");
        },
        py::arg("kind"), py::arg("input"), py::arg("m"),
        "Runs a named identity check and returns its JSON report.");

    mod.def(
        "canonical_key",
        [](const std::string& input) {
            const ParsedInput in = parse_input_text(input);
            if (!std::holds_alternative<Diagram>(in))
                throw InputError("expected a single diagram");
            const Canonical c = canonicalize(std::get<Diagram>(in));
            return py::make_tuple(c.key, c.zero ? 0 : c.sign);
        },
        py::arg("input"),
        "Canonical class key and sign of a diagram; sign 0 marks a class that vanishes.");

    mod.def(
        "render_dot",
        [](const std::string& input) {
            const ParsedInput in = parse_input_text(input);
            if (std::holds_alternative<Diagram>(in)) return to_dot(std::get<Diagram>(in));
            return to_dot(sum_arg(input));
        },
        py::arg("input"), "Graphviz DOT rendering of a diagram or sum.");
}
