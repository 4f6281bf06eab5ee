#include <iostream>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "jacobi/common.hpp"
#include "jacobi/dot.hpp"
#include "jacobi/gluing.hpp"
#include "jacobi/integrals.hpp"
#include "jacobi/json_io.hpp"

namespace {

using namespace jacobi;

constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::vector<Color> parse_color_list(const std::string& csv) {
    std::vector<Color> out;
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(plain(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (out.empty())
        throw InputError("expected a comma-separated color list");
    return out;
}

DiagramSum as_sum(const ParsedInput& in, const std::string& path) {
    if (std::holds_alternative<DiagramSum>(in))
        return std::get<DiagramSum>(in);
    if (std::holds_alternative<Diagram>(in))
        return DiagramSum::single(std::get<Diagram>(in));
    throw InputError("'" + path + "' does not hold a diagram or diagram sum");
}

Diagram as_diagram(const ParsedInput& in, const std::string& path) {
    if (std::holds_alternative<Diagram>(in))
        return std::get<Diagram>(in);
    if (std::holds_alternative<DiagramSum>(in)) {
        const DiagramSum& s = std::get<DiagramSum>(in);
        if (s.size() == 1)
            return s.terms().begin()->second.representative;
    }
    throw InputError("'" + path + "' does not hold a single diagram");
}

QuadraticForm as_form(const ParsedInput& in, const std::string& path) {
    if (std::holds_alternative<QuadraticForm>(in))
        return std::get<QuadraticForm>(in);
    throw InputError("'" + path + "' does not hold a quadratic form");
}

PerturbedGaussian as_perturbed(const ParsedInput& in, const std::string& path) {
    if (std::holds_alternative<PerturbedGaussian>(in))
        return std::get<PerturbedGaussian>(in);
    if (std::holds_alternative<ExpIntegrand>(in))
        return split_gaussian(std::get<ExpIntegrand>(in));
    if (std::holds_alternative<QuadraticForm>(in))
        return PerturbedGaussian::build(std::get<QuadraticForm>(in), DiagramSum::unit());
    throw InputError("'" + path + "' does not hold a perturbed Gaussian, integrand, or form");
}

std::vector<Color> plain_leg_colors(const DiagramSum& s) {
    std::set<Color> seen;
    for (const auto& [key, term] : s.terms())
        for (const Leg& leg : term.representative.legs())
            if (leg.color.flavor == Flavor::Plain) seen.insert(leg.color);
    return {seen.begin(), seen.end()};
}

std::vector<Color> dual_base_colors(const DiagramSum& s) {
    std::set<Color> seen;
    for (const auto& [key, term] : s.terms())
        for (const Leg& leg : term.representative.legs())
            if (leg.color.flavor == Flavor::Dual) seen.insert(plain(leg.color.base));
    return {seen.begin(), seen.end()};
}

void emit_sum(const DiagramSum& s, bool pretty_out) {
    std::cout << (pretty_out ? pretty(s) : to_json(s));
}

int emit_report(const CheckReport& report, bool pretty_out) {
    std::cout << (pretty_out ? pretty(report) : to_json(report));
    return report.pass ? 0 : kExitCheckFailed;
}

// Random symmetric integer form over n fresh colors, entries in [-3, 3].
QuadraticForm random_form(std::mt19937& rng, int n) {
    static const std::string names[] = {"x", "y", "z", "w"};
    std::vector<Color> colors;
    for (int i = 0; i < n; ++i) colors.push_back(plain(names[i]));
    QuadraticForm form = QuadraticForm::zero(colors);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const Rational v(entry(rng));
            form.entries[i][j] = v;
            form.entries[j][i] = v;
        }
    return form;
}

int run_gaussian_corpus(int m, unsigned seed, int count, bool pretty_out) {
    std::mt19937 rng(seed);
    int failures = 0;
    int total = 0;
    std::string first_failure;
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < count; ++i) {
            const QuadraticForm form = random_form(rng, n);
            const CheckReport rep = check_gaussian_identity(form, m);
            ++total;
            if (!rep.pass) {
                ++failures;
                if (first_failure.empty()) first_failure = to_json(form);
            }
        }
    }
    if (pretty_out) {
        std::cout << "gaussian-identity corpus: m=" << m << " seed=" << seed << " total=" << total
                  << " failures=" << failures << "\n";
    } else {
        std::cout << "{\n  \"check\": \"gaussian-identity\",\n  \"corpus\": true,\n  \"m\": " << m
                  << ",\n  \"seed\": " << seed << ",\n  \"total\": " << total
                  << ",\n  \"failures\": " << failures << ",\n  \"equal\": "
                  << (failures == 0 ? "true" : "false") << "\n}\n";
    }
    return failures == 0 ? 0 : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus of colored uni-trivalent diagrams: pairings, negative-dimensional "
                 "and formal Gaussian integrals, relation spans"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "pairing worker threads (default: hardware)");

    std::string colors_csv;
    int m = 1;
    bool reduce_circles = false;
    int degree_bound = 2;
    int legs_bound = -1;
    bool pretty_out = false;
    unsigned seed = 1;
    int corpus_count = 25;

    std::string left_path, right_path, input_path, kind;
    std::vector<std::string> span_paths;
    bool use_leibniz = false;
    bool use_diagrammatic = false;
    bool dot_flag = false;

    CLI::App* cmd_pair = app.add_subcommand("pair", "bilinear pairing of two diagram sums");
    cmd_pair->add_option("left", left_path, "left sum (dual-colored legs)")->required();
    cmd_pair->add_option("right", right_path, "right sum")->required();
    cmd_pair->add_option("--colors", colors_csv, "pairing colors (default: inferred from left)");
    cmd_pair->add_flag("--pretty", pretty_out, "human-readable output");

    CLI::App* cmd_fg = app.add_subcommand("integrate-fg", "formal Gaussian integral");
    cmd_fg->add_option("input", input_path, "perturbed Gaussian or integrand")->required();
    cmd_fg->add_option("--degree-bound", degree_bound, "closed-degree cutoff")->required();
    cmd_fg->add_flag("--pretty", pretty_out, "human-readable output");

    CLI::App* cmd_nd = app.add_subcommand("integrate-nd", "negative-dimensional integral");
    cmd_nd->add_option("input", input_path, "sum, diagram, integrand, or form")->required();
    cmd_nd->add_option("--m", m, "integration level")->required();
    cmd_nd->add_flag("--reduce", reduce_circles, "apply the circle relation afterwards");
    cmd_nd->add_option("--colors", colors_csv, "integration colors (default: inferred)");
    cmd_nd->add_flag("--pretty", pretty_out, "human-readable output");

    CLI::App* cmd_reduce = app.add_subcommand("reduce", "circle reduction and span membership");
    cmd_reduce->add_option("input", input_path, "diagram sum")->required();
    cmd_reduce->add_option("--m", m, "level for the circle relation")->required();
    cmd_reduce->add_option("--span", span_paths, "generator sums; exit 1 unless reduced to zero");
    cmd_reduce->add_flag("--pretty", pretty_out, "human-readable output");

    CLI::App* cmd_det = app.add_subcommand("det", "determinant of a quadratic form");
    cmd_det->add_option("input", input_path, "quadratic form")->required();
    cmd_det->add_flag("--leibniz", use_leibniz, "use the permutation-sum oracle");
    cmd_det->add_flag("--diagrammatic", use_diagrammatic,
                      "use the strut-cycle gluing sum (needs --m)");
    cmd_det->add_option("--m", m, "level for --diagrammatic");

    CLI::App* cmd_check = app.add_subcommand("check", "verify an identity; exit 1 on failure");
    cmd_check
        ->add_option("kind", kind,
                     "gaussian-identity | translation-invariance | comparison | square")
        ->required();
    cmd_check->add_option("input", input_path, "input file (omit for the random corpus)");
    cmd_check->add_option("--m", m, "integration level")->required();
    cmd_check->add_option("--colors", colors_csv, "integration colors (default: inferred)");
    cmd_check->add_option("--seed", seed, "corpus seed for gaussian-identity without input");
    cmd_check->add_option("--count", corpus_count, "corpus size per dimension");
    cmd_check->add_option("--legs-bound", legs_bound, "legs cap for the square check");
    cmd_check->add_flag("--pretty", pretty_out, "human-readable output");

    CLI::App* cmd_render = app.add_subcommand("render", "Graphviz rendering of a diagram or sum");
    cmd_render->add_option("input", input_path, "diagram or sum")->required();
    cmd_render->add_flag("--dot", dot_flag, "emit DOT (the only supported format)");

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    Limits::pairing_threads() =
        threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());

    try {
        if (*cmd_pair) {
            const DiagramSum left = as_sum(parse_input(left_path), left_path);
            const DiagramSum right = as_sum(parse_input(right_path), right_path);
            const std::vector<Color> X =
                colors_csv.empty() ? dual_base_colors(left) : parse_color_list(colors_csv);
            emit_sum(pairing(left, right, X), pretty_out);
            return 0;
        }

        if (*cmd_fg) {
            const PerturbedGaussian g = as_perturbed(parse_input(input_path), input_path);
            emit_sum(fg_integrate(g, g.lambda.colors, degree_bound), pretty_out);
            return 0;
        }

        if (*cmd_nd) {
            const ParsedInput in = parse_input(input_path);
            DiagramSum integrand;
            std::vector<Color> X;
            if (std::holds_alternative<DiagramSum>(in) || std::holds_alternative<Diagram>(in)) {
                integrand = as_sum(in, input_path);
                X = colors_csv.empty() ? plain_leg_colors(integrand)
                                       : parse_color_list(colors_csv);
            } else {
                const PerturbedGaussian g = as_perturbed(in, input_path);
                DiagramSum pert;
                for (const auto& [key, term] : g.perturbation.terms())
                    pert.add_canonical(key, term.representative, term.coeff);
                integrand = mul(
                    gaussian_part(g.lambda, 1, false, Truncation{std::nullopt, 2 * m}), pert);
                X = colors_csv.empty() ? g.lambda.colors : parse_color_list(colors_csv);
            }
            emit_sum(nd_integrate(integrand, X, m, reduce_circles), pretty_out);
            return 0;
        }

        if (*cmd_reduce) {
            const DiagramSum input = as_sum(parse_input(input_path), input_path);
            DiagramSum reduced = o_reduce(input, m);
            if (span_paths.empty()) {
                emit_sum(reduced, pretty_out);
                return 0;
            }
            std::vector<DiagramSum> gens;
            for (const std::string& p : span_paths) gens.push_back(as_sum(parse_input(p), p));
            const SpanReduction red = reduce_mod_span(reduced, gens);
            emit_sum(red.residual, pretty_out);
            return red.member ? 0 : kExitCheckFailed;
        }

        if (*cmd_det) {
            const QuadraticForm form = as_form(parse_input(input_path), input_path);
            Rational value;
            if (use_diagrammatic)
                value = diagrammatic_det(form, m);
            else if (use_leibniz)
                value = det_leibniz(form);
            else
                value = det_bareiss(form);
            std::cout << value.str() << "\n";
            return 0;
        }

        if (*cmd_check) {
            if (kind == "gaussian-identity" || kind == "gaussian") {
                if (input_path.empty())
                    return run_gaussian_corpus(m, seed, corpus_count, pretty_out);
                const QuadraticForm form = as_form(parse_input(input_path), input_path);
                return emit_report(check_gaussian_identity(form, m), pretty_out);
            }
            if (kind == "translation-invariance" || kind == "translation") {
                if (input_path.empty())
                    throw InputError("check translation-invariance needs an input diagram");
                const Diagram d = as_diagram(parse_input(input_path), input_path);
                const std::vector<Color> X = colors_csv.empty()
                                                 ? plain_leg_colors(DiagramSum::single(d))
                                                 : parse_color_list(colors_csv);
                return emit_report(check_translation_invariance(d, X, m), pretty_out);
            }
            if (kind == "comparison") {
                if (input_path.empty())
                    throw InputError("check comparison needs an input file");
                const PerturbedGaussian g = as_perturbed(parse_input(input_path), input_path);
                return emit_report(check_comparison(g, g.lambda.colors, m), pretty_out);
            }
            if (kind == "square") {
                if (input_path.empty())
                    throw InputError("check square needs a quadratic form input");
                const QuadraticForm form = as_form(parse_input(input_path), input_path);
                const int bound = legs_bound > 0 ? legs_bound : 2 * m;
                const SquareCompletion sq = complete_square(form, bound);
                CheckReport rep;
                rep.check = "square";
                rep.m = m;
                rep.lhs = sq.coupled;
                rep.rhs = sq.translated;
                rep.pass = sq.coupled == sq.translated;
                rep.mode = "literal";
                rep.residual = combine(Rational(1), sq.coupled, Rational(-1), sq.translated);
                rep.detail = rep.pass ? "completing the square matches the translated Gaussian"
                                      : "completing the square FAILED";
                return emit_report(rep, pretty_out);
            }
            throw InputError("unknown check kind '" + kind + "'");
        }

        if (*cmd_render) {
            (void)dot_flag;
            const ParsedInput in = parse_input(input_path);
            if (std::holds_alternative<Diagram>(in))
                std::cout << to_dot(std::get<Diagram>(in));
            else
                std::cout << to_dot(as_sum(in, input_path));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    return kExitInputError;
}
